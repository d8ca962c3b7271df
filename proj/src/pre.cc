// Copyright 2026 The fairx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairx/pre.hpp"

#include <array>

#include "fairx/codec.hpp"
#include "fairx/errors.hpp"

namespace fairx::pre {

using algebra::Exp;
using algebra::Pair;

KeyPair KeyGen(const GroupParams& params, Rng& rng) {
  return KeyPairFromSecret(algebra::RandomScalar(params, rng));
}

KeyPair KeyPairFromSecret(const Scalar& sk) {
  if (sk.IsZero()) throw NoInverseError("secret key must be non-zero");
  return {sk, Exp(GroupElem::Generator(sk.params()), sk)};
}

Level1Ciphertext Encrypt(const GroupElem& pk, const TargetElem& m, Rng& rng) {
  return EncryptWithRandomness(pk, m, algebra::RandomScalar(pk.params(), rng));
}

Level1Ciphertext EncryptWithRandomness(const GroupElem& pk, const TargetElem& m,
                                       const Scalar& r) {
  algebra::CheckSameGroup(pk.params(), m.params());
  if (r.IsZero()) throw ParameterError("encryption randomness must be non-zero");
  TargetElem z = TargetElem::Generator(pk.params());
  return {Exp(z, r) * m, Exp(pk, r)};
}

ReEncryptionKey ReKeyGen(const Scalar& sk_from, const GroupElem& pk_to) {
  algebra::CheckSameGroup(sk_from.params(), pk_to.params());
  Scalar inv = sk_from.Inverse();
  GroupElem from_pk = Exp(GroupElem::Generator(sk_from.params()), sk_from);
  return {Exp(pk_to, inv), from_pk, pk_to};
}

Level2Ciphertext ReEncrypt(const Level1Ciphertext& c,
                           const ReEncryptionKey& rk) {
  return {c.c1, Pair(c.c2, rk.rk)};
}

TargetElem DecryptLevel1(const Level1Ciphertext& c, const Scalar& sk) {
  // e(g^{ra}, g)^{1/a} = Z^r
  GroupElem g = GroupElem::Generator(c.c2.params());
  TargetElem mask = Exp(Pair(c.c2, g), sk.Inverse());
  return c.c1 / mask;
}

TargetElem DecryptLevel2(const Level2Ciphertext& c, const Scalar& sk) {
  TargetElem mask = Exp(c.c2, sk.Inverse());
  return c.c1 / mask;
}

namespace {

template <typename Elem>
Elem CheckedElement(const GroupParams& params, std::uint64_t v) {
  if (v >= params.order()) throw DecodeError("element out of range");
  return Elem::FromRepr(params, v);
}

}  // namespace

Bytes EncodePublicKey(const GroupElem& pk) {
  std::array<std::uint64_t, 1> v{pk.repr()};
  return codec::EncodeTuple(codec::Tag::kPublicKey, v);
}

GroupElem DecodePublicKey(ByteView data, const GroupParams& params) {
  std::size_t used = 0;
  auto v = codec::DecodeTuple(data, codec::Tag::kPublicKey, 1, &used);
  if (used != data.size()) throw DecodeError("public key: trailing bytes");
  GroupElem pk = CheckedElement<GroupElem>(params, v[0]);
  if (pk.IsIdentity()) throw DecodeError("public key: identity element");
  return pk;
}

Bytes EncodeLevel1(const Level1Ciphertext& c) {
  std::array<std::uint64_t, 2> v{c.c1.repr(), c.c2.repr()};
  return codec::EncodeTuple(codec::Tag::kLevel1Ciphertext, v);
}

Level1Ciphertext DecodeLevel1(ByteView data, const GroupParams& params,
                              std::size_t* consumed) {
  std::size_t used = 0;
  auto v = codec::DecodeTuple(data, codec::Tag::kLevel1Ciphertext, 2, &used);
  if (consumed != nullptr) {
    *consumed = used;
  } else if (used != data.size()) {
    throw DecodeError("level-1 ciphertext: trailing bytes");
  }
  return {CheckedElement<TargetElem>(params, v[0]),
          CheckedElement<GroupElem>(params, v[1])};
}

Bytes EncodeLevel2(const Level2Ciphertext& c) {
  std::array<std::uint64_t, 2> v{c.c1.repr(), c.c2.repr()};
  return codec::EncodeTuple(codec::Tag::kLevel2Ciphertext, v);
}

Level2Ciphertext DecodeLevel2(ByteView data, const GroupParams& params) {
  std::size_t used = 0;
  auto v = codec::DecodeTuple(data, codec::Tag::kLevel2Ciphertext, 2, &used);
  if (used != data.size()) throw DecodeError("level-2 ciphertext: trailing bytes");
  return {CheckedElement<TargetElem>(params, v[0]),
          CheckedElement<TargetElem>(params, v[1])};
}

Bytes EncodeReKey(const ReEncryptionKey& rk) {
  std::array<std::uint64_t, 3> v{rk.rk.repr(), rk.from_pk.repr(),
                                 rk.to_pk.repr()};
  return codec::EncodeTuple(codec::Tag::kReEncryptionKey, v);
}

ReEncryptionKey DecodeReKey(ByteView data, const GroupParams& params) {
  std::size_t used = 0;
  auto v = codec::DecodeTuple(data, codec::Tag::kReEncryptionKey, 3, &used);
  if (used != data.size()) throw DecodeError("re-encryption key: trailing bytes");
  return {CheckedElement<GroupElem>(params, v[0]),
          CheckedElement<GroupElem>(params, v[1]),
          CheckedElement<GroupElem>(params, v[2])};
}

Bytes KeyedStream(const TargetElem& content_key, ByteView data) {
  Bytes out(data.begin(), data.end());
  Sha256Digest block{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i % block.size() == 0) {
      Sha256Hasher hasher;
      hasher.Update("fairx/keyed-stream/v1");
      hasher.UpdateU64(content_key.params().order());
      hasher.UpdateU64(content_key.repr());
      hasher.UpdateU64(i / block.size());
      block = hasher.Finish();
    }
    out[i] ^= block[i % block.size()];
  }
  return out;
}

Bytes Seal(const GroupElem& pk, ByteView plaintext, Rng& rng) {
  TargetElem content_key =
      algebra::EncodeMessage(rng.AnyScalar(pk.params()));
  Bytes out = EncodeLevel1(Encrypt(pk, content_key, rng));
  Bytes body = KeyedStream(content_key, plaintext);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

SealedPayload ParseSealed(ByteView payload, const GroupParams& params) {
  std::size_t used = 0;
  Level1Ciphertext capsule = DecodeLevel1(payload, params, &used);
  return {capsule, Bytes(payload.begin() + static_cast<std::ptrdiff_t>(used),
                         payload.end())};
}

Bytes OpenLevel1(ByteView payload, const Scalar& sk) {
  SealedPayload sealed = ParseSealed(payload, sk.params());
  return KeyedStream(DecryptLevel1(sealed.capsule, sk), sealed.body);
}

Bytes OpenLevel2(const Level2Ciphertext& capsule, ByteView sealed_body,
                 const Scalar& sk) {
  return KeyedStream(DecryptLevel2(capsule, sk), sealed_body);
}

}  // namespace fairx::pre
