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

#pragma once

// Single-hop unidirectional proxy re-encryption over a bilinear group:
//
//   keygen:    sk = a,  pk = g^a
//   encrypt:   (Z^r * m, g^{ra})
//   rekeygen:  rk = pk_B^{1/a} = g^{b/a}
//   reencrypt: (Z^r * m, e(g^{ra}, g^{b/a})) = (Z^r * m, Z^{rb})
//   decrypt:   m = c1 / c2^{1/b}
//
// plus a hybrid layer for payloads larger than one group element.

#include <cstdint>

#include "fairx/algebra.hpp"
#include "fairx/bytes.hpp"

namespace fairx::pre {

using algebra::GroupElem;
using algebra::GroupParams;
using algebra::Rng;
using algebra::Scalar;
using algebra::TargetElem;

struct KeyPair {
  Scalar sk;
  GroupElem pk;
};

struct Level1Ciphertext {
  TargetElem c1;  // Z^r * m
  GroupElem c2;   // g^{ra}

  friend bool operator==(const Level1Ciphertext&,
                         const Level1Ciphertext&) = default;
};

struct ReEncryptionKey {
  GroupElem rk;  // g^{b/a}
  GroupElem from_pk;
  GroupElem to_pk;

  friend bool operator==(const ReEncryptionKey&,
                         const ReEncryptionKey&) = default;
};

struct Level2Ciphertext {
  TargetElem c1;  // Z^r * m
  TargetElem c2;  // Z^{rb}

  friend bool operator==(const Level2Ciphertext&,
                         const Level2Ciphertext&) = default;
};

KeyPair KeyGen(const GroupParams& params, Rng& rng);
// Throws NoInverseError for a zero secret.
KeyPair KeyPairFromSecret(const Scalar& sk);

Level1Ciphertext Encrypt(const GroupElem& pk, const TargetElem& m, Rng& rng);
// Encryption with caller-chosen randomness r (must be non-zero).
Level1Ciphertext EncryptWithRandomness(const GroupElem& pk, const TargetElem& m,
                                       const Scalar& r);

ReEncryptionKey ReKeyGen(const Scalar& sk_from, const GroupElem& pk_to);

// The proxy's transformation. Needs no secret and never sees m.
Level2Ciphertext ReEncrypt(const Level1Ciphertext& c, const ReEncryptionKey& rk);

TargetElem DecryptLevel1(const Level1Ciphertext& c, const Scalar& sk);
TargetElem DecryptLevel2(const Level2Ciphertext& c, const Scalar& sk);

// Wire format, see codec.hpp. Decoders validate every component against
// `params` and throw DecodeError.
Bytes EncodePublicKey(const GroupElem& pk);
GroupElem DecodePublicKey(ByteView data, const GroupParams& params);
Bytes EncodeLevel1(const Level1Ciphertext& c);
Level1Ciphertext DecodeLevel1(ByteView data, const GroupParams& params,
                              std::size_t* consumed = nullptr);
Bytes EncodeLevel2(const Level2Ciphertext& c);
Level2Ciphertext DecodeLevel2(ByteView data, const GroupParams& params);
Bytes EncodeReKey(const ReEncryptionKey& rk);
ReEncryptionKey DecodeReKey(ByteView data, const GroupParams& params);

// Hybrid payloads: [EncodeLevel1(key capsule)][keystream XOR body].
// The capsule encrypts a random content key m in GT; the body is XORed with
// SHA-256(label || m || counter) blocks.
struct SealedPayload {
  Level1Ciphertext capsule;
  Bytes body;
};

Bytes KeyedStream(const TargetElem& content_key, ByteView data);

Bytes Seal(const GroupElem& pk, ByteView plaintext, Rng& rng);
SealedPayload ParseSealed(ByteView payload, const GroupParams& params);
Bytes OpenLevel1(ByteView payload, const Scalar& sk);
// Opens a payload whose capsule has been re-encrypted by a proxy.
Bytes OpenLevel2(const Level2Ciphertext& capsule, ByteView sealed_body,
                 const Scalar& sk);

}  // namespace fairx::pre
