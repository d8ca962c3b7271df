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

#include "fairx/zkpok.hpp"

#include <array>

#include "fairx/codec.hpp"
#include "fairx/errors.hpp"

namespace fairx::zkpok {

using algebra::Exp;

PedersenBasis::PedersenBasis(const GroupElem& g, const GroupElem& h)
    : g_(g), h_(h) {
  if (g.params() != h.params()) {
    throw ParameterError("pedersen basis: generators from different groups");
  }
  if (g.IsIdentity() || h.IsIdentity()) {
    throw ParameterError("pedersen basis: identity generator");
  }
  if (g == h) throw ParameterError("pedersen basis: h equals g");
}

PedersenBasis PedersenBasis::Derive(const GroupParams& params) {
  return {GroupElem::Generator(params),
          algebra::HashToGroup(params, kBasisLabel)};
}

Commitment Commit(const Scalar& k, const Scalar& s, const PedersenBasis& basis) {
  return {Exp(basis.g(), k) * Exp(basis.h(), s), basis};
}

bool Opens(const Opening& opening, const Commitment& c) {
  if (opening.k.params() != c.basis.params() ||
      opening.s.params() != c.basis.params()) {
    return false;
  }
  return Commit(opening.k, opening.s, c.basis) == c;
}

Bytes MakeContext(std::string_view contract_address, std::uint64_t nonce) {
  Bytes out = ToBytes(contract_address);
  AppendU64(out, nonce);
  return out;
}

Scalar ChallengeHash(const Commitment& c, const GroupElem& t,
                     ByteView context) {
  Sha256Hasher hasher;
  hasher.Update("fairx/zkpok-challenge/v1");
  hasher.UpdateU64(c.basis.params().order());
  hasher.UpdateU64(c.basis.g().repr());
  hasher.UpdateU64(c.basis.h().repr());
  hasher.UpdateU64(c.value.repr());
  hasher.UpdateU64(t.repr());
  hasher.UpdateU64(context.size());
  hasher.Update(context);
  return algebra::ScalarFromDigest(c.basis.params(), hasher.Finish());
}

ProverState ProverCommit(const PedersenBasis& basis, Rng& rng) {
  Scalar w1 = rng.AnyScalar(basis.params());
  Scalar w2 = rng.AnyScalar(basis.params());
  return {Exp(basis.g(), w1) * Exp(basis.h(), w2), w1, w2};
}

KnowledgeProof ProverRespond(const ProverState& state, const Opening& opening,
                             const Scalar& e) {
  return {state.t, e, state.w1 + e * opening.k, state.w2 + e * opening.s};
}

KnowledgeProof Prove(const Opening& opening, const Commitment& c,
                     ByteView context, Rng& rng) {
  if (!Opens(opening, c)) {
    throw ProofError("opening does not match the commitment");
  }
  ProverState state = ProverCommit(c.basis, rng);
  return ProverRespond(state, opening, ChallengeHash(c, state.t, context));
}

namespace {

bool SameGroup(const KnowledgeProof& proof, const Commitment& c) {
  const GroupParams& p = c.basis.params();
  return proof.t.params() == p && proof.e.params() == p &&
         proof.z1.params() == p && proof.z2.params() == p &&
         c.value.params() == p;
}

}  // namespace

bool CheckRelation(const KnowledgeProof& proof, const Commitment& c) {
  if (!SameGroup(proof, c)) return false;
  GroupElem lhs = Exp(c.basis.g(), proof.z1) * Exp(c.basis.h(), proof.z2);
  GroupElem rhs = proof.t * Exp(c.value, proof.e);
  return lhs == rhs;
}

bool Verify(const KnowledgeProof& proof, const Commitment& c,
            ByteView context) {
  if (!SameGroup(proof, c)) return false;
  if (proof.e != ChallengeHash(c, proof.t, context)) return false;
  return CheckRelation(proof, c);
}

Bytes EncodeProof(const KnowledgeProof& proof) {
  std::array<std::uint64_t, 4> v{proof.t.repr(), proof.e.value(),
                                 proof.z1.value(), proof.z2.value()};
  return codec::EncodeTuple(codec::Tag::kKnowledgeProof, v);
}

KnowledgeProof DecodeProof(ByteView data, const GroupParams& params) {
  std::size_t used = 0;
  auto v = codec::DecodeTuple(data, codec::Tag::kKnowledgeProof, 4, &used);
  if (used != data.size()) throw DecodeError("proof: trailing bytes");
  for (std::uint64_t x : v) {
    if (x >= params.order()) throw DecodeError("proof: value out of range");
  }
  return {GroupElem::FromRepr(params, v[0]), Scalar(params, v[1]),
          Scalar(params, v[2]), Scalar(params, v[3])};
}

bool VerifyEncoded(ByteView data, const Commitment& c, ByteView context) {
  try {
    return Verify(DecodeProof(data, c.basis.params()), c, context);
  } catch (const DecodeError&) {
    return false;
  }
}

}  // namespace fairx::zkpok
