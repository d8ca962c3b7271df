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

// Non-interactive proof of knowledge of an opening (k, s) of a Pedersen
// commitment C = g^k h^s. Three-move sigma protocol
//
//   prover:   t = g^{w1} h^{w2}
//   verifier: e
//   prover:   z1 = w1 + e k,  z2 = w2 + e s
//   check:    g^{z1} h^{z2} == t C^e
//
// made non-interactive by deriving e = SHA-256(C, t, context) mod q. The
// context string binds a proof to one exchange so it cannot be replayed
// against another contract.

#include <cstdint>
#include <string_view>

#include "fairx/algebra.hpp"
#include "fairx/bytes.hpp"

namespace fairx::zkpok {

using algebra::GroupElem;
using algebra::GroupParams;
using algebra::Rng;
using algebra::Scalar;

// Public label from which the second generator h is derived.
inline constexpr std::string_view kBasisLabel = "fairx/pedersen-h/v1";

class PedersenBasis {
 public:
  // Throws ParameterError if h is the identity or equals g, or the two
  // generators live in different groups.
  PedersenBasis(const GroupElem& g, const GroupElem& h);

  // g is the canonical generator, h = HashToGroup(kBasisLabel). Nobody
  // knows log_g(h) by construction, so no trusted dealer is involved.
  static PedersenBasis Derive(const GroupParams& params);

  const GroupElem& g() const { return g_; }
  const GroupElem& h() const { return h_; }
  const GroupParams& params() const { return g_.params(); }

  friend bool operator==(const PedersenBasis&, const PedersenBasis&) = default;

 private:
  GroupElem g_;
  GroupElem h_;
};

struct Commitment {
  GroupElem value;
  PedersenBasis basis;

  friend bool operator==(const Commitment&, const Commitment&) = default;
};

struct Opening {
  Scalar k;  // digest of the delivered data, reduced mod q
  Scalar s;  // blinding

  friend bool operator==(const Opening&, const Opening&) = default;
};

struct KnowledgeProof {
  GroupElem t;
  Scalar e;
  Scalar z1;
  Scalar z2;

  friend bool operator==(const KnowledgeProof&, const KnowledgeProof&) = default;
};

Commitment Commit(const Scalar& k, const Scalar& s, const PedersenBasis& basis);
bool Opens(const Opening& opening, const Commitment& c);

// Domain-separated context: address bytes || 8-byte big-endian nonce.
Bytes MakeContext(std::string_view contract_address, std::uint64_t nonce);

Scalar ChallengeHash(const Commitment& c, const GroupElem& t, ByteView context);

// Interactive pieces, exposed for the test-only extractor and simulator.
struct ProverState {
  GroupElem t;
  Scalar w1;
  Scalar w2;
};
ProverState ProverCommit(const PedersenBasis& basis, Rng& rng);
KnowledgeProof ProverRespond(const ProverState& state, const Opening& opening,
                             const Scalar& e);

// Throws ProofError when `opening` does not open `c`.
KnowledgeProof Prove(const Opening& opening, const Commitment& c,
                     ByteView context, Rng& rng);

// Algebraic relation only: g^{z1} h^{z2} == t C^e. Never throws.
bool CheckRelation(const KnowledgeProof& proof, const Commitment& c);

// Relation plus challenge recomputation. Never throws; proofs from a
// foreign group are rejected.
bool Verify(const KnowledgeProof& proof, const Commitment& c, ByteView context);

// Tag 0x05 tuple (t, e, z1, z2).
Bytes EncodeProof(const KnowledgeProof& proof);
KnowledgeProof DecodeProof(ByteView data, const GroupParams& params);
// Malformed encodings verify as false.
bool VerifyEncoded(ByteView data, const Commitment& c, ByteView context);

}  // namespace fairx::zkpok
