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

#include "fairx/zkpok_testing.hpp"

#include "fairx/errors.hpp"

namespace fairx::zkpok::testing {

using algebra::Exp;

KnowledgeProof Simulate(const Commitment& c, ByteView /*context*/, Rng& rng) {
  const GroupParams& p = c.basis.params();
  Scalar e = rng.AnyScalar(p);
  Scalar z1 = rng.AnyScalar(p);
  Scalar z2 = rng.AnyScalar(p);
  // t = g^{z1} h^{z2} C^{-e}
  GroupElem t = Exp(c.basis.g(), z1) * Exp(c.basis.h(), z2) *
                Exp(c.value, -e);
  return {t, e, z1, z2};
}

Opening Extract(const KnowledgeProof& first, const KnowledgeProof& second) {
  if (first.t != second.t) {
    throw ProofError("extract: transcripts do not share a first message");
  }
  if (first.e == second.e) {
    throw ProofError("extract: challenges must differ");
  }
  Scalar de_inv = (first.e - second.e).Inverse();
  return {(first.z1 - second.z1) * de_inv, (first.z2 - second.z2) * de_inv};
}

}  // namespace fairx::zkpok::testing
