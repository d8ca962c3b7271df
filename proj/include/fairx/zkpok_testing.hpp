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

// Test-only companions of the proof system: the honest-verifier simulator
// and the special-soundness extractor. Not linked into the library proper.

#include "fairx/zkpok.hpp"

namespace fairx::zkpok::testing {

// Transcript satisfying CheckRelation, produced without an opening. The
// challenge is chosen by the simulator, so Verify() will reject it.
KnowledgeProof Simulate(const Commitment& c, ByteView context, Rng& rng);

// Recovers (k, s) from two accepting transcripts with the same first
// message and different challenges. Throws ProofError otherwise.
Opening Extract(const KnowledgeProof& first, const KnowledgeProof& second);

}  // namespace fairx::zkpok::testing
