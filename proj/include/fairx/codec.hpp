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

// Tagged integer tuples: one type byte followed by each integer as a
// 4-byte big-endian length and its minimal big-endian magnitude (zero is
// encoded with length 0).

#include <cstdint>
#include <span>
#include <vector>

#include "fairx/bytes.hpp"

namespace fairx::codec {

enum class Tag : std::uint8_t {
  kLevel1Ciphertext = 0x01,
  kLevel2Ciphertext = 0x02,
  kReEncryptionKey = 0x03,
  kPublicKey = 0x04,
  kKnowledgeProof = 0x05,
};

Bytes EncodeTuple(Tag tag, std::span<const std::uint64_t> values);

// Decodes a tuple of exactly `count` integers starting at the front of
// `data`. Returns the values and stores the number of bytes read in
// `consumed` when non-null. Throws DecodeError on any malformation.
std::vector<std::uint64_t> DecodeTuple(ByteView data, Tag tag,
                                       std::size_t count,
                                       std::size_t* consumed = nullptr);

}  // namespace fairx::codec
