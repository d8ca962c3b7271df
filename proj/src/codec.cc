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

#include "fairx/codec.hpp"

#include <string>

#include "fairx/errors.hpp"

namespace fairx::codec {

Bytes EncodeTuple(Tag tag, std::span<const std::uint64_t> values) {
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(tag));
  for (std::uint64_t v : values) {
    std::uint32_t len = 0;
    for (std::uint64_t t = v; t != 0; t >>= 8) ++len;
    AppendU32(out, len);
    for (int i = static_cast<int>(len) - 1; i >= 0; --i) {
      out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }
  return out;
}

std::vector<std::uint64_t> DecodeTuple(ByteView data, Tag tag,
                                       std::size_t count,
                                       std::size_t* consumed) {
  if (data.empty()) throw DecodeError("tuple: empty input");
  if (data[0] != static_cast<std::uint8_t>(tag)) {
    throw DecodeError("tuple: unexpected type tag " + std::to_string(data[0]));
  }
  std::size_t pos = 1;
  std::vector<std::uint64_t> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (data.size() - pos < 4) throw DecodeError("tuple: truncated length");
    std::uint32_t len = 0;
    for (int j = 0; j < 4; ++j) len = (len << 8) | data[pos++];
    if (len > 8) throw DecodeError("tuple: integer wider than 64 bits");
    if (data.size() - pos < len) throw DecodeError("tuple: truncated integer");
    if (len > 0 && data[pos] == 0) {
      throw DecodeError("tuple: non-minimal integer encoding");
    }
    std::uint64_t v = 0;
    for (std::uint32_t j = 0; j < len; ++j) v = (v << 8) | data[pos++];
    values.push_back(v);
  }
  if (consumed != nullptr) *consumed = pos;
  return values;
}

}  // namespace fairx::codec
