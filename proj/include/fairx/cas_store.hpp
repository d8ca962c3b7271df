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

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "fairx/bytes.hpp"

namespace fairx::cas {

// SHA-256 of the stored content.
struct Digest {
  Sha256Digest bytes{};

  std::string Hex() const { return ToHex(bytes); }
  static Digest FromHex(std::string_view hex);
  static Digest Of(ByteView content) { return {Sha256(content)}; }

  friend auto operator<=>(const Digest&, const Digest&) = default;
};

// Content-addressed blob store. Blobs live in memory; when a directory is
// given they are also written as `<dir>/<hex-digest>` and looked up there
// on a memory miss, so a store can be reopened across runs.
//
// One owner writes; concurrent readers are fine once writing stops.
class BlobStore {
 public:
  BlobStore() = default;
  explicit BlobStore(std::filesystem::path directory);

  // Idempotent. Throws Error for empty content.
  Digest Put(ByteView content);
  // Throws NotFoundError for unknown digests.
  Bytes Get(const Digest& digest) const;
  bool Contains(const Digest& digest) const;
  std::size_t size() const { return blobs_.size(); }

 private:
  std::optional<Bytes> LoadFromDisk(const Digest& digest) const;

  std::optional<std::filesystem::path> directory_;
  std::map<Digest, Bytes> blobs_;
};

}  // namespace fairx::cas
