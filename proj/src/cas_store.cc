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

#include "fairx/cas_store.hpp"

#include <fstream>
#include <iterator>

#include "fairx/errors.hpp"

namespace fairx::cas {

Digest Digest::FromHex(std::string_view hex) {
  Bytes raw = fairx::FromHex(hex);
  Digest d;
  if (raw.size() != d.bytes.size()) {
    throw DecodeError("digest: expected 32 bytes");
  }
  std::copy(raw.begin(), raw.end(), d.bytes.begin());
  return d;
}

BlobStore::BlobStore(std::filesystem::path directory)
    : directory_(std::move(directory)) {
  std::filesystem::create_directories(*directory_);
}

Digest BlobStore::Put(ByteView content) {
  if (content.empty()) throw Error("blob store: empty content rejected");
  Digest d = Digest::Of(content);
  if (blobs_.contains(d)) return d;
  blobs_.emplace(d, Bytes(content.begin(), content.end()));
  if (directory_) {
    std::filesystem::path path = *directory_ / d.Hex();
    if (!std::filesystem::exists(path)) {
      std::ofstream out(path, std::ios::binary);
      out.write(reinterpret_cast<const char*>(content.data()),
                static_cast<std::streamsize>(content.size()));
      if (!out) throw Error("blob store: cannot write " + path.string());
    }
  }
  return d;
}

std::optional<Bytes> BlobStore::LoadFromDisk(const Digest& digest) const {
  if (!directory_) return std::nullopt;
  std::ifstream in(*directory_ / digest.Hex(), std::ios::binary);
  if (!in) return std::nullopt;
  Bytes content((std::istreambuf_iterator<char>(in)),
                std::istreambuf_iterator<char>());
  // A tampered file no longer matches its name.
  if (Digest::Of(content) != digest) return std::nullopt;
  return content;
}

Bytes BlobStore::Get(const Digest& digest) const {
  if (auto it = blobs_.find(digest); it != blobs_.end()) return it->second;
  if (auto loaded = LoadFromDisk(digest)) return *std::move(loaded);
  throw NotFoundError("blob store: unknown digest " + digest.Hex());
}

bool BlobStore::Contains(const Digest& digest) const {
  return blobs_.contains(digest) || LoadFromDisk(digest).has_value();
}

}  // namespace fairx::cas
