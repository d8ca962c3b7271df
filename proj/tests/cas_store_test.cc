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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "fairx/cas_store.hpp"
#include "fairx/errors.hpp"

namespace fairx::cas {
namespace {

std::filesystem::path TempDir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

TEST_CASE("put and get") {
  BlobStore store;
  Bytes x = ToBytes("certified identity record");
  Digest d = store.Put(x);
  CHECK(store.Put(x) == d);
  CHECK(store.size() == 1);
  CHECK(store.Get(d) == x);
  CHECK(d == Digest::Of(x));
  CHECK(Digest::FromHex(d.Hex()) == d);
  CHECK_THROWS_AS(store.Put(Bytes{}), Error);
  CHECK_THROWS_AS(store.Get(Digest::Of(ToBytes("never stored"))), NotFoundError);
  CHECK_FALSE(store.Contains(Digest::Of(ToBytes("never stored"))));
}

TEST_CASE("distinct contents get distinct digests") {
  BlobStore store;
  std::set<Digest> seen;
  for (int i = 0; i < 2000; ++i) {
    Bytes content = ToBytes("record-" + std::to_string(i));
    REQUIRE(seen.insert(store.Put(content)).second);
  }
  // Every stored digest still resolves to its own bytes.
  for (int i = 0; i < 2000; ++i) {
    Bytes content = ToBytes("record-" + std::to_string(i));
    REQUIRE(store.Get(Digest::Of(content)) == content);
  }
}

TEST_CASE("one mebibyte roundtrip") {
  std::mt19937 gen(7);
  Bytes big(1 << 20);
  for (auto& b : big) b = static_cast<std::uint8_t>(gen());
  BlobStore store;
  CHECK(store.Get(store.Put(big)) == big);
}

TEST_CASE("directory persistence") {
  auto dir = TempDir("fairx_cas_test");
  Bytes x = ToBytes("persisted blob");
  Digest d;
  {
    BlobStore store(dir);
    d = store.Put(x);
  }
  CHECK(std::filesystem::exists(dir / d.Hex()));
  BlobStore reopened(dir);
  CHECK(reopened.Contains(d));
  CHECK(reopened.Get(d) == x);

  // A file whose content no longer matches its name is not served.
  Bytes y = ToBytes("another blob");
  Digest dy = Digest::Of(y);
  {
    std::ofstream out(dir / dy.Hex(), std::ios::binary);
    out << "tampered";
  }
  CHECK_THROWS_AS(reopened.Get(dy), NotFoundError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace fairx::cas
