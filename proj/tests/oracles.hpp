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

// Independent reference computations for the tests. Deliberately naive:
// nothing here calls into the library.

#include <cstdint>
#include <optional>

namespace fairx::oracle {

// a * b mod q by repeated doubling-free addition; q small.
inline std::uint64_t SlowMulMod(std::uint64_t a, std::uint64_t b,
                                std::uint64_t q) {
  std::uint64_t acc = 0;
  for (std::uint64_t i = 0; i < b % q; ++i) acc = (acc + a % q) % q;
  return acc;
}

// Inverse by exhaustive search.
inline std::optional<std::uint64_t> SearchInverse(std::uint64_t k,
                                                  std::uint64_t q) {
  for (std::uint64_t x = 1; x < q; ++x) {
    if (SlowMulMod(k, x, q) == 1) return x;
  }
  return std::nullopt;
}

inline bool TrialDivisionPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Strategic-form cells written out from the table, (buyer, seller).
struct TableCells {
  std::int64_t conf_correct_b, conf_correct_s;
  std::int64_t conf_failed_b, conf_failed_s;
  std::int64_t noconf_correct_b, noconf_correct_s;
  std::int64_t noconf_failed_b, noconf_failed_s;
};

inline TableCells EvaluateTable(std::int64_t c, std::int64_t ds,
                                std::int64_t db, std::int64_t vs,
                                std::int64_t vb) {
  return {vb - c, c - vs, -c, c + vs, vb - db, -ds - vs, -db, -ds + vs};
}

// Chi-square statistic of two equally sized count vectors (two-sample).
template <typename Counts>
double TwoSampleChiSquare(const Counts& a, const Counts& b) {
  double stat = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double sum = static_cast<double>(a[i]) + static_cast<double>(b[i]);
    if (sum == 0) continue;
    double diff = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    stat += diff * diff / sum;
  }
  return stat;
}

}  // namespace fairx::oracle
