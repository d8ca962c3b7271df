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

#include "fairx/algebra.hpp"

#include <string>

#include "fairx/errors.hpp"

namespace fairx::algebra {

Word MulMod(Word a, Word b, Word q) {
  return static_cast<Word>(static_cast<unsigned __int128>(a) * b % q);
}

Word PowMod(Word base, Word exp, Word q) {
  Word result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, q);
    base = MulMod(base, base, q);
    exp >>= 1;
  }
  return result;
}

bool IsPrime(Word n) {
  if (n < 2) return false;
  for (Word p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  Word d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for every n < 2^64.
  for (Word a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Word x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

GroupParams GroupParams::Setup(Word order) {
  if (order < kMinOrder || order >= kMaxOrder) {
    throw ParameterError("group order " + std::to_string(order) +
                         " outside [5, 2^62)");
  }
  if (!IsPrime(order)) {
    throw ParameterError("group order " + std::to_string(order) +
                         " is not prime");
  }
  return GroupParams(order);
}

void CheckSameGroup(const GroupParams& a, const GroupParams& b) {
  if (a != b) {
    throw DomainError("operands belong to groups of order " +
                      std::to_string(a.order()) + " and " +
                      std::to_string(b.order()));
  }
}

Scalar::Scalar(const GroupParams& params, Word value)
    : params_(params), value_(value % params.order()) {}

Scalar Scalar::Inverse() const {
  if (value_ == 0) throw NoInverseError("zero has no inverse mod q");
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 r0 = params_.order(), r1 = value_;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 quot = r0 / r1;
    __int128 r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += params_.order();
  return {params_, static_cast<Word>(t0)};
}

Scalar Scalar::operator-() const {
  return {params_, value_ == 0 ? 0 : params_.order() - value_};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  CheckSameGroup(a.params_, b.params_);
  Word q = a.params_.order();
  Word s = a.value_ + b.value_;
  return {a.params_, s >= q ? s - q : s};
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  CheckSameGroup(a.params_, b.params_);
  return {a.params_, MulMod(a.value_, b.value_, a.params_.order())};
}

Scalar InvScalar(const Scalar& k) { return k.Inverse(); }

TargetElem Pair(const GroupElem& x, const GroupElem& y) {
  CheckSameGroup(x.params(), y.params());
  const GroupParams& p = x.params();
  return TargetElem::FromRepr(p, MulMod(x.repr(), y.repr(), p.order()));
}

TargetElem EncodeMessage(const Scalar& mu) {
  return Exp(TargetElem::Generator(mu.params()), mu);
}

Scalar DecodeMessage(const TargetElem& m) { return {m.params(), m.repr()}; }

Scalar ScalarFromDigest(const GroupParams& params, const Sha256Digest& digest) {
  Word q = params.order();
  Word acc = 0;
  for (std::uint8_t byte : digest) {
    acc = static_cast<Word>(
        ((static_cast<unsigned __int128>(acc) << 8) | byte) % q);
  }
  return {params, acc};
}

GroupElem HashToGroup(const GroupParams& params, std::string_view label) {
  for (std::uint64_t counter = 0;; ++counter) {
    Sha256Hasher hasher;
    hasher.Update("fairx/hash-to-group/v1");
    hasher.Update(label);
    hasher.UpdateU64(counter);
    Scalar e = ScalarFromDigest(params, hasher.Finish());
    if (e.value() > 1) return GroupElem::FromRepr(params, e.value());
  }
}

Scalar Rng::NonZeroScalar(const GroupParams& params) {
  return {params, Uniform(1, params.order() - 1)};
}

Scalar Rng::AnyScalar(const GroupParams& params) {
  return {params, Uniform(0, params.order() - 1)};
}

std::uint64_t Rng::Uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

Bytes Rng::RandomBytes(std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(engine_() >> 56);
  return out;
}

}  // namespace fairx::algebra
