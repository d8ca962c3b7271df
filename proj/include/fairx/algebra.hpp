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

// Prime-order cyclic group G with a symmetric bilinear pairing
// e: G x G -> GT.
//
// Reference backend: every element is stored as its discrete logarithm
// with respect to the canonical generator (g for G, Z = e(g, g) for GT),
// so the group operation is addition of exponents mod q and the pairing is
// multiplication of exponents mod q. This is algebraically exact at any
// prime order and offers no security whatsoever; it exists so that the
// protocol layers above can be tested exhaustively at desk scale. The
// element types are the only place that knows about the representation.

#include <compare>
#include <cstdint>
#include <random>
#include <string_view>

#include "fairx/bytes.hpp"

namespace fairx::algebra {

using Word = std::uint64_t;

// Orders are kept below 2^62 so sums of two residues never overflow.
inline constexpr Word kMaxOrder = Word{1} << 62;
inline constexpr Word kMinOrder = 5;

// Deterministic Miller-Rabin for 64-bit inputs.
bool IsPrime(Word n);

class GroupParams {
 public:
  // Throws ParameterError unless `order` is a prime in [5, 2^62).
  static GroupParams Setup(Word order);

  Word order() const { return order_; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  explicit GroupParams(Word order) : order_(order) {}
  Word order_;
};

// Residue in Z_q.
class Scalar {
 public:
  // Reduces `value` mod q.
  Scalar(const GroupParams& params, Word value);

  static Scalar Zero(const GroupParams& params) { return {params, 0}; }
  static Scalar One(const GroupParams& params) { return {params, 1}; }

  Word value() const { return value_; }
  const GroupParams& params() const { return params_; }
  bool IsZero() const { return value_ == 0; }

  // Throws NoInverseError for zero.
  Scalar Inverse() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  GroupParams params_;
  Word value_;
};

Scalar InvScalar(const Scalar& k);

struct SourceGroupTag {};
struct TargetGroupTag {};

// Element of G (SourceGroupTag) or GT (TargetGroupTag), written
// multiplicatively.
template <typename GroupTag>
class Element {
 public:
  static Element Identity(const GroupParams& params) { return {params, 0}; }
  // g for G, Z = e(g, g) for GT.
  static Element Generator(const GroupParams& params) { return {params, 1}; }
  // Backend constructor: the element whose discrete log is `log` mod q.
  static Element FromRepr(const GroupParams& params, Word log) {
    return {params, log % params.order()};
  }

  Word repr() const { return log_; }
  const GroupParams& params() const { return params_; }
  bool IsIdentity() const { return log_ == 0; }

  Element Inverse() const {
    return {params_, log_ == 0 ? 0 : params_.order() - log_};
  }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  template <typename T>
  friend Element<T> Mul(const Element<T>&, const Element<T>&);
  template <typename T>
  friend Element<T> Exp(const Element<T>&, const Scalar&);

  Element(const GroupParams& params, Word log) : params_(params), log_(log) {}

  GroupParams params_;
  Word log_;
};

using GroupElem = Element<SourceGroupTag>;
using TargetElem = Element<TargetGroupTag>;

// Throws DomainError when operands come from different groups.
void CheckSameGroup(const GroupParams& a, const GroupParams& b);

template <typename T>
Element<T> Mul(const Element<T>& a, const Element<T>& b) {
  CheckSameGroup(a.params_, b.params_);
  Word q = a.params_.order();
  Word s = a.log_ + b.log_;
  return {a.params_, s >= q ? s - q : s};
}

template <typename T>
Element<T> operator*(const Element<T>& a, const Element<T>& b) {
  return Mul(a, b);
}

template <typename T>
Element<T> operator/(const Element<T>& a, const Element<T>& b) {
  return Mul(a, b.Inverse());
}

Word MulMod(Word a, Word b, Word q);
Word PowMod(Word base, Word exp, Word q);

template <typename T>
Element<T> Exp(const Element<T>& base, const Scalar& k) {
  CheckSameGroup(base.params_, k.params());
  return {base.params_, MulMod(base.log_, k.value(), base.params_.order())};
}

// e(x, y); bilinear and symmetric.
TargetElem Pair(const GroupElem& x, const GroupElem& y);

// Message embedding into GT: mu -> Z^mu, and back.
TargetElem EncodeMessage(const Scalar& mu);
Scalar DecodeMessage(const TargetElem& m);

// Interprets a digest as a big-endian integer and reduces it mod q.
Scalar ScalarFromDigest(const GroupParams& params, const Sha256Digest& digest);

// Nothing-up-my-sleeve element of G derived from a public label; never the
// identity or g itself.
GroupElem HashToGroup(const GroupParams& params, std::string_view label);

// Seedable source of protocol randomness. One instance per logical actor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform over Z_q^*.
  Scalar NonZeroScalar(const GroupParams& params);
  // Uniform over Z_q.
  Scalar AnyScalar(const GroupParams& params);
  // Uniform over [lo, hi].
  std::uint64_t Uniform(std::uint64_t lo, std::uint64_t hi);
  Bytes RandomBytes(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// Free-function form used throughout the protocol code.
inline Scalar RandomScalar(const GroupParams& params, Rng& rng) {
  return rng.NonZeroScalar(params);
}

}  // namespace fairx::algebra
