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

#include <string>
#include <type_traits>

#include "fairx/errors.hpp"
#include "fairx/pre.hpp"
#include "oracles.hpp"

namespace fairx::pre {
namespace {

using algebra::EncodeMessage;
using algebra::Word;

const GroupParams kQ11 = GroupParams::Setup(11);

GroupElem G(Word e) { return GroupElem::FromRepr(kQ11, e); }
TargetElem Z(Word e) { return TargetElem::FromRepr(kQ11, e); }
Scalar S(Word v) { return Scalar(kQ11, v); }

// Reencrypt sees only public values.
static_assert(std::is_same_v<decltype(&ReEncrypt),
                             Level2Ciphertext (*)(const Level1Ciphertext&,
                                                  const ReEncryptionKey&)>);

TEST_CASE("keygen") {
  KeyPair kp = KeyPairFromSecret(S(3));
  CHECK(kp.pk == G(3));
  CHECK_THROWS_AS(KeyPairFromSecret(S(0)), NoInverseError);
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    KeyPair x = KeyGen(kQ11, a);
    KeyPair y = KeyGen(kQ11, b);
    REQUIRE(x.sk == y.sk);
    REQUIRE(x.pk == y.pk);
    REQUIRE_FALSE(x.pk.IsIdentity());
  }
}

TEST_CASE("worked example at q=11, a=3, b=4, r=5, m=Z^2") {
  const Word q = 11, a = 3, b = 4, r = 5, mu = 2;
  // Independent expectations.
  const Word c1 = (r + mu) % q;                              // 7
  const Word c2 = oracle::SlowMulMod(r, a, q);               // 4
  const Word inv_a = *oracle::SearchInverse(a, q);           // 4
  const Word rk_exp = oracle::SlowMulMod(b, inv_a, q);       // 5
  const Word c2_level2 = oracle::SlowMulMod(c2, rk_exp, q);  // 9
  const Word inv_b = *oracle::SearchInverse(b, q);           // 3
  const Word mask = oracle::SlowMulMod(c2_level2, inv_b, q); // 5
  REQUIRE(c1 == 7);
  REQUIRE(c2 == 4);
  REQUIRE(rk_exp == 5);
  REQUIRE(c2_level2 == 9);
  REQUIRE(mask == 5);

  KeyPair alice = KeyPairFromSecret(S(a));
  KeyPair bob = KeyPairFromSecret(S(b));
  Level1Ciphertext ca = EncryptWithRandomness(alice.pk, Z(mu), S(r));
  CHECK(ca.c1 == Z(c1));
  CHECK(ca.c2 == G(c2));
  CHECK(DecryptLevel1(ca, alice.sk) == Z(mu));

  ReEncryptionKey rk = ReKeyGen(alice.sk, bob.pk);
  CHECK(rk.rk == G(rk_exp));
  CHECK(rk.from_pk == alice.pk);
  CHECK(rk.to_pk == bob.pk);

  Level2Ciphertext cb = ReEncrypt(ca, rk);
  CHECK(cb.c1 == ca.c1);
  CHECK(cb.c2 == Z(c2_level2));
  CHECK(DecryptLevel2(cb, bob.sk) == Z((c1 + q - mask) % q));
  CHECK(DecryptLevel2(cb, bob.sk) == Z(mu));
}

TEST_CASE("edge cases") {
  KeyPair alice = KeyPairFromSecret(S(6));
  // Identity message.
  Level1Ciphertext c = EncryptWithRandomness(alice.pk, Z(0), S(9));
  CHECK(c.c1 == Z(9));
  CHECK(DecryptLevel1(c, alice.sk).IsIdentity());
  // a == b gives rk = g and c2' = Z^{ra}.
  ReEncryptionKey self = ReKeyGen(alice.sk, alice.pk);
  CHECK(self.rk == GroupElem::Generator(kQ11));
  CHECK(ReEncrypt(c, self).c2 == Z(oracle::SlowMulMod(9, 6, 11)));
  CHECK(DecryptLevel2(ReEncrypt(c, self), alice.sk).IsIdentity());
  CHECK_THROWS_AS(ReKeyGen(S(0), alice.pk), NoInverseError);
  CHECK_THROWS_AS(DecryptLevel2(ReEncrypt(c, self), S(0)), NoInverseError);
  CHECK_THROWS_AS(DecryptLevel1(c, S(0)), NoInverseError);
  CHECK_THROWS_AS(EncryptWithRandomness(alice.pk, Z(1), S(0)), ParameterError);

  auto p13 = GroupParams::Setup(13);
  ReEncryptionKey foreign{GroupElem::Generator(p13), GroupElem::Generator(p13),
                          GroupElem::Generator(p13)};
  CHECK_THROWS_AS(ReEncrypt(c, foreign), DomainError);
}

TEST_CASE("exhaustive roundtrip and wrong-key failure at q=11") {
  int roundtrips = 0;
  for (Word a = 1; a < 11; ++a) {
    KeyPair alice = KeyPairFromSecret(S(a));
    for (Word b = 1; b < 11; ++b) {
      KeyPair bob = KeyPairFromSecret(S(b));
      ReEncryptionKey rk = ReKeyGen(alice.sk, bob.pk);
      for (Word r = 1; r < 11; ++r) {
        for (Word mu = 0; mu < 11; ++mu) {
          Level1Ciphertext ca = EncryptWithRandomness(alice.pk, Z(mu), S(r));
          REQUIRE(DecryptLevel1(ca, alice.sk) == Z(mu));
          Level2Ciphertext cb = ReEncrypt(ca, rk);
          REQUIRE(cb.c1 == ca.c1);
          REQUIRE(DecryptLevel2(cb, bob.sk) == Z(mu));
          ++roundtrips;
          for (Word wrong = 1; wrong < 11; ++wrong) {
            if (wrong != b) REQUIRE(DecryptLevel2(cb, S(wrong)) != Z(mu));
            if (wrong != a) REQUIRE(DecryptLevel1(ca, S(wrong)) != Z(mu));
          }
        }
      }
    }
  }
  CHECK(roundtrips == 10 * 10 * 10 * 11);
}

TEST_CASE("re-encryption key relation holds for known keys") {
  Rng rng(9);
  auto p = GroupParams::Setup(1000003);
  GroupElem g = GroupElem::Generator(p);
  for (int i = 0; i < 200; ++i) {
    KeyPair alice = KeyGen(p, rng);
    KeyPair bob = KeyGen(p, rng);
    ReEncryptionKey rk = ReKeyGen(alice.sk, bob.pk);
    REQUIRE(algebra::Pair(algebra::Exp(g, alice.sk), rk.rk) ==
            algebra::Pair(g, bob.pk));
  }
}

TEST_CASE("wire format") {
  Rng rng(11);
  auto p = GroupParams::Setup(2147483647);
  for (int i = 0; i < 200; ++i) {
    KeyPair alice = KeyGen(p, rng);
    KeyPair bob = KeyGen(p, rng);
    Level1Ciphertext ca =
        Encrypt(alice.pk, EncodeMessage(rng.AnyScalar(p)), rng);
    ReEncryptionKey rk = ReKeyGen(alice.sk, bob.pk);
    Level2Ciphertext cb = ReEncrypt(ca, rk);
    REQUIRE(DecodeLevel1(EncodeLevel1(ca), p) == ca);
    REQUIRE(DecodeLevel2(EncodeLevel2(cb), p) == cb);
    REQUIRE(DecodeReKey(EncodeReKey(rk), p) == rk);
    REQUIRE(DecodePublicKey(EncodePublicKey(bob.pk), p) == bob.pk);
  }

  Level1Ciphertext ca = EncryptWithRandomness(G(3), Z(2), S(5));
  Bytes enc = EncodeLevel1(ca);
  // Tag, then (len=1, 7), (len=1, 9).
  CHECK(enc == Bytes{0x01, 0, 0, 0, 1, 7, 0, 0, 0, 1, 4});
  CHECK(EncodePublicKey(G(3))[0] == 0x04);
  CHECK(EncodeReKey(ReKeyGen(S(3), G(4)))[0] == 0x03);
  CHECK(EncodeLevel2(ReEncrypt(ca, ReKeyGen(S(3), G(4))))[0] == 0x02);

  CHECK_THROWS_AS(DecodeLevel2(enc, kQ11), DecodeError);  // wrong tag
  Bytes truncated(enc.begin(), enc.end() - 1);
  CHECK_THROWS_AS(DecodeLevel1(truncated, kQ11), DecodeError);
  Bytes trailing = enc;
  trailing.push_back(0);
  CHECK_THROWS_AS(DecodeLevel1(trailing, kQ11), DecodeError);
  // 12 is not a residue mod 11.
  Bytes out_of_range{0x01, 0, 0, 0, 1, 12, 0, 0, 0, 1, 4};
  CHECK_THROWS_AS(DecodeLevel1(out_of_range, kQ11), DecodeError);
  Bytes identity_pk{0x04, 0, 0, 0, 0};
  CHECK_THROWS_AS(DecodePublicKey(identity_pk, kQ11), DecodeError);
}

TEST_CASE("hybrid payloads") {
  Rng rng(13);
  auto p = GroupParams::Setup(2147483647);
  KeyPair alice = KeyGen(p, rng);
  KeyPair bob = KeyGen(p, rng);
  std::string doc = "passport=X1234567;dob=1990-01-01;issuer=registry";
  Bytes sealed = Seal(alice.pk, ToBytes(doc), rng);
  CHECK(OpenLevel1(sealed, alice.sk) == ToBytes(doc));

  SealedPayload parsed = ParseSealed(sealed, p);
  CHECK(parsed.body.size() == doc.size());
  CHECK(parsed.body != ToBytes(doc));
  Level2Ciphertext capsule = ReEncrypt(parsed.capsule, ReKeyGen(alice.sk, bob.pk));
  CHECK(OpenLevel2(capsule, parsed.body, bob.sk) == ToBytes(doc));
  CHECK(OpenLevel2(capsule, parsed.body, alice.sk) != ToBytes(doc));

  Bytes big = rng.RandomBytes(1 << 20);
  CHECK(OpenLevel1(Seal(bob.pk, big, rng), bob.sk) == big);
}

}  // namespace
}  // namespace fairx::pre
