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

#include <random>

#include "fairx/errors.hpp"
#include "fairx/exchange_contract.hpp"

namespace fairx::contract {
namespace {

using algebra::GroupParams;
using algebra::Rng;
using algebra::Scalar;
using ledger::Ledger;

const Address kSeller("seller");
const Address kBuyer("buyer");
const Address kKeeper("keeper");

struct Fixture {
  GroupParams params = GroupParams::Setup(1000000007);
  zkpok::PedersenBasis basis = zkpok::PedersenBasis::Derive(params);
  zkpok::Opening opening{Scalar(params, 1234), Scalar(params, 5678)};
  zkpok::Commitment commitment = zkpok::Commit(opening.k, opening.s, basis);
  Ledger chain = Ledger::Genesis({{kSeller, 1000}, {kBuyer, 1000}});
  Rng rng{5};
  pre::KeyPair seller_keys = pre::KeyGen(params, rng);
  pre::KeyPair buyer_keys = pre::KeyGen(params, rng);

  ExchangeParams Params(Amount c = 10, Amount ds = 15, Amount db = 15) {
    return {kSeller, kBuyer, c, ds, db, commitment,
            cas::Digest::Of(ToBytes("payload")), 10, 20, 30, 7};
  }
  ExchangeContract Deploy() {
    return ExchangeContract::Deploy(chain, Params(), kSeller);
  }
  pre::ReEncryptionKey Rekey() {
    return pre::ReKeyGen(seller_keys.sk, buyer_keys.pk);
  }
  zkpok::KnowledgeProof ProofFor(const ExchangeContract& c) {
    return zkpok::Prove(opening, commitment, c.Context(), rng);
  }
};

TEST_CASE_FIXTURE(Fixture, "deploy enforces the deposit condition") {
  ExchangeContract c = Deploy();
  CHECK(c.state().phase == Phase::kAwaitingDeposits);
  CHECK(c.state().escrow == 0);
  CHECK_THROWS_AS(ExchangeContract::Deploy(chain, Params(10, 10, 15), kSeller),
                  ContractError);
  CHECK_THROWS_AS(ExchangeContract::Deploy(chain, Params(10, 15, 10), kSeller),
                  ContractError);
  CHECK_THROWS_AS(ExchangeContract::Deploy(chain, Params(0, 15, 15), kSeller),
                  ContractError);
  ExchangeParams bad = Params();
  bad.timeout_key = bad.timeout_deposit;
  CHECK_THROWS_AS(ExchangeContract::Deploy(chain, bad, kSeller), ContractError);
  bad = Params();
  bad.buyer = kSeller;
  CHECK_THROWS_AS(ExchangeContract::Deploy(chain, bad, kSeller), ContractError);
  chain.AdvanceHeight(10);
  CHECK_THROWS_AS(ExchangeContract::Deploy(chain, Params(), kSeller),
                  ContractError);
}

TEST_CASE_FIXTURE(Fixture, "deposits") {
  ExchangeContract c = Deploy();
  CHECK_THROWS_AS(c.Deposit(kBuyer, 15), ContractError);  // price missing
  CHECK_THROWS_AS(c.Deposit(kKeeper, 15), ContractError);
  c.Deposit(kSeller, 15);
  CHECK_THROWS_AS(c.Deposit(kSeller, 15), ContractError);
  CHECK(c.state().phase == Phase::kAwaitingDeposits);
  c.Deposit(kBuyer, 25);
  CHECK(c.state().phase == Phase::kAwaitingKey);
  CHECK(c.state().escrow == 40);
  CHECK(chain.BalanceOf(c.address()) == 40);
  CHECK(chain.TotalSupply() == 2000);
}

TEST_CASE_FIXTURE(Fixture, "deposit window closes") {
  ExchangeContract c = Deploy();
  chain.AdvanceHeight(10);
  CHECK_THROWS_AS(c.Deposit(kSeller, 15), ContractError);
}

TEST_CASE_FIXTURE(Fixture, "key submission and reads") {
  ExchangeContract c = Deploy();
  CHECK_THROWS_AS(c.GetRekey(kBuyer), ContractError);
  CHECK_THROWS_AS(c.SubmitRekey(kSeller, Rekey()), ContractError);
  c.Deposit(kSeller, 15);
  c.Deposit(kBuyer, 25);
  CHECK_THROWS_AS(c.SubmitRekey(kBuyer, Rekey()), ContractError);
  c.SubmitRekey(kSeller, Rekey());
  CHECK(c.state().phase == Phase::kAwaitingProof);
  CHECK_THROWS_AS(c.SubmitRekey(kSeller, Rekey()), ContractError);
  CHECK(pre::EncodeReKey(c.GetRekey(kKeeper)) == pre::EncodeReKey(Rekey()));
  CHECK(c.GetRekey(kBuyer) == c.GetRekey(kSeller));
}

TEST_CASE_FIXTURE(Fixture, "settlement on a verifying proof") {
  ExchangeContract c = Deploy();
  c.Deposit(kSeller, 15);
  c.Deposit(kBuyer, 25);
  c.SubmitRekey(kSeller, Rekey());

  zkpok::KnowledgeProof good = ProofFor(c);
  zkpok::KnowledgeProof bad = good;
  bad.z2 = bad.z2 + Scalar::One(params);
  CHECK(c.SubmitProof(kBuyer, bad) == ProofOutcome::kRejected);
  CHECK(c.state().phase == Phase::kAwaitingProof);
  CHECK(c.state().escrow == 40);
  // A proof bound to another exchange does not transfer.
  zkpok::KnowledgeProof replay = zkpok::Prove(
      opening, commitment, zkpok::MakeContext(c.address().str(), 8), rng);
  CHECK(c.SubmitProof(kBuyer, replay) == ProofOutcome::kRejected);
  CHECK_THROWS_AS(c.SubmitProof(kSeller, good), ContractError);

  CHECK(c.SubmitProof(kBuyer, good) == ProofOutcome::kAccepted);
  CHECK(c.state().phase == Phase::kSettled);
  CHECK(c.state().escrow == 0);
  CHECK(chain.BalanceOf(kSeller) == 1010);
  CHECK(chain.BalanceOf(kBuyer) == 990);
  CHECK(chain.BalanceOf(Ledger::Sink()) == 0);

  // Absorbing.
  chain.AdvanceHeight(100);
  CHECK_FALSE(c.OnTimeout(kKeeper));
  CHECK_THROWS_AS(c.SubmitProof(kBuyer, good), ContractError);
  CHECK(c.state().phase == Phase::kSettled);
}

TEST_CASE_FIXTURE(Fixture, "late proof is rejected and the deposits forfeit") {
  ExchangeContract c = Deploy();
  c.Deposit(kSeller, 15);
  c.Deposit(kBuyer, 25);
  c.SubmitRekey(kSeller, Rekey());
  chain.AdvanceHeight(29);
  CHECK_FALSE(c.OnTimeout(kKeeper));  // deadline - 1
  chain.AdvanceHeight(1);
  CHECK_THROWS_AS(c.SubmitProof(kBuyer, ProofFor(c)), ContractError);
  CHECK(c.OnTimeout(kKeeper));
  CHECK(c.state().phase == Phase::kForfeited);
  CHECK(c.state().resolution == Resolution::kForfeit);
  CHECK(chain.BalanceOf(Ledger::Sink()) == 30);
  CHECK(chain.BalanceOf(kSeller) == 985);
  CHECK(chain.BalanceOf(kBuyer) == 985);
  CHECK(c.state().escrow == 0);
}

TEST_CASE_FIXTURE(Fixture, "withheld key forfeits both deposits") {
  ExchangeContract c = Deploy();
  c.Deposit(kSeller, 15);
  c.Deposit(kBuyer, 25);
  chain.AdvanceHeight(19);
  CHECK_FALSE(c.OnTimeout(kKeeper));
  chain.AdvanceHeight(1);
  CHECK_THROWS_AS(c.SubmitRekey(kSeller, Rekey()), ContractError);
  CHECK(c.OnTimeout(kKeeper));
  CHECK(chain.BalanceOf(Ledger::Sink()) == 30);
  CHECK(chain.BalanceOf(kBuyer) == 985);
  CHECK(chain.BalanceOf(kSeller) == 985);
  CHECK(chain.TotalSupply() == 2000);
}

TEST_CASE_FIXTURE(Fixture, "lapsed deposit window refunds") {
  ExchangeContract c = Deploy();
  c.Deposit(kSeller, 15);
  chain.AdvanceHeight(9);
  CHECK_FALSE(c.OnTimeout(kKeeper));
  chain.AdvanceHeight(1);
  CHECK(c.OnTimeout(kKeeper));
  CHECK(c.state().phase == Phase::kForfeited);
  CHECK(c.state().resolution == Resolution::kDepositRefund);
  CHECK(chain.BalanceOf(kSeller) == 1000);
  CHECK(chain.BalanceOf(Ledger::Sink()) == 0);
  CHECK_THROWS_AS(c.Deposit(kBuyer, 25), ContractError);
}

TEST_CASE_FIXTURE(Fixture, "event log") {
  ExchangeContract c = Deploy();
  chain.AdvanceHeight(1);
  c.Deposit(kSeller, 15);
  c.Deposit(kBuyer, 25);
  chain.AdvanceHeight(1);
  c.SubmitRekey(kSeller, Rekey());
  c.SubmitProof(kBuyer, ProofFor(c));
  CHECK(c.TraceText() ==
        "0|AwaitingDeposits|AwaitingDeposits|deploy|seller|0\n"
        "1|AwaitingDeposits|AwaitingDeposits|deposit|seller|15\n"
        "1|AwaitingDeposits|AwaitingKey|deposit|buyer|25\n"
        "2|AwaitingKey|AwaitingProof|submit_rekey|seller|0\n"
        "2|AwaitingProof|Settled|submit_proof|buyer|40\n");
}

TEST_CASE_FIXTURE(Fixture, "random call sequences keep the invariants") {
  std::mt19937 gen(99);
  for (int run = 0; run < 300; ++run) {
    Ledger chain_run = Ledger::Genesis({{kSeller, 1000}, {kBuyer, 1000}});
    ExchangeContract c = ExchangeContract::Deploy(chain_run, Params(), kSeller);
    const Amount supply = chain_run.TotalSupply();
    int last_phase = 0;
    bool verified_proof_seen = false;
    for (int step = 0; step < 20; ++step) {
      try {
        switch (gen() % 7) {
          case 0: c.Deposit(kSeller, gen() % 2 ? 15 : 14); break;
          case 1: c.Deposit(kBuyer, gen() % 2 ? 25 : 15); break;
          case 2: c.SubmitRekey(gen() % 2 ? kSeller : kBuyer, Rekey()); break;
          case 3: {
            zkpok::KnowledgeProof p = ProofFor(c);
            bool valid = gen() % 2;
            if (!valid) p.z1 = p.z1 + Scalar::One(params);
            if (c.SubmitProof(kBuyer, p) == ProofOutcome::kAccepted) {
              REQUIRE(valid);
              verified_proof_seen = true;
            }
            break;
          }
          case 4: c.OnTimeout(kKeeper); break;
          default: chain_run.AdvanceHeight(1 + gen() % 6); break;
        }
      } catch (const ContractError&) {
      }
      int phase = static_cast<int>(c.state().phase);
      REQUIRE(phase >= last_phase);
      last_phase = phase;
      REQUIRE(chain_run.BalanceOf(c.address()) == c.state().escrow);
      REQUIRE(chain_run.TotalSupply() == supply);
      if (c.state().phase == Phase::kSettled) REQUIRE(verified_proof_seen);
      if (c.IsTerminal()) REQUIRE(c.state().escrow == 0);
    }
  }
}

}  // namespace
}  // namespace fairx::contract
