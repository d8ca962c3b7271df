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

// Escrow contract for one sale of sealed data.
//
//   AwaitingDeposits --both paid--> AwaitingKey --seller rk--> AwaitingProof
//   AwaitingProof --verifying proof--> Settled
//   AwaitingDeposits --deadline--> Forfeited (deposit refund, no penalty)
//   AwaitingKey | AwaitingProof --deadline--> Forfeited (deposits to sink)
//
// Deadlines are block heights. An action is accepted while
// height < deadline; on_timeout takes effect once height >= deadline.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairx/cas_store.hpp"
#include "fairx/ledger.hpp"
#include "fairx/pre.hpp"
#include "fairx/zkpok.hpp"

namespace fairx::contract {

using ledger::Address;
using ledger::Amount;
using ledger::Height;

enum class Phase {
  kAwaitingDeposits,
  kAwaitingKey,
  kAwaitingProof,
  kSettled,
  kForfeited,
};

// How a terminal phase was reached.
enum class Resolution {
  kOpen,
  kSettled,
  kDepositRefund,  // deposit window lapsed; payments returned
  kForfeit,        // deposits moved to the sink
};

std::string_view PhaseName(Phase phase);
std::string_view ResolutionName(Resolution resolution);

struct ExchangeParams {
  Address seller;
  Address buyer;
  Amount price = 0;
  Amount deposit_seller = 0;
  Amount deposit_buyer = 0;
  zkpok::Commitment commitment;
  cas::Digest ciphertext_digest;
  Height timeout_deposit = 0;
  Height timeout_key = 0;
  Height timeout_proof = 0;
  std::uint64_t nonce = 0;
};

struct ContractState {
  Phase phase = Phase::kAwaitingDeposits;
  Resolution resolution = Resolution::kOpen;
  Amount escrow = 0;
  bool seller_paid = false;
  bool buyer_paid = false;
  std::optional<pre::ReEncryptionKey> rekey;
  std::optional<Height> rekey_height;
};

// One line of the event log: height|phase_from|phase_to|op|caller|amount.
struct TraceEvent {
  Height height;
  Phase from;
  Phase to;
  std::string op;
  Address caller;
  Amount amount;

  std::string ToString() const;
};

enum class ProofOutcome { kAccepted, kRejected };

class ExchangeContract {
 public:
  // Opens an escrow account on `chain` and records the deployment. The
  // ledger must outlive the contract. Throws ContractError when the price is
  // not positive, either deposit does not exceed the price, the timeouts do
  // not strictly increase from the current height, seller and buyer
  // coincide, or the commitment is malformed.
  static ExchangeContract Deploy(ledger::Ledger& chain, ExchangeParams params,
                                 const Address& deployer);

  // Seller pays exactly d_s; buyer pays exactly d_b + c.
  void Deposit(const Address& party, Amount amount);
  void SubmitRekey(const Address& caller, const pre::ReEncryptionKey& rk);
  // Readable by anyone once submitted.
  const pre::ReEncryptionKey& GetRekey(const Address& caller) const;
  // Invalid proofs leave the state untouched and may be retried until the
  // proof deadline.
  ProofOutcome SubmitProof(const Address& caller,
                           const zkpok::KnowledgeProof& proof);
  // Permissionless. Returns true if a deadline had passed and the contract
  // moved to its terminal phase; false (no-op) otherwise.
  bool OnTimeout(const Address& caller);

  const Address& address() const { return address_; }
  const ExchangeParams& params() const { return params_; }
  const ContractState& state() const { return state_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }
  std::string TraceText() const;
  // Proof context bound to this instance: address || nonce.
  Bytes Context() const;
  bool IsTerminal() const;

 private:
  ExchangeContract(ledger::Ledger& chain, ExchangeParams params,
                   Address address);

  void Record(Phase from, std::string_view op, const Address& caller,
              Amount amount);
  void RequirePhase(Phase expected, std::string_view op) const;
  void Release(const Address& to, Amount amount);

  ledger::Ledger* chain_;
  ExchangeParams params_;
  Address address_;
  ContractState state_;
  std::vector<TraceEvent> trace_;
};

}  // namespace fairx::contract
