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

#include "fairx/exchange_contract.hpp"

#include <sstream>

#include "fairx/errors.hpp"

namespace fairx::contract {

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kAwaitingDeposits: return "AwaitingDeposits";
    case Phase::kAwaitingKey: return "AwaitingKey";
    case Phase::kAwaitingProof: return "AwaitingProof";
    case Phase::kSettled: return "Settled";
    case Phase::kForfeited: return "Forfeited";
  }
  return "?";
}

std::string_view ResolutionName(Resolution resolution) {
  switch (resolution) {
    case Resolution::kOpen: return "open";
    case Resolution::kSettled: return "settled";
    case Resolution::kDepositRefund: return "deposit-refund";
    case Resolution::kForfeit: return "forfeit";
  }
  return "?";
}

std::string TraceEvent::ToString() const {
  std::ostringstream out;
  out << height << '|' << PhaseName(from) << '|' << PhaseName(to) << '|' << op
      << '|' << caller.str() << '|' << amount;
  return out.str();
}

ExchangeContract::ExchangeContract(ledger::Ledger& chain, ExchangeParams params,
                                   Address address)
    : chain_(&chain), params_(std::move(params)), address_(std::move(address)) {}

ExchangeContract ExchangeContract::Deploy(ledger::Ledger& chain,
                                          ExchangeParams params,
                                          const Address& deployer) {
  if (params.price <= 0) throw ContractError("deploy: price must be positive");
  if (params.deposit_seller <= params.price ||
      params.deposit_buyer <= params.price) {
    throw ContractError("deploy: each deposit must exceed the price");
  }
  if (params.seller == params.buyer) {
    throw ContractError("deploy: seller and buyer must differ");
  }
  if (!chain.HasAccount(params.seller) || !chain.HasAccount(params.buyer)) {
    throw ContractError("deploy: unknown party account");
  }
  Height now = chain.height();
  if (!(now < params.timeout_deposit &&
        params.timeout_deposit < params.timeout_key &&
        params.timeout_key < params.timeout_proof)) {
    throw ContractError("deploy: timeouts must strictly increase from now");
  }
  const zkpok::Commitment& c = params.commitment;
  if (c.value.params() != c.basis.params()) {
    throw ContractError("deploy: commitment outside its basis group");
  }
  Address address = chain.OpenAccount("contract");
  ExchangeContract contract(chain, std::move(params), std::move(address));
  contract.Record(Phase::kAwaitingDeposits, "deploy", deployer, 0);
  return contract;
}

void ExchangeContract::Record(Phase from, std::string_view op,
                              const Address& caller, Amount amount) {
  trace_.push_back({chain_->height(), from, state_.phase, std::string(op),
                    caller, amount});
}

void ExchangeContract::RequirePhase(Phase expected, std::string_view op) const {
  if (state_.phase != expected) {
    throw ContractError(std::string(op) + ": not allowed in phase " +
                        std::string(PhaseName(state_.phase)));
  }
}

void ExchangeContract::Release(const Address& to, Amount amount) {
  if (amount == 0) return;
  chain_->Transfer(address_, to, amount);
  state_.escrow -= amount;
}

bool ExchangeContract::IsTerminal() const {
  return state_.phase == Phase::kSettled || state_.phase == Phase::kForfeited;
}

void ExchangeContract::Deposit(const Address& party, Amount amount) {
  RequirePhase(Phase::kAwaitingDeposits, "deposit");
  if (chain_->height() >= params_.timeout_deposit) {
    throw ContractError("deposit: window closed");
  }
  bool* paid = nullptr;
  Amount due = 0;
  if (party == params_.seller) {
    paid = &state_.seller_paid;
    due = params_.deposit_seller;
  } else if (party == params_.buyer) {
    paid = &state_.buyer_paid;
    due = params_.deposit_buyer + params_.price;
  } else {
    throw ContractError("deposit: " + party.str() + " is not a party");
  }
  if (*paid) throw ContractError("deposit: already paid by " + party.str());
  if (amount != due) {
    throw ContractError("deposit: expected " + std::to_string(due) + " from " +
                        party.str());
  }
  chain_->Transfer(party, address_, amount);
  *paid = true;
  state_.escrow += amount;
  Phase from = state_.phase;
  if (state_.seller_paid && state_.buyer_paid) state_.phase = Phase::kAwaitingKey;
  Record(from, "deposit", party, amount);
}

void ExchangeContract::SubmitRekey(const Address& caller,
                                   const pre::ReEncryptionKey& rk) {
  if (state_.phase == Phase::kAwaitingProof) {
    throw ContractError("submit_rekey: key already submitted");
  }
  RequirePhase(Phase::kAwaitingKey, "submit_rekey");
  if (caller != params_.seller) {
    throw ContractError("submit_rekey: only the seller may submit");
  }
  if (chain_->height() >= params_.timeout_key) {
    throw ContractError("submit_rekey: window closed");
  }
  if (rk.rk.params() != params_.commitment.basis.params()) {
    throw ContractError("submit_rekey: key from a foreign group");
  }
  state_.rekey = rk;
  state_.rekey_height = chain_->height();
  state_.phase = Phase::kAwaitingProof;
  Record(Phase::kAwaitingKey, "submit_rekey", caller, 0);
}

const pre::ReEncryptionKey& ExchangeContract::GetRekey(
    const Address& /*caller*/) const {
  RequirePhase(Phase::kAwaitingProof, "get_rekey");
  return *state_.rekey;
}

ProofOutcome ExchangeContract::SubmitProof(const Address& caller,
                                           const zkpok::KnowledgeProof& proof) {
  RequirePhase(Phase::kAwaitingProof, "submit_proof");
  if (caller != params_.buyer) {
    throw ContractError("submit_proof: only the buyer may submit");
  }
  if (chain_->height() >= params_.timeout_proof) {
    throw ContractError("submit_proof: window closed");
  }
  if (!zkpok::Verify(proof, params_.commitment, Context())) {
    return ProofOutcome::kRejected;
  }
  Amount released = state_.escrow;
  Release(params_.seller, params_.price + params_.deposit_seller);
  Release(params_.buyer, params_.deposit_buyer);
  state_.phase = Phase::kSettled;
  state_.resolution = Resolution::kSettled;
  Record(Phase::kAwaitingProof, "submit_proof", caller, released);
  return ProofOutcome::kAccepted;
}

bool ExchangeContract::OnTimeout(const Address& caller) {
  Height now = chain_->height();
  Phase from = state_.phase;
  Amount released = state_.escrow;
  switch (state_.phase) {
    case Phase::kAwaitingDeposits:
      if (now < params_.timeout_deposit) return false;
      // No exchange obligation exists yet; return whatever was paid.
      if (state_.seller_paid) Release(params_.seller, params_.deposit_seller);
      if (state_.buyer_paid) {
        Release(params_.buyer, params_.deposit_buyer + params_.price);
      }
      state_.resolution = Resolution::kDepositRefund;
      break;
    case Phase::kAwaitingKey:
    case Phase::kAwaitingProof: {
      Height deadline = state_.phase == Phase::kAwaitingKey
                            ? params_.timeout_key
                            : params_.timeout_proof;
      if (now < deadline) return false;
      // Deposits are blocked for good; the escrowed price was never earned
      // and goes back to the buyer.
      Release(params_.buyer, params_.price);
      Release(ledger::Ledger::Sink(),
              params_.deposit_seller + params_.deposit_buyer);
      state_.resolution = Resolution::kForfeit;
      break;
    }
    case Phase::kSettled:
    case Phase::kForfeited:
      return false;
  }
  state_.phase = Phase::kForfeited;
  Record(from, "timeout", caller, released);
  return true;
}

std::string ExchangeContract::TraceText() const {
  std::string out;
  for (const auto& e : trace_) {
    out += e.ToString();
    out += '\n';
  }
  return out;
}

Bytes ExchangeContract::Context() const {
  return zkpok::MakeContext(address_.str(), params_.nonce);
}

}  // namespace fairx::contract
