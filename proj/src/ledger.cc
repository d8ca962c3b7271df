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

#include "fairx/ledger.hpp"

#include <sstream>

#include "fairx/errors.hpp"

namespace fairx::ledger {

const Address& Ledger::Sink() {
  static const Address kSink("sink");
  return kSink;
}

Ledger Ledger::Genesis(
    const std::vector<std::pair<Address, Amount>>& accounts) {
  Ledger ledger;
  ledger.balances_.emplace(Sink(), 0);
  for (const auto& [address, balance] : accounts) {
    if (balance < 0) {
      throw LedgerError("genesis: negative balance for " + address.str());
    }
    if (!ledger.balances_.emplace(address, balance).second) {
      throw LedgerError("genesis: duplicate address " + address.str());
    }
  }
  return ledger;
}

Receipt Ledger::Transfer(const Address& from, const Address& to,
                         Amount amount) {
  if (amount <= 0) throw LedgerError("transfer: amount must be positive");
  if (from == Sink()) throw LedgerError("transfer: sink is unspendable");
  auto src = balances_.find(from);
  if (src == balances_.end()) {
    throw LedgerError("transfer: unknown sender " + from.str());
  }
  auto dst = balances_.find(to);
  if (dst == balances_.end()) {
    throw LedgerError("transfer: unknown recipient " + to.str());
  }
  if (src->second < amount) {
    throw LedgerError("transfer: insufficient funds in " + from.str());
  }
  src->second -= amount;
  dst->second += amount;
  return {next_sequence_++, from, to, amount, height_};
}

Height Ledger::AdvanceHeight(Height n) {
  if (n == 0) throw LedgerError("advance: height must increase");
  height_ += n;
  return height_;
}

Address Ledger::OpenAccount(std::string_view prefix) {
  Address a(std::string(prefix) + "-" + std::to_string(next_account_++));
  if (!balances_.emplace(a, 0).second) {
    throw LedgerError("open account: address taken " + a.str());
  }
  return a;
}

Amount Ledger::BalanceOf(const Address& a) const {
  auto it = balances_.find(a);
  if (it == balances_.end()) throw LedgerError("unknown account " + a.str());
  return it->second;
}

Amount Ledger::TotalSupply() const {
  Amount total = 0;
  for (const auto& [address, balance] : balances_) total += balance;
  return total;
}

std::string Ledger::Dump() const {
  std::ostringstream out;
  out << "height " << height_ << "\n";
  for (const auto& [address, balance] : balances_) {
    out << address.str() << " " << balance << "\n";
  }
  return out.str();
}

Sha256Digest Ledger::StateHash() const {
  std::string dump = Dump();
  return Sha256(ToBytes(dump));
}

}  // namespace fairx::ledger
