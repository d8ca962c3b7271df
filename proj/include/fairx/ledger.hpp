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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairx/bytes.hpp"

namespace fairx::ledger {

// Integer currency units; no fractions, no fees.
using Amount = std::int64_t;
using Height = std::uint64_t;

class Address {
 public:
  Address() = default;
  explicit Address(std::string id) : id_(std::move(id)) {}

  const std::string& str() const { return id_; }

  friend auto operator<=>(const Address&, const Address&) = default;

 private:
  std::string id_;
};

struct Receipt {
  std::uint64_t sequence;
  Address from;
  Address to;
  Amount amount;
  Height height;
};

// Deterministic single-writer ledger with logical block height. Supply is
// fixed at genesis; funds move only by Transfer. Forfeited funds go to the
// sink account, which can receive but never send.
class Ledger {
 public:
  static const Address& Sink();

  // Throws LedgerError on duplicate addresses or negative balances. The
  // sink account is always present.
  static Ledger Genesis(const std::vector<std::pair<Address, Amount>>& accounts);

  // Throws LedgerError for non-positive amounts, unknown accounts, spending
  // from the sink or insufficient funds; the state is unchanged on failure.
  Receipt Transfer(const Address& from, const Address& to, Amount amount);

  // Throws LedgerError for n == 0.
  Height AdvanceHeight(Height n);
  Height height() const { return height_; }

  // Creates a zero-balance account named `<prefix>-<n>`, e.g. for a hosted
  // contract's escrow.
  Address OpenAccount(std::string_view prefix);

  bool HasAccount(const Address& a) const { return balances_.contains(a); }
  // Throws LedgerError for unknown accounts.
  Amount BalanceOf(const Address& a) const;
  Amount TotalSupply() const;
  const std::map<Address, Amount>& balances() const { return balances_; }

  // Canonical text form: "height <h>" then "<address> <balance>" per line
  // in address order.
  std::string Dump() const;
  Sha256Digest StateHash() const;

 private:
  Ledger() = default;

  std::map<Address, Amount> balances_;
  Height height_ = 0;
  std::uint64_t next_sequence_ = 0;
  std::uint64_t next_account_ = 0;
};

}  // namespace fairx::ledger
