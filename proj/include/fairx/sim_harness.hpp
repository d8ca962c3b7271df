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

// End-to-end runs of the exchange with scripted seller and buyer agents.
//
// A run stores the seller's sealed payload, deploys the contract, collects
// both deposits, lets the seller act on the re-encryption key, lets the
// buyer fetch, decrypt and (maybe) prove, and finally fires the pending
// deadline if the contract is still open. Utilities combine the ledger's
// monetary deltas with the information value of the data: the buyer gains
// v_b when decryption yields the committed payload; the seller then loses
// v_s, and otherwise retains it (+v_s).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairx/exchange_contract.hpp"
#include "fairx/game_analysis.hpp"
#include "fairx/ledger.hpp"

namespace fairx::sim {

using ledger::Amount;
using ledger::Height;

enum class SellerStrategy { kHonestKey, kCorruptKey, kWithholdKey };
enum class BuyerStrategy { kProveIfAble, kNeverProve };

inline constexpr SellerStrategy kSellerStrategies[] = {
    SellerStrategy::kHonestKey, SellerStrategy::kCorruptKey,
    SellerStrategy::kWithholdKey};
inline constexpr BuyerStrategy kBuyerStrategies[] = {
    BuyerStrategy::kProveIfAble, BuyerStrategy::kNeverProve};

std::string_view StrategyName(SellerStrategy s);
std::string_view StrategyName(BuyerStrategy s);
// Throws ConfigError for unknown names.
SellerStrategy ParseSellerStrategy(std::string_view name);
BuyerStrategy ParseBuyerStrategy(std::string_view name);

inline constexpr std::uint64_t kDefaultOrder = 2147483647;  // 2^31 - 1

struct ScenarioConfig {
  game::GameParams game{10, 15, 15, 10, 10};
  // Contract-side amounts; when set they must agree with `game`.
  std::optional<Amount> exchange_price;
  std::optional<Amount> exchange_deposit_seller;
  std::optional<Amount> exchange_deposit_buyer;

  std::uint64_t group_order = kDefaultOrder;
  // Window lengths in blocks, each starting where the previous ends.
  Height deposit_window = 10;
  Height key_window = 10;
  Height proof_window = 10;
  Amount seller_balance = 1000;
  Amount buyer_balance = 1000;
  std::string identity_data = "name=Alice Example;id=A-1234567;issuer=Registry";

  SellerStrategy seller = SellerStrategy::kHonestKey;
  BuyerStrategy buyer = BuyerStrategy::kProveIfAble;
  std::uint64_t seed = 1;
};

// Throws ConfigError describing the first inconsistency.
void Validate(const ScenarioConfig& config);

struct ScenarioResult {
  SellerStrategy seller;
  BuyerStrategy buyer;
  std::uint64_t seed;

  contract::Phase phase;
  contract::Resolution resolution;

  Amount buyer_money;
  Amount seller_money;
  Amount sink_money;
  game::Payoff buyer_info;
  game::Payoff seller_info;
  game::Payoff buyer_utility;
  game::Payoff seller_utility;

  bool delivered;        // decrypted payload opens the commitment
  bool proof_submitted;
  bool proof_accepted;
  Amount supply_before;
  Amount supply_after;

  // Table cell this run realises: Confirmation iff settled, CorrectSending
  // iff the seller handed over the honest key.
  game::ActionProfile profile;
  std::vector<std::string> notes;
  std::string trace;       // contract event log, one line per event
  std::string ledger_dump;
};

// Throws ConfigError for invalid configurations.
ScenarioResult RunScenario(const ScenarioConfig& config);

// Every (seller, buyer) strategy pair under `base`, seller-major order.
std::vector<ScenarioResult> Sweep(const ScenarioConfig& base);

// Scenario config document (JSON):
//   { "game": {"c":10,"ds":15,"db":15,"vs":10,"vb":10},
//     "exchange": {"order":2147483647, "c":10, "ds":15, "db":15,
//                  "windows": {"deposit":10,"key":10,"proof":10},
//                  "balances": {"seller":1000,"buyer":1000},
//                  "data": "..."},
//     "strategies": {"seller":"HonestKey","buyer":"ProveIfAble"},
//     "seed": 42 }
// Only "game" is required. Throws ConfigError.
ScenarioConfig ParseScenarioConfig(std::string_view text);
ScenarioConfig LoadScenarioConfig(const std::filesystem::path& path);

// Result document (JSON).
std::string ResultDocument(const ScenarioResult& result, int indent = 2);
std::string RenderText(const ScenarioResult& result);

}  // namespace fairx::sim
