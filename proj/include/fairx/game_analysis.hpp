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

// Two-player strategic form of the data sale. Rows are the buyer's
// actions, columns the seller's; every cell is (buyer payoff, seller
// payoff):
//
//                    CorrectSending          FailedSending
//   Confirmation     (v_b - c,   c - v_s)    (-c,   c + v_s)
//   NoConfirmation   (v_b - d_b, -d_s - v_s) (-d_b, -d_s + v_s)

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fairx::game {

using Payoff = std::int64_t;

struct GameParams {
  Payoff c = 0;    // price
  Payoff d_s = 0;  // seller deposit
  Payoff d_b = 0;  // buyer deposit
  Payoff v_s = 0;  // value of the data to the seller
  Payoff v_b = 0;  // value of the data to the buyer

  bool NonNegative() const;
  // d_s > c and d_b > c.
  bool DepositsExceedPrice() const { return d_s > c && d_b > c; }
};

enum class SellerAction { kCorrectSending = 0, kFailedSending = 1 };
enum class BuyerAction { kConfirmation = 0, kNoConfirmation = 1 };
enum class Player { kBuyer, kSeller };

inline constexpr std::array<SellerAction, 2> kSellerActions = {
    SellerAction::kCorrectSending, SellerAction::kFailedSending};
inline constexpr std::array<BuyerAction, 2> kBuyerActions = {
    BuyerAction::kConfirmation, BuyerAction::kNoConfirmation};

std::string_view ActionName(SellerAction a);
std::string_view ActionName(BuyerAction a);

struct ActionProfile {
  BuyerAction buyer;
  SellerAction seller;

  friend bool operator==(const ActionProfile&, const ActionProfile&) = default;
};

// "(Confirmation, FailedSending)" style, buyer first.
std::string ToString(const ActionProfile& p);

struct Cell {
  Payoff buyer;
  Payoff seller;

  friend bool operator==(const Cell&, const Cell&) = default;
};

class PayoffMatrix {
 public:
  PayoffMatrix() = default;

  const Cell& at(BuyerAction b, SellerAction s) const {
    return cells_[Index(b)][Index(s)];
  }
  Cell& at(BuyerAction b, SellerAction s) { return cells_[Index(b)][Index(s)]; }
  const Cell& at(const ActionProfile& p) const { return at(p.buyer, p.seller); }

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  template <typename E>
  static std::size_t Index(E e) {
    return static_cast<std::size_t>(e);
  }
  std::array<std::array<Cell, 2>, 2> cells_{};
};

PayoffMatrix BuildMatrix(const GameParams& p);

// All maximisers of `player`'s payoff with the opponent's action fixed.
std::vector<BuyerAction> BestResponse(const PayoffMatrix& m,
                                      SellerAction seller_action);
std::vector<SellerAction> BestResponse(const PayoffMatrix& m,
                                       BuyerAction buyer_action);

struct Equilibrium {
  ActionProfile profile;
  // True when some player has a deviation that pays exactly the same.
  bool weak;
};

// Pure-strategy Nash equilibria, weak ones included, in row-major order.
std::vector<Equilibrium> PureNash(const PayoffMatrix& m);
bool IsPureNash(const std::vector<Equilibrium>& eqs, const ActionProfile& p);

// The game once confirmation requires a verifying proof of delivery: the
// buyer confirms exactly when the data was delivered, so the seller alone
// decides between (CorrectSending, Confirmation) worth c - v_s and
// (FailedSending, NoConfirmation) worth -d_s + v_s, by backward induction.
struct RevisedOutcome {
  // Every subgame-perfect outcome; two entries when the seller is
  // indifferent.
  std::vector<ActionProfile> outcomes;
  bool indifferent = false;

  bool Is(const ActionProfile& p) const {
    return !indifferent && outcomes.size() == 1 && outcomes.front() == p;
  }
};

RevisedOutcome RevisedNash(const GameParams& p);

struct FairnessReport {
  GameParams params;
  bool seller_deposit_exceeds_price = false;  // d_s > c
  bool buyer_deposit_exceeds_price = false;   // d_b > c
  bool revised_condition = false;             // d_s > 2 v_s - c
  PayoffMatrix matrix;
  std::vector<Equilibrium> nash;
  RevisedOutcome revised;

  bool AllHold() const {
    return seller_deposit_exceeds_price && buyer_deposit_exceeds_price &&
           revised_condition;
  }
  // "fair" when the revised game ends in honest trade and the deposits are
  // large enough for the contract to accept them.
  std::string Classification() const;
};

FairnessReport FairnessCondition(const GameParams& p);

// Human-readable report laid out like the strategic-form table.
std::string RenderText(const FairnessReport& report);

}  // namespace fairx::game
