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

#include "fairx/game_analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fairx::game {

bool GameParams::NonNegative() const {
  return c >= 0 && d_s >= 0 && d_b >= 0 && v_s >= 0 && v_b >= 0;
}

std::string_view ActionName(SellerAction a) {
  return a == SellerAction::kCorrectSending ? "CorrectSending"
                                            : "FailedSending";
}

std::string_view ActionName(BuyerAction a) {
  return a == BuyerAction::kConfirmation ? "Confirmation" : "NoConfirmation";
}

std::string ToString(const ActionProfile& p) {
  std::string out = "(";
  out += ActionName(p.buyer);
  out += ", ";
  out += ActionName(p.seller);
  out += ")";
  return out;
}

PayoffMatrix BuildMatrix(const GameParams& p) {
  PayoffMatrix m;
  using enum BuyerAction;
  using enum SellerAction;
  m.at(kConfirmation, kCorrectSending) = {p.v_b - p.c, p.c - p.v_s};
  m.at(kConfirmation, kFailedSending) = {-p.c, p.c + p.v_s};
  m.at(kNoConfirmation, kCorrectSending) = {p.v_b - p.d_b, -p.d_s - p.v_s};
  m.at(kNoConfirmation, kFailedSending) = {-p.d_b, -p.d_s + p.v_s};
  return m;
}

std::vector<BuyerAction> BestResponse(const PayoffMatrix& m,
                                      SellerAction seller_action) {
  Payoff best = std::max(m.at(BuyerAction::kConfirmation, seller_action).buyer,
                         m.at(BuyerAction::kNoConfirmation, seller_action).buyer);
  std::vector<BuyerAction> out;
  for (BuyerAction b : kBuyerActions) {
    if (m.at(b, seller_action).buyer == best) out.push_back(b);
  }
  return out;
}

std::vector<SellerAction> BestResponse(const PayoffMatrix& m,
                                       BuyerAction buyer_action) {
  Payoff best =
      std::max(m.at(buyer_action, SellerAction::kCorrectSending).seller,
               m.at(buyer_action, SellerAction::kFailedSending).seller);
  std::vector<SellerAction> out;
  for (SellerAction s : kSellerActions) {
    if (m.at(buyer_action, s).seller == best) out.push_back(s);
  }
  return out;
}

std::vector<Equilibrium> PureNash(const PayoffMatrix& m) {
  std::vector<Equilibrium> out;
  for (BuyerAction b : kBuyerActions) {
    for (SellerAction s : kSellerActions) {
      auto buyer_best = BestResponse(m, s);
      auto seller_best = BestResponse(m, b);
      bool buyer_ok = std::ranges::find(buyer_best, b) != buyer_best.end();
      bool seller_ok = std::ranges::find(seller_best, s) != seller_best.end();
      if (buyer_ok && seller_ok) {
        bool weak = buyer_best.size() > 1 || seller_best.size() > 1;
        out.push_back({{b, s}, weak});
      }
    }
  }
  return out;
}

bool IsPureNash(const std::vector<Equilibrium>& eqs, const ActionProfile& p) {
  return std::ranges::any_of(eqs,
                             [&](const Equilibrium& e) { return e.profile == p; });
}

RevisedOutcome RevisedNash(const GameParams& p) {
  PayoffMatrix m = BuildMatrix(p);
  // Second stage: the buyer's only feasible reply is fixed by delivery.
  const ActionProfile honest{BuyerAction::kConfirmation,
                             SellerAction::kCorrectSending};
  const ActionProfile failed{BuyerAction::kNoConfirmation,
                             SellerAction::kFailedSending};
  // First stage: the seller anticipates the reply.
  Payoff honest_value = m.at(honest).seller;
  Payoff failed_value = m.at(failed).seller;
  RevisedOutcome out;
  if (honest_value > failed_value) {
    out.outcomes = {honest};
  } else if (honest_value < failed_value) {
    out.outcomes = {failed};
  } else {
    out.outcomes = {honest, failed};
    out.indifferent = true;
  }
  return out;
}

std::string FairnessReport::Classification() const {
  if (revised.indifferent) return "indifferent";
  if (revised.Is({BuyerAction::kConfirmation, SellerAction::kCorrectSending}) &&
      seller_deposit_exceeds_price && buyer_deposit_exceeds_price) {
    return "fair";
  }
  return "unfair";
}

FairnessReport FairnessCondition(const GameParams& p) {
  FairnessReport r;
  r.params = p;
  r.seller_deposit_exceeds_price = p.d_s > p.c;
  r.buyer_deposit_exceeds_price = p.d_b > p.c;
  r.revised_condition = p.d_s > 2 * p.v_s - p.c;
  r.matrix = BuildMatrix(p);
  r.nash = PureNash(r.matrix);
  r.revised = RevisedNash(p);
  return r;
}

namespace {

std::string CellText(const Cell& c) {
  return std::to_string(c.buyer) + ", " + std::to_string(c.seller);
}

const char* Flag(bool ok) { return ok ? "holds" : "VIOLATED"; }

}  // namespace

std::string RenderText(const FairnessReport& r) {
  std::ostringstream out;
  const GameParams& p = r.params;
  out << "params: c=" << p.c << " d_s=" << p.d_s << " d_b=" << p.d_b
      << " v_s=" << p.v_s << " v_b=" << p.v_b << "\n\n";
  out << "payoffs (buyer, seller)\n";
  out << std::left << std::setw(18) << "Buyer \\ Seller" << std::setw(18)
      << "CorrectSending" << "FailedSending\n";
  for (BuyerAction b : kBuyerActions) {
    out << std::setw(18) << ActionName(b);
    out << std::setw(18) << CellText(r.matrix.at(b, SellerAction::kCorrectSending));
    out << CellText(r.matrix.at(b, SellerAction::kFailedSending)) << "\n";
  }
  out << "\nNash:";
  if (r.nash.empty()) out << " none";
  for (std::size_t i = 0; i < r.nash.size(); ++i) {
    out << (i == 0 ? " " : "; ") << ToString(r.nash[i].profile);
    if (r.nash[i].weak) out << " [weak]";
  }
  out << "\nrevised:";
  for (std::size_t i = 0; i < r.revised.outcomes.size(); ++i) {
    const ActionProfile& a = r.revised.outcomes[i];
    // Seller moves first in the revised game.
    out << (i == 0 ? " " : " | ") << "(" << ActionName(a.seller) << ", "
        << ActionName(a.buyer) << ")";
  }
  if (r.revised.indifferent) out << " [indifferent]";
  out << "\n\nconditions:\n";
  out << "  d_s > c        " << Flag(r.seller_deposit_exceeds_price) << "\n";
  out << "  d_b > c        " << Flag(r.buyer_deposit_exceeds_price) << "\n";
  out << "  d_s > 2v_s - c " << Flag(r.revised_condition) << "\n";
  out << "classification: " << r.Classification() << "\n";
  return out.str();
}

}  // namespace fairx::game
