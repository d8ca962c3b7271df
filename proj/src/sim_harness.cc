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

#include "fairx/sim_harness.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fairx/algebra.hpp"
#include "fairx/cas_store.hpp"
#include "fairx/errors.hpp"
#include "fairx/pre.hpp"
#include "fairx/zkpok.hpp"

namespace fairx::sim {

using algebra::GroupElem;
using algebra::GroupParams;
using algebra::Rng;
using algebra::Scalar;
using contract::ExchangeContract;
using contract::Phase;
using ledger::Address;
using ledger::Ledger;

std::string_view StrategyName(SellerStrategy s) {
  switch (s) {
    case SellerStrategy::kHonestKey: return "HonestKey";
    case SellerStrategy::kCorruptKey: return "CorruptKey";
    case SellerStrategy::kWithholdKey: return "WithholdKey";
  }
  return "?";
}

std::string_view StrategyName(BuyerStrategy s) {
  return s == BuyerStrategy::kProveIfAble ? "ProveIfAble" : "NeverProve";
}

SellerStrategy ParseSellerStrategy(std::string_view name) {
  for (SellerStrategy s : kSellerStrategies) {
    if (StrategyName(s) == name) return s;
  }
  throw ConfigError("unknown seller strategy '" + std::string(name) + "'");
}

BuyerStrategy ParseBuyerStrategy(std::string_view name) {
  for (BuyerStrategy s : kBuyerStrategies) {
    if (StrategyName(s) == name) return s;
  }
  throw ConfigError("unknown buyer strategy '" + std::string(name) + "'");
}

void Validate(const ScenarioConfig& config) {
  const game::GameParams& g = config.game;
  if (!g.NonNegative()) throw ConfigError("game parameters must be >= 0");
  auto agree = [](const std::optional<Amount>& side, Amount value,
                  const char* what) {
    if (side && *side != value) {
      throw ConfigError(std::string("exchange ") + what +
                        " disagrees with game parameters");
    }
  };
  agree(config.exchange_price, g.c, "price");
  agree(config.exchange_deposit_seller, g.d_s, "seller deposit");
  agree(config.exchange_deposit_buyer, g.d_b, "buyer deposit");
  if (g.c <= 0) throw ConfigError("price must be positive");
  if (!g.DepositsExceedPrice()) {
    throw ConfigError("deposits must exceed the price (d_s > c, d_b > c)");
  }
  if (config.deposit_window < 2 || config.key_window == 0 ||
      config.proof_window == 0) {
    throw ConfigError("deposit window must be >= 2 blocks, others >= 1");
  }
  if (config.seller_balance < g.d_s) {
    throw ConfigError("seller balance cannot cover the deposit");
  }
  if (config.buyer_balance < g.d_b + g.c) {
    throw ConfigError("buyer balance cannot cover deposit plus price");
  }
  if (config.identity_data.empty()) throw ConfigError("identity data is empty");
  try {
    GroupParams::Setup(config.group_order);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
}

namespace {

constexpr std::size_t kBlindingBytes = 8;

// Plaintext sealed by the seller: 8-byte big-endian blinding || data.
Bytes MakeBody(const Scalar& blinding, std::string_view data) {
  Bytes body;
  AppendU64(body, blinding.value());
  body.insert(body.end(), data.begin(), data.end());
  return body;
}

Scalar DataDigest(const GroupParams& params, ByteView data) {
  return algebra::ScalarFromDigest(params, Sha256(data));
}

// The opening carried by a decrypted body, if it has the right shape.
std::optional<zkpok::Opening> ParseBody(const GroupParams& params,
                                        const Bytes& body) {
  if (body.size() <= kBlindingBytes) return std::nullopt;
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < kBlindingBytes; ++i) s = (s << 8) | body[i];
  if (s >= params.order()) return std::nullopt;
  ByteView data(body.data() + kBlindingBytes, body.size() - kBlindingBytes);
  return zkpok::Opening{DataDigest(params, data), Scalar(params, s)};
}

pre::ReEncryptionKey CorruptKey(const pre::ReEncryptionKey& honest, Rng& rng) {
  const GroupParams& params = honest.rk.params();
  pre::ReEncryptionKey fake = honest;
  do {
    fake.rk = GroupElem::FromRepr(params, rng.AnyScalar(params).value());
  } while (fake.rk == honest.rk);
  return fake;
}

}  // namespace

ScenarioResult RunScenario(const ScenarioConfig& config) {
  Validate(config);
  const game::GameParams& g = config.game;
  const GroupParams params = GroupParams::Setup(config.group_order);
  const zkpok::PedersenBasis basis = zkpok::PedersenBasis::Derive(params);

  Rng seller_rng(config.seed);
  Rng buyer_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);

  const Address seller("seller");
  const Address buyer("buyer");
  const Address keeper("keeper");
  Ledger chain = Ledger::Genesis(
      {{seller, config.seller_balance}, {buyer, config.buyer_balance}});
  cas::BlobStore store;

  ScenarioResult r{};
  r.seller = config.seller;
  r.buyer = config.buyer;
  r.seed = config.seed;
  r.supply_before = chain.TotalSupply();
  const Amount seller_start = chain.BalanceOf(seller);
  const Amount buyer_start = chain.BalanceOf(buyer);

  pre::KeyPair seller_keys = pre::KeyGen(params, seller_rng);
  pre::KeyPair buyer_keys = pre::KeyGen(params, buyer_rng);

  // Step 1: commit to the data and store it sealed under the seller's key.
  Scalar blinding = seller_rng.AnyScalar(params);
  Scalar data_digest = DataDigest(params, ToBytes(config.identity_data));
  zkpok::Commitment commitment = zkpok::Commit(data_digest, blinding, basis);
  Bytes payload = pre::Seal(seller_keys.pk,
                            MakeBody(blinding, config.identity_data), seller_rng);
  cas::Digest payload_digest = store.Put(payload);

  // Step 2: deploy.
  Height now = chain.height();
  Height deposit_deadline = now + config.deposit_window;
  Height key_deadline = deposit_deadline + config.key_window;
  Height proof_deadline = key_deadline + config.proof_window;
  ExchangeContract contract = ExchangeContract::Deploy(
      chain,
      {seller, buyer, g.c, g.d_s, g.d_b, commitment, payload_digest,
       deposit_deadline, key_deadline, proof_deadline, config.seed},
      seller);
  chain.AdvanceHeight(1);

  // Steps 3-4: deposits.
  contract.Deposit(seller, g.d_s);
  contract.Deposit(buyer, g.d_b + g.c);
  chain.AdvanceHeight(1);

  // Step 5: the seller's key.
  pre::ReEncryptionKey honest_key = pre::ReKeyGen(seller_keys.sk, buyer_keys.pk);
  switch (config.seller) {
    case SellerStrategy::kHonestKey:
      contract.SubmitRekey(seller, honest_key);
      break;
    case SellerStrategy::kCorruptKey:
      contract.SubmitRekey(seller, CorruptKey(honest_key, seller_rng));
      break;
    case SellerStrategy::kWithholdKey:
      r.notes.push_back("seller withheld the re-encryption key");
      break;
  }
  chain.AdvanceHeight(1);

  // Steps 6-7: fetch, decrypt, prove.
  if (contract.state().phase == Phase::kAwaitingProof) {
    const pre::ReEncryptionKey& rk = contract.GetRekey(buyer);
    Bytes fetched = store.Get(contract.params().ciphertext_digest);
    pre::SealedPayload sealed = pre::ParseSealed(fetched, params);
    pre::Level2Ciphertext capsule = pre::ReEncrypt(sealed.capsule, rk);
    Bytes body = pre::OpenLevel2(capsule, sealed.body, buyer_keys.sk);
    std::optional<zkpok::Opening> opening = ParseBody(params, body);
    r.delivered = opening && zkpok::Opens(*opening, commitment);
    if (!r.delivered) {
      r.notes.push_back(
          "buyer proof failure: decrypted payload does not open the "
          "commitment");
    }
    if (r.delivered && config.buyer == BuyerStrategy::kProveIfAble) {
      zkpok::KnowledgeProof proof =
          zkpok::Prove(*opening, commitment, contract.Context(), buyer_rng);
      r.proof_submitted = true;
      r.proof_accepted = contract.SubmitProof(buyer, proof) ==
                         contract::ProofOutcome::kAccepted;
    } else if (r.delivered) {
      r.notes.push_back("buyer received the data but chose not to prove");
    }
  }

  // Anything still open runs into its deadline.
  if (!contract.IsTerminal()) {
    Height deadline = contract.state().phase == Phase::kAwaitingDeposits
                          ? deposit_deadline
                      : contract.state().phase == Phase::kAwaitingKey
                          ? key_deadline
                          : proof_deadline;
    if (chain.height() < deadline) chain.AdvanceHeight(deadline - chain.height());
    contract.OnTimeout(keeper);
  }

  r.phase = contract.state().phase;
  r.resolution = contract.state().resolution;
  r.buyer_money = chain.BalanceOf(buyer) - buyer_start;
  r.seller_money = chain.BalanceOf(seller) - seller_start;
  r.sink_money = chain.BalanceOf(Ledger::Sink());
  r.buyer_info = r.delivered ? g.v_b : 0;
  r.seller_info = r.delivered ? -g.v_s : g.v_s;
  r.buyer_utility = r.buyer_money + r.buyer_info;
  r.seller_utility = r.seller_money + r.seller_info;
  r.supply_after = chain.TotalSupply();
  r.profile = {r.phase == Phase::kSettled ? game::BuyerAction::kConfirmation
                                          : game::BuyerAction::kNoConfirmation,
               config.seller == SellerStrategy::kHonestKey
                   ? game::SellerAction::kCorrectSending
                   : game::SellerAction::kFailedSending};
  r.trace = contract.TraceText();
  r.ledger_dump = chain.Dump();
  return r;
}

std::vector<ScenarioResult> Sweep(const ScenarioConfig& base) {
  std::vector<ScenarioResult> out;
  for (SellerStrategy s : kSellerStrategies) {
    for (BuyerStrategy b : kBuyerStrategies) {
      ScenarioConfig config = base;
      config.seller = s;
      config.buyer = b;
      out.push_back(RunScenario(config));
    }
  }
  return out;
}

namespace {

using nlohmann::json;

template <typename T>
T Field(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config: field '") + key +
                      "' has the wrong type");
  }
}

const json& Section(const json& doc, const char* key) {
  static const json kEmpty = json::object();
  if (!doc.contains(key)) return kEmpty;
  const json& s = doc.at(key);
  if (!s.is_object()) {
    throw ConfigError(std::string("config: '") + key + "' must be an object");
  }
  return s;
}

std::optional<Amount> OptionalAmount(const json& obj, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  return Field<Amount>(obj, key, 0);
}

}  // namespace

ScenarioConfig ParseScenarioConfig(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  if (!doc.contains("game")) throw ConfigError("config: missing 'game' section");

  ScenarioConfig c;
  const json& gsec = Section(doc, "game");
  for (const char* key : {"c", "ds", "db", "vs", "vb"}) {
    if (!gsec.contains(key)) {
      throw ConfigError(std::string("config: game.") + key + " is required");
    }
  }
  c.game = {Field<game::Payoff>(gsec, "c", 0), Field<game::Payoff>(gsec, "ds", 0),
            Field<game::Payoff>(gsec, "db", 0), Field<game::Payoff>(gsec, "vs", 0),
            Field<game::Payoff>(gsec, "vb", 0)};

  const json& x = Section(doc, "exchange");
  c.exchange_price = OptionalAmount(x, "c");
  c.exchange_deposit_seller = OptionalAmount(x, "ds");
  c.exchange_deposit_buyer = OptionalAmount(x, "db");
  c.group_order = Field<std::uint64_t>(x, "order", c.group_order);
  c.identity_data = Field<std::string>(x, "data", c.identity_data);
  const json& w = Section(x, "windows");
  c.deposit_window = Field<Height>(w, "deposit", c.deposit_window);
  c.key_window = Field<Height>(w, "key", c.key_window);
  c.proof_window = Field<Height>(w, "proof", c.proof_window);
  const json& b = Section(x, "balances");
  c.seller_balance = Field<Amount>(b, "seller", c.seller_balance);
  c.buyer_balance = Field<Amount>(b, "buyer", c.buyer_balance);

  const json& s = Section(doc, "strategies");
  c.seller = ParseSellerStrategy(
      Field<std::string>(s, "seller", std::string(StrategyName(c.seller))));
  c.buyer = ParseBuyerStrategy(
      Field<std::string>(s, "buyer", std::string(StrategyName(c.buyer))));
  c.seed = Field<std::uint64_t>(doc, "seed", c.seed);
  Validate(c);
  return c;
}

ScenarioConfig LoadScenarioConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseScenarioConfig(buf.str());
}

std::string ResultDocument(const ScenarioResult& r, int indent) {
  json doc = {
      {"strategies",
       {{"seller", StrategyName(r.seller)}, {"buyer", StrategyName(r.buyer)}}},
      {"seed", r.seed},
      {"phase", contract::PhaseName(r.phase)},
      {"resolution", contract::ResolutionName(r.resolution)},
      {"profile",
       {{"buyer", game::ActionName(r.profile.buyer)},
        {"seller", game::ActionName(r.profile.seller)}}},
      {"money", {{"buyer", r.buyer_money}, {"seller", r.seller_money},
                 {"sink", r.sink_money}}},
      {"information", {{"buyer", r.buyer_info}, {"seller", r.seller_info}}},
      {"utility", {{"buyer", r.buyer_utility}, {"seller", r.seller_utility}}},
      {"delivered", r.delivered},
      {"proof_submitted", r.proof_submitted},
      {"proof_accepted", r.proof_accepted},
      {"supply", {{"before", r.supply_before}, {"after", r.supply_after}}},
      {"notes", r.notes},
  };
  return doc.dump(indent);
}

std::string RenderText(const ScenarioResult& r) {
  std::ostringstream out;
  out << "strategies: seller=" << StrategyName(r.seller)
      << " buyer=" << StrategyName(r.buyer) << " seed=" << r.seed << "\n";
  out << "final phase: " << contract::PhaseName(r.phase) << " ("
      << contract::ResolutionName(r.resolution) << ")\n";
  out << "realised cell: " << game::ToString(r.profile) << "\n";
  out << "delivered: " << (r.delivered ? "yes" : "no")
      << "  proof: " << (r.proof_submitted ? (r.proof_accepted ? "accepted"
                                                               : "rejected")
                                           : "not submitted")
      << "\n";
  out << "money   buyer " << r.buyer_money << "  seller " << r.seller_money
      << "  sink " << r.sink_money << "\n";
  out << "utility buyer " << r.buyer_utility << "  seller " << r.seller_utility
      << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace fairx::sim
