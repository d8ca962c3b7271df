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

// fairx: run exchange scenarios, analyse the sale game, walk through the
// re-encryption scheme.
//
// Exit codes: 0 success, 2 usage error, 3 runtime failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairx/algebra.hpp"
#include "fairx/errors.hpp"
#include "fairx/game_analysis.hpp"
#include "fairx/pre.hpp"
#include "fairx/sim_harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool Structured(const std::string& format) { return format == "structured"; }

json MatrixJson(const fairx::game::PayoffMatrix& m) {
  using namespace fairx::game;
  json cells = json::array();
  for (BuyerAction b : kBuyerActions) {
    for (SellerAction s : kSellerActions) {
      const Cell& c = m.at(b, s);
      cells.push_back({{"buyer_action", ActionName(b)},
                       {"seller_action", ActionName(s)},
                       {"buyer", c.buyer},
                       {"seller", c.seller}});
    }
  }
  return cells;
}

int Analyze(const fairx::game::GameParams& p, const std::string& format) {
  using namespace fairx::game;
  FairnessReport r = FairnessCondition(p);
  if (!Structured(format)) {
    std::cout << RenderText(r);
    return kExitOk;
  }
  json nash = json::array();
  for (const Equilibrium& e : r.nash) {
    nash.push_back({{"buyer", ActionName(e.profile.buyer)},
                    {"seller", ActionName(e.profile.seller)},
                    {"weak", e.weak}});
  }
  json revised = json::array();
  for (const ActionProfile& a : r.revised.outcomes) {
    revised.push_back(
        {{"seller", ActionName(a.seller)}, {"buyer", ActionName(a.buyer)}});
  }
  json doc = {
      {"params",
       {{"c", p.c}, {"ds", p.d_s}, {"db", p.d_b}, {"vs", p.v_s}, {"vb", p.v_b}}},
      {"matrix", MatrixJson(r.matrix)},
      {"nash", nash},
      {"revised", {{"outcomes", revised}, {"indifferent", r.revised.indifferent}}},
      {"conditions",
       {{"ds_gt_c", r.seller_deposit_exceeds_price},
        {"db_gt_c", r.buyer_deposit_exceeds_price},
        {"ds_gt_2vs_minus_c", r.revised_condition},
        {"all_hold", r.AllHold()}}},
      {"classification", r.Classification()},
  };
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int Run(const std::string& config_path, const std::string& trace_path,
        const std::string& format) {
  fairx::sim::ScenarioConfig config;
  try {
    config = fairx::sim::LoadScenarioConfig(config_path);
  } catch (const fairx::ConfigError& e) {
    throw UsageError(e.what());
  }
  fairx::sim::ScenarioResult result = fairx::sim::RunScenario(config);
  std::ofstream trace(trace_path, std::ios::binary);
  trace << result.trace;
  if (!trace) throw fairx::Error("cannot write trace file " + trace_path);
  if (Structured(format)) {
    json doc = json::parse(fairx::sim::ResultDocument(result));
    doc["trace_file"] = trace_path;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << fairx::sim::RenderText(result);
    std::cout << "trace: " << trace_path << "\n";
  }
  return kExitOk;
}

int DemoPre(std::uint64_t order, std::uint64_t seed,
            const std::string& format) {
  using namespace fairx::algebra;
  namespace pre = fairx::pre;
  GroupParams params = [&] {
    try {
      return GroupParams::Setup(order);
    } catch (const fairx::ParameterError& e) {
      throw UsageError(e.what());
    }
  }();
  Rng rng(seed);
  pre::KeyPair alice = pre::KeyGen(params, rng);
  pre::KeyPair bob = pre::KeyGen(params, rng);
  Scalar mu = rng.AnyScalar(params);
  TargetElem m = EncodeMessage(mu);
  Scalar r = RandomScalar(params, rng);
  pre::Level1Ciphertext ca = pre::EncryptWithRandomness(alice.pk, m, r);
  pre::ReEncryptionKey rk = pre::ReKeyGen(alice.sk, bob.pk);
  pre::Level2Ciphertext cb = pre::ReEncrypt(ca, rk);
  TargetElem mask = Exp(cb.c2, bob.sk.Inverse());
  TargetElem recovered = pre::DecryptLevel2(cb, bob.sk);
  bool ok = recovered == m;

  if (Structured(format)) {
    json doc = {
        {"q", params.order()},
        {"seed", seed},
        {"a", alice.sk.value()},
        {"pk_a", alice.pk.repr()},
        {"b", bob.sk.value()},
        {"pk_b", bob.pk.repr()},
        {"mu", mu.value()},
        {"r", r.value()},
        {"level1", {{"c1", ca.c1.repr()}, {"c2", ca.c2.repr()}}},
        {"inv_a", alice.sk.Inverse().value()},
        {"rk", rk.rk.repr()},
        {"level2", {{"c1", cb.c1.repr()}, {"c2", cb.c2.repr()}}},
        {"inv_b", bob.sk.Inverse().value()},
        {"mask", mask.repr()},
        {"recovered", recovered.repr()},
        {"m_recovered", ok},
    };
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "group: q=" << params.order() << ", g = g^1, Z = e(g,g) = Z^1\n"
              << "keygen A: a=" << alice.sk.value() << " pk_A=g^"
              << alice.pk.repr() << "\n"
              << "keygen B: b=" << bob.sk.value() << " pk_B=g^" << bob.pk.repr()
              << "\n"
              << "message: mu=" << mu.value() << " m=Z^" << m.repr() << "\n"
              << "encrypt: r=" << r.value() << " C_a=(Z^" << ca.c1.repr()
              << ", g^" << ca.c2.repr() << ")\n"
              << "rekeygen: 1/a=" << alice.sk.Inverse().value() << " rk=g^"
              << rk.rk.repr() << "\n"
              << "reencrypt: C_b=(Z^" << cb.c1.repr() << ", Z^" << cb.c2.repr()
              << ")\n"
              << "decrypt: 1/b=" << bob.sk.Inverse().value() << " c2^(1/b)=Z^"
              << mask.repr() << " m'=Z^" << recovered.repr() << "\n"
              << "m recovered: " << (ok ? "true" : "false") << "\n";
  }
  return ok ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairx: fair exchange of certified data"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  fairx::game::GameParams params;
  CLI::App* analyze = app.add_subcommand("analyze", "analyse the sale game");
  analyze->add_option("--c", params.c, "price")
      ->required()
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--ds", params.d_s, "seller deposit")
      ->required()
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--db", params.d_b, "buyer deposit")
      ->required()
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--vs", params.v_s, "value of the data to the seller")
      ->required()
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--vb", params.v_b, "value of the data to the buyer")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_format(analyze);

  std::string config_path;
  std::string trace_path = "trace.log";
  CLI::App* run = app.add_subcommand("run", "run one exchange scenario");
  run->add_option("config", config_path, "scenario config (JSON)")->required();
  run->add_option("--trace", trace_path, "event log output path");
  add_format(run);

  std::uint64_t order = 11;
  std::uint64_t seed = 1;
  CLI::App* demo = app.add_subcommand("demo-pre", "re-encryption walkthrough");
  demo->add_option("--q", order, "prime group order");
  demo->add_option("--seed", seed, "random seed");
  add_format(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return Analyze(params, format);
    if (*run) return Run(config_path, trace_path, format);
    if (*demo) return DemoPre(order, seed, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
