#include "singchain/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace singchain;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;
constexpr int kVerifyFail = 3;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int resolve_budget(const std::optional<int>& flag) {
  if (flag) {
    if (*flag < 0) throw ParseError("budget must be >= 0");
    return *flag;
  }
  if (const char* env = std::getenv("SINGCHAIN_BUDGET")) {
    std::size_t used = 0;
    int b = 0;
    try {
      b = std::stoi(env, &used);
    } catch (const std::exception&) {
      throw ParseError("SINGCHAIN_BUDGET is not an integer");
    }
    if (used != std::string(env).size() || b < 0) throw ParseError("SINGCHAIN_BUDGET must be a non-negative integer");
    return b;
  }
  return 24;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic quotient and cusp singularity calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> budget_flag;
  int threads = 1;
  app.add_option("--budget", budget_flag, "search budget (moves); default 24 or SINGCHAIN_BUDGET");
  app.add_option("--threads", threads, "worker threads for verify")->check(CLI::Range(1, 256));

  int code = kOk;
  std::string literal;

  auto* chain = app.add_subcommand("chain", "chain commands");
  chain->require_subcommand(1);
  auto* chain_info = chain->add_subcommand("info", "continued fraction, T-chain data and discrepancies");
  chain_info->add_option("chain", literal, "chain literal, e.g. [2,4,3,3]")->required();
  chain_info->callback([&] { emit(chain_info_json(parse_chain(literal))); });

  std::string n_text, a_text;
  auto* frac = app.add_subcommand("frac", "chain of the cyclic quotient 1/n(1,a)");
  frac->add_option("n", n_text)->required();
  frac->add_option("a", a_text)->required();
  frac->callback([&] {
    BigInt n, a;
    try {
      n = BigInt(n_text);
      a = BigInt(a_text);
    } catch (const std::exception&) {
      throw ParseError("n and a must be integers");
    }
    CyclicType t{n, a};
    Chain c;
    try {
      c = frac_to_chain(t);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    emit(chain_info_json(c));
  });

  auto* train = app.add_subcommand("train", "T-train commands");
  train->require_subcommand(1);
  bool all_trains = false;
  auto* search = train->add_subcommand("search", "ample T-trains within the budget");
  search->add_option("chain", literal)->required();
  search->add_flag("--all", all_trains, "list every train within the budget, not only minimal ones");
  search->callback([&] {
    Chain c = parse_chain(literal);
    int b = resolve_budget(budget_flag);
    auto found = enumerate_ample_trains(c, b);
    Json j;
    j["chain"] = to_string(c);
    j["budget"] = b;
    Json ts = Json::array();
    for (const auto& f : found)
      if (all_trains || f.moves == found.front().moves) ts.push_back(found_train_json(f));
    j["trains"] = ts;
    j["count"] = ts.size();
    emit(j);
    if (found.empty()) code = kInconclusive;
  });
  auto* adm = train->add_subcommand("admissible", "P-admissibility with a witness train");
  adm->add_option("chain", literal)->required();
  adm->callback([&] {
    Chain c = parse_chain(literal);
    int b = resolve_budget(budget_flag);
    auto a = is_p_admissible(c, b);
    Json j;
    j["chain"] = to_string(c);
    j["budget"] = b;
    j["verdict"] = a.admissible ? "Admissible" : "NotWithinBudget";
    j["witness"] = a.admissible ? found_train_json(a.minimal.front()) : Json(nullptr);
    Json ms = Json::array();
    for (const auto& f : a.minimal) ms.push_back(to_string(f.train));
    j["minimal_trains"] = ms;
    emit(j);
    if (!a.admissible) code = kInconclusive;
  });
  auto* presol = train->add_subcommand("presol", "P-resolutions with (rho, mu) and lambda");
  presol->add_option("chain", literal)->required();
  presol->callback([&] {
    Chain c = parse_chain(literal);
    int b = resolve_budget(budget_flag);
    auto s = enumerate_p_resolutions(c, b);
    Json j;
    j["chain"] = to_string(c);
    j["budget"] = b;
    Json body = presolution_json(s);
    for (auto& [k, v] : body.items()) j[k] = v;
    emit(j);
    if (!s.lambda_exact) code = kInconclusive;
  });

  auto* cusp = app.add_subcommand("cusp", "cusp cycle commands");
  cusp->require_subcommand(1);
  auto* decide = cusp->add_subcommand("decide", "smoothability via the known cusp families");
  decide->add_option("cycle", literal, "cycle literal, e.g. [5,2,2]o")->required();
  decide->callback([&] {
    Cycle c = parse_cycle(literal);
    auto v = classify_and_decide(c);
    emit(verdict_json(c, v));
    if (v.kind == VerdictKind::Unknown) code = kInconclusive;
  });
  auto* dual = cusp->add_subcommand("dual", "dual cycle");
  dual->add_option("cycle", literal)->required();
  dual->callback([&] {
    auto raw = parse_cycle_entries(literal);
    if (raw.size() < 2) throw ParseError("dual of a one-component cycle is not defined");
    Json j;
    j["cycle"] = to_string(Cycle(raw));
    auto e = dual_emitted(raw);
    j["dual"] = to_string(Cycle(e));
    j["emitted"] = format_cycle(e);
    emit(j);
  });
  auto* steen = cusp->add_subcommand("steenbrink", "necessary condition r + 9 + sum(2 - b) >= 0");
  steen->add_option("cycle", literal)->required();
  steen->callback([&] {
    Cycle c = parse_cycle(literal);
    long long v = c.r() + 9;
    for (int b : c.entries()) v += 2 - b;
    emit(Json{{"cycle", to_string(c)}, {"value", v}, {"steenbrink", steenbrink_ok(c)}});
  });
  int max_blowups = 12;
  std::optional<std::string> seed_name;
  auto* real = cusp->add_subcommand("realize", "anticanonical realization from minimal-surface seeds");
  real->add_option("cycle", literal)->required();
  real->add_option("--max", max_blowups, "maximum number of blow-ups")->check(CLI::NonNegativeNumber);
  real->add_option("--seed", seed_name, "restrict to one seed");
  real->callback([&] {
    Cycle c = parse_cycle(literal);
    if (seed_name && !find_seed(*seed_name)) throw ParseError("unknown seed " + *seed_name);
    auto r = realize(c, max_blowups, seed_name);
    emit(realize_json(c, r));
    if (!r.found) code = kInconclusive;
  });
  std::string moves_text;
  auto* rep = cusp->add_subcommand("replay", "re-execute a witness and check conservation");
  rep->add_option("seed", seed_name)->required();
  rep->add_option("moves", moves_text, "JSON array of {kind, pos}")->required();
  rep->callback([&] {
    auto seed = find_seed(*seed_name);
    if (!seed) throw ParseError("unknown seed " + *seed_name);
    Json mj;
    try {
      mj = Json::parse(moves_text);
    } catch (const std::exception&) {
      throw ParseError("moves must be valid JSON");
    }
    auto r = replay(*seed, ac_moves_from_json(mj));
    Json j;
    j["seed"] = seed->name;
    j["ok"] = r.ok;
    if (r.ok) {
      j["final"] = r.final_state.entries;
      j["k2"] = r.final_state.k2;
      try {
        j["cycle"] = to_string(Cycle(r.final_state.entries));
      } catch (const DomainError&) {
        j["cycle"] = nullptr;
      }
    } else {
      j["error"] = r.error;
    }
    emit(j);
    if (!r.ok) code = kInputError;
  });

  std::string verify_id;
  bool full = false;
  auto* verify = app.add_subcommand("verify", "re-check a combinatorial statement on a parameter grid");
  verify->add_option("id", verify_id, "one of C6 C7 C8 C9.1 C10 C11 B3 B4 B5 B6 B-dual-involution")->required();
  verify->add_flag("--full", full, "include extended rows");
  static const char* range_names[] = {"chi-min", "chi-max", "pad-max",  "gamma-max", "param-max",
                                      "n-max",   "a-max",   "c-max",    "d",         "l-max",
                                      "k-max",   "beta-max", "depth-max", "r-max",    "e-max"};
  std::map<std::string, std::optional<long long>> range_flags;
  for (const char* name : range_names)
    verify->add_option(std::string("--") + name, range_flags[name])->check(CLI::NonNegativeNumber);
  verify->callback([&] {
    const auto& ids = verify_ids();
    if (std::find(ids.begin(), ids.end(), verify_id) == ids.end()) throw ParseError("unknown verify id " + verify_id);
    VerifyOptions o;
    o.budget = resolve_budget(budget_flag);
    o.threads = threads;
    o.full = full;
    for (const auto& [k, v] : range_flags)
      if (v) o.ranges[k] = *v;
    auto r = run_verify(verify_id, o);
    emit(report_json(r));
    std::cerr << r.id << ": " << (r.pass() ? "PASS" : "FAIL") << " match=" << r.match << " mismatch=" << r.mismatch
              << " inconclusive=" << r.inconclusive << "\n";
    if (!r.pass()) code = kVerifyFail;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotNegativeDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}
