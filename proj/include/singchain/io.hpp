#pragma once

#include "singchain/anticanon.hpp"
#include "singchain/chain.hpp"
#include "singchain/cusp.hpp"
#include "singchain/dual_graph.hpp"
#include "singchain/presolution.hpp"
#include "singchain/tchain.hpp"
#include "singchain/train_search.hpp"
#include "singchain/verify.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace singchain {

using Json = nlohmann::ordered_json;

// Integers within int64 are JSON numbers; larger ones are decimal strings.
inline Json json_int(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

inline Json json_rational(const Rational& r) { return to_string(r); }

inline Json json_rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(json_rational(r));
  return a;
}

inline Json chain_info_json(const Chain& c) {
  Json j;
  j["entries"] = c.entries();
  CyclicType t = chain_to_frac(c);
  j["frac"] = Json::array({json_int(t.n), json_int(t.a)});
  CyclicType k = canonical_type(t);
  j["frac_canonical"] = Json::array({json_int(k.n), json_int(k.a)});
  j["a_inverse"] = json_int(mod_inverse(t.a, t.n));
  auto tc = is_tchain(c);
  if (tc) {
    j["tchain"] = {{"d", json_int(tc->d)}, {"n", json_int(tc->n)}, {"a", json_int(tc->a)},
                   {"milnor", json_int(tc->milnor())}};
  } else {
    j["tchain"] = nullptr;
  }
  auto p = log_discrepancies(c);
  j["alphas"] = json_rationals(p.alphas);
  j["cores"] = tc ? Json(cores(c)) : Json::array();
  j["kp_invariant"] = json_rational(p.kp_invariant);
  j["lc_status"] = to_string(p.status);
  return j;
}

inline Json moves_json(const std::vector<Move>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back({{"kind", to_string(m.kind)}, {"pos", m.pos}});
  return a;
}

inline Json train_json(const TTrain& t) {
  Json j;
  j["train"] = to_string(t);
  Json vs = Json::array();
  for (const auto& v : t.vehicles) vs.push_back(v.entries());
  j["vehicles"] = vs;
  Json ja = Json::array();
  for (const auto& [a, b] : t.junction_alphas) ja.push_back({json_rational(a), json_rational(b)});
  j["junction_alphas"] = ja;
  j["ample"] = t.ample;
  return j;
}

inline Json found_train_json(const FoundTrain& f) {
  Json j = train_json(f.train);
  j["moves"] = f.moves;
  j["words"] = f.words;
  j["junction_nodes"] = f.junction_nodes;
  j["provenance"] = moves_json(f.state.moves);
  return j;
}

inline Json presolution_json(const PResolutionSet& s) {
  Json items = Json::array();
  for (const auto& r : s.items) {
    Json parts = Json::array();
    for (const auto& p : r.parts)
      parts.push_back({{"lo", p.lo}, {"hi", p.hi}, {"train", to_string(p.train)}, {"du_val", p.du_val},
                       {"moves", p.moves}, {"provenance", moves_json(p.provenance)}});
    items.push_back({{"parts", parts}, {"rho", r.rho}, {"mu", r.mu}});
  }
  Json j;
  j["resolutions"] = items;
  j["lambda"] = s.lambda;
  j["lambda_exact"] = s.lambda_exact;
  Json und = Json::array();
  for (const auto& [lo, hi] : s.undecided) und.push_back({lo, hi});
  j["undecided_intervals"] = und;
  return j;
}

inline Json family_json(const CuspFamilyParams& p) {
  Json j;
  if (p.family == "B4") {
    j["n"] = p.n;
    j["beta"] = p.beta;
  } else if (p.family == "B3") {
    j["chi"] = p.chi;
    j["n"] = p.n;
    j["gamma"] = p.gamma;
  } else {
    j["chi"] = p.chi;
    j["k1"] = p.k1;
    j["k2"] = p.k2;
  }
  return j;
}

inline Json verdict_json(const Cycle& c, const CuspVerdict& v) {
  Json j;
  j["cycle"] = to_string(c);
  j["verdict"] = to_string(v.kind);
  if (v.family) {
    j["rule"] = v.family->family;
    j["params"] = family_json(*v.family);
  } else {
    j["rule"] = nullptr;
    j["params"] = nullptr;
  }
  j["steenbrink"] = v.steenbrink;
  return j;
}

inline std::string to_string(AcMoveKind k) { return k == AcMoveKind::Node ? "node" : "smooth"; }

inline Json ac_moves_json(const std::vector<AcMove>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back({{"kind", to_string(m.kind)}, {"pos", m.pos}});
  return a;
}

inline std::vector<AcMove> ac_moves_from_json(const Json& a) {
  if (!a.is_array()) throw ParseError("moves must be a JSON array");
  std::vector<AcMove> out;
  for (const auto& m : a) {
    if (!m.is_object() || !m.contains("kind") || !m.contains("pos") || !m["pos"].is_number_integer())
      throw ParseError("each move needs kind and integer pos");
    std::string k = m["kind"].get<std::string>();
    if (k != "node" && k != "smooth") throw ParseError("move kind must be node or smooth");
    out.push_back({k == "node" ? AcMoveKind::Node : AcMoveKind::Smooth, m["pos"].get<int>()});
  }
  return out;
}

inline Json realize_json(const Cycle& target, const RealizeResult& r) {
  Json j;
  j["target"] = to_string(target);
  j["found"] = r.found;
  if (r.found) {
    j["seed"] = {{"name", r.seed}, {"entries", r.seed_entries}, {"k2", r.seed_k2}};
    j["moves"] = ac_moves_json(r.moves);
    j["final"] = r.final_entries;
  } else {
    j["seed"] = nullptr;
    j["moves"] = nullptr;
    j["reason"] = r.reason;
  }
  j["conservation_ok"] = r.conservation_ok;
  j["explored"] = r.explored;
  return j;
}

inline Json report_json(const VerifyReport& r) {
  Json j;
  j["id"] = r.id;
  j["status"] = r.pass() ? "PASS" : "FAIL";
  j["summary"] = {{"total", r.cases.size()},
                  {"match", r.match},
                  {"mismatch", r.mismatch},
                  {"inconclusive", r.inconclusive}};
  Json cs = Json::array();
  for (const auto& c : r.cases) cs.push_back({{"params", c.params}, {"verdict", c.verdict}, {"detail", c.detail}});
  j["cases"] = cs;
  return j;
}

}  // namespace singchain
