#pragma once

#include "singchain/train_search.hpp"

#include <array>
#include <functional>
#include <limits>
#include <vector>

namespace singchain {

// A contracted interval [lo, hi] of the base chain with its train. A Du Val
// interval [2^k] is contracted as a single A_k vehicle.
struct IntervalTrain {
  std::size_t lo = 0;
  std::size_t hi = 0;
  TTrain train;
  bool du_val = false;
  int moves = 0;
  std::vector<Move> provenance;
};

struct PResolution {
  std::vector<IntervalTrain> parts;
  int rho = 0;
  int mu = 0;
};

struct PResolutionSet {
  std::vector<PResolution> items;
  int lambda = 0;
  bool lambda_exact = true;
  // Intervals that might carry a train beyond the budget (no train found,
  // core count d_I >= 1, length >= 2, not Du Val).
  std::vector<std::pair<std::size_t, std::size_t>> undecided;
};

inline long long interval_core_count(const std::vector<int>& e, std::size_t lo, std::size_t hi) {
  long long excess = 0;
  for (std::size_t k = lo; k <= hi; ++k) excess += e[k] - 2;
  return static_cast<long long>(hi - lo + 1) + 2 - excess;
}

inline PResolutionSet enumerate_p_resolutions(const Chain& c, int budget) {
  if (budget < 0) throw DomainError("budget must be >= 0");
  const auto& e = c.entries();
  const std::size_t r = e.size();
  // options[lo][hi]
  std::vector<std::vector<std::vector<IntervalTrain>>> options(r, std::vector<std::vector<IntervalTrain>>(r));
  PResolutionSet out;
  for (std::size_t lo = 0; lo < r; ++lo) {
    for (std::size_t hi = lo; hi < r; ++hi) {
      Chain sub(std::vector<int>(e.begin() + static_cast<std::ptrdiff_t>(lo),
                                 e.begin() + static_cast<std::ptrdiff_t>(hi) + 1));
      auto& opt = options[lo][hi];
      if (is_a_chain(sub)) {
        IntervalTrain it{lo, hi, {}, true, 0, {}};
        it.train.vehicles = {sub};
        it.train.ample = true;
        opt.push_back(std::move(it));
        continue;
      }
      for (auto& f : enumerate_ample_trains(sub, budget))
        opt.push_back({lo, hi, f.train, false, f.moves, f.state.moves});
      if (opt.empty() && hi > lo && interval_core_count(e, lo, hi) >= 1)
        out.undecided.push_back({lo, hi});
    }
  }

  auto vehicle_measure = [](const IntervalTrain& it, int& rho, int& mu) {
    rho += static_cast<int>(it.train.vehicles.size()) - 1;
    if (it.du_val) {
      mu += static_cast<int>(it.hi - it.lo + 1);
      return;
    }
    for (const auto& v : it.train.vehicles) mu += static_cast<int>(is_tchain(v)->d) - 1;
  };

  std::vector<const IntervalTrain*> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p >= r) {
      if (chosen.empty()) return;
      // K-degree of every base curve left uncontracted.
      std::vector<Rational> deg(r);
      std::vector<bool> contracted(r, false);
      for (std::size_t k = 0; k < r; ++k) deg[k] = e[k] - 2;
      for (const auto* it : chosen) {
        for (std::size_t k = it->lo; k <= it->hi; ++k) contracted[k] = true;
        auto first = boundary_alphas(it->train.vehicles.front()).first;
        auto last = boundary_alphas(it->train.vehicles.back()).second;
        if (it->lo > 0) deg[it->lo - 1] += 1 - first;
        if (it->hi + 1 < r) deg[it->hi + 1] += 1 - last;
      }
      for (std::size_t k = 0; k < r; ++k)
        if (!contracted[k] && deg[k] <= 0) return;
      PResolution pr;
      for (std::size_t k = 0; k < r; ++k)
        if (!contracted[k]) ++pr.rho;
      for (const auto* it : chosen) {
        pr.parts.push_back(*it);
        vehicle_measure(*it, pr.rho, pr.mu);
      }
      out.items.push_back(std::move(pr));
      return;
    }
    rec(p + 1);
    for (std::size_t hi = p; hi < r; ++hi) {
      for (const auto& it : options[p][hi]) {
        chosen.push_back(&it);
        rec(hi + 2);
        chosen.pop_back();
      }
    }
  };
  rec(0);
  out.items.push_back({{}, static_cast<int>(r), 0});
  std::stable_sort(out.items.begin(), out.items.end(), [](const PResolution& a, const PResolution& b) {
    if (a.rho + a.mu != b.rho + b.mu) return a.rho + a.mu < b.rho + b.mu;
    if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
      if (a.parts[i].lo != b.parts[i].lo) return a.parts[i].lo < b.parts[i].lo;
      if (a.parts[i].hi != b.parts[i].hi) return a.parts[i].hi < b.parts[i].hi;
      auto ea = a.parts[i].train.entries(), eb = b.parts[i].train.entries();
      if (ea != eb) return ea < eb;
    }
    return false;
  });
  out.lambda = out.items.front().rho + out.items.front().mu;

  // Lower bound over selections using at least one undecided interval, each
  // priced at d_I - 1 and ignoring ampleness elsewhere.
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<bool>> undecided(r, std::vector<bool>(r, false));
  for (auto [lo, hi] : out.undecided) undecided[lo][hi] = true;
  // best[p][u]: cheapest completion from p, u = whether an undecided interval is still required
  std::vector<std::array<int, 2>> best(r + 2, {inf, inf});
  best[r] = {0, inf};
  best[r + 1] = {0, inf};
  for (std::size_t p = r; p-- > 0;) {
    for (int u = 0; u < 2; ++u) {
      int b = best[p + 1][u] == inf ? inf : 1 + best[p + 1][u];
      for (std::size_t hi = p; hi < r; ++hi) {
        int cost = inf;
        bool und = undecided[p][hi];
        if (und) cost = static_cast<int>(interval_core_count(e, p, hi)) - 1;
        for (const auto& it : options[p][hi]) {
          int rho = 0, mu = 0;
          vehicle_measure(it, rho, mu);
          cost = std::min(cost, rho + mu);
        }
        if (cost == inf) continue;
        std::size_t next = std::min(hi + 2, r);
        int sep = hi + 1 < r ? 1 : 0;
        int need = (u == 1 && !und) ? 1 : 0;
        int rest = best[next][need];
        if (rest == inf) continue;
        b = std::min(b, cost + sep + rest);
      }
      best[p][u] = b;
    }
  }
  if (best[0][1] < out.lambda) out.lambda_exact = false;
  return out;
}

struct LambdaResult {
  int value = 0;
  bool exact = true;
};

inline LambdaResult lambda_invariant(const Chain& c, int budget) {
  auto s = enumerate_p_resolutions(c, budget);
  return {s.lambda, s.lambda_exact};
}

}  // namespace singchain
