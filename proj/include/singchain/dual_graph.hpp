#pragma once

#include "singchain/chain.hpp"
#include "singchain/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace singchain {

enum class Shape { Chain, Cycle, Tree };

// Vertices carry weight = -E^2. An edge (i,i) is a node of E_i, which makes
// E_i a nodal rational curve (arithmetic genus 1).
struct DualGraph {
  std::vector<int> weights;
  std::vector<std::pair<int, int>> edges;
  Shape shape = Shape::Tree;

  std::size_t size() const { return weights.size(); }

  std::vector<std::vector<std::int64_t>> gram() const {
    std::size_t n = weights.size();
    std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = -weights[i];
    for (auto [u, v] : edges) {
      if (u == v) continue;
      ++g[u][v];
      ++g[v][u];
    }
    return g;
  }

  // K . E_i by adjunction.
  std::vector<std::int64_t> canonical_degrees() const {
    std::vector<std::int64_t> k(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) k[i] = weights[i] - 2;
    for (auto [u, v] : edges)
      if (u == v) k[u] += 2;
    return k;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(weights.size(), 0);
    for (auto [u, v] : edges) {
      ++d[u];
      ++d[v];
    }
    return d;
  }

  bool negative_definite() const {
    auto g = gram();
    for (auto& row : g)
      for (auto& x : row) x = -x;
    try {
      solve_positive_definite(g, std::vector<std::int64_t>(g.size(), 0));
      return true;
    } catch (const NotNegativeDefinite&) {
      return false;
    }
  }
};

inline DualGraph chain_graph(const std::vector<int>& e) {
  DualGraph g;
  g.weights = e;
  g.shape = Shape::Chain;
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    g.edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return g;
}

inline DualGraph chain_graph(const Chain& c) { return chain_graph(c.entries()); }

// Cycle of rational curves. For r = 1 the entry is the label b+2 of a nodal
// curve with self-intersection -b.
inline DualGraph cycle_graph(const std::vector<int>& e) {
  DualGraph g;
  g.shape = Shape::Cycle;
  if (e.size() == 1) {
    g.weights = {e[0] - 2};
    g.edges = {{0, 0}};
    return g;
  }
  g.weights = e;
  for (std::size_t i = 0; i < e.size(); ++i)
    g.edges.push_back({static_cast<int>(i), static_cast<int>((i + 1) % e.size())});
  return g;
}

enum class LcStatus { Klt, StrictlyLc, NotLc };

inline std::string to_string(LcStatus s) {
  switch (s) {
    case LcStatus::Klt: return "klt";
    case LcStatus::StrictlyLc: return "strictly_lc";
    case LcStatus::NotLc: return "not_lc";
  }
  return "";
}

struct LogDiscProfile {
  std::vector<Rational> alphas;
  Rational kp_invariant;  // K_p^2 + K_p.E
  LcStatus status = LcStatus::Klt;
};

inline LcStatus lc_status_of(const std::vector<Rational>& alphas) {
  Rational lo = *std::min_element(alphas.begin(), alphas.end());
  if (lo > 0) return LcStatus::Klt;
  if (lo == 0) return LcStatus::StrictlyLc;
  return LcStatus::NotLc;
}

inline LogDiscProfile profile_from_alphas(std::vector<Rational> alphas,
                                          const std::vector<std::int64_t>& kdeg) {
  LogDiscProfile p;
  p.kp_invariant = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) p.kp_invariant += alphas[i] * kdeg[i];
  p.status = lc_status_of(alphas);
  p.alphas = std::move(alphas);
  return p;
}

// Solves sum_j (alpha_j - 1)(E_j.E_i) = K.E_i exactly.
inline LogDiscProfile log_discrepancies(const DualGraph& g) {
  auto a = g.gram();
  for (auto& row : a)
    for (auto& x : row) x = -x;
  auto k = g.canonical_degrees();
  std::vector<std::int64_t> b(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) b[i] = -k[i];
  auto s = solve_positive_definite(a, b);
  std::vector<Rational> alphas;
  alphas.reserve(k.size());
  for (auto& num : s.numer) alphas.emplace_back(s.det + num, s.det);
  return profile_from_alphas(std::move(alphas), k);
}

inline LogDiscProfile log_discrepancies(const Chain& c) { return log_discrepancies(chain_graph(c)); }

enum class StrictlyLcType { I_2222, II_333, III_244, IV_236, NotStrictlyLcRational };

struct StrictlyLcClass {
  StrictlyLcType type = StrictlyLcType::NotStrictlyLcRational;
  std::vector<int> b;  // central chain b_1..b_n, or the single central weight
  bool smoothable = false;
  std::optional<Rational> kp_invariant;
};

inline std::string to_string(StrictlyLcType t) {
  switch (t) {
    case StrictlyLcType::I_2222: return "(2,2,2,2)";
    case StrictlyLcType::II_333: return "(3,3,3)";
    case StrictlyLcType::III_244: return "(2,4,4)";
    case StrictlyLcType::IV_236: return "(2,3,6)";
    case StrictlyLcType::NotStrictlyLcRational: return "not_strictly_lc_rational";
  }
  return "";
}

// Star graphs with three arms of length one, or the (2,2,2,2) shape with two
// (-2)-leaves hanging off each end of a central chain.
inline StrictlyLcClass classify_strictly_lc(const DualGraph& g) {
  if (!g.negative_definite()) throw NotNegativeDefinite();
  StrictlyLcClass out;
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : g.edges) {
    if (u == v) return out;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (static_cast<int>(g.edges.size()) != n - 1) return out;
  auto profile = log_discrepancies(g);
  out.kp_invariant = profile.kp_invariant;
  std::vector<int> forks;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() >= 3) forks.push_back(i);
  auto is_leaf = [&](int v) { return adj[v].size() == 1; };

  if (forks.size() == 1 && adj[forks[0]].size() == 3 && n == 4) {
    int c = forks[0];
    std::vector<int> leaves;
    for (int v : adj[c]) {
      if (!is_leaf(v)) return {};
      leaves.push_back(g.weights[v]);
    }
    std::sort(leaves.begin(), leaves.end());
    int b = g.weights[c];
    out.b = {b};
    if (leaves == std::vector<int>{3, 3, 3}) {
      out.type = StrictlyLcType::II_333;
      out.smoothable = b >= 2 && b <= 4;
    } else if (leaves == std::vector<int>{2, 4, 4}) {
      out.type = StrictlyLcType::III_244;
      out.smoothable = b == 2 || b == 3;
    } else if (leaves == std::vector<int>{2, 3, 6}) {
      out.type = StrictlyLcType::IV_236;
      out.smoothable = b == 2;
    } else {
      return {};
    }
    return out;
  }

  auto two_leaves_of_weight_2 = [&](int f, int skip) {
    int cnt = 0;
    for (int v : adj[f]) {
      if (v == skip) continue;
      if (!is_leaf(v) || g.weights[v] != 2) return false;
      ++cnt;
    }
    return cnt == 2;
  };

  if (forks.size() == 1 && adj[forks[0]].size() == 4 && n == 5) {
    int c = forks[0];
    for (int v : adj[c])
      if (!is_leaf(v) || g.weights[v] != 2) return {};
    out.type = StrictlyLcType::I_2222;
    out.b = {g.weights[c]};
  } else if (forks.size() == 2 && adj[forks[0]].size() == 3 && adj[forks[1]].size() == 3) {
    // Walk the path from one fork to the other.
    int a = forks[0], z = forks[1];
    std::vector<int> path{a};
    int prev = -1, cur = a;
    while (cur != z) {
      int next = -1;
      for (int v : adj[cur]) {
        if (v == prev || is_leaf(v)) continue;
        if (next != -1) return {};
        next = v;
      }
      if (next == -1) return {};
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    if (static_cast<int>(path.size()) + 4 != n) return {};
    if (!two_leaves_of_weight_2(a, path[1]) ||
        !two_leaves_of_weight_2(z, path[path.size() - 2]))
      return {};
    out.type = StrictlyLcType::I_2222;
    for (int v : path) out.b.push_back(g.weights[v]);
  } else {
    return {};
  }
  int excess = 0;
  for (int b : out.b) excess += b - 3;
  out.smoothable = excess <= 3;
  return out;
}

// Builders for the four strictly lc shapes.
inline DualGraph graph_2222(const std::vector<int>& b) {
  DualGraph g;
  g.shape = Shape::Tree;
  g.weights = b;
  int n = static_cast<int>(b.size());
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  auto leaf = [&](int at) {
    g.weights.push_back(2);
    g.edges.push_back({at, static_cast<int>(g.weights.size()) - 1});
  };
  leaf(0);
  leaf(0);
  leaf(n - 1);
  leaf(n - 1);
  return g;
}

inline DualGraph graph_star3(int b, int x, int y, int z) {
  DualGraph g;
  g.shape = Shape::Tree;
  g.weights = {b, x, y, z};
  g.edges = {{0, 1}, {0, 2}, {0, 3}};
  return g;
}

}  // namespace singchain
