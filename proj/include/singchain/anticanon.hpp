#pragma once

#include "singchain/chain.hpp"
#include "singchain/cusp.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace singchain {

enum class AcMoveKind { Node, Smooth };

struct AcMove {
  AcMoveKind kind = AcMoveKind::Smooth;
  int pos = 0;
  friend bool operator==(const AcMove&, const AcMove&) = default;
};

// Cycle of rational curves on a rational surface with entries -C^2; for r=1 the
// entry is the nodal label. Conservation: 2r - sum = k2.
struct AcState {
  std::vector<int> entries;
  int k2 = 0;
  std::vector<AcMove> log;

  int r() const { return static_cast<int>(entries.size()); }
  long long conservation() const {
    long long s = 0;
    for (int x : entries) s += x;
    return 2LL * r() - s;
  }
  bool conserved() const { return conservation() == k2; }
};

struct AcSeed {
  std::string name;
  std::vector<int> entries;
  int k2 = 0;
};

// Minimal-surface seeds. Hirzebruch degrees run 1..max_degree.
inline std::vector<AcSeed> anticanonical_seeds(int max_degree) {
  std::vector<AcSeed> s = {
      {"plane-line-conic", {-4, -1}, 9},
      {"plane-triangle", {-1, -1, -1}, 9},
      {"plane-nodal-cubic", {-7}, 9},
      {"quadrilateral", {0, 0, 0, 0}, 8},
  };
  for (int d = 1; d <= max_degree; ++d) s.push_back({"hirzebruch-" + std::to_string(d), {-d - 4, d}, 8});
  return s;
}

inline std::optional<AcSeed> find_seed(const std::string& name) {
  const std::string pre = "hirzebruch-";
  if (name.rfind(pre, 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(name.substr(pre.size()));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (d < 1) return std::nullopt;
    return AcSeed{name, {-d - 4, d}, 8};
  }
  for (const auto& s : anticanonical_seeds(0))
    if (s.name == name) return s;
  return std::nullopt;
}

inline AcState make_state(const AcSeed& s) { return AcState{s.entries, s.k2, {}}; }

// Blow-up at the node between i and i+1: insert a (-1)-curve, both neighbours drop by one.
inline AcState move_node(const AcState& s, int i) {
  const int r = s.r();
  if (i < 0 || i >= r) throw std::out_of_range("node index out of range");
  AcState t = s;
  t.k2 -= 1;
  t.log.push_back({AcMoveKind::Node, i});
  if (r == 1) {
    t.entries = {s.entries[0] + 2, 1};
    return t;
  }
  t.entries[static_cast<std::size_t>(i)] += 1;
  t.entries[static_cast<std::size_t>((i + 1) % r)] += 1;
  t.entries.insert(t.entries.begin() + i + 1, 1);
  return t;
}

inline AcState move_smooth(const AcState& s, int i) {
  if (i < 0 || i >= s.r()) throw std::out_of_range("component index out of range");
  AcState t = s;
  t.k2 -= 1;
  t.entries[static_cast<std::size_t>(i)] += 1;
  t.log.push_back({AcMoveKind::Smooth, i});
  return t;
}

inline AcState apply_move(const AcState& s, const AcMove& m) {
  return m.kind == AcMoveKind::Node ? move_node(s, m.pos) : move_smooth(s, m.pos);
}

// Lexicographic minimum over all rotations and reflections.
inline std::vector<int> dihedral_min(const std::vector<int>& e) {
  const std::size_t n = e.size();
  std::vector<int> best = e, cand(n);
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t k = 0; k < n; ++k) cand[k] = dir == 0 ? e[(s + k) % n] : e[(s + n - k) % n];
      if (cand < best) best = cand;
    }
  return best;
}

namespace detail {

// True if cur embeds as a cyclic subsequence of some dihedral image of target
// with every entry bounded by its image.
inline bool dominated(const std::vector<int>& cur, const std::vector<int>& target) {
  const std::size_t m = cur.size(), n = target.size();
  if (m > n) return false;
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t j = 0;
      for (std::size_t k = 0; k < n && j < m; ++k) {
        int t = dir == 0 ? target[(s + k) % n] : target[(s + n - k) % n];
        if (j == 0 && k > 0) break;
        if (cur[j] <= t) ++j;
      }
      if (j == m) return true;
    }
  return false;
}

struct RealizeSearch {
  std::vector<int> target;
  std::set<std::pair<std::vector<int>, int>> seen;
  long long explored = 0;
  bool conservation_ok = true;

  bool dfs(AcState& s, int left) {
    ++explored;
    if (!s.conserved()) conservation_ok = false;
    if (left == 0) return s.r() == static_cast<int>(target.size()) && dihedral_min(s.entries) == target;
    if (!dominated(s.entries, target)) return false;
    if (!seen.insert({dihedral_min(s.entries), left}).second) return false;
    const int nodes_needed = static_cast<int>(target.size()) - s.r();
    if (nodes_needed > left) return false;
    for (int i = 0; i < s.r(); ++i) {
      if (nodes_needed > 0) {
        AcState t = move_node(s, i);
        if (dfs(t, left - 1)) {
          s = std::move(t);
          return true;
        }
      }
      if (nodes_needed < left) {
        AcState t = move_smooth(s, i);
        if (dfs(t, left - 1)) {
          s = std::move(t);
          return true;
        }
      }
    }
    return false;
  }
};

}  // namespace detail

struct RealizeResult {
  bool found = false;
  std::string seed;
  std::vector<int> seed_entries;
  int seed_k2 = 0;
  std::vector<AcMove> moves;
  std::vector<int> final_entries;
  std::string reason;
  long long explored = 0;
  bool conservation_ok = true;
};

inline int forced_depth(const AcSeed& s, const Cycle& target) {
  long long c = 2LL * target.r();
  for (int x : target.entries()) c -= x;
  return static_cast<int>(s.k2 - c);
}

// Searches seeds in order for a move sequence ending at the target cycle. The
// depth per seed is fixed by conservation. Absence is not a proof of non-realizability.
inline RealizeResult realize(const Cycle& target, int max_blowups,
                             const std::optional<std::string>& seed_filter = std::nullopt) {
  RealizeResult res;
  const auto& te = target.entries();
  const int max_entry = *std::max_element(te.begin(), te.end());
  std::vector<int> goal = dihedral_min(te);
  bool any_depth = false;
  for (const auto& seed : anticanonical_seeds(std::max(0, max_entry))) {
    if (seed_filter && seed.name != *seed_filter) continue;
    const int n = forced_depth(seed, target);
    if (n < 0 || seed.entries.size() > te.size()) continue;
    if (n > max_blowups) continue;
    any_depth = true;
    detail::RealizeSearch rs{goal, {}, 0, true};
    AcState s = make_state(seed);
    bool ok = rs.dfs(s, n);
    res.explored += rs.explored;
    res.conservation_ok = res.conservation_ok && rs.conservation_ok;
    if (ok) {
      res.found = true;
      res.seed = seed.name;
      res.seed_entries = seed.entries;
      res.seed_k2 = seed.k2;
      res.moves = s.log;
      res.final_entries = s.entries;
      return res;
    }
  }
  res.reason = any_depth ? "not found within budget" : "forced depth exceeds max_blowups for every seed";
  return res;
}

struct ReplayResult {
  bool ok = false;
  AcState final_state;
  std::string error;
};

// Re-executes moves from a seed, checking conservation at every step.
inline ReplayResult replay(const AcSeed& seed, const std::vector<AcMove>& moves) {
  ReplayResult out;
  AcState s = make_state(seed);
  if (!s.conserved()) {
    out.error = "seed violates conservation";
    return out;
  }
  for (const auto& m : moves) {
    try {
      s = apply_move(s, m);
    } catch (const std::out_of_range& e) {
      out.error = e.what();
      return out;
    }
    if (!s.conserved()) {
      out.error = "conservation violated";
      return out;
    }
  }
  out.ok = true;
  out.final_state = s;
  return out;
}

}  // namespace singchain
