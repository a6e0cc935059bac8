#pragma once

#include "singchain/train.hpp"

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace singchain {

// Word letters at a junction: 'L' is a left blow-up, 'R' a right blow-up.
// On the vehicle left of the junction L increments the last entry and R
// appends a 2; on the vehicle to the right L prepends a 2 and R increments
// the first entry. A fresh junction (blow-up between two curves) first
// increments both sides.

inline std::vector<int> apply_left_ops(std::vector<int> b, const std::string& w, bool fresh) {
  if (fresh) ++b.front();
  for (char ch : w) {
    if (ch == 'L')
      b.insert(b.begin(), 2);
    else
      ++b.front();
  }
  return b;
}

inline std::vector<int> apply_right_ops(std::vector<int> b, const std::string& w, bool fresh) {
  if (fresh) ++b.back();
  for (char ch : w) {
    if (ch == 'L')
      ++b.back();
    else
      b.push_back(2);
  }
  return b;
}

inline int count_letter(const std::string& w, char ch) {
  return static_cast<int>(std::count(w.begin(), w.end(), ch));
}

struct Completion {
  std::vector<int> vehicle;
  std::string word;
  TDerivation derivation;
};

namespace detail {

// Enumerates every T-chain V = apply_right_ops(P, w, fresh) with |w| <= max_cost.
// Positions [base_lo, |P|) of P are base curves; with cores_in_base the seed's
// [2^d] part must lie among them.
//
// For each tail length the derivation is peeled from the left: while the
// window starts inside the fixed prefix the outer op is forced by the front
// entry; past it the choice is free, bounded by the front's lower bound and by
// the cost, which for a T-chain of length n with d cores is fixed:
// sum(V_i - 1) = 2n - d + 2.
class CompletionSearch {
 public:
  CompletionSearch(const std::vector<int>& p, bool fresh, int max_cost, std::size_t base_lo,
                   bool cores_in_base)
      : p_(p), inc_(fresh ? 1 : 0), max_cost_(max_cost), base_lo_(base_lo),
        cores_in_base_(cores_in_base), m_(p.size()) {
    for (std::size_t i = 0; i < m_; ++i) fixed_weight_ += p_[i] - 1;
    fixed_weight_ += inc_;
  }

  std::vector<Completion> run() {
    if (max_cost_ < 0) return {};
    for (int tail = 0; tail <= max_cost_; ++tail) {
      n_ = m_ + static_cast<std::size_t>(tail);
      // cost = 2n - d + 2 - fixed_weight <= max_cost
      d_min_ = static_cast<long long>(2 * n_) + 2 - fixed_weight_ - max_cost_;
      if (d_min_ > static_cast<long long>(n_)) continue;
      if (d_min_ < 1) d_min_ = 1;
      std::vector<int> dec(n_, 0);
      std::vector<bool> ops;
      peel(0, n_, dec, ops);
    }
    return std::move(out_);
  }

 private:
  const std::vector<int>& p_;
  int inc_;
  int max_cost_;
  std::size_t base_lo_;
  bool cores_in_base_;
  std::size_t m_;
  long long fixed_weight_ = 0;
  std::size_t n_ = 0;
  long long d_min_ = 1;
  std::vector<Completion> out_;

  void finish(int d, const std::vector<bool>& ops) {
    if (d < d_min_) return;
    TDerivation t{d, ops};
    auto v = build_tchain(t);
    if (v.size() != n_) return;
    for (std::size_t i = 0; i + 1 < m_; ++i)
      if (v[i] != p_[i]) return;
    long long a0 = static_cast<long long>(v[m_ - 1]) - p_[m_ - 1] - inc_;
    if (a0 < 0) return;
    long long c = a0;
    for (std::size_t i = m_; i < v.size(); ++i) c += v[i] - 1;
    if (c > max_cost_) return;
    if (cores_in_base_) {
      auto [lo, hi] = core_range(t);
      if (lo < base_lo_ || hi > m_) return;
    }
    std::string w(static_cast<std::size_t>(a0), 'L');
    for (std::size_t i = m_; i < v.size(); ++i) {
      w += 'R';
      w.append(static_cast<std::size_t>(v[i] - 2), 'L');
    }
    out_.push_back({std::move(v), std::move(w), t});
  }

  // Whether the window's last entry can be 2 (need_two) or >= 3.
  bool right_ok(std::size_t idx, const std::vector<int>& dec, bool need_two) const {
    if (idx + 1 < m_) {
      int val = p_[idx] - dec[idx];
      return need_two ? val == 2 : val >= 3;
    }
    if (idx + 1 == m_ && need_two) return p_[idx] + inc_ - dec[idx] <= 2;
    return true;
  }

  void peel(std::size_t lo, std::size_t hi, std::vector<int>& dec, std::vector<bool>& ops) {
    std::size_t len = hi - lo;
    if (static_cast<long long>(len) < d_min_) return;
    if (lo + 1 < m_) {
      int val = p_[lo] - dec[lo];
      if (len == 1) {
        if (val == 4) finish(1, ops);
        return;
      }
      if (val == 2) {
        if (!right_ok(hi - 1, dec, false)) return;
        ops.push_back(true);
        ++dec[hi - 1];
        peel(lo + 1, hi, dec, ops);
        --dec[hi - 1];
        ops.pop_back();
        return;
      }
      if (val < 2) return;
      if (val == 3) finish(static_cast<int>(len), ops);
      if (!right_ok(hi - 1, dec, true)) return;
      ops.push_back(false);
      ++dec[lo];
      peel(lo, hi - 1, dec, ops);
      --dec[lo];
      ops.pop_back();
      return;
    }
    // Front is V[m-1] or a tail entry.
    long long lb = (lo + 1 == m_ ? p_[m_ - 1] + inc_ : 2) - dec[lo];
    if (cores_in_base_) {
      // The only base curve left in the window is its front.
      if (lo + 1 != m_) return;
      if (len == 1) {
        if (lb <= 4) finish(1, ops);
        return;
      }
      if (!right_ok(hi - 1, dec, true)) return;
      ops.push_back(false);
      ++dec[lo];
      peel(lo, hi - 1, dec, ops);
      --dec[lo];
      ops.pop_back();
      return;
    }
    if (len == 1) {
      if (lb <= 4) finish(1, ops);
      return;
    }
    if (lb <= 3) finish(static_cast<int>(len), ops);
    if (lb <= 2 && right_ok(hi - 1, dec, false)) {
      ops.push_back(true);
      ++dec[hi - 1];
      peel(lo + 1, hi, dec, ops);
      --dec[hi - 1];
      ops.pop_back();
    }
    if (!right_ok(hi - 1, dec, true)) return;
    ops.push_back(false);
    ++dec[lo];
    peel(lo, hi - 1, dec, ops);
    --dec[lo];
    ops.pop_back();
  }
};

}  // namespace detail

inline std::vector<Completion> right_completions(const std::vector<int>& p, bool fresh, int max_cost,
                                                 std::size_t base_lo, bool cores_in_base) {
  return detail::CompletionSearch(p, fresh, max_cost, base_lo, cores_in_base).run();
}

struct FoundTrain {
  TTrain train;
  std::vector<std::string> words;       // one per junction
  std::vector<int> junction_nodes;      // base node t (between c_t and c_t+1); -1 for given junctions
  int moves = 0;
  TrainState state;
};

inline bool found_less(const FoundTrain& a, const FoundTrain& b) {
  if (a.moves != b.moves) return a.moves < b.moves;
  return a.state.entries < b.state.entries;
}

namespace detail {

struct Suffix {
  std::vector<Chain> vehicles;
  std::vector<std::string> words;
  std::vector<int> nodes;
  std::vector<std::pair<SmallFrac, SmallFrac>> jalphas;
  SmallFrac first_alpha;
  int cost = 0;
};

// All ample trains over a pure chain: vehicles are consecutive blocks of
// base curves, every junction is one node blow-up followed by a word.
class TrainSearch {
 public:
  TrainSearch(const Chain& c, int budget) : c_(c.entries()), budget_(budget) {}

  std::vector<Suffix> run() { return solve(0, std::nullopt); }

 private:
  std::vector<int> c_;
  int budget_;
  std::map<std::pair<std::size_t, std::optional<std::string>>, std::vector<Suffix>> memo_;

  std::vector<Suffix> solve(std::size_t s, const std::optional<std::string>& prev) {
    auto key = std::make_pair(s, prev);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int maxrem = budget_ - (prev ? 1 + static_cast<int>(prev->size()) : 0);
    std::vector<Suffix> out;
    std::size_t r = c_.size();
    for (std::size_t t = s; t < r; ++t) {
      std::vector<int> block(c_.begin() + static_cast<std::ptrdiff_t>(s),
                             c_.begin() + static_cast<std::ptrdiff_t>(t) + 1);
      std::size_t base_lo = 0;
      if (prev) {
        block = apply_left_ops(std::move(block), *prev, true);
        base_lo = static_cast<std::size_t>(count_letter(*prev, 'L'));
      }
      if (t + 1 == r) {
        auto d = derive_tchain(block);
        if (!d) continue;
        auto [lo, hi] = core_range(*d);
        if (lo < base_lo) continue;
        auto al = tchain_boundary_alphas(*d);
        out.push_back({{Chain(block)}, {}, {}, {}, al.first, 0});
        continue;
      }
      for (auto& comp : right_completions(block, true, maxrem - 1, base_lo, true)) {
        int jc = 1 + static_cast<int>(comp.word.size());
        auto al = tchain_boundary_alphas(comp.derivation);
        for (const auto& suf : solve(t + 1, comp.word)) {
          if (suf.cost + jc > maxrem) continue;
          if (!sum_below_one(al.second, suf.first_alpha)) continue;
          Suffix x;
          x.vehicles.push_back(Chain(comp.vehicle));
          x.vehicles.insert(x.vehicles.end(), suf.vehicles.begin(), suf.vehicles.end());
          x.words.push_back(comp.word);
          x.words.insert(x.words.end(), suf.words.begin(), suf.words.end());
          x.nodes.push_back(static_cast<int>(t));
          x.nodes.insert(x.nodes.end(), suf.nodes.begin(), suf.nodes.end());
          x.jalphas.push_back({al.second, suf.first_alpha});
          x.jalphas.insert(x.jalphas.end(), suf.jalphas.begin(), suf.jalphas.end());
          x.first_alpha = al.first;
          x.cost = suf.cost + jc;
          out.push_back(std::move(x));
        }
      }
    }
    memo_.emplace(key, out);
    return out;
  }
};

// Replays junction words as explicit moves on the base chain.
inline TrainState replay_moves(const Chain& c, const std::vector<int>& nodes,
                               const std::vector<std::string>& words) {
  TrainState s = TrainState::from_chain(c);
  int inserted = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    int idx = nodes[j] + inserted;
    s = blow_up_between(s, idx);
    int one = idx + 1;
    for (char ch : words[j]) {
      if (ch == 'L') {
        s = left_blow_up(s, one);
      } else {
        s = right_blow_up(s, one);
        ++one;
      }
    }
    inserted += 1 + static_cast<int>(words[j].size());
  }
  return s;
}

}  // namespace detail

// Every ample T-train over c reachable with at most budget blow-ups, ordered
// by (moves, entries).
inline std::vector<FoundTrain> enumerate_ample_trains(const Chain& c, int budget) {
  if (budget < 0) throw DomainError("budget must be >= 0");
  std::vector<FoundTrain> out;
  for (auto& suf : detail::TrainSearch(c, budget).run()) {
    FoundTrain f;
    f.train.vehicles = std::move(suf.vehicles);
    for (auto& [l, r] : suf.jalphas) f.train.junction_alphas.push_back({l.rational(), r.rational()});
    f.train.ample = true;
    f.words = std::move(suf.words);
    f.junction_nodes = std::move(suf.nodes);
    f.moves = suf.cost;
    f.state = detail::replay_moves(c, f.junction_nodes, f.words);
    if (f.state.entries != f.train.entries()) throw std::logic_error("train replay mismatch");
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), found_less);
  return out;
}

struct Admissibility {
  bool admissible = false;
  std::vector<FoundTrain> minimal;  // ample trains at the minimal move count
};

inline Admissibility is_p_admissible(const Chain& c, int budget) {
  auto all = enumerate_ample_trains(c, budget);
  Admissibility a;
  if (all.empty()) return a;
  a.admissible = true;
  for (auto& f : all)
    if (f.moves == all.front().moves) a.minimal.push_back(f);
  return a;
}

// Trains reachable from a state by left/right blow-ups at its existing
// (-1)-curves only. Vehicles need not contain base curves as cores.
inline std::vector<FoundTrain> enumerate_junction_trains(const TrainState& s, int budget,
                                                         bool require_ample) {
  if (budget < 0) throw DomainError("budget must be >= 0");
  std::vector<std::vector<int>> seg(1);
  for (int x : s.entries) {
    if (x == 1)
      seg.emplace_back();
    else
      seg.back().push_back(x);
  }
  for (auto& g : seg)
    if (g.empty()) throw DomainError("state has an empty segment");
  std::vector<FoundTrain> out;
  std::vector<Chain> vs;
  std::vector<std::string> ws;
  std::vector<std::pair<Rational, Rational>> ja;
  std::function<void(std::size_t, const std::string&, int, std::optional<Rational>)> rec =
      [&](std::size_t i, const std::string& prev, int used, std::optional<Rational> prev_last) {
        auto block = apply_left_ops(seg[i], prev, false);
        auto accept_first = [&](const Rational& first) {
          if (!prev_last) return true;
          return !require_ample || *prev_last + first < 1;
        };
        if (i + 1 == seg.size()) {
          auto d = derive_tchain(block);
          if (!d) return;
          auto al = tchain_alphas(*d);
          if (!accept_first(al.front())) return;
          FoundTrain f;
          f.train.vehicles = vs;
          f.train.vehicles.push_back(Chain(block));
          f.train.junction_alphas = ja;
          if (prev_last) f.train.junction_alphas.push_back({*prev_last, al.front()});
          f.train.ample = true;
          for (auto& [l, r] : f.train.junction_alphas)
            if (l + r >= 1) f.train.ample = false;
          f.words = ws;
          f.junction_nodes.assign(ws.size(), -1);
          f.moves = used;
          out.push_back(std::move(f));
          return;
        }
        for (auto& comp : right_completions(block, false, budget - used, 0, false)) {
          auto al = tchain_alphas(comp.derivation);
          if (!accept_first(al.front())) continue;
          if (prev_last) ja.push_back({*prev_last, al.front()});
          vs.push_back(Chain(comp.vehicle));
          ws.push_back(comp.word);
          rec(i + 1, comp.word, used + static_cast<int>(comp.word.size()), al.back());
          ws.pop_back();
          vs.pop_back();
          if (prev_last) ja.pop_back();
        }
      };
  rec(0, "", 0, std::nullopt);
  // Replay the words as moves on the given state.
  for (auto& f : out) {
    TrainState st = s;
    std::size_t ones_seen = 0;
    for (std::size_t j = 0; j < f.words.size(); ++j) {
      int one = -1;
      for (std::size_t k = 0, cnt = 0; k < st.entries.size(); ++k)
        if (st.entries[k] == 1 && cnt++ == ones_seen) {
          one = static_cast<int>(k);
          break;
        }
      for (char ch : f.words[j]) {
        if (ch == 'L') {
          st = left_blow_up(st, one);
        } else {
          st = right_blow_up(st, one);
          ++one;
        }
      }
      ++ones_seen;
    }
    f.state = std::move(st);
    if (f.state.entries != f.train.entries()) throw std::logic_error("junction replay mismatch");
  }
  std::sort(out.begin(), out.end(), found_less);
  return out;
}

}  // namespace singchain
