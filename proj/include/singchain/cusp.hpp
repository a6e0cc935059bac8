#pragma once

#include "singchain/chain.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singchain {

// Cusp cycle stored in canonical dihedral form. For r=1 the single entry is
// the label b+2 of a nodal curve with self-intersection -b.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<int> entries);

  const std::vector<int>& entries() const { return e_; }
  std::size_t size() const { return e_.size(); }
  int r() const { return static_cast<int>(e_.size()); }
  bool nodal() const { return e_.size() == 1; }
  int operator[](std::size_t i) const { return e_[i]; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<int> e_;
};

namespace detail {

inline void validate_cycle(const std::vector<int>& e) {
  if (e.empty()) throw DomainError("cycle must be non-empty");
  if (e.size() == 1) {
    if (e[0] < 3) throw DomainError("one-component cycle label must be >= 3");
    return;
  }
  bool big = false;
  for (int x : e) {
    if (x < 2) throw DomainError("cycle entries must be >= 2");
    big = big || x >= 3;
  }
  if (!big) throw DomainError("all-2 cycle is not negative definite");
}

// Lexicographic minimum over rotations and reflections that start with an entry >= 3.
inline std::vector<int> canonical_rotation(const std::vector<int>& e) {
  const std::size_t n = e.size();
  std::vector<int> best;
  std::vector<int> cand(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < n; ++s) {
      if (e[s] < 3) continue;
      for (std::size_t k = 0; k < n; ++k)
        cand[k] = dir == 0 ? e[(s + k) % n] : e[(s + n - k) % n];
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

// Cyclic splice: a 2^-1 token merges its two cyclic neighbours into a+b-2.
inline std::vector<long long> cyclic_splice(std::vector<Term> t) {
  while (true) {
    auto it = std::find_if(t.begin(), t.end(), [](const Term& x) { return x.splice; });
    if (it == t.end()) break;
    const std::size_t n = t.size();
    if (n < 3) throw ParseError("splice 2^-1 underflow");
    std::size_t i = static_cast<std::size_t>(it - t.begin());
    std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>((i + n - 1) % n), t.end());
    if (t[0].splice || t[2].splice) throw ParseError("splice 2^-1 underflow");
    Term merged{t[0].value + t[2].value - 2, false};
    t.erase(t.begin(), t.begin() + 3);
    t.insert(t.begin(), merged);
  }
  std::vector<long long> out;
  out.reserve(t.size());
  for (const Term& x : t) out.push_back(x.value);
  return out;
}

inline std::vector<int> to_int_entries(const std::vector<long long>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (long long x : v) {
    if (x > INT_MAX || x < INT_MIN) throw DomainError("cycle entry out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

inline void push_twos(std::vector<Term>& t, long long k) {
  if (k == -1) {
    t.push_back({0, true});
    return;
  }
  if (k < -1) throw DomainError("exponent must be >= -1");
  for (long long i = 0; i < k; ++i) t.push_back({2, false});
}

}  // namespace detail

inline Cycle::Cycle(std::vector<int> entries) {
  detail::validate_cycle(entries);
  e_ = entries.size() == 1 ? std::move(entries) : detail::canonical_rotation(entries);
}

// Splices cyclically and validates; keeps the written order.
inline std::vector<int> splice_cycle_terms(const std::vector<detail::Term>& terms) {
  if (terms.empty()) throw DomainError("cycle must be non-empty");
  auto e = detail::to_int_entries(detail::cyclic_splice(terms));
  detail::validate_cycle(e);
  return e;
}

inline Cycle canonicalize(const std::vector<detail::Term>& terms) {
  return Cycle(splice_cycle_terms(terms));
}

inline std::string to_string(const Cycle& c) {
  return format_entries(c.entries()) + (c.nodal() ? "o!" : "o");
}

inline std::string format_cycle(const std::vector<int>& e) {
  return format_entries(e) + (e.size() == 1 ? "o!" : "o");
}

// Parses `[..]o` or `[b]o!`; returns entries in written order after splicing.
inline std::vector<int> parse_cycle_entries(std::string_view text) {
  std::size_t pos = 0;
  auto terms = detail::parse_bracket(text, pos);
  detail::expect(text, pos, 'o');
  bool bang = pos < text.size() && text[pos] == '!';
  if (bang) ++pos;
  detail::skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters at offset " + std::to_string(pos));
  try {
    auto e = splice_cycle_terms(terms);
    if (bang && e.size() != 1) throw ParseError("nodal marker '!' requires a one-component cycle");
    return e;
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

inline Cycle parse_cycle(std::string_view text) { return Cycle(parse_cycle_entries(text)); }

inline bool steenbrink_ok(const Cycle& c) {
  long long s = c.r() + 9;
  for (int b : c.entries()) s += 2 - b;
  return s >= 0;
}

// Dual via blocks [a1+3, 2^a2, a3+3, 2^a4, ...] -> [2^a1, a2+3, 2^a3, a4+3, ...],
// read from the first entry >= 3 starting at e[0]. Writes into out (capacity
// at least the sum of (e_i - 2)) and returns the dual length.
inline std::size_t dual_kernel(const int* e, std::size_t n, int* out) {
  std::size_t s = 0;
  while (e[s] < 3) ++s;
  std::size_t len = 0, last = 0, i = s;
  for (std::size_t k = 0; k < n; ++k) {
    int x = e[i];
    if (++i == n) i = 0;
    if (x >= 3) {
      std::fill_n(out + len, x - 3, 2);
      len += static_cast<std::size_t>(x - 3);
      last = len;
      out[len++] = 3;
    } else {
      ++out[last];
    }
  }
  return len;
}

inline std::vector<int> dual_emitted(const std::vector<int>& e) {
  if (e.size() < 2) throw DomainError("dual of a one-component cycle is not defined");
  detail::validate_cycle(e);
  std::size_t cap = 0;
  for (int x : e) cap += static_cast<std::size_t>(x - 2);
  std::vector<int> out(cap);
  out.resize(dual_kernel(e.data(), e.size(), out.data()));
  return out;
}

inline Cycle dual_cycle(const Cycle& c) { return Cycle(dual_emitted(c.entries())); }

inline bool decide_simple_elliptic(long long b) {
  if (b < 1) throw DomainError("elliptic degree must be >= 1");
  return b <= 9;
}

inline bool decide_B4(long long n, long long beta) {
  if (n < 1 || beta < 0) throw DomainError("B4 requires n >= 1, beta >= 0");
  return beta <= n + 8;
}

inline bool decide_B3(long long chi, long long n, long long gamma) {
  if (chi < 4 || gamma < 0 || gamma > n) throw DomainError("B3 requires chi >= 4, 0 <= gamma <= n");
  return n >= chi - 11;
}

inline std::vector<std::pair<long long, long long>> b5_exceptional_pairs(long long chi) {
  std::vector<std::pair<long long, long long>> raw = {
      {0, 2 * chi - 15},     {chi - 10, chi - 5}, {chi - 9, chi - 6},
      {chi - 6, chi - 9},    {chi - 5, chi - 10}, {2 * chi - 15, 0}};
  std::vector<std::pair<long long, long long>> out;
  for (auto p : raw)
    if (p.first >= 0 && p.second >= 0 && p.first + p.second > 0 &&
        std::find(out.begin(), out.end(), p) == out.end())
      out.push_back(p);
  return out;
}

inline bool decide_B5(long long chi, long long k1, long long k2) {
  if (chi < 4 || k1 < 0 || k2 < 0 || k1 + k2 <= 0)
    throw DomainError("B5 requires chi >= 4, k1, k2 >= 0, k1 + k2 > 0");
  if (k1 + k2 >= 2 * chi - 14) return true;
  auto pairs = b5_exceptional_pairs(chi);
  return std::find(pairs.begin(), pairs.end(), std::pair{k1, k2}) != pairs.end();
}

inline bool decide_B6(long long chi, long long n, long long gamma) {
  if (chi < 4 || gamma < 0 || gamma > n) throw DomainError("B6 requires chi >= 4, 0 <= gamma <= n");
  if (n >= 2 * chi - 14) return true;
  if (n != 2 * chi - 15) return false;
  for (long long g : {2 * chi - 15, chi - 5, chi - 6, chi - 9, chi - 10, 0LL})
    if (gamma == g) return true;
  return false;
}

inline Cycle b4_cycle(long long n, long long beta) {
  std::vector<detail::Term> t{{beta + 3, false}};
  detail::push_twos(t, n - 1);
  return canonicalize(t);
}

inline Cycle b3_cycle(long long chi, long long n, long long gamma) {
  std::vector<detail::Term> t{{chi - 1, false}};
  detail::push_twos(t, n - gamma - 1);
  t.push_back({3, false});
  detail::push_twos(t, gamma - 1);
  return canonicalize(t);
}

inline Cycle b5_cycle(long long chi, long long k1, long long k2) {
  std::vector<detail::Term> t{{chi - 1, false}};
  detail::push_twos(t, k1 - 1);
  t.push_back({chi - 1, false});
  detail::push_twos(t, k2 - 1);
  return canonicalize(t);
}

inline Cycle b6_cycle(long long chi, long long n, long long gamma) { return b5_cycle(chi, n - gamma, gamma); }

struct CuspFamilyParams {
  std::string family;
  long long chi = 0, n = 0, gamma = 0, beta = 0, k1 = 0, k2 = 0;
};

enum class VerdictKind { Smoothable, NotSmoothable, Unknown };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Smoothable: return "Smoothable";
    case VerdictKind::NotSmoothable: return "NotSmoothable";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "";
}

struct CuspVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<CuspFamilyParams> family;
  bool steenbrink = false;
};

// Matches the canonical cycle against the known families and dispatches.
inline std::optional<CuspFamilyParams> match_family(const Cycle& c) {
  const auto& e = c.entries();
  std::vector<std::size_t> big;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] >= 3) big.push_back(i);
  CuspFamilyParams p;
  if (big.size() == 1) {
    p.family = "B4";
    p.n = c.r();
    p.beta = e[big[0]] - 3;
    return p;
  }
  if (big.size() != 2) return std::nullopt;
  const long long n = c.r();
  long long x = e[big[0]], y = e[big[1]];
  long long run1 = static_cast<long long>(big[1] - big[0]) - 1;
  long long run2 = n - 2 - run1;
  if (x == y) {
    p.family = "B5";
    p.chi = x + 1;
    p.k1 = run1 + 1;
    p.k2 = run2 + 1;
    return p;
  }
  if (x == 3 || y == 3) {
    // [chi-1, 2^(n-gamma-1), 3, 2^(gamma-1)]
    if (x == 3) std::swap(run1, run2);
    p.family = "B3";
    p.chi = (x == 3 ? y : x) + 1;
    p.n = n;
    p.gamma = run2 + 1;
    return p;
  }
  return std::nullopt;
}

inline CuspVerdict classify_and_decide(const Cycle& c) {
  CuspVerdict v;
  v.steenbrink = steenbrink_ok(c);
  auto p = match_family(c);
  if (!p) return v;
  bool ok = false;
  if (p->family == "B4") ok = decide_B4(p->n, p->beta);
  else if (p->family == "B5") ok = decide_B5(p->chi, p->k1, p->k2);
  else ok = decide_B3(p->chi, p->n, p->gamma);
  v.kind = ok ? VerdictKind::Smoothable : VerdictKind::NotSmoothable;
  v.family = p;
  return v;
}

}  // namespace singchain
