#pragma once

#include "singchain/chain.hpp"
#include "singchain/dual_graph.hpp"

#include <set>
#include <vector>

namespace singchain {

struct TClass {
  long long d = 0;
  BigInt n;
  BigInt a;
  long long milnor() const { return d - 1; }
  bool wahl() const { return d == 1; }
  friend bool operator==(const TClass&, const TClass&) = default;
};

inline bool is_perfect_square(const BigInt& x, BigInt& root) {
  if (x < 0) return false;
  root = boost::multiprecision::sqrt(x);
  return root * root == x;
}

// Arithmetic test: (N, A) = (d m^2, a d m - 1) with m >= 2, 0 < a < m,
// gcd(a, m) = 1. For a T-chain d = r + 2 - sum(b - 2), so d is read off the
// chain and only one factorisation needs testing.
inline std::optional<TClass> is_tchain(const Chain& c) {
  if (is_a_chain(c)) return std::nullopt;
  long long excess = 0;
  for (int b : c) excess += b - 2;
  long long d = static_cast<long long>(c.size()) + 2 - excess;
  if (d < 1) return std::nullopt;
  auto t = chain_to_frac(c);
  if (t.n % d != 0) return std::nullopt;
  BigInt m;
  if (!is_perfect_square(t.n / d, m) || m < 2) return std::nullopt;
  BigInt dm = m * d;
  if ((t.a + 1) % dm != 0) return std::nullopt;
  BigInt a = (t.a + 1) / dm;
  if (a < 1 || a >= m || boost::multiprecision::gcd(a, m) != 1) return std::nullopt;
  return TClass{d, m, a};
}

// Derivation of a T-chain from its seed. ops are listed outer to inner;
// true means the pair L2 . R1 (prepend 2, increment last), false means
// L1 . R2 (increment first, append 2). The seed is [4] when d == 1 and
// [3, 2^(d-2), 3] otherwise.
struct TDerivation {
  int d = 0;
  std::vector<bool> ops;
};

inline std::optional<TDerivation> derive_tchain(std::vector<int> e) {
  TDerivation out;
  std::size_t lo = 0, hi = e.size();  // window [lo, hi)
  while (true) {
    std::size_t len = hi - lo;
    if (len == 1) {
      if (e[lo] != 4) return std::nullopt;
      out.d = 1;
      return out;
    }
    if (e[lo] == 2) {
      if (e[hi - 1] < 3) return std::nullopt;
      --e[hi - 1];
      ++lo;
      out.ops.push_back(true);
    } else if (e[hi - 1] == 2) {
      if (e[lo] < 3) return std::nullopt;
      --e[lo];
      --hi;
      out.ops.push_back(false);
    } else {
      if (e[lo] != 3 || e[hi - 1] != 3) return std::nullopt;
      for (std::size_t i = lo + 1; i + 1 < hi; ++i)
        if (e[i] != 2) return std::nullopt;
      out.d = static_cast<int>(len);
      return out;
    }
  }
}

inline std::optional<TDerivation> derive_tchain(const Chain& c) {
  return derive_tchain(c.entries());
}

inline std::vector<int> seed_entries(int d) {
  if (d == 1) return {4};
  std::vector<int> s(d, 2);
  s.front() = 3;
  s.back() = 3;
  return s;
}

// Seed plus ops (applied inner to outer).
inline std::vector<int> build_tchain(const TDerivation& t) {
  std::size_t left = 0;
  for (bool op : t.ops)
    if (op) ++left;
  std::vector<int> e(t.ops.size() + static_cast<std::size_t>(t.d), 2);
  std::size_t lo = left, hi = left + static_cast<std::size_t>(t.d);  // [lo, hi)
  if (t.d == 1) {
    e[lo] = 4;
  } else {
    e[lo] = 3;
    e[hi - 1] = 3;
  }
  for (std::size_t k = t.ops.size(); k-- > 0;) {
    if (t.ops[k]) {
      --lo;
      ++e[hi - 1];
    } else {
      ++e[lo];
      ++hi;
    }
  }
  return e;
}

// Log discrepancies by the recursion along the derivation.
inline std::vector<Rational> tchain_alphas(const TDerivation& t) {
  std::vector<Rational> al(seed_entries(t.d).size(), Rational(1, 2));
  for (std::size_t k = t.ops.size(); k-- > 0;) {
    if (t.ops[k]) {
      Rational s = 1 + al.back();
      for (auto& x : al) x /= s;
      al.insert(al.begin(), 1 / s);
    } else {
      Rational s = 1 + al.front();
      for (auto& x : al) x /= s;
      al.push_back(1 / s);
    }
  }
  return al;
}

// Boundary log discrepancies p/q along the derivation. Both stay in lowest
// terms: 1/(1+p/q) = q/(p+q) and (p/q)/(1+p/q) = p/(p+q).
struct SmallFrac {
  std::int64_t p = 0;
  std::int64_t q = 1;
  Rational rational() const { return Rational(p, q); }
};

inline std::pair<SmallFrac, SmallFrac> tchain_boundary_alphas(const TDerivation& t) {
  SmallFrac first{1, 2}, last{1, 2};
  for (std::size_t k = t.ops.size(); k-- > 0;) {
    if (t.ops[k]) {
      std::int64_t s = last.p + last.q;
      first = {last.q, s};
      last = {last.p, s};
    } else {
      std::int64_t s = first.p + first.q;
      last = {first.q, s};
      first = {first.p, s};
    }
    if (first.q > (std::int64_t{1} << 61) || last.q > (std::int64_t{1} << 61))
      throw DomainError("T-chain too long for boundary arithmetic");
  }
  return {first, last};
}

// a + b < 1
inline bool sum_below_one(const SmallFrac& a, const SmallFrac& b) {
  return static_cast<__int128>(a.p) * b.q + static_cast<__int128>(b.p) * a.q <
         static_cast<__int128>(a.q) * b.q;
}

inline LogDiscProfile log_discrepancies_recursive(const Chain& c) {
  auto t = derive_tchain(c);
  if (!t) throw DomainError("not a T-chain: " + to_string(c));
  std::vector<std::int64_t> k;
  for (int b : c) k.push_back(b - 2);
  return profile_from_alphas(tchain_alphas(*t), k);
}

// Positions of the seed's [2^d] part inside the built chain.
inline std::pair<std::size_t, std::size_t> core_range(const TDerivation& t) {
  std::size_t left = 0;
  for (bool op : t.ops)
    if (op) ++left;
  return {left, left + static_cast<std::size_t>(t.d)};
}

inline std::vector<std::size_t> cores(const Chain& c) {
  auto t = derive_tchain(c);
  if (!t) throw DomainError("not a T-chain: " + to_string(c));
  auto al = tchain_alphas(*t);
  Rational lo = *std::min_element(al.begin(), al.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < al.size(); ++i)
    if (al[i] == lo) out.push_back(i);
  return out;
}

// Closure of the seeds under the paired operations, within the bounds.
// Ordered by (length, entries).
inline std::vector<Chain> generate_tchains(int max_length, int max_entry_sum) {
  if (max_length < 1 || max_entry_sum < 1) throw DomainError("bounds must be >= 1");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack;
  auto push = [&](std::vector<int> e) {
    int s = 0;
    for (int x : e) s += x;
    if (static_cast<int>(e.size()) > max_length || s > max_entry_sum) return;
    if (seen.insert(e).second) stack.push_back(std::move(e));
  };
  for (int d = 1; d <= max_length; ++d) push(seed_entries(d));
  while (!stack.empty()) {
    auto e = std::move(stack.back());
    stack.pop_back();
    auto l2 = e;
    l2.insert(l2.begin(), 2);
    ++l2.back();
    push(std::move(l2));
    auto l1 = e;
    ++l1.front();
    l1.push_back(2);
    push(std::move(l1));
  }
  std::vector<std::vector<int>> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<Chain> out;
  for (auto& e : all) out.emplace_back(std::move(e));
  return out;
}

}  // namespace singchain
