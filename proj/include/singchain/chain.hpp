#pragma once

#include "singchain/rational.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singchain {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

// One bracket item after sugar expansion: either a value or a splice marker.
struct Term {
  long long value = 0;
  bool splice = false;
};

inline void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline long long parse_int(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected integer at offset " + std::to_string(start));
  if (pos - digits > 9) throw ParseError("integer too large at offset " + std::to_string(start));
  return std::stoll(std::string(s.substr(start, pos - start)));
}

inline void expect(std::string_view s, std::size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c)
    throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
  ++pos;
}

// Parses `[` term (`,` term)* `]` starting at pos and expands 2^k blocks.
inline std::vector<Term> parse_bracket(std::string_view s, std::size_t& pos) {
  expect(s, pos, '[');
  std::vector<Term> out;
  while (true) {
    long long v = parse_int(s, pos);
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      if (v != 2) throw ParseError("only base 2 may carry an exponent");
      long long k = parse_int(s, pos);
      if (k == -1) {
        out.push_back({0, true});
      } else if (k < -1) {
        throw ParseError("exponent must be >= -1");
      } else {
        if (k > 100000) throw ParseError("exponent too large");
        for (long long i = 0; i < k; ++i) out.push_back({2, false});
      }
    } else {
      out.push_back({v, false});
    }
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    expect(s, pos, ']');
    return out;
  }
}

// Left-to-right splice: a, 2^-1, b becomes a+b-2.
inline std::vector<long long> apply_splices(const std::vector<Term>& terms) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].splice) {
      out.push_back(terms[i].value);
      continue;
    }
    if (out.empty() || i + 1 >= terms.size() || terms[i + 1].splice)
      throw ParseError("splice 2^-1 is missing a neighbour");
    out.back() = out.back() + terms[i + 1].value - 2;
    ++i;
  }
  return out;
}

}  // namespace detail

class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw DomainError("chain must be non-empty");
    for (int x : e_)
      if (x < 2) throw DomainError("chain entries must be >= 2");
  }

  const std::vector<int>& entries() const { return e_; }
  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  Chain reversed() const { return Chain(std::vector<int>(e_.rbegin(), e_.rend())); }

  // Smaller of the two orientations.
  Chain normalized() const {
    Chain r = reversed();
    return r.e_ < e_ ? r : *this;
  }

  int sum() const {
    int s = 0;
    for (int x : e_) s += x;
    return s;
  }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;

 private:
  std::vector<int> e_;
};

inline std::string format_entries(const std::vector<int>& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "]";
}

inline std::string to_string(const Chain& c) { return format_entries(c.entries()); }

inline Chain parse_chain(std::string_view text) {
  std::size_t pos = 0;
  auto terms = detail::parse_bracket(text, pos);
  detail::skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after chain literal");
  auto vals = detail::apply_splices(terms);
  if (vals.empty()) throw ParseError("empty chain");
  std::vector<int> e;
  for (long long v : vals) {
    if (v < 2) throw ParseError("chain entry " + std::to_string(v) + " is below 2");
    if (v > 1000000) throw ParseError("chain entry too large");
    e.push_back(static_cast<int>(v));
  }
  return Chain(std::move(e));
}

inline bool is_a_chain(const Chain& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 2; });
}

struct CyclicType {
  BigInt n;
  BigInt a;
  friend bool operator==(const CyclicType&, const CyclicType&) = default;
};

inline BigInt mod_inverse(const BigInt& a, const BigInt& n) {
  if (n == 1) return 0;
  BigInt t = 0, nt = 1, r = n, nr = a % n;
  while (nr != 0) {
    BigInt q = r / nr;
    BigInt tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("not invertible");
  if (t < 0) t += n;
  return t;
}

inline CyclicType chain_to_frac(const Chain& c) {
  // Evaluate from the tail: p/q <- b - q/p.
  BigInt p = c[c.size() - 1], q = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    BigInt np = BigInt(c[i]) * p - q;
    q = p;
    p = np;
  }
  return {p, q};
}

inline Chain frac_to_chain(const CyclicType& t) {
  if (t.a <= 0 || t.a >= t.n || boost::multiprecision::gcd(t.a, t.n) != 1)
    throw DomainError("need 0 < a < n with gcd(a,n) = 1");
  std::vector<int> e;
  BigInt n = t.n, a = t.a;
  while (a > 0) {
    BigInt b = (n + a - 1) / a;
    e.push_back(static_cast<int>(b));
    BigInt r = b * a - n;
    n = a;
    a = r;
  }
  return Chain(std::move(e));
}

// Representative under reversal: min(a, a^-1 mod n).
inline CyclicType canonical_type(const CyclicType& t) {
  BigInt inv = mod_inverse(t.a, t.n);
  return {t.n, std::min(t.a, inv)};
}

}  // namespace singchain
