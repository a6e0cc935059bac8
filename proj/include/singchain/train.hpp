#pragma once

#include "singchain/tchain.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace singchain {

enum class MoveKind { Between, Left, Right };

struct Move {
  MoveKind kind;
  int pos;
  friend bool operator==(const Move&, const Move&) = default;
};

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Between: return "between";
    case MoveKind::Left: return "left";
    case MoveKind::Right: return "right";
  }
  return "";
}

// Blows up the node between positions i and i+1 of a configuration.
inline std::vector<int> blow_up_node(std::vector<int> e, std::size_t i) {
  ++e[i];
  ++e[i + 1];
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(i) + 1, 1);
  return e;
}

// Contracts the (-1)-curve at position j.
inline std::vector<int> contract_at(std::vector<int> e, std::size_t j) {
  if (j > 0) --e[j - 1];
  if (j + 1 < e.size()) --e[j + 1];
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
  return e;
}

// Contracts the leftmost 1 until none remain.
inline Chain blow_down(std::vector<int> e) {
  while (true) {
    auto it = std::find(e.begin(), e.end(), 1);
    if (it == e.end()) break;
    e = contract_at(std::move(e), static_cast<std::size_t>(it - e.begin()));
  }
  if (e.empty()) throw DomainError("blow-down contracts everything");
  for (int x : e)
    if (x < 2) throw DomainError("blow-down leaves an entry below 2");
  return Chain(std::move(e));
}

struct TrainState {
  std::vector<int> entries;
  Chain base;
  std::vector<Move> moves;  // provenance from base; empty for parsed states
  bool provenance = true;

  static TrainState from_chain(const Chain& c) { return {c.entries(), c, {}, true}; }
  static TrainState from_entries(std::vector<int> e) {
    for (int x : e)
      if (x < 1) throw DomainError("train entries must be >= 1");
    Chain b = blow_down(e);
    return {std::move(e), std::move(b), {}, false};
  }
};

inline Chain blow_down(const TrainState& s) { return blow_down(s.entries); }

inline TrainState blow_up_between(const TrainState& s, int i) {
  if (i < 0 || static_cast<std::size_t>(i) + 1 >= s.entries.size())
    throw DomainError("blow-up position out of range");
  if (s.entries[i] == 1 || s.entries[i + 1] == 1)
    throw DomainError("blow-up between requires two non-(-1) neighbours");
  TrainState t = s;
  t.entries = blow_up_node(s.entries, i);
  t.moves.push_back({MoveKind::Between, i});
  return t;
}

inline void check_junction(const TrainState& s, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= s.entries.size() || s.entries[j] != 1)
    throw DomainError("position is not a (-1)-entry");
  if (j == 0 || static_cast<std::size_t>(j) + 1 >= s.entries.size())
    throw DomainError("(-1)-entry is missing a neighbour segment");
}

// [..a, 1, b..] -> [..a+1, 1, 2, b..]
inline TrainState left_blow_up(const TrainState& s, int j) {
  check_junction(s, j);
  TrainState t = s;
  t.entries = blow_up_node(s.entries, j - 1);
  t.moves.push_back({MoveKind::Left, j});
  return t;
}

// [..a, 1, b..] -> [..a, 2, 1, b+1..]
inline TrainState right_blow_up(const TrainState& s, int j) {
  check_junction(s, j);
  TrainState t = s;
  t.entries = blow_up_node(s.entries, j);
  t.moves.push_back({MoveKind::Right, j});
  return t;
}

inline TrainState apply_move(const TrainState& s, const Move& m) {
  switch (m.kind) {
    case MoveKind::Between: return blow_up_between(s, m.pos);
    case MoveKind::Left: return left_blow_up(s, m.pos);
    case MoveKind::Right: return right_blow_up(s, m.pos);
  }
  return s;
}

struct TTrain {
  std::vector<Chain> vehicles;
  std::vector<std::pair<Rational, Rational>> junction_alphas;
  bool ample = false;

  std::vector<int> entries() const {
    std::vector<int> e;
    for (std::size_t i = 0; i < vehicles.size(); ++i) {
      if (i) e.push_back(1);
      e.insert(e.end(), vehicles[i].begin(), vehicles[i].end());
    }
    return e;
  }
};

inline std::string to_string(const TTrain& t) {
  std::string s;
  for (std::size_t i = 0; i < t.vehicles.size(); ++i) {
    if (i) s += "-1-";
    s += to_string(t.vehicles[i]);
  }
  return s;
}

// Boundary log discrepancies of a vehicle: T-chain by recursion, A-chain 1.
inline std::pair<Rational, Rational> boundary_alphas(const Chain& v) {
  if (is_a_chain(v)) return {Rational(1), Rational(1)};
  auto d = derive_tchain(v);
  if (!d) throw DomainError("vehicle is neither a T-chain nor an A-chain");
  auto a = tchain_alphas(*d);
  return {a.front(), a.back()};
}

// Segments between the 1-entries; nullopt if a segment is empty or not a
// T-chain (A-chains also allowed when allow_a is set).
inline std::optional<TTrain> make_train(const std::vector<int>& e, bool allow_a = false) {
  TTrain t;
  std::vector<int> cur;
  auto flush = [&]() -> bool {
    if (cur.empty()) return false;
    for (int x : cur)
      if (x < 2) return false;
    Chain c(cur);
    if (!is_tchain(c) && !(allow_a && is_a_chain(c))) return false;
    t.vehicles.push_back(std::move(c));
    cur.clear();
    return true;
  };
  for (int x : e) {
    if (x == 1) {
      if (!flush()) return std::nullopt;
    } else {
      cur.push_back(x);
    }
  }
  if (!flush()) return std::nullopt;
  t.ample = true;
  for (std::size_t i = 0; i + 1 < t.vehicles.size(); ++i) {
    Rational l = boundary_alphas(t.vehicles[i]).second;
    Rational r = boundary_alphas(t.vehicles[i + 1]).first;
    t.junction_alphas.push_back({l, r});
    if (l + r >= 1) t.ample = false;
  }
  return t;
}

inline std::optional<TTrain> is_ample_train(const std::vector<int>& e) {
  auto t = make_train(e);
  if (!t || !t->ample) return std::nullopt;
  return t;
}

inline std::optional<TTrain> is_ample_train(const TrainState& s) { return is_ample_train(s.entries); }

// `[a,...]-1-[b,...]-1-...`; each vehicle uses the chain grammar.
inline std::vector<int> parse_train_entries(std::string_view text) {
  std::vector<int> e;
  std::size_t pos = 0;
  while (true) {
    detail::skip_ws(text, pos);
    std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated vehicle");
    Chain v = parse_chain(text.substr(pos, close + 1 - pos));
    e.insert(e.end(), v.begin(), v.end());
    pos = close + 1;
    detail::skip_ws(text, pos);
    if (pos == text.size()) return e;
    if (text.substr(pos, 3) != "-1-") throw ParseError("expected -1- between vehicles");
    pos += 3;
    e.push_back(1);
  }
}

inline TrainState parse_train(std::string_view text) {
  return TrainState::from_entries(parse_train_entries(text));
}

inline long long total_cores(const TTrain& t) {
  long long d = 0;
  for (const auto& v : t.vehicles) {
    auto c = is_tchain(v);
    if (!c) throw DomainError("vehicle is not a T-chain");
    d += c->d;
  }
  return d;
}

// len(c) - (sum of core counts) + 2 == sum(c_i - 2)
inline bool check_length_relation(const Chain& c, const TTrain& t) {
  if (blow_down(t.entries()) != c) throw DomainError("train does not blow down to the chain");
  long long excess = 0;
  for (int b : c) excess += b - 2;
  return static_cast<long long>(c.size()) - total_cores(t) + 2 == excess;
}

}  // namespace singchain
