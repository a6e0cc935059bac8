#include "oracle.hpp"
#include "singchain/tchain.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace singchain;

namespace {

std::vector<Rational> rats(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Rational> v;
  for (auto [p, q] : xs) v.emplace_back(p, q);
  return v;
}

void for_each_chain(int max_len, int max_entry, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e;
  std::function<void()> rec = [&] {
    if (!e.empty()) f(e);
    if (static_cast<int>(e.size()) == max_len) return;
    for (int b = 2; b <= max_entry; ++b) {
      e.push_back(b);
      rec();
      e.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST(Parse, Sugar) {
  EXPECT_EQ(parse_chain("[3,2^3,3]"), Chain({3, 2, 2, 2, 3}));
  EXPECT_EQ(parse_chain("[3,2^-1,3]"), Chain({4}));
  EXPECT_EQ(parse_chain("[2^0,5,2]"), Chain({5, 2}));
  EXPECT_EQ(parse_chain(" [ 4 , 2^2 ] "), Chain({4, 2, 2}));
  EXPECT_EQ(parse_chain("[3,2^-1,3,2^-1,3]"), Chain({5}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_chain("[3,1]"), ParseError);
  EXPECT_THROW(parse_chain("[2^-1,3]"), ParseError);
  EXPECT_THROW(parse_chain("[3,2^-1]"), ParseError);
  EXPECT_THROW(parse_chain("[3,2^-2,3]"), ParseError);
  EXPECT_THROW(parse_chain("[3^2]"), ParseError);
  EXPECT_THROW(parse_chain("[3,3"), ParseError);
  EXPECT_THROW(parse_chain("[]"), ParseError);
  EXPECT_THROW(parse_chain("[2^0]"), ParseError);
}

TEST(Parse, RoundTrip) {
  for (const char* s : {"[4]", "[2,4,3,3]", "[3,2,2,2,3]"})
    EXPECT_EQ(to_string(parse_chain(s)), s);
}

TEST(Frac, Examples) {
  EXPECT_EQ(chain_to_frac(Chain({5, 2})), (CyclicType{9, 2}));
  EXPECT_EQ(chain_to_frac(Chain({4})), (CyclicType{4, 1}));
  EXPECT_EQ(chain_to_frac(Chain({2, 4, 3, 3})), (CyclicType{50, 29}));
  EXPECT_EQ(frac_to_chain({9, 2}), Chain({5, 2}));
  EXPECT_EQ(frac_to_chain({4, 1}), Chain({4}));
  EXPECT_EQ(frac_to_chain({12, 5}), Chain({3, 2, 3}));
  EXPECT_THROW(frac_to_chain({12, 4}), DomainError);
  EXPECT_EQ(canonical_type({50, 29}).a, 19);
}

TEST(Frac, AgreesWithRationalOracleAndRoundTrips) {
  for_each_chain(5, 7, [](const std::vector<int>& e) {
    Chain c(e);
    auto t = chain_to_frac(c);
    Rational q = oracle::continued_fraction(e);
    ASSERT_EQ(Rational(t.n, t.a), q);
    ASSERT_EQ(boost::multiprecision::denominator(q), t.a);
    ASSERT_EQ(frac_to_chain(t), c);
    auto tr = chain_to_frac(c.reversed());
    ASSERT_EQ(tr.n, t.n);
    ASSERT_EQ((tr.a * t.a) % t.n, 1 % t.n);
  });
}

TEST(LinAlg, BareissMatchesRationalElimination) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 7;
    std::vector<int> e(n);
    for (auto& x : e) x = 2 + static_cast<int>(rng() % 9);
    auto got = log_discrepancies(Chain(e)).alphas;
    ASSERT_EQ(got, oracle::chain_alphas(e));
  }
}

TEST(LinAlg, OverflowFallsBackToBigInt) {
  std::vector<int> e(30, 999);
  auto got = log_discrepancies(Chain(e)).alphas;
  EXPECT_EQ(got, oracle::chain_alphas(e));
}

TEST(LogDisc, Examples) {
  auto p = log_discrepancies(Chain({4}));
  EXPECT_EQ(p.alphas, rats({{1, 2}}));
  EXPECT_EQ(p.kp_invariant, 1);
  p = log_discrepancies(Chain({2, 4, 3, 3}));
  EXPECT_EQ(p.alphas, rats({{3, 5}, {1, 5}, {1, 5}, {2, 5}}));
  EXPECT_EQ(p.kp_invariant, 1);
  EXPECT_EQ(p.status, LcStatus::Klt);
  p = log_discrepancies(cycle_graph({5, 2, 2}));
  EXPECT_EQ(p.alphas, rats({{0, 1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(p.kp_invariant, 0);
  EXPECT_EQ(p.status, LcStatus::StrictlyLc);
}

TEST(LogDisc, CyclesOfLengthOneAndTwo) {
  for (int l = 3; l < 12; ++l) {
    auto p = log_discrepancies(cycle_graph({l}));
    EXPECT_EQ(p.alphas, rats({{0, 1}}));
    EXPECT_EQ(p.kp_invariant, 0);
  }
  auto p = log_discrepancies(cycle_graph({3, 3}));
  EXPECT_EQ(p.alphas, rats({{0, 1}, {0, 1}}));
  EXPECT_THROW(log_discrepancies(cycle_graph({2, 2, 2})), NotNegativeDefinite);
  EXPECT_THROW(log_discrepancies(cycle_graph({2})), NotNegativeDefinite);
}

TEST(LogDisc, DuValIsAllOnes) {
  for (int k = 1; k < 10; ++k) {
    auto p = log_discrepancies(Chain(std::vector<int>(k, 2)));
    for (auto& a : p.alphas) EXPECT_EQ(a, 1);
    EXPECT_EQ(p.kp_invariant, 0);
  }
}

TEST(LogDisc, Recursive) {
  EXPECT_EQ(log_discrepancies_recursive(Chain({2, 5})).alphas, rats({{2, 3}, {1, 3}}));
  EXPECT_EQ(log_discrepancies_recursive(Chain({4})).alphas, rats({{1, 2}}));
  EXPECT_EQ(log_discrepancies_recursive(Chain({3, 3})).alphas, rats({{1, 2}, {1, 2}}));
  EXPECT_THROW(log_discrepancies_recursive(Chain({3, 2})), DomainError);
  for (const auto& c : generate_tchains(7, 22)) {
    auto a = log_discrepancies_recursive(c);
    auto b = log_discrepancies(c);
    ASSERT_EQ(a.alphas, b.alphas) << to_string(c);
    ASSERT_EQ(a.kp_invariant, 1);
  }
}

TEST(TChain, Examples) {
  auto t = is_tchain(Chain({5, 2}));
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (TClass{1, 3, 1}));
  EXPECT_TRUE(t->wahl());
  t = is_tchain(Chain({2, 4, 3, 3}));
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (TClass{2, 5, 3}));
  EXPECT_EQ(t->milnor(), 1);
  EXPECT_FALSE(is_tchain(Chain({3, 2})));
  EXPECT_FALSE(is_tchain(Chain({2, 2, 2})));
  EXPECT_TRUE(is_tchain(Chain({3, 3})));
}

TEST(TChain, RecognizerMatchesFactoringOracle) {
  for_each_chain(6, 8, [](const std::vector<int>& e) {
    ASSERT_EQ(is_tchain(Chain(e)).has_value(), oracle::is_t_by_factoring(e)) << format_entries(e);
    ASSERT_EQ(derive_tchain(e).has_value(), oracle::is_t_by_factoring(e)) << format_entries(e);
  });
}

TEST(TChain, Cores) {
  EXPECT_EQ(cores(Chain({4})), std::vector<std::size_t>{0});
  EXPECT_EQ(cores(Chain({2, 4, 3, 3})), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(cores(Chain({3, 2, 3})), (std::vector<std::size_t>{0, 1, 2}));
  for (const auto& c : generate_tchains(8, 24)) {
    auto t = is_tchain(c);
    ASSERT_TRUE(t);
    ASSERT_EQ(static_cast<long long>(cores(c).size()), t->d);
    auto d = derive_tchain(c);
    auto [lo, hi] = core_range(*d);
    auto cs = cores(c);
    ASSERT_EQ(cs.front(), lo);
    ASSERT_EQ(cs.back() + 1, hi);
    ASSERT_EQ(build_tchain(*d), c.entries());
  }
}

TEST(TChain, Generate) {
  EXPECT_EQ(generate_tchains(1, 4), std::vector<Chain>{Chain({4})});
  std::vector<Chain> want{Chain({4}), Chain({2, 5}), Chain({3, 3}), Chain({5, 2})};
  EXPECT_EQ(generate_tchains(2, 7), want);
  auto g = generate_tchains(3, 10);
  EXPECT_NE(std::find(g.begin(), g.end(), Chain({6, 2, 2})), g.end());
  EXPECT_THROW(generate_tchains(0, 3), DomainError);
}

TEST(StrictlyLc, Shapes) {
  auto c = classify_strictly_lc(graph_2222({4}));
  EXPECT_EQ(c.type, StrictlyLcType::I_2222);
  EXPECT_TRUE(c.smoothable);
  EXPECT_EQ(*c.kp_invariant, 0);

  c = classify_strictly_lc(graph_star3(5, 3, 3, 3));
  EXPECT_EQ(c.type, StrictlyLcType::II_333);
  EXPECT_FALSE(c.smoothable);
  EXPECT_EQ(*c.kp_invariant, 1);

  c = classify_strictly_lc(chain_graph(Chain({3, 2, 3})));
  EXPECT_EQ(c.type, StrictlyLcType::NotStrictlyLcRational);
  EXPECT_THROW(classify_strictly_lc(graph_2222({2})), NotNegativeDefinite);
}

TEST(StrictlyLc, KpTableAndFlags) {
  for (int b = 2; b <= 8; ++b) {
    auto c = classify_strictly_lc(graph_star3(b, 3, 3, 3));
    EXPECT_EQ(*c.kp_invariant, 1);
    EXPECT_EQ(c.smoothable, b <= 4);
    c = classify_strictly_lc(graph_star3(b, 4, 2, 4));
    EXPECT_EQ(c.type, StrictlyLcType::III_244);
    EXPECT_EQ(*c.kp_invariant, 1);
    EXPECT_EQ(c.smoothable, b <= 3);
    if (b >= 2) {
      c = classify_strictly_lc(graph_star3(b, 6, 3, 2));
      EXPECT_EQ(c.type, StrictlyLcType::IV_236);
      EXPECT_EQ(*c.kp_invariant, 1);
      EXPECT_EQ(c.smoothable, b == 2);
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int top = 3; top <= 8; ++top) {
      std::vector<int> b(n, 3);
      b[0] = top;
      auto c = classify_strictly_lc(graph_2222(b));
      ASSERT_EQ(c.type, StrictlyLcType::I_2222);
      EXPECT_EQ(c.b, b);
      EXPECT_EQ(*c.kp_invariant, 0);
      EXPECT_EQ(c.smoothable, top - 3 <= 3);
    }
  }
}
