#include <doctest.h>

#include <boost/math/special_functions/binomial.hpp>

#include "support.hpp"

using namespace etest;

TEST_CASE("level set sizes") {
  CHECK(level_count(level("A1", 10)) == 11);
  CHECK(level_weights(level("A1", 10)).size() == 11);
  CHECK(level_weights(level("A2", 2)).size() == 6);
  CHECK(level_count(level("A4", 115)) == static_cast<long long>(boost::math::binomial_coefficient<double>(119, 4)));
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{{"B3", 4}, {"G2", 5}, {"E6", 3}, {"F4", 3}}) {
    auto ctx = level(name, k);
    CHECK(static_cast<long long>(level_weights(ctx).size()) == level_count(ctx));
  }
}

TEST_CASE("conformal weights") {
  CHECK(conformal_weight({6}, level("A1", 10)) == Rational(1));
  CHECK(conformal_weight({0, 6}, level("A2", 21)) == Rational(3, 4));
  CHECK(conformal_weight({10, 10}, level("A2", 57)) == Rational(2));
  CHECK(conformal_weight({0}, level("A1", 3)) == Rational(0));
  auto ctx = level("A3", 6);
  for (const auto& w : level_weights(ctx)) CHECK(conformal_weight_shifted(shift(w), ctx) == conformal_weight(w, ctx));
}

TEST_CASE("twist triviality is exact") {
  auto ctx = level("A1", 10);
  CHECK(twist_is_trivial({6}, ctx));
  CHECK_FALSE(twist_is_trivial({3}, ctx));
}

TEST_CASE("duality preserves h") {
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{{"A3", 6}, {"A4", 4}, {"D5", 3}, {"E6", 3}}) {
    auto ctx = level(name, k);
    for (const auto& w : level_weights(ctx))
      CHECK(conformal_weight(contragredient(w, ctx.algebra()), ctx) == conformal_weight(w, ctx));
  }
}

TEST_CASE("simple currents shift h by a multiple of 1/|center|") {
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{{"A2", 5}, {"A3", 6}, {"A4", 4}, {"D4", 3}, {"E6", 2}}) {
    auto ctx = level(name, k);
    const auto& alg = ctx.algebra();
    const long long n = static_cast<long long>(alg.simple_currents.size()) * 2;
    for (const auto& J : alg.simple_currents)
      for (const auto& w : level_weights(ctx)) {
        Rational d = conformal_weight(apply_simple_current(J, w, k, alg), ctx) - conformal_weight(w, ctx);
        CHECK((d * Rational(n)).denominator() == 1);
      }
  }
}

TEST_CASE("h window search agrees with filtering the level set") {
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 12; ++k) {
      auto ctx = LevelContext(build_algebra(Series::A, r), k);
      for (auto [lo, hi] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {1, 3}, {2, 5}}) {
        std::set<Weight> expected;
        for (const auto& w : level_weights(ctx)) {
          Rational h = conformal_weight(w, ctx);
          if (h.denominator() == 1 && h >= Rational(lo) && h <= Rational(hi)) expected.insert(w);
        }
        CAPTURE(r);
        CAPTURE(k);
        CHECK(as_set(enumerate_h_window(ctx, lo, hi)) == expected);
      }
    }
}

TEST_CASE("h window examples") {
  CHECK(enumerate_h_window(level("A1", 10), 2, 2).empty());
  CHECK(as_set(enumerate_h_window(level("A2", 57), 2, 2)).count({10, 10}) == 1);
}

TEST_CASE("norm ball emits norms in ascending label order") {
  auto ctx = level("B3", 5);
  std::vector<Weight> seen;
  enumerate_norm_ball(ctx, 10'000, [&](const Weight& w, long long q) {
    CHECK(q == norm_numerator(w, ctx.algebra()));
    seen.push_back(w);
  });
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("orbit expansion") {
  auto ctx = level("A2", 9);
  auto o = expand_orbit({0, 0}, OrbitSpec{3, false, {}}, ctx);
  CHECK(as_set(o.members) == std::set<Weight>{{0, 0}, {9, 0}, {0, 9}});
  CHECK(o.group_tag == "<>_3");

  auto one = expand_orbit({1, 1}, OrbitSpec{1, false, {}}, ctx);
  CHECK(one.members == std::vector<Weight>{{1, 1}});

  auto dih = expand_orbit({0, 6}, OrbitSpec{3, true, {}}, level("A2", 21));
  CHECK(dih.members.size() == 6);
  CHECK(dih.group_tag == "<>_3c");
  CHECK(as_set(dih.members).count({6, 0}) == 1);
  CHECK(as_set(dih.members).count({4, 7}) == 0);
}

TEST_CASE("weight text round trip") {
  CHECK(parse_weight("(0110)", 4) == Weight{0, 1, 1, 0});
  CHECK(parse_weight("(0,40,3)", 3) == Weight{0, 40, 3});
  CHECK(parse_weight("(aa)", 2) == Weight{10, 10});
  CHECK(parse_weight("(AA)", 2) == Weight{10, 10});
  CHECK(format_weight({0, 40, 3}) == "(0,40,3)");
  CHECK(format_weight({1, 2, 1}) == "(121)");
  for (const auto& w : std::vector<Weight>{{3}, {0, 57}, {1, 0, 1, 4}, {12, 0, 3}})
    CHECK(parse_weight(format_weight(w), static_cast<int>(w.size())) == w);
  CHECK_THROWS(parse_weight("(12)", 3));
}

TEST_CASE("simple current weights") {
  auto ctx = level("A3", 8);
  CHECK(is_simple_current_weight({0, 0, 0}, ctx));
  CHECK(is_simple_current_weight({8, 0, 0}, ctx));
  CHECK(is_simple_current_weight({0, 8, 0}, ctx));
  CHECK_FALSE(is_simple_current_weight({1, 2, 1}, ctx));
}
