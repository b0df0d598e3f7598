#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace etest;

namespace {

std::vector<long long> units(long long n) {
  std::vector<long long> out;
  for (long long l = 1; l < n; ++l)
    if (std::gcd(l, n) == 1) out.push_back(l);
  return out;
}

long long inverse_mod(long long a, long long n) {
  for (long long b = 1; b < n; ++b)
    if ((a * b) % n == 1) return b;
  throw std::runtime_error("no inverse");
}

}  // namespace

TEST_CASE("identity automorphism has trivial parity") {
  auto ctx = level("A3", 6);
  for (const auto& w : level_weights(ctx)) {
    CHECK(parity(1, shift(w), ctx) == 1);
    auto g = galois_act(1, shift(w), ctx);
    CHECK(g.weight == shift(w));
    CHECK(g.sign == 1);
  }
}

TEST_CASE("known candidates are totally positive") {
  auto a1 = level("A1", 10);
  CHECK(a1.galois_modulus == 24);
  for (long long l : units(24)) CHECK(parity(l, shift({6}), a1) == 1);
  auto a2 = level("A2", 57);
  CHECK(a2.galois_modulus == 180);
  GaloisContext gal(a2);
  for (long long l : units(180)) CHECK(gal.parity(l, shift({10, 10})) == 1);
  CHECK_THROWS_AS(gal.parity(3, shift({10, 10})), std::invalid_argument);
}

TEST_CASE("Galois associates at A3 6") {
  auto ctx = level("A3", 6);
  CHECK(unshift(galois_act(7, shift({0, 0, 2}), ctx).weight) == Weight{3, 0, 1});
  CHECK(unshift(galois_act(7, shift({2, 1, 2}), ctx).weight) == Weight{0, 3, 0});
}

TEST_CASE("Galois action is a bijection inverted by the inverse unit") {
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{{"A2", 7}, {"A3", 5}, {"B3", 3}, {"G2", 4}, {"D4", 3}}) {
    CAPTURE(name);
    auto ctx = level(name, k);
    auto ws = level_weights(ctx);
    auto all = as_set(ws);
    for (long long l : units(ctx.galois_modulus)) {
      long long inv = inverse_mod(l, ctx.galois_modulus);
      std::set<Weight> image;
      for (const auto& w : ws) {
        auto g = galois_act(l, shift(w), ctx);
        image.insert(unshift(g.weight));
        CHECK(galois_act(inv, g.weight, ctx).weight == shift(w));
        CHECK(g.sign * galois_act(l, rho_weight(ctx.algebra()), ctx).sign == parity(l, shift(w), ctx));
      }
      CHECK(image == all);
    }
  }
}

TEST_CASE("parity is invariant under currents and duality") {
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{{"A2", 6}, {"A3", 6}, {"A4", 4}, {"D5", 2}, {"E6", 2}}) {
    auto ctx = level(name, k);
    const auto& alg = ctx.algebra();
    GaloisContext gal(ctx);
    for (const auto& w : level_weights(ctx))
      for (long long l : units(ctx.galois_modulus)) {
        const int p = gal.parity(l, shift(w));
        CHECK(gal.parity(l, shift(contragredient(w, alg))) == p);
        for (const auto& J : alg.simple_currents) CHECK(gal.parity(l, shift(apply_simple_current(J, w, k, alg))) == p);
      }
  }
}

TEST_CASE("A1 candidate sets") {
  for (int k = 1; k <= 60; ++k) {
    if (k % 4 == 0 || k == 10) continue;
    CAPTURE(k);
    CHECK(candidate_set(level("A1", k)) == std::vector<Weight>{{0}});
  }
  CHECK(as_set(candidate_set(level("A1", 28))) == std::set<Weight>{{0}, {28}, {10}, {18}});
  CHECK(as_set(candidate_set(level("A1", 10))) == std::set<Weight>{{0}, {6}});
}

TEST_CASE("candidate set examples") {
  CHECK(as_set(candidate_set(level("A2", 5))) == std::set<Weight>{{0, 0}, {2, 2}});

  auto a3 = level("A3", 8);
  CHECK(as_set(candidate_set(a3)) == as_set(expand_orbits({{0, 0, 0}, {1, 2, 1}}, OrbitSpec{4, false, {}}, a3)));

  auto a4 = level("A4", 7);
  auto expect = parse_set({"(0000)", "(0330)", "(2002)", "(2112)"}, 4);
  for (const auto& w : expand_orbits({{0, 1, 6, 0}, {0, 4, 0, 3}, {1, 0, 1, 4}}, OrbitSpec{1, true, {}}, a4)) expect.insert(w);
  CHECK(as_set(candidate_set(a4)) == expect);
}

TEST_CASE("candidate predicate") {
  auto ctx = level("A1", 10);
  CHECK(is_candidate({0}, ctx, false));
  CHECK(is_candidate({6}, ctx, true));
  CHECK_FALSE(is_candidate({6}, ctx, false));
  CHECK_FALSE(is_candidate({3}, ctx, true));
  CHECK(lie_type_level(ctx.algebra(), 10));
  CHECK_FALSE(lie_type_level(ctx.algebra(), 11));
  CHECK(lie_type_levels(*parse_algebra("A4")) == std::set<int>{3, 5, 7});
  CHECK(lie_type_levels(*parse_algebra("E6")).empty());
}

TEST_CASE("candidate sets are closed under duality and admissible currents") {
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{{"A2", 9}, {"A2", 21}, {"A3", 8}, {"A3", 12}, {"A4", 5}}) {
    CAPTURE(name);
    CAPTURE(k);
    auto ctx = level(name, k);
    const auto& alg = ctx.algebra();
    auto cands = candidate_set(ctx);
    auto cs = as_set(cands);
    const int rp = alg.rank + 1;
    for (int d : sc_admissible_divisors(ctx)) {
      const auto& J = alg.simple_currents[alg.a_current(rp / d)];
      for (const auto& w : cands) {
        CHECK(cs.count(contragredient(w, alg)) == 1);
        CHECK(cs.count(apply_simple_current(J, w, k, alg)) == 1);
      }
    }
  }
}
