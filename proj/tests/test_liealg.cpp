#include <doctest.h>

#include "support.hpp"

using namespace etest;

namespace {

const std::vector<std::string> kAlgebras = {"A1", "A2", "A3", "A4", "A9", "B3", "B4", "C2", "C3", "D4",
                                            "D5", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("A1 constants") {
  auto a = parse_algebra("A1");
  CHECK(a->dual_coxeter == 2);
  CHECK(a->dim == 3);
  CHECK(a->weyl_vector_norm == Rational(1, 2));
  CHECK(a->f_g == 2);
}

TEST_CASE("fundamental group exponents") {
  CHECK(parse_algebra("A4")->f_g == 1);
  CHECK(parse_algebra("G2")->f_g == 3);
  CHECK(parse_algebra("A3")->f_g == 2);
}

TEST_CASE("A2 fundamental weight norm") {
  auto a = parse_algebra("A2");
  CHECK(inner_product({1, 0}, {1, 0}, *a) == Rational(2, 3));
  CHECK(inner_product({1, 0}, {0, 1}, *a) == Rational(1, 3));
}

TEST_CASE("contragredient reverses A labels") {
  auto a = parse_algebra("A3");
  CHECK(contragredient({1, 2, 3}, *a) == Weight{3, 2, 1});
  auto e = parse_algebra("E7");
  Weight w{1, 2, 3, 4, 5, 6, 7};
  CHECK(contragredient(w, *e) == w);
}

TEST_CASE("simple current J_a on A series") {
  auto a1 = parse_algebra("A1");
  CHECK(apply_simple_current(a1->simple_currents[a1->a_current(1)], {6}, 10, *a1) == Weight{4});
  auto a2 = parse_algebra("A2");
  CHECK(apply_simple_current(a2->simple_currents[a2->a_current(1)], {0, 0}, 5, *a2) == Weight{5, 0});
}

TEST_CASE("dual Coxeter numbers and dimensions") {
  struct Row {
    const char* name;
    int hv;
    int dim;
  };
  for (auto [name, hv, dim] : std::vector<Row>{{"A4", 5, 24},
                                              {"B3", 5, 21},
                                              {"C3", 4, 21},
                                              {"D5", 8, 45},
                                              {"E6", 12, 78},
                                              {"E7", 18, 133},
                                              {"E8", 30, 248},
                                              {"F4", 9, 52},
                                              {"G2", 4, 14}}) {
    CAPTURE(name);
    auto a = parse_algebra(name);
    CHECK(a->dual_coxeter == hv);
    CHECK(a->dim == dim);
  }
}

TEST_CASE("strange formula holds for every algebra") {
  for (const auto& name : kAlgebras) {
    CAPTURE(name);
    auto a = parse_algebra(name);
    CHECK(a->weyl_vector_norm == Rational(a->dual_coxeter * a->dim, 12));
    CHECK(inner_product(rho_weight(*a), rho_weight(*a), *a) == a->weyl_vector_norm);
    CHECK(static_cast<int>(a->pos_roots.size()) * 2 + a->rank == a->dim);
  }
}

TEST_CASE("A series closed form agrees with the quadratic form") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> lab(0, 12);
  for (int r = 1; r <= 6; ++r) {
    auto a = build_algebra(Series::A, r);
    for (int trial = 0; trial < 200; ++trial) {
      Weight x(r), y(r);
      for (int i = 0; i < r; ++i) x[i] = lab(rng), y[i] = lab(rng);
      CHECK(a_series_inner(x, y) == inner_product(x, y, *a));
    }
  }
}

TEST_CASE("quadratic form is symmetric") {
  for (const auto& name : kAlgebras) {
    auto a = parse_algebra(name);
    for (int i = 0; i < a->rank; ++i)
      for (int j = 0; j < a->rank; ++j) CHECK(a->quad_form[i][j] == a->quad_form[j][i]);
  }
}

TEST_CASE("simple currents permute the level set") {
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{
           {"A1", 7}, {"A2", 5}, {"A3", 4}, {"A4", 3}, {"B3", 3}, {"C3", 3}, {"D4", 3}, {"D5", 2}, {"E6", 3}, {"E7", 2}}) {
    CAPTURE(name);
    CAPTURE(k);
    auto ctx = level(name, k);
    const auto& alg = ctx.algebra();
    auto ws = level_weights(ctx);
    auto all = as_set(ws);
    for (const auto& J : alg.simple_currents) {
      std::set<Weight> image;
      for (const auto& w : ws) {
        auto v = apply_simple_current(J, w, k, alg);
        CHECK(all.count(v) == 1);
        image.insert(v);
      }
      CHECK(image == all);
    }
  }
}

TEST_CASE("simple current group structure") {
  CHECK(parse_algebra("A4")->simple_currents.size() == 5);
  CHECK(parse_algebra("D4")->simple_currents.size() == 4);
  CHECK(parse_algebra("D5")->simple_currents.size() == 4);
  CHECK(parse_algebra("E6")->simple_currents.size() == 3);
  CHECK(parse_algebra("E8")->simple_currents.size() == 1);
  auto a = parse_algebra("A5");
  CHECK(perm_order(a->simple_currents[a->a_current(1)]) == 6);
  for (const auto& J : a->simple_currents) CHECK(compose(J, inverse(J)) == a->simple_currents[0]);
}

TEST_CASE("bad specs are rejected") {
  CHECK_THROWS_AS(parse_algebra("Q3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra("B2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra("E5"), std::invalid_argument);
  CHECK_THROWS(parse_algebra(""));
}
