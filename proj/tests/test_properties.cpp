#include <doctest.h>

#include "criteria.hpp"
#include "support.hpp"

using namespace etest;

namespace {

void check_level(const ModularData& md) {
  const auto& S = md.matrix();
  const auto n = S.rows();
  const auto& sim = md.simples();
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) T(i, i) = md.t_entry(sim[static_cast<size_t>(i)]);
  CHECK((S * S.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((S - S.transpose()).cwiseAbs().maxCoeff() < 1e-9);
  Eigen::MatrixXcd S2 = S * S;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const bool dual = contragredient(sim[static_cast<size_t>(i)], md.algebra()) == sim[static_cast<size_t>(j)];
      CHECK(std::abs(S2(i, j) - (dual ? 1.0 : 0.0)) < 1e-6);
    }
  Eigen::MatrixXcd ST = S * T;
  CHECK((ST * ST * ST - S2).cwiseAbs().maxCoeff() < 1e-8);
  for (const auto& l : sim) {
    auto N = md.fusion_matrix_raw(l);
    for (Eigen::Index i = 0; i < N.size(); ++i) {
      const cplx v = N.data()[i];
      CHECK(std::abs(v.real() - std::round(v.real())) < 1e-6);
      CHECK(std::abs(v.imag()) < 1e-6);
      CHECK(std::round(v.real()) >= 0);
    }
  }
}

}  // namespace

TEST_CASE("modular data properties for A_r, r <= 3, k <= 8") {
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 8; ++k) {
      CAPTURE(r);
      CAPTURE(k);
      check_level(ModularData(LevelContext(build_algebra(Series::A, r), k)));
    }
}

TEST_CASE("modular data properties for A4, k <= 5") {
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    check_level(ModularData(level("A4", k)));
  }
}

TEST_CASE("A1 fusion against Clebsch-Gordan, k <= 8") {
  for (int k = 1; k <= 8; ++k) {
    ModularData md(level("A1", k));
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) CHECK(md.fusion({a}, {b}, {c}) == su2_fusion(a, b, c, k));
  }
}

TEST_CASE("Galois rule on random triples") {
  auto o = criterion10();
  INFO(o.detail);
  CHECK(o.pass);
}

TEST_CASE("Galois rule exhaustively at A2 7") {
  ModularData md(level("A2", 7));
  const auto& ctx = md.context();
  for (long long ell = 1; ell < ctx.galois_modulus; ++ell) {
    if (std::gcd(ell, ctx.galois_modulus) != 1) continue;
    for (const auto& lam : md.simples()) {
      auto gl = galois_act(ell, shift(lam), ctx);
      for (const auto& mu : md.simples()) {
        auto gm = galois_act(ell, shift(mu), ctx);
        CHECK(std::abs(static_cast<double>(gl.sign) * md.s(unshift(gl.weight), mu) -
                       static_cast<double>(gm.sign) * md.s(lam, unshift(gm.weight))) < 1e-7);
      }
    }
  }
}

TEST_CASE("modular invariants at A1") {
  auto o = criterion11();
  INFO(o.detail);
  CHECK(o.pass);
}

TEST_CASE("simple current invariants beyond A1") {
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{{"A2", 6}, {"A3", 4}, {"A3", 8}, {"A4", 5}}) {
    ModularData md(level(name, k));
    for (int d : simple_current_invariant_divisors(md.context())) {
      CAPTURE(name);
      CAPTURE(d);
      auto z = simple_current_invariant(md, d);
      CHECK(z[0][0] == 1);
      CHECK(check_modular_invariant(z, md));
    }
  }
}
