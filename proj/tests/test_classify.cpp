#include <doctest.h>

#include "support.hpp"

using namespace etest;

namespace {

const OrbitShape& orbit_of(const Shape& s, const Weight& w) {
  for (const auto& o : s.orbits)
    if (std::find(o.members.begin(), o.members.end(), w) != o.members.end()) return o;
  throw std::runtime_error("weight not in shape");
}

std::vector<int> a_group(const LevelContext& ctx, int d) { return subgroup_indices(ctx, OrbitSpec{d, false, {}}); }

}  // namespace

TEST_CASE("level thresholds") {
  auto r = l_max(level("A1", 10));
  CHECK(r.p == 5);
  CHECK(r.l_max == 1);
  CHECK(r.lie_type);
  CHECK(r.survives_step1);
  CHECK(l_max(level("A1", 13)).l_max == 2);
  CHECK(l_max(level("A1", 13)).p == 7);
  CHECK(l_max(level("A2", 207)).l_max == 2);
  CHECK(l_max(level("A2", 207)).p == 11);
  CHECK(smallest_prime_coprime_to(30) == 7);
}

TEST_CASE("largest relevant kappa") {
  CHECK(kappa_max(*parse_algebra("A2")) == 2310);
  CHECK(kappa_max(*parse_algebra("A1")) == 1155);
  CHECK(kappa_max(*parse_algebra("A4")) >= 1050);
}

TEST_CASE("step one levels") {
  CHECK(step1_levels(parse_algebra("A1")) == std::vector<int>{1, 4, 7, 10, 13, 28});
  auto a2 = step1_levels(parse_algebra("A2"));
  CHECK(a2.size() == 11);
  CHECK(a2.back() == 207);
  auto a3 = step1_levels(parse_algebra("A3"));
  CHECK(a3.size() == 60);
  CHECK(a3.back() == 521);
  auto a4 = step1_levels(parse_algebra("A4"));
  CHECK(a4.size() == 69);
  CHECK(a4.back() == 1045);
}

TEST_CASE("step two levels") {
  CHECK(step2_levels(parse_algebra("A1")) == std::vector<int>{10, 28});
  CHECK(step2_levels(parse_algebra("A2")) == std::vector<int>{5, 9, 21, 57});
  CHECK(step2_levels(parse_algebra("A3")) == std::vector<int>{4, 6, 8, 10, 11, 12, 14, 16, 18, 20, 26, 32, 38, 86});
}

TEST_CASE("step two is a subset of step one") {
  for (const char* name : {"A1", "A2", "A3"}) {
    auto alg = parse_algebra(name);
    auto s1 = step1_levels(alg);
    for (int k : step2_levels(alg)) CHECK(std::binary_search(s1.begin(), s1.end(), k));
  }
}

TEST_CASE("step two agrees with the candidate window") {
  for (const char* name : {"A1", "A2", "A3"}) {
    auto alg = parse_algebra(name);
    for (int k : step1_levels(alg)) {
      if (k > 60) continue;
      auto ctx = LevelContext(alg, k);
      auto rep = step2_check(ctx);
      const bool lie = lie_type_level(*alg, k);
      bool witness = false;
      for (const auto& w : candidate_set(ctx, true)) {
        if (is_simple_current_weight(w, ctx)) continue;
        Rational h = conformal_weight(w, ctx);
        if (lie || (h >= Rational(1) && h <= Rational(rep.l_max))) witness = true;
      }
      CAPTURE(name);
      CAPTURE(k);
      CHECK(rep.survives == witness);
    }
  }
}

TEST_CASE("Ocneanu simplicity test") {
  auto ctx = level("A3", 9);
  const auto& alg = ctx.algebra();
  auto rho = rho_weight(alg);
  CHECK(ocneanu_simple(rho, Rational(1, 1000), ctx));
  for (int l = 2; l <= 4; ++l) {
    Weight lr(alg.rank, l);
    Rational lhs = Rational(4 * (l * l - l)) * alg.weyl_vector_norm;
    Rational h = lhs / Rational(2 * ctx.kappa);
    CHECK_FALSE(ocneanu_simple(lr, h, ctx));
    CHECK(ocneanu_simple(lr, h + Rational(1, 1000), ctx));
  }
  auto a1 = level("A1", 10);
  Weight s{7};
  Weight sum{14}, diff{12};
  Rational lhs = inner_product(diff, sum, a1.algebra());
  CHECK(lhs == Rational(84));
  CHECK_FALSE(ocneanu_simple(s, Rational(1), a1));
  CHECK(ocneanu_simple(s, Rational(84, 24) + Rational(1, 100), a1));
}

TEST_CASE("admissible current subgroups") {
  CHECK(sc_admissible_divisors(level("A3", 8)) == std::vector<int>{1, 2, 4});
  CHECK(sc_admissible_divisors(level("A1", 10)) == std::vector<int>{1});
  CHECK(sc_admissible_divisors(level("A1", 16)) == std::vector<int>{1, 2});
  CHECK(sc_admissible_divisors(level("A2", 57)) == std::vector<int>{1, 3});
  for (int k = 1; k <= 20; ++k) {
    auto d = sc_admissible_divisors(level("A4", k));
    CHECK(d.front() == 1);
  }
}

TEST_CASE("probe bounds at A2 57") {
  auto ctx = level("A2", 57);
  ModularData md(ctx);
  auto shape = etale_shape(md, a_group(ctx, 3), candidate_set(ctx));
  CHECK(shape.orbits.size() == 3);
  auto step = probe_bounds(shape, {{{1, 4}, 1}}, md);
  apply_step(shape, step);
  for (const auto& o : shape.orbits) CHECK(o.upper == 0);
}

TEST_CASE("probe bounds at A1 10") {
  auto ctx = level("A1", 10);
  ModularData md(ctx);
  auto shape = etale_shape(md, {0}, candidate_set(ctx));
  auto step = probe_bounds(shape, {{{1}, 1}}, md);
  apply_step(shape, step);
  CHECK(orbit_of(shape, {6}).upper == 1);
}

TEST_CASE("probe bounds at A4 11") {
  auto ctx = level("A4", 11);
  ModularData md(ctx);
  auto shape = etale_shape(md, {0}, candidate_set(ctx));
  CHECK(shape.orbits.size() == 7);
  apply_step(shape, probe_bounds(shape, {{{0, 0, 1, 0}, 3}, {{1, 3, 1, 4}, 1}}, md));
  int zero = 0;
  for (const auto& o : shape.orbits) zero += o.upper == 0;
  CHECK(zero == 4);
  apply_step(shape, probe_bounds(shape, {{{0, 4, 0, 1}, 1}}, md));
  for (const auto& o : shape.orbits) CHECK(o.upper == 0);
}

TEST_CASE("probes outside the centralizer are rejected") {
  auto ctx = level("A2", 57);
  ModularData md(ctx);
  auto shape = etale_shape(md, a_group(ctx, 3), candidate_set(ctx));
  CHECK_THROWS(probe_bounds(shape, {{{1, 0}, 1}}, md));
}

TEST_CASE("elimination certificates") {
  auto ctx = level("A2", 57);
  ModularData md(ctx);
  auto r = eliminate_level(md, a_group(ctx, 3), candidate_set(ctx));
  CHECK(r.kind == VerdictKind::NoExotic);
  REQUIRE(r.certificate.size() >= 1);
  CHECK(r.certificate.front().probes.front().mu == Weight{1, 4});

  // the certificate replays on a fresh shape
  auto shape = etale_shape(md, a_group(ctx, 3), candidate_set(ctx));
  for (const auto& step : r.certificate) apply_step(shape, probe_bounds(shape, step.probes, md));
  for (const auto& o : shape.orbits) CHECK(o.upper == 0);
}

TEST_CASE("A3 11 is eliminated, also by the probe (002) alone") {
  auto ctx = level("A3", 11);
  ModularData md(ctx);
  auto cands = candidate_set(ctx);
  auto r = eliminate_level(md, {0}, cands);
  CHECK(r.kind == VerdictKind::NoExotic);
  auto shape = etale_shape(md, {0}, cands);
  apply_step(shape, probe_bounds(shape, {{{0, 0, 2}, 1}}, md));
  for (const auto& o : shape.orbits) CHECK(o.upper == 0);
}

TEST_CASE("A4 7 identifies the exotic algebra") {
  auto ctx = level("A4", 7);
  ModularData md(ctx);
  auto r = eliminate_level(md, {0}, candidate_set(ctx));
  CHECK(r.kind == VerdictKind::Identified);
  REQUIRE(r.objects.size() == 1);
  std::map<Weight, long long> expect;
  for (const char* w : {"(0000)", "(0330)", "(2002)", "(2112)", "(0403)", "(3040)"}) expect[parse_weight(w, 4)] = 1;
  CHECK(r.objects.front().coeffs == expect);
  CHECK(check_etale_necessary(r.objects.front(), md).ok);
}

TEST_CASE("classification verdicts") {
  CHECK(classify_level(ModularData(level("A2", 57))).verdict == VerdictKind::NoExotic);
  auto r = classify_level(ModularData(level("A2", 9)));
  CHECK(r.verdict == VerdictKind::Identified);
  for (const auto& obj : r.objects) CHECK(obj.exotic());
  auto a1 = classify_level(ModularData(level("A1", 10)));
  REQUIRE(a1.objects.size() == 1);
  CHECK(a1.objects.front().coeffs == std::map<Weight, long long>{{{0}, 1}, {{6}, 1}});
}

TEST_CASE("necessary conditions") {
  auto cat = load_catalog(catalog_path());
  for (const auto& e : cat) {
    CAPTURE(e.algebra);
    CAPTURE(e.level);
    ModularData md(level(e.algebra, e.level));
    auto rep = check_etale_necessary(object_from_catalog(e, md), md);
    CHECK(rep.ok);
  }

  auto ctx = level("A4", 5);
  ModularData md(ctx);
  auto trial = make_etale(ctx, {0}, {{{0, 0, 0, 0}, 1}, {{0, 2, 2, 0}, 1}});
  auto rep = check_etale_necessary(trial, md);
  CHECK_FALSE(rep.ok);
  bool at_0001 = false;
  for (const auto& f : rep.failures) at_0001 |= f.find("(0001)") != std::string::npos;
  CHECK(at_0001);

  auto unit = make_etale(ctx, {0}, {{{0, 0, 0, 0}, 1}});
  CHECK(check_etale_necessary(unit, md).ok);
  CHECK_FALSE(unit.exotic());
}

TEST_CASE("etale object accessors") {
  auto ctx = level("A2", 21);
  auto a = make_etale(ctx, {0}, {{{0, 0}, 1}, {{4, 4}, 1}});
  CHECK(a.coefficient({4, 4}) == 1);
  CHECK(a.coefficient({1, 1}) == 0);
  CHECK(a.h_min() == conformal_weight({4, 4}, ctx));
  CHECK_THROWS_AS(make_etale(ctx, {0}, {{{30, 0}, 1}}), std::invalid_argument);
}
