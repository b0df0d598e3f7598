#include <doctest.h>

#include "support.hpp"

using namespace etest;

namespace {

std::set<Weight> weights_of(const json& arr) {
  std::set<Weight> out;
  for (const auto& w : arr) out.insert(w.get<Weight>());
  return out;
}

bool spot_level(const std::string& alg, int k) {
  static const std::set<std::pair<std::string, int>> spots = {{"A2", 21}, {"A2", 57}, {"A3", 8},
                                                              {"A3", 86}, {"A4", 7},  {"A4", 115}};
  return spots.count({alg, k}) > 0;
}

}  // namespace

TEST_CASE("step one levels match the golden table") {
  auto golden = load_fixture("step1_levels.json");
  for (const auto& [name, row] : golden.items()) {
    CAPTURE(name);
    auto levels = step1_levels(parse_algebra(name));
    CHECK(levels == row["levels"].get<std::vector<int>>());
    CHECK(static_cast<int>(levels.size()) == row["total"].get<int>());
    CHECK(levels.back() == row["max"].get<int>());
  }
}

TEST_CASE("step two levels match the golden table") {
  auto golden = load_fixture("step2_levels.json");
  for (const auto& [name, row] : golden.items()) {
    CAPTURE(name);
    auto levels = step2_levels(parse_algebra(name));
    CHECK(levels == row["levels"].get<std::vector<int>>());
    CHECK(static_cast<int>(levels.size()) == row["total"].get<int>());
  }
}

TEST_CASE("candidate sets match the golden table") {
  auto golden = load_fixture("candidates.json");
  for (const auto& row : golden) {
    const auto name = row["algebra"].get<std::string>();
    const int k = row["level"].get<int>();
    CAPTURE(name);
    CAPTURE(k);
    auto ctx = level(name, k);
    auto printed = weights_of(row["candidates"]);
    auto strict = as_set(candidate_set(ctx));
    auto wide = as_set(candidate_set(ctx, true));
    CHECK(std::includes(printed.begin(), printed.end(), strict.begin(), strict.end()));
    CHECK(std::includes(wide.begin(), wide.end(), printed.begin(), printed.end()));
    if (spot_level(name, k)) {
      CHECK(strict == printed);
      CHECK(wide == printed);
    }
  }
}

TEST_CASE("survivor tables match the golden table") {
  auto golden = load_fixture("survivors.json");
  auto cat = load_catalog(catalog_path());
  CHECK(golden.size() == cat.size());
  for (const auto& row : golden) {
    const auto name = row["algebra"].get<std::string>();
    const int k = row["level"].get<int>();
    CAPTURE(name);
    CAPTURE(k);
    ModularData md(level(name, k));
    auto t = survivor_table(object_from_catalog(catalog_entry(cat, name, k), md), md);
    std::set<Weight> expected;
    for (const auto& g : row["groups"]) {
      auto theta = g["theta"].get<std::vector<long long>>();
      const double value = g["value"].get<double>();
      for (const auto& w : g["weights"]) {
        auto mu = w.get<Weight>();
        expected.insert(mu);
        const auto* e = t.find(mu);
        REQUIRE_MESSAGE(e != nullptr, format_weight(mu));
        Rational h = md.h(mu);
        CHECK(h - Rational(h.numerator() / h.denominator()) == Rational(theta[0], theta[1]));
        CHECK(std::abs(e->value - value) < 1e-3);
      }
    }
    std::set<Weight> got;
    for (const auto& e : t.entries) got.insert(e.mu);
    CHECK(got == expected);
  }
}
