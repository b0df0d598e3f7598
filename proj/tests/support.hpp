#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "etale/branching.hpp"

namespace etest {

using namespace etale;
using json = nlohmann::json;

inline LevelContext level(const std::string& alg, int k) { return LevelContext(parse_algebra(alg), k); }

inline std::set<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

inline std::set<Weight> parse_set(const std::vector<std::string>& texts, int rank) {
  std::set<Weight> out;
  for (const auto& t : texts) out.insert(parse_weight(t, rank));
  return out;
}

inline json load_fixture(const std::string& name) {
  std::ifstream in(std::string(ETALE_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return json::parse(in);
}

inline std::string catalog_path() { return std::string(ETALE_DATA_DIR) + "/table_2_1.json"; }

inline const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& cat, const std::string& alg, int k) {
  for (const auto& e : cat)
    if (e.algebra == alg && e.level == k) return e;
  throw std::runtime_error("no catalog entry " + alg + " " + std::to_string(k));
}

inline EtaleObject object_from_catalog(const CatalogEntry& e, const ModularData& md) {
  auto b = to_matrix(e);
  for (const auto& row : b.rows)
    if (row.ext_label == "1") {
      const auto& ctx = md.context();
      const auto& alg = ctx.algebra();
      std::vector<int> group;
      for (size_t j = 0; j < alg.simple_currents.size(); ++j)
        if (row.terms.count(apply_simple_current(alg.simple_currents[j], Weight(alg.rank, 0), ctx.k, alg)))
          group.push_back(static_cast<int>(j));
      return make_etale(ctx, group, row.terms);
    }
  throw std::runtime_error("catalog entry without a unit row");
}

// truncated Clebsch-Gordan rule for su(2) at level k, Dynkin labels
inline long long su2_fusion(int a, int b, int c, int k) {
  if ((a + b + c) % 2 != 0) return 0;
  if (c < std::abs(a - b) || c > std::min(a + b, 2 * k - a - b)) return 0;
  return 1;
}

}  // namespace etest
