#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "etale/branching.hpp"

namespace etale {

using json = nlohmann::json;

json weight_json(const Weight& w);
json rational_json(const Rational& q);  // [numerator, denominator]

json thresholds_json(const AlgebraPtr& alg);
json step2_json(const Step2Report& r);
json candidates_json(const LevelContext& ctx, bool include_h1);
json etale_json(const EtaleObject& a);
json certificate_json(const ModularData& md, const std::vector<int>& j_group, const ElimResult& r);
// top level carries the first run's certificate fields; "runs" lists every subgroup tried
json classify_json(const ModularData& md, const ClassifyResult& r);
json survivors_json(const SurvivorTable& t, const std::vector<bool>& flags, const ModularData& md);
json branching_json(const BranchingMatrix& b);
json verify_json(const VerifyReport& r);
// {entries:[{algebra, level, target, verify}], ok}; malformed entries are reported, not thrown
json verify_catalog_json(const std::vector<CatalogEntry>& entries, const std::optional<RowCache>& cache = std::nullopt);

enum class JGroupPolicy { Auto, Full, Trivial, Order };

struct JGroupChoice {
  JGroupPolicy policy = JGroupPolicy::Auto;
  int d = 1;
};

// "auto", "full", "trivial" or a subgroup order
JGroupChoice parse_jgroup(const std::string& text);
// nullopt means the automatic largest-first schedule
std::optional<std::vector<std::vector<int>>> resolve_jgroups(const LevelContext& ctx, const JGroupChoice& choice);
ClassifyResult run_classify(const ModularData& md, const JGroupChoice& choice, const ElimOptions& opts);

// simple algebras X of rank <= 14 with c(X, 1) = c
std::vector<AlgebraPtr> level1_targets(const Rational& c);

struct TargetSolve {
  AlgebraPtr target;
  std::optional<SolveResult> result;
  std::vector<VerifyReport> reports;
  std::string error;
};

std::vector<TargetSolve> solve_all_targets(const EtaleObject& a, const ModularData& md);
json target_solve_json(const TargetSolve& t);

struct SweepOptions {
  ElimOptions elim;
  JGroupChoice jgroup;
  bool solve = true;
  int jobs = 1;
  std::optional<RowCache> cache;
};

json sweep_level(const AlgebraPtr& alg, int k, const SweepOptions& opts);
// levels in order; on_level sees each finished level in order
json sweep(const AlgebraPtr& alg, int from, int to, const SweepOptions& opts,
           const std::function<void(const json&)>& on_level = {});

}  // namespace etale
