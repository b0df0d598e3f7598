#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etale/galois.hpp"
#include "etale/modular.hpp"

namespace etale {

struct ThresholdReport {
  int k = 0;
  int kappa = 0;
  long long p = 0;
  long long l_max = 0;
  bool survives_step1 = false;
  bool lie_type = false;
};

long long smallest_prime_coprime_to(long long n);
ThresholdReport l_max(const LevelContext& ctx);
long long kappa_max(const AlgebraData& alg);
std::vector<ThresholdReport> step1_reports(const AlgebraPtr& alg);
std::vector<int> step1_levels(const AlgebraPtr& alg);

struct Step2Report {
  int k = 0;
  long long l_max = 0;
  bool lie_type = false;
  bool survives = false;
  // non-simple-current candidates that keep the level alive
  std::vector<Weight> witnesses;
  // weights with integral h in [1, L_max]: count, duality orbits, and duality+current orbits
  long long window_weights = 0;
  long long window_c_orbits = 0;
  long long window_cj_orbits = 0;
};

Step2Report step2_check(const LevelContext& ctx);
std::vector<int> step2_levels(const AlgebraPtr& alg);

// (lambda + lambda* - 2 rho | lambda + lambda*) < 2 kappa h_bound, lambda shifted
bool ocneanu_simple(const Weight& lam_shifted, const Rational& h_bound, const LevelContext& ctx);

// A-series: orders d of subgroups <J_a^{r'/d}> with trivial twist
std::vector<int> sc_admissible_divisors(const LevelContext& ctx);
// twist-trivial subgroups of the simple-current group, largest first
std::vector<std::vector<int>> twist_trivial_subgroups(const LevelContext& ctx);

struct EtaleObject {
  LevelContext ctx;
  std::vector<int> j_group;
  std::map<Weight, long long> coeffs;  // unshifted support with multiplicities

  long long coefficient(const Weight& lam) const;
  bool exotic() const;
  Rational h_min() const;  // smallest h over the support without 1; -1 when the support is {1}
  std::vector<std::pair<Orbit, long long>> orbit_terms() const;
  std::string describe() const;
};

EtaleObject make_etale(const LevelContext& ctx, const std::vector<int>& j_group, const std::map<Weight, long long>& coeffs);

struct OrbitShape {
  Weight rep;
  std::vector<Weight> members;
  long long lower = 0;
  long long upper = 0;
};

struct Shape {
  std::vector<int> j_group;
  std::vector<Weight> currents;  // J_A applied to 1
  std::vector<OrbitShape> orbits;
};

Shape etale_shape(const ModularData& md, const std::vector<int>& j_group, const std::vector<Weight>& candidates);

struct ProbeTerm {
  Weight mu;
  long long x = 1;
};

struct BoundUpdate {
  Weight orbit_rep;
  long long lower = 0;
  long long upper = 0;
};

struct ProbeStep {
  std::vector<ProbeTerm> probes;
  std::vector<BoundUpdate> updates;
  // per orbit |orbit| * sum_mu x_mu Re S_{lambda,mu}, then the constant |J_A| sum x_mu S_{1,mu}
  std::vector<double> coefficients;
  double constant = 0;
  // unscaled sums: sum x_mu S_{1,mu} and per orbit sum x_mu Re S_{lambda,mu}
  double s_one = 0;
  std::vector<double> re_s;
};

// one application of the probe inequality to the current bounds; returns updates that tightened
ProbeStep probe_bounds(const Shape& shape, const std::vector<ProbeTerm>& probes, const ModularData& md);
void apply_step(Shape& shape, const ProbeStep& step);

enum class VerdictKind { NoExotic, Identified, Unresolved };
std::string verdict_name(VerdictKind v);

struct ElimOptions {
  size_t probe_budget = 5000;
  size_t pair_pool = 300;
  long long box_budget = 50'000'000;
};

struct ElimResult {
  VerdictKind kind = VerdictKind::Unresolved;
  Shape shape;  // final bounds
  std::vector<ProbeStep> certificate;
  std::vector<EtaleObject> objects;
  long long box_nodes = 0;
  bool box_used = false;
  std::string note;
};

ElimResult eliminate_level(const ModularData& md, const std::vector<int>& j_group, const std::vector<Weight>& candidates,
                           const ElimOptions& opts = {});

struct NecessaryReport {
  bool ok = true;
  std::vector<std::string> failures;
};

NecessaryReport check_etale_necessary(const EtaleObject& a, const ModularData& md);

struct ClassifyResult {
  LevelContext ctx;
  ThresholdReport thresholds;
  Step2Report step2;
  std::vector<Weight> candidates;
  std::vector<std::pair<std::vector<int>, ElimResult>> runs;
  VerdictKind verdict = VerdictKind::NoExotic;
  std::vector<EtaleObject> objects;
};

// runs the twist-trivial subgroups largest first, stopping once the largest gives no exotic object
ClassifyResult classify_level(const ModularData& md, const ElimOptions& opts = {});
// runs exactly the given subgroups, in order
ClassifyResult classify_level(const ModularData& md, const std::vector<std::vector<int>>& groups, const ElimOptions& opts = {});

}  // namespace etale
