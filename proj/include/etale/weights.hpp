#pragma once

#include <functional>
#include <string>
#include <vector>

#include "etale/liealg.hpp"

namespace etale {

struct LevelContext {
  AlgebraPtr alg;
  int k = 0;
  int kappa = 0;
  Rational c;
  long long galois_modulus = 0;

  LevelContext() = default;
  LevelContext(AlgebraPtr a, int level);
  const AlgebraData& algebra() const { return *alg; }
  int rank() const { return alg->rank; }
};

// Q(lambda) = quad_den * (lambda|lambda+2rho), unshifted lambda
long long norm_numerator(const Weight& lam, const AlgebraData& alg);

Rational conformal_weight(const Weight& lam, const LevelContext& ctx);
Rational conformal_weight_shifted(const Weight& lam, const LevelContext& ctx);
bool twist_is_trivial(const Weight& lam, const LevelContext& ctx);

bool is_level_weight(const Weight& lam, const LevelContext& ctx);
long long level_count(const LevelContext& ctx);

// lexicographic in (lambda_1..lambda_r); the callback returns false to stop
void enumerate_level(const LevelContext& ctx, const std::function<bool(const Weight&)>& emit);
std::vector<Weight> level_weights(const LevelContext& ctx, long long budget = 50'000'000);

// all weights with norm_numerator <= qmax, lexicographic
void enumerate_norm_ball(const LevelContext& ctx, long long qmax, const std::function<void(const Weight&, long long)>& emit);
std::vector<Weight> enumerate_h_window(const LevelContext& ctx, long long h_min, long long h_max);

struct OrbitSpec {
  int d = 1;              // subgroup of order d generated by J_a^{r'/d}; for non-A series d counts group elements used
  bool with_duality = false;
  std::vector<int> currents;  // explicit group element indices; overrides d when nonempty
};

struct Orbit {
  Weight representative;
  std::vector<Weight> members;
  std::string group_tag;
};

std::vector<int> subgroup_indices(const LevelContext& ctx, const OrbitSpec& spec);
Orbit expand_orbit(const Weight& rep, const OrbitSpec& spec, const LevelContext& ctx);
std::vector<Weight> expand_orbits(const std::vector<Weight>& reps, const OrbitSpec& spec, const LevelContext& ctx);

std::string format_weight(const Weight& lam);
Weight parse_weight(const std::string& text, int rank);
bool is_simple_current_weight(const Weight& lam, const LevelContext& ctx);

}  // namespace etale
