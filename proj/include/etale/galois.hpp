#pragma once

#include <set>
#include <utility>
#include <vector>

#include "etale/weights.hpp"

namespace etale {

// Parity evaluation for all Galois automorphisms of one level.
class GaloisContext {
 public:
  explicit GaloisContext(const LevelContext& ctx);

  const LevelContext& context() const { return ctx_; }
  // one representative per distinct sine-sign pattern, each coprime to 2 * pairing_den * N * kappa
  const std::vector<long long>& ell_lifts() const { return lifts_; }
  long long lift(long long ell) const;

  // epsilon_ell(lambda) * epsilon_ell(1), lambda shifted
  int parity(long long ell, const Weight& lam_shifted) const;
  bool totally_positive(const Weight& lam_unshifted) const;

 private:
  int sign_product(long long ell, const std::vector<long long>& pair_vals) const;
  std::vector<long long> pairings(const Weight& lam_shifted) const;

  LevelContext ctx_;
  long long period_;  // 2 * pairing_den * kappa
  std::vector<long long> lifts_;
  std::vector<int> rho_sign_;
};

int parity(long long ell, const Weight& lam_shifted, const LevelContext& ctx);

struct GaloisImage {
  Weight weight;  // shifted
  int sign;       // det of the finite Weyl element
};

GaloisImage galois_act(long long ell, const Weight& lam_shifted, const LevelContext& ctx);

bool lie_type_level(const AlgebraData& alg, int k);
std::set<int> lie_type_levels(const AlgebraData& alg);
void set_lie_type_levels(const std::string& algebra, const std::set<int>& levels);

bool is_candidate(const Weight& lam, const LevelContext& ctx, bool lie_type);
bool is_candidate(const Weight& lam, const GaloisContext& gal, bool lie_type);
std::vector<Weight> candidate_set(const LevelContext& ctx, bool lie_type, long long budget = 50'000'000);
std::vector<Weight> candidate_set(const LevelContext& ctx);

}  // namespace etale
