#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "etale/cache.hpp"
#include "etale/weights.hpp"

namespace etale {

using cplx = std::complex<double>;

enum class SMethod { Auto, Determinant, WeylSum, Pointed, ClosedB };

std::string method_name(SMethod m);
long long weyl_group_order(const AlgebraData& alg);

struct WeightHash {
  size_t operator()(const Weight& w) const noexcept;
};

// Modular data of C(g,k). Public weights are unshifted unless a name says otherwise.
class ModularData {
 public:
  explicit ModularData(LevelContext ctx, SMethod method = SMethod::Auto, std::optional<RowCache> cache = std::nullopt);

  const LevelContext& context() const { return ctx_; }
  const AlgebraData& algebra() const { return *ctx_.alg; }
  SMethod method() const { return method_; }

  cplx s(const Weight& lam, const Weight& mu) const;
  cplx s_shifted(const Weight& lam, const Weight& mu) const;

  const std::vector<Weight>& simples() const;
  size_t size() const { return simples().size(); }
  long long index_of(const Weight& lam) const;
  std::vector<cplx> row(const Weight& lam) const;
  const Eigen::MatrixXcd& matrix() const;

  Rational h(const Weight& lam) const { return conformal_weight(lam, ctx_); }
  // h - c/24 reduced to [0,1)
  Rational t_exponent(const Weight& lam) const;
  cplx theta(const Weight& lam) const;
  cplx t_entry(const Weight& lam) const;
  double qdim(const Weight& lam) const;

  // exact grading: phi_J(lambda) = exp(2 pi i * phi_exponent)
  Rational phi_exponent(int current, const Weight& lam) const;
  cplx phi(int current, const Weight& lam) const;

  long long fusion(const Weight& lam, const Weight& mu, const Weight& nu) const;
  std::vector<std::pair<Weight, long long>> fusion_product(const Weight& lam, const Weight& mu) const;
  Eigen::MatrixXcd fusion_matrix_raw(const Weight& lam) const;

  std::vector<Weight> centralizer_currents(const std::vector<int>& currents, const std::vector<Weight>& pool) const;
  std::vector<Weight> centralizer(const std::vector<Weight>& P, const std::vector<Weight>& pool) const;

  Weight apply_current(int current, const Weight& lam) const;

 private:
  cplx s_determinant(const Weight& lam, const Weight& mu) const;
  cplx s_weyl_raw(const Weight& lam, const Weight& mu) const;
  cplx s_pointed(const Weight& lam, const Weight& mu) const;
  cplx s_closed_b(const Weight& lam, const Weight& mu) const;
  void ensure_weyl_normalization() const;
  const std::vector<std::pair<Weight, int>>& weyl_orbit(const Weight& mu) const;

  LevelContext ctx_;
  SMethod method_;
  std::optional<RowCache> cache_;

  mutable std::mutex mu_;
  mutable std::vector<Weight> simples_;
  mutable bool simples_ready_ = false;
  mutable std::unordered_map<Weight, long long, WeightHash> index_;
  mutable std::unique_ptr<Eigen::MatrixXcd> matrix_;
  mutable std::map<Weight, std::vector<std::pair<Weight, int>>> orbits_;
  mutable std::optional<cplx> weyl_scale_;
};

std::shared_ptr<ModularData> level1_data(const AlgebraPtr& alg_e);

// Weyl orbit of a regular shifted weight, streamed with signs det(w)
void weyl_orbit_stream(const Weight& mu, const AlgebraData& alg, const std::function<void(const Weight&, int)>& emit);

}  // namespace etale
