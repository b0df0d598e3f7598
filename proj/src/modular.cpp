#include "etale/modular.hpp"

#include <cmath>
#include <numbers>

namespace etale {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_root(long long num, long long den) {
  long long r = mod_pos(num, den);
  double a = kTwoPi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(a), std::sin(a)};
}

cplx rational_phase(const Rational& q) { return unit_root(q.numerator(), q.denominator()); }

Rational frac(const Rational& q) {
  long long n = q.numerator(), d = q.denominator();
  return Rational(mod_pos(n, d), d);
}

}  // namespace

std::string method_name(SMethod m) {
  switch (m) {
    case SMethod::Auto: return "auto";
    case SMethod::Determinant: return "determinant";
    case SMethod::WeylSum: return "weyl-sum";
    case SMethod::Pointed: return "pointed";
    case SMethod::ClosedB: return "closed-b";
  }
  return "?";
}

long long weyl_group_order(const AlgebraData& alg) {
  const int r = alg.rank;
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f = (f > (1LL << 62) / i) ? (1LL << 62) : f * i;
    return f;
  };
  switch (alg.series) {
    case Series::A: return fact(r + 1);
    case Series::B:
    case Series::C: return (1LL << r) * fact(r);
    case Series::D: return (1LL << (r - 1)) * fact(r);
    case Series::E: return r == 6 ? 51840LL : (r == 7 ? 2903040LL : 696729600LL);
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

size_t WeightHash::operator()(const Weight& w) const noexcept {
  size_t h = 1469598103934665603ULL;
  for (int x : w) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void weyl_orbit_stream(const Weight& mu, const AlgebraData& alg, const std::function<void(const Weight&, int)>& emit) {
  const int r = alg.rank;
  for (int x : mu)
    if (x <= 0) throw std::invalid_argument("Weyl orbit needs a regular dominant weight");
  struct Frame {
    Weight v;
    int sign;
  };
  std::vector<Frame> stack = {{mu, 1}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    emit(f.v, f.sign);
    for (int j = 0; j < r; ++j) {
      if (f.v[j] <= 0) continue;
      Weight c = f.v;
      for (int i = 0; i < r; ++i) c[i] -= f.v[j] * alg.cartan[i][j];
      int first = -1;
      for (int i = 0; i < r; ++i)
        if (c[i] < 0) {
          first = i;
          break;
        }
      if (first == j) stack.push_back({std::move(c), -f.sign});
    }
  }
}

ModularData::ModularData(LevelContext ctx, SMethod method, std::optional<RowCache> cache)
    : ctx_(std::move(ctx)), method_(method), cache_(std::move(cache)) {
  const auto& alg = algebra();
  if (method_ == SMethod::Auto) {
    if (alg.series == Series::A) {
      method_ = SMethod::Determinant;
    } else if (ctx_.k == 1 && level_count(ctx_) == static_cast<long long>(alg.simple_currents.size())) {
      method_ = SMethod::Pointed;
    } else if (ctx_.k == 1 && alg.series == Series::B) {
      method_ = SMethod::ClosedB;
    } else if (weyl_group_order(alg) <= 100'000'000LL) {
      method_ = SMethod::WeylSum;
    } else {
      throw std::runtime_error("Weyl group of " + alg.name() + " too large and no closed form available");
    }
  }
  if (method_ == SMethod::Determinant && alg.series != Series::A)
    throw std::invalid_argument("determinant formula applies to the A-series only");
  if (method_ == SMethod::Pointed && level_count(ctx_) != static_cast<long long>(alg.simple_currents.size()))
    throw std::invalid_argument("category is not pointed");
  if (method_ == SMethod::ClosedB && !(alg.series == Series::B && ctx_.k == 1))
    throw std::invalid_argument("closed B form applies to B_r level 1 only");
}

const std::vector<Weight>& ModularData::simples() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!simples_ready_) {
    simples_ = level_weights(ctx_);
    for (size_t i = 0; i < simples_.size(); ++i) index_[simples_[i]] = static_cast<long long>(i);
    simples_ready_ = true;
  }
  return simples_;
}

long long ModularData::index_of(const Weight& lam) const {
  simples();
  auto it = index_.find(lam);
  if (it == index_.end()) throw std::out_of_range("weight " + format_weight(lam) + " is not a simple at this level");
  return it->second;
}

cplx ModularData::s(const Weight& lam, const Weight& mu) const { return s_shifted(shift(lam), shift(mu)); }

cplx ModularData::s_shifted(const Weight& lam, const Weight& mu) const {
  switch (method_) {
    case SMethod::Determinant: return s_determinant(lam, mu);
    case SMethod::WeylSum:
      ensure_weyl_normalization();
      return *weyl_scale_ * s_weyl_raw(lam, mu);
    case SMethod::Pointed: return s_pointed(unshift(lam), unshift(mu));
    case SMethod::ClosedB: return s_closed_b(unshift(lam), unshift(mu));
    default: break;
  }
  throw std::logic_error("unresolved S method");
}

cplx ModularData::s_determinant(const Weight& lam, const Weight& mu) const {
  const int r = ctx_.rank();
  const int rp = r + 1;
  const long long kap = ctx_.kappa;
  Weight a = partial_sums(lam), b = partial_sums(mu);
  a.push_back(0);
  b.push_back(0);
  Eigen::MatrixXcd m(rp, rp);
  for (int i = 0; i < rp; ++i)
    for (int j = 0; j < rp; ++j) m(i, j) = unit_root(-static_cast<long long>(a[i]) * b[j], kap);
  cplx det = m.partialPivLu().determinant();
  long long tt = static_cast<long long>(t_index(lam)) * t_index(mu);
  cplx pre = unit_root(static_cast<long long>(r) * rp / 2, 4) * unit_root(tt, kap * rp);
  double norm = std::pow(static_cast<double>(kap), 0.5 * r) * std::sqrt(static_cast<double>(rp));
  return pre * det / norm;
}

const std::vector<std::pair<Weight, int>>& ModularData::weyl_orbit(const Weight& mu) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = orbits_.find(mu);
    if (it != orbits_.end()) return it->second;
  }
  std::vector<std::pair<Weight, int>> orb;
  weyl_orbit_stream(mu, algebra(), [&](const Weight& v, int sgn) { orb.emplace_back(v, sgn); });
  std::lock_guard<std::mutex> lock(mu_);
  return orbits_.emplace(mu, std::move(orb)).first->second;
}

cplx ModularData::s_weyl_raw(const Weight& lam, const Weight& mu) const {
  const auto& alg = algebra();
  const long long den = alg.quad_den * ctx_.kappa;
  cplx sum = 0;
  if (weyl_group_order(alg) <= 2'000'000LL) {
    for (const auto& [v, sgn] : weyl_orbit(mu)) sum += static_cast<double>(sgn) * unit_root(-inner_product_scaled(lam, v, alg), den);
  } else {
    weyl_orbit_stream(mu, alg, [&](const Weight& v, int sgn) {
      sum += static_cast<double>(sgn) * unit_root(-inner_product_scaled(lam, v, alg), den);
    });
  }
  return sum;
}

void ModularData::ensure_weyl_normalization() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (weyl_scale_) return;
  }
  const auto& sim = simples();
  Weight rho = rho_weight(algebra());
  double total = 0;
  for (const auto& m : sim) total += std::norm(s_weyl_raw(rho, shift(m)));
  cplx s11 = s_weyl_raw(rho, rho);
  cplx scale = std::conj(s11) / std::abs(s11) / std::sqrt(total);
  std::lock_guard<std::mutex> lock(mu_);
  weyl_scale_ = scale;
}

cplx ModularData::s_pointed(const Weight& lam, const Weight& mu) const {
  const auto& alg = algebra();
  const int n = static_cast<int>(alg.simple_currents.size());
  Weight zero(alg.rank, 0);
  auto which = [&](const Weight& w) {
    for (int j = 0; j < n; ++j)
      if (apply_current(j, zero) == w) return j;
    throw std::out_of_range("weight " + format_weight(w) + " is not a simple-current");
  };
  int a = which(lam), b = which(mu);
  Weight ab = apply_simple_current(compose(alg.simple_currents[a], alg.simple_currents[b]), zero, ctx_.k, alg);
  Rational e = h(lam) + h(mu) - h(ab);
  return rational_phase(e) / std::sqrt(static_cast<double>(n));
}

cplx ModularData::s_closed_b(const Weight& lam, const Weight& mu) const {
  const int r = ctx_.rank();
  auto kind = [&](const Weight& w) {
    if (w[0] == 1) return 1;
    if (w[r - 1] == 1) return 2;
    return 0;
  };
  static const double t = std::sqrt(2.0);
  static const double tbl[3][3] = {{1, 1, t}, {1, 1, -t}, {t, -t, 0}};
  return tbl[kind(lam)][kind(mu)] / 2.0;
}

std::vector<cplx> ModularData::row(const Weight& lam) const {
  const auto& sim = simples();
  long long idx = index_of(lam);
  if (cache_) {
    if (auto hit = cache_->load(algebra().name(), ctx_.k, idx, sim.size())) return *hit;
  }
  std::vector<cplx> out(sim.size());
  Weight ls = shift(lam);
  for (size_t j = 0; j < sim.size(); ++j) out[j] = s_shifted(ls, shift(sim[j]));
  if (cache_) cache_->store(algebra().name(), ctx_.k, idx, out, method_name(method_), sim.size());
  return out;
}

const Eigen::MatrixXcd& ModularData::matrix() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (matrix_) return *matrix_;
  }
  const auto& sim = simples();
  const size_t n = sim.size();
  auto m = std::make_unique<Eigen::MatrixXcd>(n, n);
  for (size_t i = 0; i < n; ++i) {
    auto r = row(sim[i]);
    for (size_t j = 0; j < n; ++j) (*m)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r[j];
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!matrix_) matrix_ = std::move(m);
  return *matrix_;
}

Rational ModularData::t_exponent(const Weight& lam) const { return frac(h(lam) - ctx_.c / Rational(24)); }

cplx ModularData::theta(const Weight& lam) const { return rational_phase(h(lam)); }

cplx ModularData::t_entry(const Weight& lam) const { return rational_phase(t_exponent(lam)); }

double ModularData::qdim(const Weight& lam) const {
  Weight zero(ctx_.rank(), 0);
  return (s(lam, zero) / s(zero, zero)).real();
}

Rational ModularData::phi_exponent(int current, const Weight& lam) const {
  const auto& alg = algebra();
  int t = alg.sc_target.at(static_cast<size_t>(current));
  if (t == 0) return Rational(0);
  Rational v(0);
  for (int i = 0; i < alg.rank; ++i) v += alg.quad_form[t - 1][i] * lam[i];
  return frac(-v);
}

cplx ModularData::phi(int current, const Weight& lam) const { return rational_phase(phi_exponent(current, lam)); }

Weight ModularData::apply_current(int current, const Weight& lam) const {
  return apply_simple_current(algebra().simple_currents.at(static_cast<size_t>(current)), lam, ctx_.k, algebra());
}

Eigen::MatrixXcd ModularData::fusion_matrix_raw(const Weight& lam) const {
  const auto& S = matrix();
  const Eigen::Index i = index_of(lam);
  Eigen::VectorXcd d = S.row(i).transpose().cwiseQuotient(S.row(0).transpose());
  return S * d.asDiagonal() * S.adjoint();
}

long long ModularData::fusion(const Weight& lam, const Weight& mu, const Weight& nu) const {
  const auto& S = matrix();
  const Eigen::Index a = index_of(lam), b = index_of(mu), c = index_of(nu);
  cplx sum = 0;
  for (Eigen::Index p = 0; p < S.cols(); ++p) sum += S(a, p) * S(b, p) * std::conj(S(c, p)) / S(0, p);
  double v = sum.real();
  long long n = std::llround(v);
  if (std::abs(v - static_cast<double>(n)) > 1e-5 || std::abs(sum.imag()) > 1e-5 || n < 0)
    throw std::runtime_error("Verlinde sum is not a nonnegative integer");
  return n;
}

std::vector<std::pair<Weight, long long>> ModularData::fusion_product(const Weight& lam, const Weight& mu) const {
  const auto& S = matrix();
  const auto& sim = simples();
  const Eigen::Index a = index_of(lam), b = index_of(mu);
  Eigen::VectorXcd w(S.cols());
  for (Eigen::Index p = 0; p < S.cols(); ++p) w(p) = S(a, p) * S(b, p) / S(0, p);
  Eigen::VectorXcd coeff = S.conjugate() * w;
  std::vector<std::pair<Weight, long long>> out;
  for (Eigen::Index c = 0; c < coeff.size(); ++c) {
    double v = coeff(c).real();
    long long n = std::llround(v);
    if (std::abs(v - static_cast<double>(n)) > 1e-5 || n < 0)
      throw std::runtime_error("Verlinde sum is not a nonnegative integer");
    if (n > 0) out.emplace_back(sim[static_cast<size_t>(c)], n);
  }
  return out;
}

std::vector<Weight> ModularData::centralizer_currents(const std::vector<int>& currents,
                                                      const std::vector<Weight>& pool) const {
  std::vector<Weight> out;
  for (const auto& w : pool) {
    bool ok = true;
    for (int j : currents)
      if (phi_exponent(j, w) != Rational(0)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<Weight> ModularData::centralizer(const std::vector<Weight>& P, const std::vector<Weight>& pool) const {
  Weight zero(ctx_.rank(), 0);
  const cplx s11 = s(zero, zero);
  std::vector<Weight> out;
  for (const auto& l : pool) {
    const cplx sl1 = s(l, zero);
    bool ok = true;
    for (const auto& m : P) {
      cplx lhs = s(l, m) * s11;
      cplx rhs = sl1 * s(zero, m);
      if (std::abs(lhs - rhs) > 1e-6 * (std::abs(lhs) + std::abs(rhs)) + 1e-12) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(l);
  }
  return out;
}

std::shared_ptr<ModularData> level1_data(const AlgebraPtr& alg_e) {
  return std::make_shared<ModularData>(LevelContext(alg_e, 1));
}

}  // namespace etale
