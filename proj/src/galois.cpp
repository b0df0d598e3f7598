#include "etale/galois.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace etale {

GaloisContext::GaloisContext(const LevelContext& ctx) : ctx_(ctx) {
  const auto& alg = ctx.algebra();
  period_ = 2 * alg.pairing_den * ctx.kappa;
  const long long nk = ctx.galois_modulus;
  std::set<long long> keys;
  for (long long ell = 1; ell < nk || (nk == 1 && ell == 1); ++ell) {
    if (std::gcd(ell, nk) != 1) continue;
    long long l = lift(ell);
    if (keys.insert(l % period_).second) lifts_.push_back(l);
  }
  auto rho = pairings(rho_weight(alg));
  for (long long l : lifts_) rho_sign_.push_back(sign_product(l, rho));
}

long long GaloisContext::lift(long long ell) const {
  const long long nk = ctx_.galois_modulus;
  const long long big = lcm_ll(period_, nk);
  long long l = mod_pos(ell, nk);
  if (l == 0) l = nk;
  for (int j = 0; j < 64; ++j, l += nk)
    if (std::gcd(l, big) == 1) return l;
  throw std::logic_error("no coprime lift found");
}

std::vector<long long> GaloisContext::pairings(const Weight& lam) const {
  const auto& alg = ctx_.algebra();
  std::vector<long long> out;
  out.reserve(alg.pos_roots.size());
  for (const auto& rt : alg.pos_roots) {
    long long m = 0;
    for (int i = 0; i < alg.rank; ++i) m += rt.pairing[i] * lam[i];
    out.push_back(m);
  }
  return out;
}

int GaloisContext::sign_product(long long ell, const std::vector<long long>& pair_vals) const {
  const long long half = period_ / 2;
  int s = 1;
  for (long long m : pair_vals) {
    long long r = mod_pos((ell % period_) * (m % period_), period_);
    if (r == 0 || r == half) throw std::runtime_error("weight lies on an alcove wall");
    if (r > half) s = -s;
  }
  return s;
}

int GaloisContext::parity(long long ell, const Weight& lam_shifted) const {
  if (std::gcd(ell, ctx_.galois_modulus) != 1) throw std::invalid_argument("ell is not coprime to N*kappa");
  long long l = lift(ell);
  auto vals = pairings(lam_shifted);
  return sign_product(l, vals) * sign_product(l, pairings(rho_weight(ctx_.algebra())));
}

bool GaloisContext::totally_positive(const Weight& lam_unshifted) const {
  auto vals = pairings(shift(lam_unshifted));
  for (size_t i = 0; i < lifts_.size(); ++i)
    if (sign_product(lifts_[i], vals) != rho_sign_[i]) return false;
  return true;
}

int parity(long long ell, const Weight& lam_shifted, const LevelContext& ctx) {
  return GaloisContext(ctx).parity(ell, lam_shifted);
}

GaloisImage galois_act(long long ell, const Weight& lam_shifted, const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  if (std::gcd(ell, ctx.galois_modulus) != 1) throw std::invalid_argument("ell is not coprime to N*kappa");
  const int r = alg.rank;
  const long long kap = ctx.kappa;
  std::vector<long long> theta(r, 0);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) theta[j] += static_cast<long long>(alg.marks[i]) * alg.cartan[j][i];
  std::vector<long long> v(r);
  long long l = mod_pos(ell, ctx.galois_modulus);
  for (int i = 0; i < r; ++i) v[i] = l * lam_shifted[i];
  int sign = 1;
  for (long step = 0; step < 1'000'000; ++step) {
    int neg = -1;
    for (int i = 0; i < r; ++i)
      if (v[i] <= 0) {
        neg = i;
        break;
      }
    if (neg >= 0) {
      if (v[neg] == 0) throw std::runtime_error("Galois image lies on a wall");
      long long c = v[neg];
      for (int j = 0; j < r; ++j) v[j] -= c * alg.cartan[j][neg];
      sign = -sign;
      continue;
    }
    long long v0 = kap;
    for (int i = 0; i < r; ++i) v0 -= alg.comarks[i] * v[i];
    if (v0 > 0) {
      GaloisImage out;
      out.weight.resize(r);
      for (int i = 0; i < r; ++i) out.weight[i] = static_cast<int>(v[i]);
      out.sign = sign;
      return out;
    }
    if (v0 == 0) throw std::runtime_error("Galois image lies on a wall");
    for (int j = 0; j < r; ++j) v[j] += v0 * theta[j];
    sign = -sign;
  }
  throw std::runtime_error("alcove folding exceeded the step cap");
}

namespace {

std::mutex& lie_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::set<int>>& lie_table() {
  static std::map<std::string, std::set<int>> t = {
      {"A1", {4, 10, 28}}, {"A2", {3, 5, 9, 21}}, {"A3", {2, 4, 6, 8}}, {"A4", {3, 5, 7}}};
  return t;
}

}  // namespace

std::set<int> lie_type_levels(const AlgebraData& alg) {
  std::lock_guard<std::mutex> lock(lie_mutex());
  auto it = lie_table().find(alg.name());
  return it == lie_table().end() ? std::set<int>{} : it->second;
}

bool lie_type_level(const AlgebraData& alg, int k) { return lie_type_levels(alg).count(k) > 0; }

void set_lie_type_levels(const std::string& algebra, const std::set<int>& levels) {
  std::lock_guard<std::mutex> lock(lie_mutex());
  lie_table()[algebra] = levels;
}

bool is_candidate(const Weight& lam, const GaloisContext& gal, bool lie_type) {
  Rational h = conformal_weight(lam, gal.context());
  if (h.denominator() != 1) return false;
  if (h == Rational(1) && !lie_type) return false;
  return gal.totally_positive(lam);
}

bool is_candidate(const Weight& lam, const LevelContext& ctx, bool lie_type) {
  return is_candidate(lam, GaloisContext(ctx), lie_type);
}

std::vector<Weight> candidate_set(const LevelContext& ctx, bool lie_type, long long budget) {
  if (level_count(ctx) > budget) throw std::length_error("level set exceeds the candidate scan budget");
  GaloisContext gal(ctx);
  const auto& alg = ctx.algebra();
  const long long unit = 2LL * ctx.kappa * alg.quad_den;
  std::vector<Weight> out;
  enumerate_level(ctx, [&](const Weight& w) {
    long long q = norm_numerator(w, alg);
    if (q % unit != 0) return true;
    if (q == unit && !lie_type) return true;
    if (gal.totally_positive(w)) out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Weight> candidate_set(const LevelContext& ctx) {
  return candidate_set(ctx, lie_type_level(ctx.algebra(), ctx.k));
}

}  // namespace etale
