#include "etale/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace etale {

LevelContext::LevelContext(AlgebraPtr a, int level) : alg(std::move(a)), k(level) {
  if (!alg) throw std::invalid_argument("null algebra");
  if (level < 1) throw std::invalid_argument("level must be positive");
  kappa = k + alg->dual_coxeter;
  c = Rational(static_cast<long long>(k) * alg->dim, kappa);
  galois_modulus = static_cast<long long>(alg->center_exponent) * kappa;
}

long long norm_numerator(const Weight& lam, const AlgebraData& alg) {
  long long q = 0;
  for (int i = 0; i < alg.rank; ++i) {
    if (lam[i] == 0) continue;
    long long row = 2 * alg.rho_quad[i];
    for (int j = 0; j < alg.rank; ++j) row += alg.quad_int[i][j] * lam[j];
    q += lam[i] * row;
  }
  return q;
}

Rational conformal_weight(const Weight& lam, const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  return Rational(norm_numerator(lam, alg), 2 * ctx.kappa * alg.quad_den);
}

Rational conformal_weight_shifted(const Weight& lam, const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  return (inner_product(lam, lam, alg) - alg.weyl_vector_norm) / Rational(2 * ctx.kappa);
}

bool twist_is_trivial(const Weight& lam, const LevelContext& ctx) {
  return conformal_weight(lam, ctx).denominator() == 1;
}

bool is_level_weight(const Weight& lam, const LevelContext& ctx) {
  if (static_cast<int>(lam.size()) != ctx.rank()) return false;
  for (int x : lam)
    if (x < 0) return false;
  return zeroth_label(lam, ctx.k, ctx.algebra()) >= 0;
}

long long level_count(const LevelContext& ctx) {
  // dynamic programming over comarks
  std::vector<long long> ways(ctx.k + 1, 0);
  ways[0] = 1;
  for (int a : ctx.algebra().comarks)
    for (int s = a; s <= ctx.k; ++s) ways[s] += ways[s - a];
  return std::accumulate(ways.begin(), ways.end(), 0LL);
}

namespace {

bool enum_rec(const LevelContext& ctx, Weight& lam, int i, int left, const std::function<bool(const Weight&)>& emit) {
  const int r = ctx.rank();
  if (i == r) return emit(lam);
  const int a = ctx.algebra().comarks[i];
  for (int x = 0; x * a <= left; ++x) {
    lam[i] = x;
    if (!enum_rec(ctx, lam, i + 1, left - x * a, emit)) return false;
  }
  lam[i] = 0;
  return true;
}

struct BallSearch {
  const LevelContext& ctx;
  const AlgebraData& alg;
  long long qmax;
  const std::function<void(const Weight&, long long)>& emit;
  Weight lam;
  std::vector<long long> cross;  // sum over assigned i of lambda_i * quad_int[i][j]

  void run(int i, int left, long long q) {
    const int r = alg.rank;
    if (i == r) {
      emit(lam, q);
      return;
    }
    const int a = alg.comarks[i];
    const long long fii = alg.quad_int[i][i];
    const long long lin = 2 * (cross[i] + alg.rho_quad[i]);
    for (int x = 0; x * a <= left; ++x) {
      long long qx = q + static_cast<long long>(x) * x * fii + static_cast<long long>(x) * lin;
      if (qx > qmax) break;
      lam[i] = x;
      for (int j = i + 1; j < r; ++j) cross[j] += static_cast<long long>(x) * alg.quad_int[i][j];
      run(i + 1, left - x * a, qx);
      for (int j = i + 1; j < r; ++j) cross[j] -= static_cast<long long>(x) * alg.quad_int[i][j];
    }
    lam[i] = 0;
  }
};

}  // namespace

void enumerate_level(const LevelContext& ctx, const std::function<bool(const Weight&)>& emit) {
  Weight lam(ctx.rank(), 0);
  enum_rec(ctx, lam, 0, ctx.k, emit);
}

std::vector<Weight> level_weights(const LevelContext& ctx, long long budget) {
  long long n = level_count(ctx);
  if (n > budget)
    throw std::length_error("level set of size " + std::to_string(n) + " exceeds the enumeration budget");
  std::vector<Weight> out;
  out.reserve(static_cast<size_t>(n));
  enumerate_level(ctx, [&](const Weight& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

void enumerate_norm_ball(const LevelContext& ctx, long long qmax, const std::function<void(const Weight&, long long)>& emit) {
  // every entry of the quadratic form and of rho_quad is positive, so fixing the tail to zero
  // minimizes the form over the nonnegative orthant
  const auto& alg = ctx.algebra();
  BallSearch s{ctx, alg, qmax, emit, Weight(alg.rank, 0), std::vector<long long>(alg.rank, 0)};
  s.run(0, ctx.k, 0);
}

std::vector<Weight> enumerate_h_window(const LevelContext& ctx, long long h_min, long long h_max) {
  if (h_min > h_max) return {};
  const long long unit = 2LL * ctx.kappa * ctx.algebra().quad_den;
  const long long lo = unit * h_min;
  std::vector<Weight> out;
  enumerate_norm_ball(ctx, unit * h_max, [&](const Weight& w, long long q) {
    if (q % unit == 0 && q >= lo) out.push_back(w);
  });
  return out;
}

std::vector<int> subgroup_indices(const LevelContext& ctx, const OrbitSpec& spec) {
  const auto& alg = ctx.algebra();
  if (!spec.currents.empty()) return spec.currents;
  std::vector<int> idx;
  if (alg.series == Series::A) {
    const int rp = alg.rank + 1;
    if (spec.d < 1 || rp % spec.d != 0) throw std::invalid_argument("subgroup order must divide r+1");
    for (int j = 0; j < spec.d; ++j) idx.push_back(alg.a_current(j * (rp / spec.d)));
  } else {
    if (spec.d == 1) return {0};
    if (spec.d != static_cast<int>(alg.simple_currents.size()))
      throw std::invalid_argument("non-A subgroups must be given explicitly");
    for (int j = 0; j < spec.d; ++j) idx.push_back(j);
  }
  return idx;
}

Orbit expand_orbit(const Weight& rep, const OrbitSpec& spec, const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  auto idx = subgroup_indices(ctx, spec);
  std::set<Weight> members;
  for (int j : idx) {
    Weight w = apply_simple_current(alg.simple_currents[j], rep, ctx.k, alg);
    members.insert(w);
    if (spec.with_duality) {
      members.insert(contragredient(w, alg));
      // closure: J and C generate a dihedral group, C J = J^{-1} C
      for (int i : idx) {
        Weight v = apply_simple_current(alg.simple_currents[i], contragredient(w, alg), ctx.k, alg);
        members.insert(v);
      }
    }
  }
  Orbit o;
  o.members.assign(members.begin(), members.end());
  o.representative = o.members.front();
  std::ostringstream tag;
  tag << "<>";
  if (idx.size() > 1) tag << "_" << idx.size();
  if (spec.with_duality) tag << (idx.size() > 1 ? "c" : "_c");
  o.group_tag = tag.str();
  return o;
}

std::vector<Weight> expand_orbits(const std::vector<Weight>& reps, const OrbitSpec& spec, const LevelContext& ctx) {
  std::set<Weight> all;
  for (const auto& r : reps) {
    auto o = expand_orbit(r, spec, ctx);
    all.insert(o.members.begin(), o.members.end());
  }
  return {all.begin(), all.end()};
}

std::string format_weight(const Weight& lam) {
  bool small = std::all_of(lam.begin(), lam.end(), [](int x) { return x >= 0 && x < 10; });
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < lam.size(); ++i) {
    if (!small && i) os << ',';
    os << lam[i];
  }
  os << ')';
  return os.str();
}

namespace {

int char_value(char c) {
  if (std::isdigit(static_cast<unsigned char>(c))) return c - '0';
  if (std::isalpha(static_cast<unsigned char>(c))) return std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
  throw std::invalid_argument(std::string("bad weight character '") + c + "'");
}

}  // namespace

Weight parse_weight(const std::string& text, int rank) {
  std::string body;
  for (char c : text)
    if (c != '(' && c != ')') body += c;
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : body) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  Weight w;
  if (tokens.size() == 1 && static_cast<int>(tokens[0].size()) == rank && rank > 1) {
    for (char c : tokens[0]) w.push_back(char_value(c));
  } else {
    for (const auto& t : tokens) {
      bool digits = std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (digits) {
        w.push_back(std::stoi(t));
      } else {
        for (char c : t) w.push_back(char_value(c));
      }
    }
  }
  if (static_cast<int>(w.size()) != rank)
    throw std::invalid_argument("weight '" + text + "' does not have " + std::to_string(rank) + " labels");
  return w;
}

bool is_simple_current_weight(const Weight& lam, const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  Weight zero(alg.rank, 0);
  for (const auto& J : alg.simple_currents)
    if (apply_simple_current(J, zero, ctx.k, alg) == lam) return true;
  return false;
}

}  // namespace etale
