#include "etale/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace etale {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long long next_prime(long long n) {
  long long q = n + 1;
  while (!is_prime(q)) ++q;
  return q;
}

bool is_zero_weight(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

// canonical representative of the orbit of w under duality and the given currents
Weight orbit_min(const Weight& w, const std::vector<int>& currents, const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  Weight best = w;
  for (int j : currents) {
    Weight a = apply_simple_current(alg.simple_currents[j], w, ctx.k, alg);
    Weight b = contragredient(a, alg);
    best = std::min({best, a, b});
  }
  Weight c = contragredient(w, alg);
  return std::min(best, c);
}

}  // namespace

long long smallest_prime_coprime_to(long long n) {
  long long p = 2;
  while (n % p == 0) p = next_prime(p);
  return p;
}

ThresholdReport l_max(const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  ThresholdReport r;
  r.k = ctx.k;
  r.kappa = ctx.kappa;
  r.p = smallest_prime_coprime_to(static_cast<long long>(alg.f_g) * ctx.kappa);
  r.l_max = (r.p * (r.p - 1) * alg.dual_coxeter * alg.dim) / (6LL * ctx.kappa);
  r.lie_type = lie_type_level(alg, ctx.k);
  r.survives_step1 = r.l_max >= 2 || r.lie_type;
  return r;
}

long long kappa_max(const AlgebraData& alg) {
  const Rational a(static_cast<long long>(alg.dual_coxeter) * alg.dim, 12);
  std::vector<long long> primes;
  long long q = 1;
  for (int l = 1; l < 64; ++l) {
    q = next_prime(q);
    primes.push_back(q);
    if (l < 5) continue;
    long long prod = 1;
    for (long long p : primes)
      if (p != alg.f_g) prod *= p;
    if (Rational(prod) >= a * Rational(q * q - q)) return prod;
  }
  throw std::logic_error("kappa_max scan did not terminate");
}

std::vector<ThresholdReport> step1_reports(const AlgebraPtr& alg) {
  std::vector<ThresholdReport> out;
  const long long top = kappa_max(*alg) - alg->dual_coxeter;
  for (long long k = 1; k <= top; ++k) {
    LevelContext ctx(alg, static_cast<int>(k));
    out.push_back(l_max(ctx));
  }
  return out;
}

std::vector<int> step1_levels(const AlgebraPtr& alg) {
  std::vector<int> out;
  for (const auto& r : step1_reports(alg))
    if (r.survives_step1) out.push_back(r.k);
  return out;
}

Step2Report step2_check(const LevelContext& ctx) {
  Step2Report rep;
  auto th = l_max(ctx);
  rep.k = ctx.k;
  rep.l_max = th.l_max;
  rep.lie_type = th.lie_type;
  if (th.lie_type) {
    for (const auto& w : candidate_set(ctx, true))
      if (!is_simple_current_weight(w, ctx)) rep.witnesses.push_back(w);
    rep.survives = !rep.witnesses.empty();
  }
  if (th.l_max < 2) return rep;
  const auto& alg = ctx.algebra();
  GaloisContext gal(ctx);
  auto window = enumerate_h_window(ctx, 1, th.l_max);
  std::vector<int> all_currents(alg.simple_currents.size());
  std::iota(all_currents.begin(), all_currents.end(), 0);
  std::set<Weight> c_orbits, cj_orbits;
  std::set<Weight> witnesses(rep.witnesses.begin(), rep.witnesses.end());
  for (const auto& w : window) {
    rep.window_weights++;
    c_orbits.insert(std::min(w, contragredient(w, alg)));
    cj_orbits.insert(orbit_min(w, all_currents, ctx));
    if (!th.lie_type && !is_simple_current_weight(w, ctx) && gal.totally_positive(w)) witnesses.insert(w);
  }
  rep.window_c_orbits = static_cast<long long>(c_orbits.size());
  rep.window_cj_orbits = static_cast<long long>(cj_orbits.size());
  rep.witnesses.assign(witnesses.begin(), witnesses.end());
  rep.survives = !rep.witnesses.empty();
  return rep;
}

std::vector<int> step2_levels(const AlgebraPtr& alg) {
  std::vector<int> out;
  for (int k : step1_levels(alg)) {
    LevelContext ctx(alg, k);
    if (step2_check(ctx).survives) out.push_back(k);
  }
  return out;
}

bool ocneanu_simple(const Weight& lam_shifted, const Rational& h_bound, const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  Weight star = contragredient(lam_shifted, alg);
  Weight sum(lam_shifted.size()), diff(lam_shifted.size());
  for (size_t i = 0; i < sum.size(); ++i) {
    sum[i] = lam_shifted[i] + star[i];
    diff[i] = sum[i] - 2;
  }
  return inner_product(diff, sum, alg) < Rational(2 * ctx.kappa) * h_bound;
}

std::vector<int> sc_admissible_divisors(const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  if (alg.series != Series::A) throw std::invalid_argument("admissible divisors are defined for the A series");
  const long long rp = alg.rank + 1;
  const long long kr = static_cast<long long>(ctx.k) * rp;
  std::vector<int> out;
  for (long long d = 1; d <= rp; ++d) {
    if (rp % d != 0) continue;
    bool ok = (d % 2 == 1) ? kr % (d * d) == 0 : kr % (2 * d * d) == 0;
    if (ok) out.push_back(static_cast<int>(d));
  }
  return out;
}

std::vector<std::vector<int>> twist_trivial_subgroups(const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  const int n = static_cast<int>(alg.simple_currents.size());
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[alg.simple_currents[i]] = i;
  auto closure = [&](std::vector<int> gens) {
    std::set<int> elems = {0};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(elems.begin(), elems.end());
      for (int a : cur)
        for (int g : gens) {
          int c = index.at(compose(alg.simple_currents[g], alg.simple_currents[a]));
          if (elems.insert(c).second) grew = true;
        }
    }
    return std::vector<int>(elems.begin(), elems.end());
  };
  std::set<std::vector<int>> groups;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) groups.insert(closure({a, b}));
  Weight zero(alg.rank, 0);
  std::vector<std::vector<int>> out;
  for (const auto& g : groups) {
    bool ok = true;
    for (int j : g)
      if (!twist_is_trivial(apply_simple_current(alg.simple_currents[j], zero, ctx.k, alg), ctx)) ok = false;
    if (ok) out.push_back(g);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  return out;
}

long long EtaleObject::coefficient(const Weight& lam) const {
  auto it = coeffs.find(lam);
  return it == coeffs.end() ? 0 : it->second;
}

bool EtaleObject::exotic() const {
  for (const auto& [w, z] : coeffs)
    if (z > 0 && !is_simple_current_weight(w, ctx)) return true;
  return false;
}

Rational EtaleObject::h_min() const {
  std::optional<Rational> best;
  for (const auto& [w, z] : coeffs) {
    if (z == 0 || is_zero_weight(w)) continue;
    Rational h = conformal_weight(w, ctx);
    if (!best || h < *best) best = h;
  }
  return best ? *best : Rational(-1);
}

std::vector<std::pair<Orbit, long long>> EtaleObject::orbit_terms() const {
  OrbitSpec spec;
  spec.currents = j_group;
  spec.with_duality = true;
  std::set<Weight> seen;
  std::vector<std::pair<Orbit, long long>> out;
  for (const auto& [w, z] : coeffs) {
    if (z == 0 || seen.count(w)) continue;
    Orbit o = expand_orbit(w, spec, ctx);
    seen.insert(o.members.begin(), o.members.end());
    out.emplace_back(o, z);
  }
  return out;
}

std::string EtaleObject::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, z] : coeffs) {
    if (z == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (z > 1) os << z << "*";
    os << (is_zero_weight(w) ? std::string("1") : format_weight(w));
  }
  return os.str();
}

EtaleObject make_etale(const LevelContext& ctx, const std::vector<int>& j_group, const std::map<Weight, long long>& coeffs) {
  EtaleObject a;
  a.ctx = ctx;
  a.j_group = j_group;
  for (const auto& [w, z] : coeffs) {
    if (static_cast<int>(w.size()) != ctx.rank() || !is_level_weight(w, ctx))
      throw std::invalid_argument("weight " + format_weight(w) + " is not of level " + std::to_string(ctx.k));
    if (z < 0) throw std::invalid_argument("negative multiplicity");
    if (z > 0) a.coeffs[w] = z;
  }
  return a;
}

Shape etale_shape(const ModularData& md, const std::vector<int>& j_group, const std::vector<Weight>& candidates) {
  const auto& ctx = md.context();
  const auto& alg = ctx.algebra();
  Shape shape;
  shape.j_group = j_group;
  Weight zero(alg.rank, 0);
  std::set<Weight> cur;
  for (int j : j_group) cur.insert(apply_simple_current(alg.simple_currents[j], zero, ctx.k, alg));
  shape.currents.assign(cur.begin(), cur.end());
  OrbitSpec spec;
  spec.currents = j_group;
  spec.with_duality = true;
  std::set<Weight> seen;
  for (const auto& w : candidates) {
    if (seen.count(w) || is_simple_current_weight(w, ctx)) continue;
    bool central = true;
    for (int j : j_group)
      if (md.phi_exponent(j, w) != Rational(0)) central = false;
    if (!central) continue;
    Orbit o = expand_orbit(w, spec, ctx);
    seen.insert(o.members.begin(), o.members.end());
    OrbitShape os;
    os.rep = o.representative;
    os.members = o.members;
    os.lower = 0;
    os.upper = static_cast<long long>(std::floor(md.qdim(os.rep) + 1e-7));
    shape.orbits.push_back(os);
  }
  return shape;
}

namespace {

struct ProbeRow {
  double b = 0;               // |J_A| S_{1,mu}
  double s_one = 0;           // S_{1,mu}
  std::vector<double> a;      // |O| Re S_{rep,mu}
  std::vector<double> re_s;   // Re S_{rep,mu}
};

ProbeRow make_row(const Shape& shape, const Weight& mu, const ModularData& md) {
  for (int j : shape.j_group)
    if (md.phi_exponent(j, mu) != Rational(0))
      throw std::invalid_argument("probe " + format_weight(mu) + " is not in the centralizer of J_A");
  ProbeRow r;
  Weight zero(md.context().rank(), 0);
  r.s_one = md.s(zero, mu).real();
  r.b = static_cast<double>(shape.currents.size()) * r.s_one;
  for (const auto& o : shape.orbits) {
    double s = md.s(o.rep, mu).real();
    r.re_s.push_back(s);
    r.a.push_back(static_cast<double>(o.members.size()) * s);
  }
  return r;
}

ProbeRow combine(const std::vector<const ProbeRow*>& rows, const std::vector<long long>& xs) {
  ProbeRow out;
  out.a.assign(rows[0]->a.size(), 0.0);
  out.re_s.assign(rows[0]->a.size(), 0.0);
  for (size_t t = 0; t < rows.size(); ++t) {
    double x = static_cast<double>(xs[t]);
    out.b += x * rows[t]->b;
    out.s_one += x * rows[t]->s_one;
    for (size_t i = 0; i < out.a.size(); ++i) {
      out.a[i] += x * rows[t]->a[i];
      out.re_s[i] += x * rows[t]->re_s[i];
    }
  }
  return out;
}

double row_scale(const ProbeRow& r, const Shape& shape) {
  double s = std::abs(r.b);
  for (size_t i = 0; i < r.a.size(); ++i) s += std::abs(r.a[i]) * static_cast<double>(std::max<long long>(1, shape.orbits[i].upper));
  return s;
}

// Gauss-Seidel bound tightening from one inequality b + sum a_i Z_i >= 0
std::vector<BoundUpdate> tighten(const ProbeRow& r, const Shape& shape) {
  const size_t n = shape.orbits.size();
  std::vector<long long> lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    lo[i] = shape.orbits[i].lower;
    hi[i] = shape.orbits[i].upper;
  }
  const double eps = 1e-9 * row_scale(r, shape) + 1e-300;
  std::vector<BoundUpdate> ups;
  for (size_t i = 0; i < n; ++i) {
    if (r.a[i] >= 0) continue;
    double rest = r.b;
    for (size_t j = 0; j < n; ++j)
      if (j != i) rest += std::max(r.a[j] * static_cast<double>(lo[j]), r.a[j] * static_cast<double>(hi[j]));
    double bound = (rest + eps) / -r.a[i];
    long long nb = bound >= static_cast<double>(hi[i]) ? hi[i] : static_cast<long long>(std::floor(bound * (1 + 1e-12)));
    if (nb < hi[i]) {
      hi[i] = std::max(nb, lo[i] - 1);
      ups.push_back({shape.orbits[i].rep, lo[i], hi[i]});
    }
  }
  return ups;
}

ProbeStep to_step(const std::vector<ProbeTerm>& probes, const ProbeRow& r, std::vector<BoundUpdate> ups) {
  ProbeStep st;
  st.probes = probes;
  st.updates = std::move(ups);
  st.coefficients = r.a;
  st.constant = r.b;
  st.s_one = r.s_one;
  st.re_s = r.re_s;
  return st;
}

bool all_zero(const Shape& s) {
  return std::all_of(s.orbits.begin(), s.orbits.end(), [](const OrbitShape& o) { return o.upper <= 0; });
}

bool infeasible(const Shape& s) {
  return std::any_of(s.orbits.begin(), s.orbits.end(), [](const OrbitShape& o) { return o.upper < o.lower; });
}

std::vector<Weight> probe_pool(const ModularData& md, const std::vector<int>& j_group, size_t budget) {
  const auto& ctx = md.context();
  const auto& alg = ctx.algebra();
  using Item = std::pair<long long, Weight>;
  std::priority_queue<Item> heap;  // max-heap keeps the budget smallest
  enumerate_level(ctx, [&](const Weight& w) {
    if (is_zero_weight(w)) return true;
    long long q = norm_numerator(w, alg);
    if (heap.size() >= budget && Item(q, w) >= heap.top()) return true;
    for (int j : j_group)
      if (md.phi_exponent(j, w) != Rational(0)) return true;
    heap.emplace(q, w);
    if (heap.size() > budget) heap.pop();
    return true;
  });
  std::vector<std::tuple<long long, double, Weight>> items;
  while (!heap.empty()) {
    auto [q, w] = heap.top();
    heap.pop();
    items.emplace_back(q, md.qdim(w), w);
  }
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    if (std::abs(std::get<1>(x) - std::get<1>(y)) > 1e-9) return std::get<1>(x) < std::get<1>(y);
    return std::get<2>(x) < std::get<2>(y);
  });
  std::vector<Weight> out;
  for (auto& it : items) out.push_back(std::get<2>(it));
  return out;
}

struct BoxSearch {
  const Shape& shape;
  const std::vector<ProbeRow>& prune_rows;
  const std::vector<ProbeRow>& leaf_rows;
  double s11_total;               // |J_A| S_{11}
  std::vector<double> s_one_col;  // |O| Re S_{rep,1}
  double gap;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;
  std::vector<std::vector<long long>> solutions;

  BoxSearch(const Shape& s, const std::vector<ProbeRow>& pr, const std::vector<ProbeRow>& lr, double total, double g, long long b)
      : shape(s), prune_rows(pr), leaf_rows(lr), s11_total(total), gap(g), budget(b) {}

  std::vector<long long> z;
  std::vector<std::vector<double>> suffix_max;  // per depth, per prune row
  std::vector<double> partial;

  void run() {
    const size_t n = shape.orbits.size();
    const size_t m = prune_rows.size();
    suffix_max.assign(n + 1, std::vector<double>(m, 0.0));
    for (size_t d = n; d-- > 0;)
      for (size_t r = 0; r < m; ++r) {
        double a = prune_rows[r].a[d];
        suffix_max[d][r] = suffix_max[d + 1][r] +
                           std::max(a * static_cast<double>(shape.orbits[d].lower), a * static_cast<double>(shape.orbits[d].upper));
      }
    partial.assign(m, 0.0);
    for (size_t r = 0; r < m; ++r) partial[r] = prune_rows[r].b;
    z.assign(n, 0);
    dfs(0);
  }

  void dfs(size_t d) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    for (size_t r = 0; r < prune_rows.size(); ++r)
      if (partial[r] + suffix_max[d][r] < -gap) return;
    if (d == shape.orbits.size()) {
      leaf();
      return;
    }
    for (long long v = shape.orbits[d].lower; v <= shape.orbits[d].upper; ++v) {
      z[d] = v;
      for (size_t r = 0; r < prune_rows.size(); ++r) partial[r] += prune_rows[r].a[d] * static_cast<double>(v);
      dfs(d + 1);
      for (size_t r = 0; r < prune_rows.size(); ++r) partial[r] -= prune_rows[r].a[d] * static_cast<double>(v);
      if (exhausted) return;
    }
  }

  void leaf() {
    double total = s11_total;
    for (size_t i = 0; i < z.size(); ++i) total += s_one_col[i] * static_cast<double>(z[i]);
    for (const auto& row : leaf_rows) {
      double v = row.b;
      for (size_t i = 0; i < z.size(); ++i) v += row.a[i] * static_cast<double>(z[i]);
      if (v <= -gap) return;
      if (v > gap && v < total - gap) return;
    }
    solutions.push_back(z);
  }
};

}  // namespace

ProbeStep probe_bounds(const Shape& shape, const std::vector<ProbeTerm>& probes, const ModularData& md) {
  if (probes.empty()) throw std::invalid_argument("empty probe list");
  std::vector<ProbeRow> rows;
  std::vector<const ProbeRow*> ptrs;
  std::vector<long long> xs;
  rows.reserve(probes.size());
  for (const auto& p : probes) {
    if (p.x < 0) throw std::invalid_argument("probe weights must be nonnegative");
    rows.push_back(make_row(shape, p.mu, md));
    xs.push_back(p.x);
  }
  for (const auto& r : rows) ptrs.push_back(&r);
  ProbeRow comb = combine(ptrs, xs);
  return to_step(probes, comb, tighten(comb, shape));
}

void apply_step(Shape& shape, const ProbeStep& step) {
  for (const auto& u : step.updates)
    for (auto& o : shape.orbits)
      if (o.rep == u.orbit_rep) {
        o.lower = std::max(o.lower, u.lower);
        o.upper = std::min(o.upper, u.upper);
      }
}

std::string verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::NoExotic: return "no-exotic";
    case VerdictKind::Identified: return "identified";
    case VerdictKind::Unresolved: return "unresolved";
  }
  return "?";
}

ElimResult eliminate_level(const ModularData& md, const std::vector<int>& j_group, const std::vector<Weight>& candidates,
                           const ElimOptions& opts) {
  const auto& ctx = md.context();
  ElimResult res;
  res.shape = etale_shape(md, j_group, candidates);
  Shape& shape = res.shape;
  if (shape.orbits.empty()) {
    res.kind = VerdictKind::NoExotic;
    res.note = "no non-simple-current candidates in the centralizer";
    return res;
  }
  for (auto& o : shape.orbits)
    if (o.upper <= 0) o.upper = 0;

  auto pool = probe_pool(md, j_group, opts.probe_budget);
  std::vector<ProbeRow> rows;
  rows.reserve(pool.size());
  for (const auto& mu : pool) rows.push_back(make_row(shape, mu, md));

  // a single probe that settles everything
  if (!all_zero(shape)) {
    for (size_t i = 0; i < rows.size(); ++i) {
      Shape trial = shape;
      auto ups = tighten(rows[i], trial);
      auto st = to_step({{pool[i], 1}}, rows[i], ups);
      apply_step(trial, st);
      if (all_zero(trial)) {
        shape = trial;
        res.certificate.push_back(st);
        break;
      }
    }
  }

  auto propagate_singles = [&]() {
    bool changed = true;
    for (int pass = 0; changed && pass < 50 && !all_zero(shape) && !infeasible(shape); ++pass) {
      changed = false;
      for (size_t i = 0; i < rows.size() && !all_zero(shape); ++i) {
        auto ups = tighten(rows[i], shape);
        if (ups.empty()) continue;
        auto st = to_step({{pool[i], 1}}, rows[i], ups);
        apply_step(shape, st);
        res.certificate.push_back(st);
        changed = true;
      }
    }
  };

  propagate_singles();

  if (!all_zero(shape)) {
    const size_t np = std::min(opts.pair_pool, rows.size());
    bool changed = true;
    while (changed && !all_zero(shape)) {
      changed = false;
      for (size_t i = 0; i < np && !all_zero(shape); ++i)
        for (size_t j = i + 1; j < np && !all_zero(shape); ++j)
          for (long long x1 = 1; x1 <= 3; ++x1)
            for (long long x2 = 1; x2 <= 3; ++x2) {
              if (x1 > 1 && x2 > 1 && std::gcd(x1, x2) > 1) continue;
              ProbeRow c = combine({&rows[i], &rows[j]}, {x1, x2});
              auto ups = tighten(c, shape);
              if (ups.empty()) continue;
              auto st = to_step({{pool[i], x1}, {pool[j], x2}}, c, ups);
              apply_step(shape, st);
              res.certificate.push_back(st);
              changed = true;
            }
      if (changed) propagate_singles();
    }
  }

  if (all_zero(shape)) {
    res.kind = VerdictKind::NoExotic;
    return res;
  }

  // bounded exhaustive search over the residual box
  Weight zero(ctx.rank(), 0);
  const double s11 = md.s(zero, zero).real();
  std::vector<ProbeRow> prune(rows.begin(), rows.begin() + static_cast<long>(std::min<size_t>(rows.size(), 300)));
  BoxSearch box(shape, prune, rows, static_cast<double>(shape.currents.size()) * s11, 0.5 * s11, opts.box_budget);
  for (const auto& o : shape.orbits) box.s_one_col.push_back(static_cast<double>(o.members.size()) * md.s(o.rep, zero).real());
  box.run();
  res.box_used = true;
  res.box_nodes = box.nodes;
  if (box.exhausted) {
    res.kind = VerdictKind::Unresolved;
    res.note = "box search budget exhausted";
    return res;
  }
  size_t rejected = 0;
  for (const auto& sol : box.solutions) {
    if (std::all_of(sol.begin(), sol.end(), [](long long v) { return v == 0; })) continue;
    std::map<Weight, long long> coeffs;
    for (const auto& c : shape.currents) coeffs[c] = 1;
    for (size_t i = 0; i < sol.size(); ++i)
      for (const auto& w : shape.orbits[i].members)
        if (sol[i] > 0) coeffs[w] = sol[i];
    auto obj = make_etale(ctx, j_group, coeffs);
    if (check_etale_necessary(obj, md).ok)
      res.objects.push_back(obj);
    else
      ++rejected;
  }
  if (rejected) res.note = std::to_string(rejected) + " box solutions rejected by the necessary conditions";
  if (res.objects.empty())
    res.kind = VerdictKind::NoExotic;
  else if (res.objects.size() == 1)
    res.kind = VerdictKind::Identified;
  else {
    res.kind = VerdictKind::Unresolved;
    res.note = std::to_string(res.objects.size()) + " exotic solutions survive the necessary conditions";
  }
  return res;
}

NecessaryReport check_etale_necessary(const EtaleObject& a, const ModularData& md) {
  const auto& ctx = md.context();
  const auto& alg = ctx.algebra();
  NecessaryReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };
  Weight zero(alg.rank, 0);
  if (a.coefficient(zero) != 1) fail("Z_1 must be 1");
  for (int j : a.j_group) {
    Weight c = apply_simple_current(alg.simple_currents[j], zero, ctx.k, alg);
    if (a.coefficient(c) != 1) fail("current " + format_weight(c) + " of J_A must have coefficient 1");
    if (!twist_is_trivial(c, ctx)) fail("current " + format_weight(c) + " has nontrivial twist");
  }
  const bool lie = lie_type_level(alg, ctx.k);
  GaloisContext gal(ctx);
  for (const auto& [w, z] : a.coeffs) {
    const std::string ws = format_weight(w);
    if (a.coefficient(contragredient(w, alg)) != z) fail("Z is not duality invariant at " + ws);
    for (int j : a.j_group) {
      if (a.coefficient(md.apply_current(j, w)) != z) fail("Z is not J_A invariant at " + ws);
      if (md.phi_exponent(j, w) != Rational(0)) fail(ws + " is not in the centralizer of J_A");
    }
    if (is_zero_weight(w)) continue;
    if (is_simple_current_weight(w, ctx)) {
      bool in_group = false;
      for (int j : a.j_group)
        if (apply_simple_current(alg.simple_currents[j], zero, ctx.k, alg) == w) in_group = true;
      if (!in_group || z != 1) fail("simple current " + ws + " must lie in J_A with coefficient 1");
      continue;
    }
    if (conformal_weight(w, ctx).denominator() != 1) fail(ws + " has non-integral h");
    else if (!is_candidate(w, gal, lie)) fail(ws + " is not a candidate");
    if (static_cast<double>(z) > md.qdim(w) + 1e-6) fail("Z exceeds the quantum dimension at " + ws);
  }
  const double s11 = md.s(zero, zero).real();
  const double g = 0.5 * s11;
  double total = 0;
  for (const auto& [w, z] : a.coeffs) total += static_cast<double>(z) * md.s(w, zero).real();
  const bool exotic = a.exotic();
  const Rational ha = a.h_min();
  for (const auto& mu : md.simples()) {
    double v = 0;
    for (const auto& [w, z] : a.coeffs) v += static_cast<double>(z) * md.s(w, mu).real();
    if (v <= -g) fail("positivity fails at " + format_weight(mu));
    else if (v > g && v < total - g) fail("gap condition fails at " + format_weight(mu));
    if (exotic && v > g && !is_simple_current_weight(mu, ctx) && ocneanu_simple(shift(mu), ha, ctx))
      fail("Ocneanu-simple weight " + format_weight(mu) + " appears in the survivor set");
  }
  return rep;
}

namespace {

ClassifyResult classify_with(const ModularData& md, const std::vector<std::vector<int>>* explicit_groups,
                             const ElimOptions& opts) {
  ClassifyResult out;
  out.ctx = md.context();
  out.thresholds = l_max(out.ctx);
  if (!out.thresholds.survives_step1) {
    out.verdict = VerdictKind::NoExotic;
    return out;
  }
  out.step2 = step2_check(out.ctx);
  if (!out.step2.survives) {
    out.verdict = VerdictKind::NoExotic;
    return out;
  }
  out.candidates = candidate_set(out.ctx, true);
  auto groups = explicit_groups ? *explicit_groups : twist_trivial_subgroups(out.ctx);
  bool unresolved = false;
  std::set<std::map<Weight, long long>> seen;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    auto r = eliminate_level(md, groups[gi], out.candidates, opts);
    const bool settled_none = r.kind == VerdictKind::NoExotic;
    if (r.kind == VerdictKind::Unresolved) unresolved = true;
    for (const auto& o : r.objects)
      if (seen.insert(o.coeffs).second) out.objects.push_back(o);
    out.runs.emplace_back(groups[gi], std::move(r));
    if (!explicit_groups && gi == 0 && settled_none) break;
  }
  if (unresolved)
    out.verdict = VerdictKind::Unresolved;
  else if (!out.objects.empty())
    out.verdict = VerdictKind::Identified;
  else
    out.verdict = VerdictKind::NoExotic;
  return out;
}

}  // namespace

ClassifyResult classify_level(const ModularData& md, const ElimOptions& opts) { return classify_with(md, nullptr, opts); }

ClassifyResult classify_level(const ModularData& md, const std::vector<std::vector<int>>& groups, const ElimOptions& opts) {
  for (const auto& g : groups)
    for (int j : g) {
      Weight c = md.apply_current(j, Weight(md.context().rank(), 0));
      if (!twist_is_trivial(c, md.context()))
        throw std::invalid_argument("current " + format_weight(c) + " has nontrivial twist at this level");
    }
  return classify_with(md, &groups, opts);
}

}  // namespace etale
