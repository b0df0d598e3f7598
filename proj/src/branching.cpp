#include "etale/branching.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace etale {

namespace {

bool is_zero_weight(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Weight zero_of(const ModularData& md) { return Weight(md.context().rank(), 0); }

}  // namespace

const SurvivorEntry* SurvivorTable::find(const Weight& mu) const {
  for (const auto& e : entries)
    if (e.mu == mu) return &e;
  return nullptr;
}

std::map<Rational, std::vector<size_t>> SurvivorTable::groups() const {
  std::map<Rational, std::vector<size_t>> g;
  for (size_t i = 0; i < entries.size(); ++i) g[entries[i].t_exp].push_back(i);
  return g;
}

std::vector<bool> singleton_flags(const SurvivorTable& table, const ModularData& md) {
  const auto& ctx = md.context();
  const auto& alg = ctx.algebra();
  std::map<Weight, size_t> pos;
  for (size_t i = 0; i < table.entries.size(); ++i) pos[table.entries[i].mu] = i;
  std::vector<bool> flag(table.entries.size(), false);
  Weight zero = zero_of(md);
  for (size_t i = 0; i < table.entries.size(); ++i)
    if (table.entries[i].value < 2 * table.unit_value - table.guard) flag[i] = true;
  for (int j : table.algebra.j_group) {
    auto it = pos.find(apply_simple_current(alg.simple_currents[j], zero, ctx.k, alg));
    if (it != pos.end()) flag[it->second] = true;
  }
  std::vector<long long> ells;
  for (long long l = 1; l < ctx.galois_modulus; ++l)
    if (std::gcd(l, ctx.galois_modulus) == 1) ells.push_back(l);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < flag.size(); ++i) {
      if (!flag[i]) continue;
      const Weight& mu = table.entries[i].mu;
      std::vector<Weight> images = {contragredient(mu, alg)};
      for (long long l : ells) images.push_back(unshift(galois_act(l, shift(mu), ctx).weight));
      for (const auto& w : images) {
        auto it = pos.find(w);
        if (it != pos.end() && !flag[it->second]) {
          flag[it->second] = true;
          grew = true;
        }
      }
    }
  }
  return flag;
}

SurvivorTable survivor_table(const EtaleObject& a, const ModularData& md) {
  SurvivorTable t;
  t.algebra = a;
  Weight zero = zero_of(md);
  const double s11 = md.s(zero, zero).real();
  t.guard = 0.5 * s11;
  for (const auto& mu : md.simples()) {
    double v = 0;
    for (const auto& [w, z] : a.coeffs) v += static_cast<double>(z) * md.s(w, mu).real();
    if (is_zero_weight(mu)) t.unit_value = v;
    if (v > t.guard) t.entries.push_back({mu, v, md.t_exponent(mu), false});
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const SurvivorEntry& x, const SurvivorEntry& y) {
    if (x.t_exp != y.t_exp) return x.t_exp < y.t_exp;
    if (std::abs(x.value - y.value) > 1e-9) return x.value < y.value;
    return x.mu < y.mu;
  });
  auto flags = singleton_flags(t, md);
  for (size_t i = 0; i < flags.size(); ++i) t.entries[i].singleton = flags[i];
  return t;
}

std::string ext_label_of(const Weight& w) {
  if (is_zero_weight(w)) return "1";
  int idx = -1, count = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) {
      ++count;
      idx = static_cast<int>(i);
    }
  if (count == 1 && w[idx] == 1) return "Lambda_" + std::to_string(idx + 1);
  return format_weight(w);
}

Weight target_weight_of(const std::string& label, int rank) {
  Weight w(rank, 0);
  if (label == "1") return w;
  if (label.rfind("Lambda_", 0) == 0) {
    int i = std::stoi(label.substr(7));
    if (i == 0) return w;
    if (i < 1 || i > rank) throw std::invalid_argument("label " + label + " out of range");
    w[i - 1] = 1;
    return w;
  }
  return parse_weight(label, rank);
}

namespace {

using Row = std::map<Weight, long long>;

struct Solver {
  const EtaleObject& a;
  const ModularData& md;
  const ModularData& tgt;
  SurvivorTable table;
  std::map<Weight, size_t> pos;
  std::vector<double> s_one;  // S_{mu,1} per survivor
  std::vector<double> target_dims;
  double tol = 1e-9;
  size_t n_target = 0;
  std::vector<std::vector<Row>> solutions;
  size_t max_solutions = 64;

  Solver(const EtaleObject& alg, const ModularData& m, const ModularData& t) : a(alg), md(m), tgt(t) {
    table = survivor_table(a, md);
    Weight zero = zero_of(md);
    for (size_t i = 0; i < table.entries.size(); ++i) {
      pos[table.entries[i].mu] = i;
      s_one.push_back(md.s(table.entries[i].mu, zero).real());
    }
    Weight tz = zero_of(tgt);
    for (const auto& x : tgt.simples()) target_dims.push_back(tgt.s(x, tz).real());
    n_target = tgt.size();
    tol = 1e-8 * std::max(1.0, table.unit_value);
  }

  double row_dim(const Row& r) const {
    double d = 0;
    for (const auto& [w, z] : r) d += static_cast<double>(z) * s_one[pos.at(w)];
    return d;
  }

  bool matches_target_dim(double d) const {
    return std::any_of(target_dims.begin(), target_dims.end(), [&](double x) { return std::abs(x - d) < 1e-7; });
  }

  std::vector<Weight> ja_orbit(const Weight& w) const {
    std::set<Weight> s;
    for (int j : a.j_group) s.insert(md.apply_current(j, w));
    return {s.begin(), s.end()};
  }

  std::vector<double> residual(const std::vector<Row>& rows) const {
    std::vector<double> r(table.entries.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = table.entries[i].value;
    for (const auto& row : rows) {
      double d = row_dim(row);
      for (const auto& [w, z] : row) r[pos.at(w)] -= d * static_cast<double>(z);
    }
    return r;
  }

  // rows M(lambda) for a singleton seed
  std::vector<Row> seed_rows(const Weight& lam, const std::set<Weight>& covered) const {
    const size_t li = pos.at(lam);
    const Rational th = table.entries[li].t_exp;
    const double target = table.entries[li].value;
    std::set<Weight> support;
    for (const auto& [w, z] : a.coeffs)
      for (const auto& [nu, n] : md.fusion_product(w, lam)) support.insert(nu);
    auto lam_orbit = ja_orbit(lam);
    std::set<Weight> used(lam_orbit.begin(), lam_orbit.end());
    struct Var {
      std::vector<Weight> members;
      double weight;
      long long cap;
    };
    std::vector<Var> vars;
    for (const auto& mu : support) {
      auto it = pos.find(mu);
      if (it == pos.end() || used.count(mu)) continue;
      const auto& e = table.entries[it->second];
      if (e.t_exp != th) continue;
      auto orb = ja_orbit(mu);
      used.insert(orb.begin(), orb.end());
      bool blocked = false, single = false;
      double w = 0;
      long long cap = static_cast<long long>(std::floor(md.qdim(mu) + 1e-7));
      for (const auto& x : orb) {
        const auto& ex = table.entries[pos.at(x)];
        if (ex.singleton) {
          single = true;
          if (covered.count(x) || std::abs(ex.value - target) > tol) blocked = true;
        }
        w += s_one[pos.at(x)];
        cap = std::min<long long>(cap, static_cast<long long>(std::floor(ex.value / target + 1e-7)));
      }
      if (blocked) continue;
      if (single) cap = std::min<long long>(cap, 1);
      if (cap > 0) vars.push_back({orb, w, cap});
    }
    double base = 0;
    for (const auto& x : lam_orbit) base += s_one[pos.at(x)];
    std::vector<Row> out;
    std::vector<long long> z(vars.size(), 0);
    std::function<void(size_t, double)> dfs = [&](size_t i, double sum) {
      if (sum > target + tol || out.size() > 256) return;
      if (i == vars.size()) {
        if (std::abs(sum - target) <= tol) {
          Row r;
          for (const auto& x : lam_orbit) r[x] = 1;
          for (size_t v = 0; v < vars.size(); ++v)
            if (z[v] > 0)
              for (const auto& x : vars[v].members) r[x] = z[v];
          out.push_back(r);
        }
        return;
      }
      for (long long c = 0; c <= vars[i].cap; ++c) {
        z[i] = c;
        dfs(i + 1, sum + static_cast<double>(c) * vars[i].weight);
      }
      z[i] = 0;
    };
    dfs(0, base);
    return out;
  }

  std::optional<Row> translate(const Row& r, int j, bool dual) const {
    const auto& alg = md.algebra();
    Row out;
    std::optional<Rational> th;
    for (const auto& [w, z] : r) {
      Weight x = dual ? contragredient(w, alg) : w;
      x = md.apply_current(j, x);
      auto it = pos.find(x);
      if (it == pos.end()) return std::nullopt;
      const Rational t = table.entries[it->second].t_exp;
      if (th && *th != t) return std::nullopt;
      th = t;
      out[x] = z;
    }
    return out;
  }

  void add_with_images(std::vector<Row>& rows, std::set<Weight>& covered, const Row& r) const {
    std::vector<Row> pending = {r};
    while (!pending.empty()) {
      Row cur = pending.back();
      pending.pop_back();
      if (std::find(rows.begin(), rows.end(), cur) != rows.end()) continue;
      bool clash = false;
      for (const auto& [w, z] : cur)
        if (table.entries[pos.at(w)].singleton && covered.count(w)) clash = true;
      if (clash) continue;
      rows.push_back(cur);
      for (const auto& [w, z] : cur)
        if (table.entries[pos.at(w)].singleton) covered.insert(w);
      for (size_t j = 0; j < md.algebra().simple_currents.size(); ++j)
        for (bool dual : {false, true}) {
          auto t = translate(cur, static_cast<int>(j), dual);
          if (t) pending.push_back(*t);
        }
    }
  }

  void residual_rows(const std::vector<Row>& rows) {
    auto r = residual(rows);
    std::vector<size_t> open;
    for (size_t i = 0; i < r.size(); ++i) {
      if (r[i] < -tol) return;
      if (r[i] > tol) open.push_back(i);
    }
    const size_t need = n_target > rows.size() ? n_target - rows.size() : 0;
    if (open.empty()) {
      if (need == 0) record(rows);
      return;
    }
    if (need == 0) return;
    // candidate rows: J_A-invariant, one twist class, inside the open survivors
    std::map<Rational, std::vector<std::vector<Weight>>> classes;
    std::set<Weight> seen;
    for (size_t i : open) {
      const Weight& mu = table.entries[i].mu;
      if (seen.count(mu)) continue;
      auto orb = ja_orbit(mu);
      seen.insert(orb.begin(), orb.end());
      classes[table.entries[i].t_exp].push_back(orb);
    }
    std::vector<Row> cands;
    for (const auto& [th, orbs] : classes) {
      std::vector<long long> z(orbs.size(), 0), cap(orbs.size());
      for (size_t o = 0; o < orbs.size(); ++o) {
        cap[o] = static_cast<long long>(std::floor(md.qdim(orbs[o][0]) + 1e-7));
        double rmin = 1e300;
        for (const auto& x : orbs[o]) rmin = std::min(rmin, r[pos.at(x)]);
        cap[o] = std::min<long long>(cap[o], static_cast<long long>(std::floor(std::sqrt(rmin / s_one[pos.at(orbs[o][0])]) + 1e-7)));
      }
      std::function<void(size_t)> dfs = [&](size_t o) {
        if (cands.size() > 4096) return;
        if (o == orbs.size()) {
          Row row;
          for (size_t q = 0; q < orbs.size(); ++q)
            if (z[q] > 0)
              for (const auto& x : orbs[q]) row[x] = z[q];
          if (row.empty()) return;
          double d = row_dim(row);
          if (!matches_target_dim(d)) return;
          for (const auto& [x, m] : row)
            if (d * static_cast<double>(m) > r[pos.at(x)] + tol) return;
          cands.push_back(row);
          return;
        }
        for (long long c = 0; c <= cap[o]; ++c) {
          z[o] = c;
          dfs(o + 1);
        }
        z[o] = 0;
      };
      dfs(0);
    }
    std::vector<Row> chosen;
    std::function<void(size_t, std::vector<double>&)> pick = [&](size_t start, std::vector<double>& res) {
      if (solutions.size() >= max_solutions) return;
      if (chosen.size() == need) {
        for (size_t i : open)
          if (std::abs(res[i]) > tol) return;
        auto all = rows;
        all.insert(all.end(), chosen.begin(), chosen.end());
        record(all);
        return;
      }
      for (size_t c = start; c < cands.size(); ++c) {
        double d = row_dim(cands[c]);
        bool ok = true;
        for (const auto& [x, m] : cands[c])
          if (res[pos.at(x)] - d * static_cast<double>(m) < -tol) ok = false;
        if (!ok) continue;
        for (const auto& [x, m] : cands[c]) res[pos.at(x)] -= d * static_cast<double>(m);
        chosen.push_back(cands[c]);
        pick(c, res);
        chosen.pop_back();
        for (const auto& [x, m] : cands[c]) res[pos.at(x)] += d * static_cast<double>(m);
      }
    };
    pick(0, r);
  }

  void record(std::vector<Row> rows) {
    std::sort(rows.begin(), rows.end());
    if (std::find(solutions.begin(), solutions.end(), rows) == solutions.end()) solutions.push_back(rows);
  }

  void solve(std::vector<Row> rows, std::set<Weight> covered) {
    if (solutions.size() >= max_solutions) return;
    const SurvivorEntry* seed = nullptr;
    std::vector<size_t> order(table.entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      Rational hx = md.h(table.entries[x].mu), hy = md.h(table.entries[y].mu);
      if (hx != hy) return hx < hy;
      return table.entries[x].mu < table.entries[y].mu;
    });
    for (size_t i : order)
      if (table.entries[i].singleton && !covered.count(table.entries[i].mu)) {
        seed = &table.entries[i];
        break;
      }
    if (!seed) {
      residual_rows(rows);
      return;
    }
    auto options = seed_rows(seed->mu, covered);
    for (const auto& opt : options) {
      auto r2 = rows;
      auto c2 = covered;
      add_with_images(r2, c2, opt);
      if (!c2.count(seed->mu)) continue;
      solve(r2, c2);
    }
  }
};

Eigen::MatrixXd row_matrix(const std::vector<BranchRow>& rows, const ModularData& md) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(md.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [w, z] : rows[i].terms) b(static_cast<Eigen::Index>(i), md.index_of(w)) = static_cast<double>(z);
  return b;
}

double s_residual(const Eigen::MatrixXd& b, const std::vector<Eigen::Index>& tgt_index, const ModularData& md,
                  const ModularData& tgt) {
  const auto& S = md.matrix();
  const auto& Se = tgt.matrix();
  Eigen::MatrixXcd lhs = b.cast<cplx>() * S;
  const Eigen::Index n = b.rows();
  Eigen::MatrixXcd se(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) se(i, j) = Se(tgt_index[i], tgt_index[j]);
  Eigen::MatrixXcd rhs = se * b.cast<cplx>();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

// assignments of rows to target simples with matching dimension and twist, checked against BS = S^e B
long long assign_labels(std::vector<BranchRow>& rows, const ModularData& md, const ModularData& tgt) {
  const size_t n = rows.size();
  if (n != tgt.size()) return 0;
  Weight zero = zero_of(md), tz = zero_of(tgt);
  std::vector<double> dims(n);
  std::vector<std::optional<Rational>> th(n);
  for (size_t i = 0; i < n; ++i) {
    for (const auto& [w, z] : rows[i].terms) {
      dims[i] += static_cast<double>(z) * md.s(w, zero).real();
      th[i] = md.t_exponent(w);
    }
  }
  const auto& ts = tgt.simples();
  std::vector<std::vector<size_t>> options(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t x = 0; x < ts.size(); ++x) {
      bool unit_ok = is_zero_weight(ts[x]) == (rows[i].terms.count(zero) > 0);
      if (unit_ok && std::abs(tgt.s(ts[x], tz).real() - dims[i]) < 1e-7 && th[i] && tgt.t_exponent(ts[x]) == *th[i])
        options[i].push_back(x);
    }
  // tie-break among valid labelings: most rows whose lowest conformal weight equals h^e exactly
  std::vector<Rational> h_low(n);
  for (size_t i = 0; i < n; ++i) {
    bool any = false;
    for (const auto& [w, z] : rows[i].terms) {
      Rational h = md.h(w);
      if (!any || h < h_low[i]) h_low[i] = h;
      any = true;
    }
  }
  Eigen::MatrixXd b = row_matrix(rows, md);
  std::vector<Eigen::Index> pick(n);
  std::vector<bool> taken(ts.size(), false);
  std::vector<Eigen::Index> first;
  long long count = 0;
  size_t best = 0;
  std::function<void(size_t)> go = [&](size_t i) {
    if (count >= 1024) return;
    if (i == n) {
      if (s_residual(b, pick, md, tgt) < 1e-8) {
        size_t score = 0;
        for (size_t r = 0; r < n; ++r)
          if (tgt.h(ts[static_cast<size_t>(pick[r])]) == h_low[r]) ++score;
        if (!count || score > best) {
          first = pick;
          best = score;
        }
        ++count;
      }
      return;
    }
    for (size_t x : options[i]) {
      if (taken[x]) continue;
      taken[x] = true;
      pick[i] = static_cast<Eigen::Index>(x);
      go(i + 1);
      taken[x] = false;
    }
  };
  go(0);
  if (count) {
    for (size_t i = 0; i < n; ++i) {
      rows[i].target_weight = ts[static_cast<size_t>(first[i])];
      rows[i].ext_label = ext_label_of(rows[i].target_weight);
    }
    std::sort(rows.begin(), rows.end(), [&](const BranchRow& x, const BranchRow& y) {
      auto key = [](const Weight& w) {
        for (size_t i = 0; i < w.size(); ++i)
          if (w[i]) return i + 1;
        return size_t{0};
      };
      return key(x.target_weight) < key(y.target_weight);
    });
  }
  return count;
}

}  // namespace

SolveResult solve_branching(const EtaleObject& a, const ModularData& md, const ModularData& target) {
  if (!check_etale_necessary(a, md).ok) throw std::invalid_argument("algebra object fails the necessary conditions");
  Solver solver(a, md, target);
  Row unit(a.coeffs.begin(), a.coeffs.end());
  std::vector<Row> rows;
  std::set<Weight> covered;
  solver.add_with_images(rows, covered, unit);
  solver.solve(rows, covered);
  SolveResult res;
  for (const auto& sol : solver.solutions) {
    BranchingMatrix b;
    b.base = md.context();
    b.target = target.context().alg;
    for (const auto& r : sol) b.rows.push_back({"", {}, r});
    long long n = assign_labels(b.rows, md, target);
    if (!n) continue;
    if (res.solutions.empty()) res.labelings = n;
    if (n > 1) b.notes.push_back(std::to_string(n) + " label assignments satisfy BS = S^e B");
    res.solutions.push_back(std::move(b));
  }
  if (res.solutions.empty()) throw std::runtime_error("no-solution: no branching matrix balances the survivor values");
  res.ambiguous = res.solutions.size() > 1;
  if (res.ambiguous) res.note = "ambiguous-solution: " + std::to_string(res.solutions.size()) + " branching matrices";
  return res;
}

bool VerifyReport::ok(double s_tol, double comp_tol) const {
  return s_residual < s_tol && t_exact && std::abs(completeness - 1) < comp_tol && z_s_commutator < 1e-7 && z_t_commutes &&
         galois_constant && unit_row && row_count && qdim_residual < 1e-7;
}

VerifyReport verify_branching(const BranchingMatrix& b, const ModularData& md, const ModularData& target) {
  VerifyReport rep;
  const auto& ctx = md.context();
  Weight zero = zero_of(md), tz = zero_of(target);
  if (b.rows.size() != target.size()) {
    rep.row_count = false;
    rep.issues.push_back("row count " + std::to_string(b.rows.size()) + " differs from target rank " + std::to_string(target.size()));
  }
  std::vector<Eigen::Index> idx;
  for (const auto& r : b.rows) {
    if (target.index_of(r.target_weight) < 0) throw std::invalid_argument("row label outside the target");
    idx.push_back(target.index_of(r.target_weight));
    if (r.terms.count(zero) != is_zero_weight(r.target_weight) || (r.terms.count(zero) && r.terms.at(zero) != 1)) {
      rep.unit_row = false;
      rep.issues.push_back("row " + r.ext_label + " violates B_{M,1} = delta");
    }
  }
  Eigen::MatrixXd bm = row_matrix(b.rows, md);
  if (b.rows.size() == target.size()) rep.s_residual = s_residual(bm, idx, md, target);
  else rep.s_residual = 1e300;
  const bool same_c = md.context().c == target.context().c;
  for (const auto& r : b.rows) {
    const Rational te = same_c ? target.t_exponent(r.target_weight) : Rational(0);
    double d = 0;
    for (const auto& [w, z] : r.terms) {
      d += static_cast<double>(z) * md.s(w, zero).real();
      if (!same_c || md.t_exponent(w) != te) {
        rep.t_exact = false;
        rep.issues.push_back("T mismatch at " + format_weight(w) + " in row " + r.ext_label);
      }
    }
    rep.qdim_residual = std::max(rep.qdim_residual, std::abs(d - target.s(r.target_weight, tz).real()));
  }
  rep.completeness = completeness_sum(b, md);
  auto z = modular_invariant_of(b, md);
  const auto& S = md.matrix();
  const Eigen::Index n = S.rows();
  Eigen::MatrixXcd zm(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) zm(i, j) = static_cast<double>(z[i][j]);
  rep.z_s_commutator = (zm * S - S * zm).cwiseAbs().maxCoeff();
  const auto& sim = md.simples();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (z[i][j] && md.t_exponent(sim[i]) != md.t_exponent(sim[j])) rep.z_t_commutes = false;
  GaloisContext gal(ctx);
  for (const auto& r : b.rows)
    for (long long l = 1; l < ctx.galois_modulus; ++l) {
      if (std::gcd(l, ctx.galois_modulus) != 1) continue;
      std::optional<int> sign;
      for (const auto& [w, m] : r.terms) {
        int s = gal.parity(l, shift(w));
        if (sign && *sign != s) {
          rep.galois_constant = false;
          rep.issues.push_back("Galois parity varies in row " + r.ext_label);
        }
        sign = s;
      }
    }
  if (rep.s_residual >= 1e-8) {
    std::ostringstream os;
    os << "S residual " << rep.s_residual;
    rep.issues.push_back(os.str());
  }
  return rep;
}

IntMatrix modular_invariant_of(const BranchingMatrix& b, const ModularData& md) {
  const size_t n = md.size();
  IntMatrix z(n, std::vector<long long>(n, 0));
  for (const auto& r : b.rows)
    for (const auto& [x, mx] : r.terms)
      for (const auto& [y, my] : r.terms) z[md.index_of(x)][md.index_of(y)] += mx * my;
  return z;
}

bool check_modular_invariant(const IntMatrix& z, const ModularData& md, double tol) {
  const size_t n = md.size();
  if (z.size() != n) return false;
  for (const auto& row : z) {
    if (row.size() != n) return false;
    for (long long v : row)
      if (v < 0) return false;
  }
  if (z[0][0] != 1) return false;
  const auto& sim = md.simples();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (z[i][j] && md.t_exponent(sim[i]) != md.t_exponent(sim[j])) return false;
  const auto& S = md.matrix();
  Eigen::MatrixXcd zm(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) zm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(z[i][j]);
  return (zm * S - S * zm).cwiseAbs().maxCoeff() < tol;
}

std::vector<int> simple_current_invariant_divisors(const LevelContext& ctx) {
  const auto& alg = ctx.algebra();
  if (alg.series != Series::A) throw std::invalid_argument("simple-current invariants are implemented for the A series");
  const long long rb = alg.rank + 1;
  const long long kb = (static_cast<long long>(ctx.k) * rb) % 2 ? ctx.kappa : ctx.k;
  std::vector<int> out;
  for (long long d = 1; d <= rb; ++d) {
    if (rb % d) continue;
    if (d % 2 == 0 && (rb * kb / d) % 2) continue;
    out.push_back(static_cast<int>(d));
  }
  return out;
}

IntMatrix simple_current_invariant(const ModularData& md, int d) {
  const auto& ctx = md.context();
  const auto& alg = ctx.algebra();
  auto ds = simple_current_invariant_divisors(ctx);
  if (std::find(ds.begin(), ds.end(), d) == ds.end()) throw std::invalid_argument("divisor is not admissible");
  const long long rb = alg.rank + 1;
  const long long kb = (static_cast<long long>(ctx.k) * rb) % 2 ? ctx.kappa : ctx.k;
  const size_t n = md.size();
  IntMatrix z(n, std::vector<long long>(n, 0));
  const auto& sim = md.simples();
  for (size_t i = 0; i < n; ++i) {
    const Weight& lam = sim[i];
    const long long t = t_index(lam);
    for (long long j = 1; j <= d; ++j) {
      // t + j rb kb / (2d) divisible by d
      const long long num = 2 * d * t + j * rb * kb;
      if (num % (2 * d * d)) continue;
      Weight mu = md.apply_current(alg.a_current(static_cast<int>((j * rb / d) % rb)), lam);
      z[i][md.index_of(mu)] += 1;
    }
  }
  return z;
}

IntMatrix a1_level16_exceptional(const ModularData& md) {
  const auto& ctx = md.context();
  if (ctx.algebra().series != Series::A || ctx.rank() != 1 || ctx.k != 16)
    throw std::invalid_argument("the exceptional invariant lives at (A1,16)");
  const size_t n = md.size();
  IntMatrix z(n, std::vector<long long>(n, 0));
  auto add = [&](std::vector<int> xs, std::vector<int> ys) {
    for (int x : xs)
      for (int y : ys) z[md.index_of({x})][md.index_of({y})] += 1;
  };
  add({0, 16}, {0, 16});
  add({4, 12}, {4, 12});
  add({6, 10}, {6, 10});
  add({8}, {8});
  add({2, 14}, {8});
  add({8}, {2, 14});
  return z;
}

double completeness_sum(const BranchingMatrix& b, const ModularData& md) {
  Weight zero = zero_of(md);
  double total = 0;
  for (const auto& r : b.rows) {
    double d = 0;
    for (const auto& [w, z] : r.terms) d += static_cast<double>(z) * md.s(w, zero).real();
    total += d * d;
  }
  return total;
}

bool completeness_check(const BranchingMatrix& b, const ModularData& md, double tol) {
  return std::abs(completeness_sum(b, md) - 1) < tol;
}

namespace {

nlohmann::json entry_json(const CatalogEntry& e) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : e.rows) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, m] : r.terms) terms.push_back({{"mult", m}, {"weight", w}});
    rows.push_back({{"ext_label", r.ext_label}, {"terms", terms}});
  }
  return {{"algebra", e.algebra}, {"level", e.level}, {"rows", rows}, {"target", e.target}};
}

}  // namespace

std::string catalog_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) arr.push_back(entry_json(e));
  return arr.dump(1) + "\n";
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (!j.is_array()) throw std::runtime_error("catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const auto& e : j) {
    CatalogEntry c;
    c.algebra = e.at("algebra").get<std::string>();
    c.level = e.at("level").get<int>();
    c.target = e.at("target").get<std::string>();
    for (const auto& r : e.at("rows")) {
      BranchRow row;
      row.ext_label = r.at("ext_label").get<std::string>();
      for (const auto& t : r.at("terms")) row.terms[t.at("weight").get<Weight>()] += t.at("mult").get<long long>();
      c.rows.push_back(std::move(row));
    }
    out.push_back(std::move(c));
  }
  return out;
}

void write_catalog(const std::string& path, const std::vector<CatalogEntry>& entries) {
  atomic_write(path, catalog_json(entries));
}

BranchingMatrix to_matrix(const CatalogEntry& e) {
  BranchingMatrix b;
  b.base = LevelContext(parse_algebra(e.algebra), e.level);
  b.target = parse_algebra(e.target);
  for (auto r : e.rows) {
    r.target_weight = target_weight_of(r.ext_label, b.target->rank);
    b.rows.push_back(std::move(r));
  }
  return b;
}

CatalogEntry to_entry(const BranchingMatrix& b) {
  CatalogEntry e;
  e.algebra = b.base.algebra().name();
  e.level = b.base.k;
  e.target = b.target->name();
  e.rows = b.rows;
  return e;
}

bool same_rows(const BranchingMatrix& a, const BranchingMatrix& b) {
  std::vector<std::map<Weight, long long>> x, y;
  for (const auto& r : a.rows) x.push_back(r.terms);
  for (const auto& r : b.rows) y.push_back(r.terms);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace etale
