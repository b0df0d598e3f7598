#include "etale/report.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace etale {

json weight_json(const Weight& w) { return json(w); }

json rational_json(const Rational& q) { return json::array({q.numerator(), q.denominator()}); }

namespace {

Rational frac_part(const Rational& q) { return q - Rational(floor_div(q.numerator(), q.denominator())); }

json current_weights(const LevelContext& ctx, const std::vector<int>& group) {
  const auto& alg = ctx.algebra();
  Weight zero(alg.rank, 0);
  json out = json::array();
  for (int j : group) out.push_back(weight_json(apply_simple_current(alg.simple_currents[j], zero, ctx.k, alg)));
  return out;
}

json coeffs_json(const std::map<Weight, long long>& coeffs) {
  json out = json::array();
  for (const auto& [w, m] : coeffs) out.push_back({{"mult", m}, {"weight", weight_json(w)}});
  return out;
}

}  // namespace

json thresholds_json(const AlgebraPtr& alg) {
  json rows = json::array();
  std::vector<int> levels;
  for (const auto& r : step1_reports(alg)) {
    if (!r.survives_step1) continue;
    levels.push_back(r.k);
    rows.push_back({{"k", r.k}, {"kappa", r.kappa}, {"l_max", r.l_max}, {"lie_type", r.lie_type}, {"p", r.p}});
  }
  return {{"algebra", alg->name()},
          {"f_g", alg->f_g},
          {"kappa_max", kappa_max(*alg)},
          {"levels", levels},
          {"max", levels.empty() ? 0 : levels.back()},
          {"rows", rows},
          {"total", levels.size()}};
}

json step2_json(const Step2Report& r) {
  json wit = json::array();
  for (const auto& w : r.witnesses) wit.push_back(weight_json(w));
  return {{"k", r.k},
          {"l_max", r.l_max},
          {"lie_type", r.lie_type},
          {"survives", r.survives},
          {"window_c_orbits", r.window_c_orbits},
          {"window_cj_orbits", r.window_cj_orbits},
          {"window_weights", r.window_weights},
          {"witnesses", wit}};
}

json candidates_json(const LevelContext& ctx, bool include_h1) {
  ModularData md(ctx);
  auto cands = candidate_set(ctx, include_h1);
  const auto& alg = ctx.algebra();
  std::vector<int> all(alg.simple_currents.size());
  for (size_t j = 0; j < all.size(); ++j) all[j] = static_cast<int>(j);
  std::set<Weight> seen;
  json orbits = json::array();
  json items = json::array();
  for (const auto& w : cands) {
    items.push_back({{"h", rational_json(md.h(w))},
                     {"qdim", md.qdim(w)},
                     {"simple_current", is_simple_current_weight(w, ctx)},
                     {"weight", weight_json(w)}});
    if (seen.count(w)) continue;
    auto o = expand_orbit(w, OrbitSpec{1, true, all}, ctx);
    for (const auto& m : o.members) seen.insert(m);
    json members = json::array();
    for (const auto& m : o.members)
      if (std::binary_search(cands.begin(), cands.end(), m)) members.push_back(weight_json(m));
    orbits.push_back({{"members", members}, {"rep", weight_json(o.representative)}});
  }
  return {{"algebra", alg.name()},
          {"candidates", items},
          {"count", cands.size()},
          {"include_h1", include_h1},
          {"level", ctx.k},
          {"lie_type", lie_type_level(alg, ctx.k)},
          {"orbits", orbits}};
}

json etale_json(const EtaleObject& a) {
  return {{"coeffs", coeffs_json(a.coeffs)},
          {"describe", a.describe()},
          {"exotic", a.exotic()},
          {"jgroup", current_weights(a.ctx, a.j_group)}};
}

json certificate_json(const ModularData& md, const std::vector<int>& j_group, const ElimResult& r) {
  const auto& ctx = md.context();
  json probes = json::array();
  json steps = json::array();
  std::set<std::pair<Weight, long long>> seen;
  for (const auto& st : r.certificate) {
    json sp = json::array();
    for (const auto& p : st.probes) {
      sp.push_back({{"mu", weight_json(p.mu)}, {"x", p.x}});
      if (seen.insert({p.mu, p.x}).second) probes.push_back({{"mu", weight_json(p.mu)}, {"x", p.x}});
    }
    json re = json::array();
    re.push_back({{"value", st.s_one}, {"weight", weight_json(Weight(ctx.rank(), 0))}});
    for (size_t i = 0; i < st.re_s.size() && i < r.shape.orbits.size(); ++i)
      re.push_back({{"value", st.re_s[i]}, {"weight", weight_json(r.shape.orbits[i].rep)}});
    json ups = json::array();
    for (const auto& u : st.updates)
      ups.push_back({{"lower", u.lower}, {"orbit_rep", weight_json(u.orbit_rep)}, {"upper", u.upper}});
    steps.push_back({{"probes", sp}, {"re_s", re}, {"updates", ups}});
  }
  json bounds = json::array();
  for (const auto& o : r.shape.orbits)
    bounds.push_back({{"bound", o.upper},
                      {"lower", o.lower},
                      {"orbit_rep", weight_json(o.rep)},
                      {"orbit_size", o.members.size()}});
  json objs = json::array();
  for (const auto& o : r.objects) objs.push_back(etale_json(o));
  return {{"algebra", ctx.algebra().name()},
          {"box_nodes", r.box_nodes},
          {"box_used", r.box_used},
          {"bounds", bounds},
          {"jgroup", current_weights(ctx, j_group)},
          {"level", ctx.k},
          {"note", r.note},
          {"objects", objs},
          {"probes", probes},
          {"steps", steps},
          {"verdict", verdict_name(r.kind)}};
}

json classify_json(const ModularData& md, const ClassifyResult& r) {
  const auto& ctx = md.context();
  json out;
  if (!r.runs.empty()) {
    out = certificate_json(md, r.runs.front().first, r.runs.front().second);
  } else {
    out = {{"algebra", ctx.algebra().name()},
           {"bounds", json::array()},
           {"jgroup", json::array()},
           {"level", ctx.k},
           {"probes", json::array()}};
  }
  json runs = json::array();
  for (const auto& [g, e] : r.runs) runs.push_back(certificate_json(md, g, e));
  json objs = json::array();
  for (const auto& o : r.objects) objs.push_back(etale_json(o));
  out["runs"] = runs;
  out["objects"] = objs;
  out["verdict"] = verdict_name(r.verdict);
  out["l_max"] = r.thresholds.l_max;
  out["step1"] = r.thresholds.survives_step1;
  out["step2"] = r.thresholds.survives_step1 ? json(r.step2.survives) : json(nullptr);
  out["candidates"] = r.candidates.size();
  return out;
}

json survivors_json(const SurvivorTable& t, const std::vector<bool>& flags, const ModularData& md) {
  std::map<Rational, json> groups;
  for (size_t i = 0; i < t.entries.size(); ++i) {
    const auto& e = t.entries[i];
    Rational th = frac_part(md.h(e.mu));
    if (!groups.count(th)) groups[th] = json::array();
    groups[th].push_back({{"singleton", i < flags.size() && flags[i]}, {"value", e.value}, {"weight", weight_json(e.mu)}});
  }
  json g = json::array();
  for (auto& [th, entries] : groups) g.push_back({{"entries", entries}, {"theta", rational_json(th)}});
  return {{"algebra", md.algebra().name()},
          {"count", t.entries.size()},
          {"describe", t.algebra.describe()},
          {"groups", g},
          {"guard", t.guard},
          {"level", md.context().k},
          {"unit_value", t.unit_value}};
}

json branching_json(const BranchingMatrix& b) {
  json rows = json::array();
  for (const auto& r : b.rows)
    rows.push_back({{"ext_label", r.ext_label}, {"target_weight", weight_json(r.target_weight)},
                    {"terms", coeffs_json(r.terms)}});
  return {{"algebra", b.base.algebra().name()},
          {"level", b.base.k},
          {"notes", b.notes},
          {"rows", rows},
          {"target", b.target->name()}};
}

json verify_json(const VerifyReport& r) {
  return {{"completeness", r.completeness},
          {"galois_constant", r.galois_constant},
          {"issues", r.issues},
          {"ok", r.ok()},
          {"qdim_residual", r.qdim_residual},
          {"row_count", r.row_count},
          {"s_residual", r.s_residual},
          {"t_exact", r.t_exact},
          {"unit_row", r.unit_row},
          {"z_s_commutator", r.z_s_commutator},
          {"z_t_commutes", r.z_t_commutes}};
}

json verify_catalog_json(const std::vector<CatalogEntry>& entries, const std::optional<RowCache>& cache) {
  json out = {{"entries", json::array()}};
  bool all_ok = true;
  for (const auto& e : entries) {
    VerifyReport rep;
    try {
      auto b = to_matrix(e);
      ModularData md(LevelContext(b.base.alg, e.level), SMethod::Auto, cache);
      rep = verify_branching(b, md, *level1_data(b.target));
    } catch (const std::exception& ex) {
      rep.issues.push_back(ex.what());
      rep.row_count = false;
    }
    all_ok = all_ok && rep.ok();
    out["entries"].push_back({{"algebra", e.algebra}, {"level", e.level}, {"target", e.target}, {"verify", verify_json(rep)}});
  }
  out["ok"] = all_ok;
  return out;
}

JGroupChoice parse_jgroup(const std::string& text) {
  if (text == "auto") return {JGroupPolicy::Auto, 1};
  if (text == "full") return {JGroupPolicy::Full, 1};
  if (text == "trivial") return {JGroupPolicy::Trivial, 1};
  try {
    size_t pos = 0;
    int d = std::stoi(text, &pos);
    if (pos == text.size() && d >= 1) return {JGroupPolicy::Order, d};
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("jgroup must be auto, full, trivial or a positive subgroup order, got '" + text + "'");
}

std::optional<std::vector<std::vector<int>>> resolve_jgroups(const LevelContext& ctx, const JGroupChoice& choice) {
  const auto& alg = ctx.algebra();
  switch (choice.policy) {
    case JGroupPolicy::Auto: return std::nullopt;
    case JGroupPolicy::Trivial: return std::vector<std::vector<int>>{{0}};
    case JGroupPolicy::Full: {
      std::vector<int> all(alg.simple_currents.size());
      for (size_t j = 0; j < all.size(); ++j) all[j] = static_cast<int>(j);
      return std::vector<std::vector<int>>{all};
    }
    case JGroupPolicy::Order: return std::vector<std::vector<int>>{subgroup_indices(ctx, OrbitSpec{choice.d, false, {}})};
  }
  return std::nullopt;
}

ClassifyResult run_classify(const ModularData& md, const JGroupChoice& choice, const ElimOptions& opts) {
  auto groups = resolve_jgroups(md.context(), choice);
  return groups ? classify_level(md, *groups, opts) : classify_level(md, opts);
}

std::vector<AlgebraPtr> level1_targets(const Rational& c) {
  std::vector<AlgebraPtr> out;
  const std::vector<std::pair<Series, std::pair<int, int>>> ranges = {
      {Series::A, {1, 14}}, {Series::B, {3, 14}}, {Series::C, {2, 14}}, {Series::D, {4, 14}},
      {Series::E, {6, 8}},  {Series::F, {4, 4}},  {Series::G, {2, 2}}};
  for (const auto& [s, span] : ranges)
    for (int r = span.first; r <= span.second; ++r) {
      auto alg = build_algebra(s, r);
      if (LevelContext(alg, 1).c == c) out.push_back(alg);
    }
  return out;
}

std::vector<TargetSolve> solve_all_targets(const EtaleObject& a, const ModularData& md) {
  std::vector<TargetSolve> out;
  for (const auto& tgt : level1_targets(md.context().c)) {
    TargetSolve ts;
    ts.target = tgt;
    try {
      auto tmd = level1_data(tgt);
      auto res = solve_branching(a, md, *tmd);
      for (const auto& b : res.solutions) ts.reports.push_back(verify_branching(b, md, *tmd));
      ts.result = std::move(res);
    } catch (const std::exception& e) {
      ts.error = e.what();
    }
    out.push_back(std::move(ts));
  }
  return out;
}

json target_solve_json(const TargetSolve& t) {
  json sols = json::array();
  if (t.result)
    for (size_t i = 0; i < t.result->solutions.size(); ++i)
      sols.push_back({{"branching", branching_json(t.result->solutions[i])}, {"verify", verify_json(t.reports[i])}});
  return {{"ambiguous", t.result ? t.result->ambiguous : false},
          {"error", t.error},
          {"labelings", t.result ? t.result->labelings : 0},
          {"solutions", sols},
          {"target", t.target->name()}};
}

json sweep_level(const AlgebraPtr& alg, int k, const SweepOptions& opts) {
  LevelContext ctx(alg, k);
  auto th = l_max(ctx);
  json out = {{"k", k},
              {"kappa", ctx.kappa},
              {"l_max", th.l_max},
              {"lie_type", th.lie_type},
              {"step1", th.survives_step1},
              {"step2", nullptr},
              {"verdict", verdict_name(VerdictKind::NoExotic)}};
  if (!th.survives_step1) {
    out["reason"] = "step1";
    return out;
  }
  auto s2 = step2_check(ctx);
  out["step2"] = s2.survives;
  out["step2_witnesses"] = s2.witnesses.size();
  if (!s2.survives) {
    out["reason"] = "step2";
    return out;
  }
  ModularData md(ctx, SMethod::Auto, opts.cache);
  auto cr = run_classify(md, opts.jgroup, opts.elim);
  out["reason"] = "step3";
  out["candidates"] = cr.candidates.size();
  out["verdict"] = verdict_name(cr.verdict);
  json cert = classify_json(md, cr);
  out["certificate"] = cert;
  json objs = json::array();
  for (const auto& o : cr.objects) {
    json oj = etale_json(o);
    if (opts.solve && cr.verdict == VerdictKind::Identified) {
      json br = json::array();
      for (const auto& ts : solve_all_targets(o, md))
        if (ts.result) br.push_back(target_solve_json(ts));
      oj["branching"] = br;
    }
    objs.push_back(oj);
  }
  out["objects"] = objs;
  return out;
}

json sweep(const AlgebraPtr& alg, int from, int to, const SweepOptions& opts, const std::function<void(const json&)>& on_level) {
  if (from < 1 || to < from) throw std::invalid_argument("level range must satisfy 1 <= from <= to");
  const int n = to - from + 1;
  std::vector<json> results(static_cast<size_t>(n));
  std::vector<bool> ready(static_cast<size_t>(n), false);
  std::vector<std::string> errors(static_cast<size_t>(n));
  std::mutex m;
  std::condition_variable cv;
  std::atomic<int> next{0};
  const std::string tag = "sweep/" + alg->name() + "/b" + std::to_string(opts.elim.probe_budget) + "-j" +
                          std::to_string(static_cast<int>(opts.jgroup.policy)) + "." + std::to_string(opts.jgroup.d) +
                          "-s" + std::to_string(opts.solve) + "/";

  auto worker = [&]() {
    for (int i = next++; i < n; i = next++) {
      const int k = from + i;
      json r;
      std::string err;
      try {
        std::optional<std::string> cached;
        if (opts.cache) cached = opts.cache->load_text(tag + std::to_string(k) + ".json");
        if (cached) {
          r = json::parse(*cached);
        } else {
          r = sweep_level(alg, k, opts);
          if (opts.cache) opts.cache->store_text(tag + std::to_string(k) + ".json", r.dump() + "\n");
        }
      } catch (const std::exception& e) {
        err = e.what();
      }
      std::lock_guard<std::mutex> lock(m);
      results[static_cast<size_t>(i)] = std::move(r);
      errors[static_cast<size_t>(i)] = err;
      ready[static_cast<size_t>(i)] = true;
      cv.notify_all();
    }
  };

  const int jobs = std::max(1, std::min(opts.jobs, n));
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

  json levels = json::array();
  std::vector<int> s1, s2, identified, unresolved;
  std::string first_error;
  for (int i = 0; i < n; ++i) {
    {
      std::unique_lock<std::mutex> lock(m);
      cv.wait(lock, [&] { return ready[static_cast<size_t>(i)]; });
    }
    if (!errors[static_cast<size_t>(i)].empty()) {
      if (first_error.empty()) first_error = "level " + std::to_string(from + i) + ": " + errors[static_cast<size_t>(i)];
      continue;
    }
    const json& r = results[static_cast<size_t>(i)];
    const int k = r["k"];
    if (r["step1"].get<bool>()) s1.push_back(k);
    if (r["step2"].is_boolean() && r["step2"].get<bool>()) s2.push_back(k);
    if (r["verdict"] == verdict_name(VerdictKind::Identified)) identified.push_back(k);
    if (r["verdict"] == verdict_name(VerdictKind::Unresolved)) unresolved.push_back(k);
    if (on_level) on_level(r);
    levels.push_back(r);
  }
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw std::runtime_error(first_error);
  return {{"algebra", alg->name()},
          {"from", from},
          {"identified", identified},
          {"levels", levels},
          {"step1_levels", s1},
          {"step2_levels", s2},
          {"to", to},
          {"unresolved", unresolved}};
}

}  // namespace etale
