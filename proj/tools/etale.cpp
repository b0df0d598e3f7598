#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "etale/report.hpp"

using namespace etale;

namespace {

constexpr int kOk = 0;
constexpr int kUnresolved = 2;
constexpr int kVerifyFailed = 3;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && !v.empty() && v.size() <= 12 && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number_integer(); })) {
    Weight w = v.get<Weight>();
    return format_weight(w);
  }
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(6) << v.get<double>();
    return os.str();
  }
  return v.dump();
}

std::string theta_cell(const json& t) {
  const auto num = std::to_string(t[0].get<long long>());
  return t[1].get<long long>() == 1 ? num : num + "/" + std::to_string(t[1].get<long long>());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void render(const json& j, const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << j.dump(1) << "\n";
    return;
  }
  if (format == "csv") {
    for (size_t i = 0; i < t.headers.size(); ++i) os << (i ? "," : "") << csv_field(t.headers[i]);
    os << "\n";
    for (const auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << "\n";
    }
    return;
  }
  std::vector<size_t> width(t.headers.size());
  for (size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
  for (const auto& r : t.rows)
    for (size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t i = 0; i < r.size(); ++i) {
      os << (i ? "  " : "");
      if (i + 1 < r.size())
        os << std::left << std::setw(static_cast<int>(width[i])) << r[i];
      else
        os << r[i];
    }
    os << "\n";
  };
  line(t.headers);
  std::vector<std::string> rule;
  for (size_t w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : t.rows) line(r);
}

Table thresholds_table(const json& j) {
  Table t{{"k", "kappa", "p", "l_max", "lie_type"}, {}};
  for (const auto& r : j["rows"])
    t.rows.push_back({cell(r["k"]), cell(r["kappa"]), cell(r["p"]), cell(r["l_max"]), cell(r["lie_type"])});
  return t;
}

Table candidates_table(const json& j) {
  Table t{{"weight", "h", "qdim", "simple_current"}, {}};
  for (const auto& c : j["candidates"])
    t.rows.push_back({cell(c["weight"]), theta_cell(c["h"]), cell(c["qdim"]), cell(c["simple_current"])});
  return t;
}

Table classify_table(const json& j) {
  Table t{{"jgroup", "verdict", "steps", "orbit_rep", "bound"}, {}};
  for (const auto& run : j["runs"]) {
    std::string g;
    for (const auto& w : run["jgroup"]) g += (g.empty() ? "" : " ") + cell(w);
    if (run["bounds"].empty()) t.rows.push_back({g, cell(run["verdict"]), cell(run["steps"].size()), "-", "-"});
    for (const auto& b : run["bounds"])
      t.rows.push_back({g, cell(run["verdict"]), cell(run["steps"].size()), cell(b["orbit_rep"]), cell(b["bound"])});
  }
  for (const auto& o : j["objects"]) t.rows.push_back({"object", cell(j["verdict"]), "", cell(o["describe"]), ""});
  return t;
}

Table survivors_table(const json& j) {
  Table t{{"theta", "weight", "value", "singleton"}, {}};
  for (const auto& g : j["groups"])
    for (const auto& e : g["entries"]) t.rows.push_back({theta_cell(g["theta"]), cell(e["weight"]), cell(e["value"]), cell(e["singleton"])});
  return t;
}

std::string terms_cell(const json& terms) {
  std::string s;
  for (const auto& x : terms) {
    if (!s.empty()) s += " + ";
    long long m = x["mult"];
    if (m != 1) s += std::to_string(m) + "*";
    s += cell(x["weight"]);
  }
  return s;
}

Table branch_table(const json& j) {
  Table t{{"target", "solution", "ext_label", "terms", "verified"}, {}};
  for (const auto& b : j["branching"])
    for (size_t i = 0; i < b["solutions"].size(); ++i) {
      const auto& s = b["solutions"][i];
      for (const auto& r : s["branching"]["rows"])
        t.rows.push_back({cell(b["target"]), std::to_string(i), cell(r["ext_label"]), terms_cell(r["terms"]), cell(s["verify"]["ok"])});
    }
  return t;
}

Table verify_table(const json& j) {
  Table t{{"algebra", "level", "target", "s_residual", "t_exact", "completeness", "ok"}, {}};
  for (const auto& e : j["entries"])
    t.rows.push_back({cell(e["algebra"]), cell(e["level"]), cell(e["target"]), cell(e["verify"]["s_residual"]),
                      cell(e["verify"]["t_exact"]), cell(e["verify"]["completeness"]), cell(e["verify"]["ok"])});
  return t;
}

Table sweep_table(const json& j) {
  Table t{{"k", "l_max", "step1", "step2", "candidates", "verdict", "objects"}, {}};
  for (const auto& l : j["levels"]) {
    std::string objs;
    for (const auto& o : l.value("objects", json::array())) {
      objs += (objs.empty() ? "" : "; ") + o["describe"].get<std::string>();
      for (const auto& b : o.value("branching", json::array())) objs += " -> " + b["target"].get<std::string>();
    }
    t.rows.push_back({cell(l["k"]), cell(l["l_max"]), cell(l["step1"]), cell(l["step2"]),
                      l.contains("candidates") ? cell(l["candidates"]) : "-", cell(l["verdict"]), objs});
  }
  return t;
}

std::string default_catalog() {
#ifdef ETALE_DATA_DIR
  return std::string(ETALE_DATA_DIR) + "/table_2_1.json";
#else
  return "data/table_2_1.json";
#endif
}

std::string pick_algebra(const std::string& opt, const std::string& pos) {
  if (!opt.empty() && !pos.empty() && opt != pos) throw UsageError("conflicting algebra arguments");
  std::string a = opt.empty() ? pos : opt;
  if (a.empty()) throw UsageError("an algebra is required (--algebra)");
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum subgroup classification for affine Lie algebra fusion categories"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "json";
  std::string cache_dir;
  std::string jgroup = "auto";
  size_t probe_budget = 5000;
  int jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", cache_dir, "S-row and sweep checkpoint directory (default $ETALE_CACHE_DIR)");
  app.add_option("--jgroup", jgroup, "Simple-current group: auto, full, trivial or a subgroup order");
  app.add_option("--probe-budget", probe_budget, "Number of probe weights")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string algebra, algebra_pos;
  int level = 0, from = 1, to = 0;

  auto* thresholds = app.add_subcommand("thresholds", "Levels surviving the L_max threshold");
  thresholds->add_option("--algebra", algebra, "Algebra, e.g. A3");
  thresholds->add_option("ALG", algebra_pos, "Algebra, e.g. A3");

  bool with_h1 = false;
  auto* candidates = app.add_subcommand("candidates", "Candidate weights at one level");
  candidates->add_option("--algebra", algebra)->required();
  candidates->add_option("--level", level)->required()->check(CLI::PositiveNumber);
  candidates->add_flag("--with-h1", with_h1, "Include weights with h = 1 at levels without Lie-type extensions");

  std::string cert_path;
  auto* classify = app.add_subcommand("classify", "Eliminate or identify exotic quantum subgroups at one level");
  classify->add_option("--algebra", algebra)->required();
  classify->add_option("--level", level)->required()->check(CLI::PositiveNumber);
  classify->add_option("--emit-certificate", cert_path, "Write the elimination certificate as JSON");

  auto* survivors = app.add_subcommand("survivors", "Survivor values of the identified algebra (or of 1)");
  survivors->add_option("--algebra", algebra)->required();
  survivors->add_option("--level", level)->required()->check(CLI::PositiveNumber);

  bool solve = false;
  std::string catalog_path;
  auto* branch = app.add_subcommand("branch", "Branching rules of the exotic extension at one level");
  branch->add_option("--algebra", algebra)->required();
  branch->add_option("--level", level)->required()->check(CLI::PositiveNumber);
  branch->add_flag("--solve", solve, "Reconstruct the rules instead of reading the catalog");
  branch->add_option("--catalog", catalog_path, "Catalog file");

  auto* verify = app.add_subcommand("verify", "Verify every branching matrix in a catalog");
  verify->add_option("--catalog", catalog_path, "Catalog file");

  bool no_solve = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Full pipeline over a level range");
  sweep_cmd->add_option("--algebra", algebra, "Algebra, e.g. A4");
  sweep_cmd->add_option("ALG", algebra_pos, "Algebra, e.g. A4");
  sweep_cmd->add_option("--from", from, "First level")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--to", to, "Last level (default: the largest Step 1 level)");
  sweep_cmd->add_flag("--no-solve", no_solve, "Skip branching reconstruction at identified levels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (catalog_path.empty()) catalog_path = default_catalog();
    std::optional<RowCache> cache = RowCache::from_env(cache_dir);
    auto choice = parse_jgroup(jgroup);
    ElimOptions elim;
    elim.probe_budget = probe_budget;

    auto level_md = [&]() {
      AlgebraPtr alg;
      try {
        alg = parse_algebra(algebra);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return ModularData(LevelContext(alg, level), SMethod::Auto, cache);
    };

    if (*thresholds) {
      auto alg = parse_algebra(pick_algebra(algebra, algebra_pos));
      auto j = thresholds_json(alg);
      render(j, thresholds_table(j), format, std::cout);
      return kOk;
    }
    if (*candidates) {
      auto md = level_md();
      auto j = candidates_json(md.context(), with_h1 || lie_type_level(md.algebra(), level));
      render(j, candidates_table(j), format, std::cout);
      return kOk;
    }
    if (*classify) {
      auto md = level_md();
      auto r = run_classify(md, choice, elim);
      auto j = classify_json(md, r);
      if (!cert_path.empty()) atomic_write(cert_path, j.dump(1) + "\n");
      render(j, classify_table(j), format, std::cout);
      return r.verdict == VerdictKind::Unresolved ? kUnresolved : kOk;
    }
    if (*survivors) {
      auto md = level_md();
      auto r = run_classify(md, choice, elim);
      EtaleObject a;
      if (r.objects.size() == 1) {
        a = r.objects.front();
      } else {
        if (r.objects.size() > 1) std::cerr << "warning: several candidate algebras; showing the trivial one\n";
        Weight zero(md.context().rank(), 0);
        a = make_etale(md.context(), {0}, {{zero, 1}});
      }
      auto t = survivor_table(a, md);
      auto j = survivors_json(t, singleton_flags(t, md), md);
      render(j, survivors_table(j), format, std::cout);
      return r.verdict == VerdictKind::Unresolved ? kUnresolved : kOk;
    }
    if (*branch) {
      auto md = level_md();
      json j = {{"algebra", md.algebra().name()}, {"level", level}, {"branching", json::array()}};
      bool all_ok = true;
      if (solve) {
        auto r = run_classify(md, choice, elim);
        if (r.objects.empty()) std::cerr << "warning: no exotic quantum subgroup at this level\n";
        for (const auto& o : r.objects)
          for (const auto& ts : solve_all_targets(o, md)) {
            if (!ts.result) continue;
            for (const auto& rep : ts.reports) all_ok = all_ok && rep.ok();
            j["branching"].push_back(target_solve_json(ts));
          }
      } else {
        for (const auto& e : load_catalog(catalog_path)) {
          if (e.algebra != md.algebra().name() || e.level != level) continue;
          auto b = to_matrix(e);
          auto rep = verify_branching(b, md, *level1_data(b.target));
          all_ok = all_ok && rep.ok();
          j["branching"].push_back({{"ambiguous", false}, {"error", ""}, {"labelings", 1},
                                    {"solutions", json::array({{{"branching", branching_json(b)}, {"verify", verify_json(rep)}}})},
                                    {"target", e.target}});
        }
        if (j["branching"].empty()) std::cerr << "warning: no catalog entry for this level\n";
      }
      render(j, branch_table(j), format, std::cout);
      return all_ok ? kOk : kVerifyFailed;
    }
    if (*verify) {
      auto entries = load_catalog(catalog_path);
      if (entries.empty()) std::cerr << "warning: empty catalog\n";
      json out = verify_catalog_json(entries, cache);
      out["catalog"] = catalog_path;
      render(out, verify_table(out), format, std::cout);
      return out["ok"].get<bool>() ? kOk : kVerifyFailed;
    }
    if (*sweep_cmd) {
      AlgebraPtr alg;
      try {
        alg = parse_algebra(pick_algebra(algebra, algebra_pos));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (to == 0) {
        auto levels = step1_levels(alg);
        to = levels.empty() ? from : levels.back();
      }
      if (to < from) throw UsageError("empty level range");
      SweepOptions opts;
      opts.elim = elim;
      opts.jgroup = choice;
      opts.solve = !no_solve;
      opts.jobs = jobs;
      opts.cache = cache;
      auto j = sweep(alg, from, to, opts);
      render(j, sweep_table(j), format, std::cout);
      if (!j["unresolved"].empty()) return kUnresolved;
      for (const auto& l : j["levels"])
        for (const auto& o : l.value("objects", json::array()))
          for (const auto& b : o.value("branching", json::array()))
            for (const auto& s : b["solutions"])
              if (!s["verify"]["ok"].get<bool>()) return kVerifyFailed;
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
