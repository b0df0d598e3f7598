#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etale/report.hpp"

namespace py = pybind11;
using namespace etale;

namespace {

std::pair<long long, long long> rat(const Rational& q) { return {q.numerator(), q.denominator()}; }

std::optional<RowCache> cache_of(const std::string& dir) { return RowCache::from_env(dir); }

ElimOptions elim_of(size_t probe_budget) {
  ElimOptions e;
  e.probe_budget = probe_budget;
  return e;
}

}  // namespace

PYBIND11_MODULE(_etale, m) {
  m.doc() = "Quantum subgroup classification for affine Lie algebra fusion categories";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::length_error& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  m.def("algebra_info", [](const std::string& spec) {
    auto a = parse_algebra(spec);
    py::dict d;
    d["name"] = a->name();
    d["rank"] = a->rank;
    d["dual_coxeter"] = a->dual_coxeter;
    d["dim"] = a->dim;
    d["f_g"] = a->f_g;
    d["weyl_vector_norm"] = rat(a->weyl_vector_norm);
    d["marks"] = a->marks;
    d["comarks"] = a->comarks;
    d["simple_currents"] = a->simple_currents.size();
    return d;
  }, py::arg("algebra"));

  m.def("conformal_weight", [](const std::string& spec, int k, const Weight& w) {
    LevelContext ctx(parse_algebra(spec), k);
    if (!is_level_weight(w, ctx)) throw std::invalid_argument("weight is not of the given level");
    return rat(conformal_weight(w, ctx));
  }, py::arg("algebra"), py::arg("level"), py::arg("weight"));

  m.def("central_charge", [](const std::string& spec, int k) { return rat(LevelContext(parse_algebra(spec), k).c); },
        py::arg("algebra"), py::arg("level"));

  m.def("level_weights", [](const std::string& spec, int k) { return level_weights(LevelContext(parse_algebra(spec), k)); },
        py::arg("algebra"), py::arg("level"));

  m.def("candidates", [](const std::string& spec, int k, bool with_h1) {
    LevelContext ctx(parse_algebra(spec), k);
    return with_h1 ? candidate_set(ctx, true) : candidate_set(ctx);
  }, py::arg("algebra"), py::arg("level"), py::arg("with_h1") = false, py::call_guard<py::gil_scoped_release>());

  m.def("s_matrix", [](const std::string& spec, int k) {
    ModularData md(LevelContext(parse_algebra(spec), k));
    Eigen::MatrixXcd s = md.matrix();
    return std::make_pair(md.simples(), s);
  }, py::arg("algebra"), py::arg("level"), py::call_guard<py::gil_scoped_release>());

  m.def("fusion", [](const std::string& spec, int k, const Weight& a, const Weight& b) {
    ModularData md(LevelContext(parse_algebra(spec), k));
    return md.fusion_product(a, b);
  }, py::arg("algebra"), py::arg("level"), py::arg("a"), py::arg("b"), py::call_guard<py::gil_scoped_release>());

  m.def("galois_act", [](const std::string& spec, int k, long long ell, const Weight& w) {
    LevelContext ctx(parse_algebra(spec), k);
    auto g = galois_act(ell, shift(w), ctx);
    return std::make_pair(unshift(g.weight), g.sign);
  }, py::arg("algebra"), py::arg("level"), py::arg("ell"), py::arg("weight"));

  m.def("step1_levels", [](const std::string& spec) { return step1_levels(parse_algebra(spec)); }, py::arg("algebra"));
  m.def("step2_levels", [](const std::string& spec) { return step2_levels(parse_algebra(spec)); }, py::arg("algebra"),
        py::call_guard<py::gil_scoped_release>());

  m.def("thresholds_json", [](const std::string& spec) { return thresholds_json(parse_algebra(spec)).dump(); },
        py::arg("algebra"));

  m.def("candidates_json", [](const std::string& spec, int k, bool with_h1) {
    LevelContext ctx(parse_algebra(spec), k);
    return candidates_json(ctx, with_h1 || lie_type_level(ctx.algebra(), k)).dump();
  }, py::arg("algebra"), py::arg("level"), py::arg("with_h1") = false, py::call_guard<py::gil_scoped_release>());

  m.def("classify_json", [](const std::string& spec, int k, const std::string& jgroup, size_t probe_budget,
                            const std::string& cache_dir) {
    ModularData md(LevelContext(parse_algebra(spec), k), SMethod::Auto, cache_of(cache_dir));
    auto r = run_classify(md, parse_jgroup(jgroup), elim_of(probe_budget));
    return classify_json(md, r).dump();
  }, py::arg("algebra"), py::arg("level"), py::arg("jgroup") = "auto", py::arg("probe_budget") = 5000,
     py::arg("cache_dir") = "", py::call_guard<py::gil_scoped_release>());

  m.def("survivors_json", [](const std::string& spec, int k) {
    ModularData md(LevelContext(parse_algebra(spec), k));
    auto r = run_classify(md, JGroupChoice{}, ElimOptions{});
    EtaleObject a = r.objects.size() == 1
                        ? r.objects.front()
                        : make_etale(md.context(), {0}, {{Weight(md.context().rank(), 0), 1}});
    auto t = survivor_table(a, md);
    return survivors_json(t, singleton_flags(t, md), md).dump();
  }, py::arg("algebra"), py::arg("level"), py::call_guard<py::gil_scoped_release>());

  m.def("sweep_json", [](const std::string& spec, int from, int to, bool solve, int jobs, const std::string& cache_dir) {
    SweepOptions opts;
    opts.solve = solve;
    opts.jobs = jobs;
    opts.cache = cache_of(cache_dir);
    return sweep(parse_algebra(spec), from, to, opts).dump();
  }, py::arg("algebra"), py::arg("start"), py::arg("stop"), py::arg("solve") = true, py::arg("jobs") = 1,
     py::arg("cache_dir") = "", py::call_guard<py::gil_scoped_release>());

  m.def("verify_catalog_json", [](const std::string& path) { return verify_catalog_json(load_catalog(path)).dump(); },
        py::arg("path"), py::call_guard<py::gil_scoped_release>());
}
