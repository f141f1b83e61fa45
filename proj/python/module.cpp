#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cogrowth/analytic.hpp"
#include "cogrowth/composer.hpp"
#include "cogrowth/grammar.hpp"
#include "cogrowth/oracle.hpp"
#include "cogrowth/solver.hpp"
#include "cogrowth/spec_json.hpp"
#include "cogrowth/verify.hpp"

namespace py = pybind11;
using namespace cogrowth;

namespace {

py::int_ big(const Integer& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

TruncatedSeries lifted_series(const FreeProductSpec& spec, const BivariatePoly& lambda,
                              int N, long long state_cap) {
    CogrowthOptions opt;
    opt.state_cap = state_cap;
    auto a = cogrowth_sequence(spec, std::min(N, 8), opt);
    TruncatedSeries prefix(static_cast<int>(a.size()) - 1);
    for (std::size_t k = 0; k < a.size(); ++k)
        prefix.set_coeff(static_cast<int>(k), Rational(a[k]));
    return series_root({lambda, prefix, N});
}

py::list sequence(const std::string& spec_json, int n, long long state_cap) {
    FreeProductSpec spec = parse_spec_json(spec_json);
    CogrowthOptions opt;
    opt.state_cap = state_cap;
    py::list out;
    for (const Integer& v : cogrowth_sequence(spec, n, opt)) out.append(big(v));
    return out;
}

py::dict annihilator(const std::string& spec_json) {
    ComposerResult r = compose_for_spec(parse_spec_json(spec_json));
    py::dict out;
    out["poly"] = r.lambda.str();
    out["deg_t"] = r.lambda.deg_t();
    out["deg_z"] = r.lambda.deg_z();
    out["degree_bound"] = r.bound;
    return out;
}

py::dict minimal_polynomial(const std::string& spec_json, int deg_t, int deg_z,
                            long long state_cap) {
    FreeProductSpec spec = parse_spec_json(spec_json);
    ComposerResult comp = compose_for_spec(spec);
    int dt = deg_t >= 0 ? deg_t : comp.bound;
    int dz = deg_z >= 1 ? deg_z : comp.bound;
    TruncatedSeries f =
        lifted_series(spec, comp.lambda, (dt + 1) * (dz + 1) + 12, state_cap);
    GuessResult g = guess_algebraic(f, dt, dz);
    py::dict out;
    out["found"] = g.found;
    out["annihilator"] = comp.lambda.str();
    out["degree_bound"] = comp.bound;
    if (g.found) {
        out["poly"] = g.candidate.str();
        out["deg_t"] = g.deg_t_used;
        out["deg_z"] = g.deg_z_used;
        out["verified_order"] = g.verification_order;
        out["divides_annihilator"] = divides_z(g.candidate, comp.lambda);
    }
    return out;
}

py::dict radius_py(const std::string& spec_json, int series_order,
                   long long state_cap) {
    FreeProductSpec spec = parse_spec_json(spec_json);
    BivariatePoly lambda;
    TruncatedSeries f;
    // same selection strategy as the command-line tool: closed-form equation
    // for a plain cyclic family, otherwise the guessed minimal polynomial
    if (spec.factors.size() == 1 &&
        spec.factors[0].kind == FactorSpec::Kind::finite &&
        spec.factors[0].gens == std::vector<int>{1} &&
        spec.factors[0].multiplicity >= 2) {
        lambda = cyclic_equation(spec.factors[0].order(), spec.factors[0].multiplicity);
        f = lifted_series(spec, lambda, series_order, state_cap);
    } else {
        ComposerResult comp = compose_for_spec(spec);
        lambda = comp.lambda;
        int need = (comp.bound + 1) * (comp.bound + 1) + 12;
        f = lifted_series(spec, lambda, std::max(series_order, need), state_cap);
        GuessResult g = guess_algebraic(f, comp.bound, comp.bound);
        if (g.found && divides_z(g.candidate, lambda)) lambda = g.candidate;
    }
    SingularityReport rep = radius(lambda, f);
    py::dict out;
    out["rho"] = rep.rho.mid();
    out["lo"] = to_string(rep.rho.lo);
    out["hi"] = to_string(rep.rho.hi);
    out["growth_estimate"] = rep.growth;
    out["method"] = rep.method;
    return out;
}

std::string grammar_py(const std::string& spec_json, const std::string& format) {
    EquationSystem sys = build_system(parse_spec_json(spec_json));
    return export_system(sys, format);
}

}  // namespace

PYBIND11_MODULE(cogrowth, m) {
    m.doc() = "cogrowth sequences of free products of finite groups";

    py::register_exception<SpecParseError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    m.def("sequence", &sequence, py::arg("spec"), py::arg("n"),
          py::arg("state_cap") = 50000000LL,
          "cogrowth sequence a_0..a_n for a JSON spec");
    m.def("annihilator", &annihilator, py::arg("spec"),
          "annihilating polynomial of the cogrowth series");
    m.def("minimal_polynomial", &minimal_polynomial, py::arg("spec"),
          py::arg("deg_t") = -1, py::arg("deg_z") = -1,
          py::arg("state_cap") = 50000000LL,
          "guessed minimal polynomial, verified against the annihilator");
    m.def("radius", &radius_py, py::arg("spec"), py::arg("series_order") = 400,
          py::arg("state_cap") = 50000000LL,
          "radius of convergence of the cogrowth series");
    m.def("grammar", &grammar_py, py::arg("spec"), py::arg("format") = "text",
          "export the grammar equation system (text or json)");
    m.def(
        "verify",
        [](const std::string& set) { return render_report_json(run_verification(set)); },
        py::arg("fixture_set"), "run a builtin fixture set; returns a JSON report");

    m.def("cyclic_spec", [](int d, int mult) { return render_spec_json(family_cyclic(d, mult)); },
          py::arg("order"), py::arg("multiplicity"));
    m.def("z2zn_spec", [](int n) { return render_spec_json(family_z2zn(n)); },
          py::arg("n"));
    m.def("z2_free_spec",
          [](int mult, int s) { return render_spec_json(family_z2_free(mult, s)); },
          py::arg("m"), py::arg("s"));
}
