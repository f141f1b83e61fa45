#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "cogrowth/analytic.hpp"
#include "cogrowth/composer.hpp"
#include "cogrowth/grammar.hpp"
#include "cogrowth/oracle.hpp"
#include "cogrowth/solver.hpp"
#include "cogrowth/spec_json.hpp"
#include "cogrowth/verify.hpp"

using namespace cogrowth;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string spec_path;
    std::vector<int> cyclic;   // d m
    int z2zn = 0;
    std::vector<int> z2_free;  // m s
    int order = 10;
    std::string format = "text";
    int offset = 0;
    long state_cap = 50000000;
    int deg_t = -1, deg_z = -1;
};

void add_spec_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--spec", o.spec_path, "JSON spec file");
    cmd->add_option("--cyclic", o.cyclic, "cyclic family: order d, copies m")
        ->expected(2);
    cmd->add_option("--z2zn", o.z2zn, "Z/2 * Z/n with S={x,y}");
    cmd->add_option("--z2-free", o.z2_free,
                    "Z2^{*m} * Z^{*s} with symmetric S: m s")
        ->expected(2);
}

FreeProductSpec resolve_spec(const Options& o) {
    int given = !o.spec_path.empty();
    given += !o.cyclic.empty();
    given += o.z2zn != 0;
    given += !o.z2_free.empty();
    if (given != 1)
        throw UsageError("give exactly one of --spec, --cyclic, --z2zn, --z2-free");
    if (!o.spec_path.empty()) {
        std::ifstream in(o.spec_path);
        if (!in) throw UsageError("cannot open spec file: " + o.spec_path);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_spec_json(buf.str());
    }
    if (!o.cyclic.empty()) return family_cyclic(o.cyclic[0], o.cyclic[1]);
    if (o.z2zn != 0) return family_z2zn(o.z2zn);
    return family_z2_free(o.z2_free[0], o.z2_free[1]);
}

void check_format(const Options& o, bool bfile_ok) {
    if (o.format == "text" || o.format == "json") return;
    if (o.format == "bfile" && bfile_ok) return;
    throw UsageError("bad format \"" + o.format + "\"");
}

json poly_json(const BivariatePoly& p) {
    json zc = json::array();
    for (int j = 0; j <= p.deg_z(); ++j) {
        json row = json::array();
        const UniPoly& c = p.zcoeff(j);
        for (int i = 0; i <= c.degree(); ++i) row.push_back(to_string(c.coeff(i)));
        zc.push_back(row);
    }
    return json{{"vars", "t,z"}, {"zcoeffs", zc}};
}

TruncatedSeries lifted_series(const FreeProductSpec& spec, const BivariatePoly& lambda,
                              int N, long state_cap) {
    CogrowthOptions opt;
    opt.state_cap = state_cap;
    auto a = cogrowth_sequence(spec, std::min(N, 8), opt);
    TruncatedSeries prefix(static_cast<int>(a.size()) - 1);
    for (std::size_t k = 0; k < a.size(); ++k)
        prefix.set_coeff(static_cast<int>(k), Rational(a[k]));
    return series_root({lambda, prefix, N});
}

int cmd_count(const Options& o) {
    check_format(o, true);
    FreeProductSpec spec = resolve_spec(o);
    CogrowthOptions opt;
    opt.state_cap = o.state_cap;
    std::vector<Integer> a = cogrowth_sequence(spec, o.order, opt);
    if (o.format == "bfile") {
        for (std::size_t n = 0; n < a.size(); ++n)
            std::cout << static_cast<long>(n) + o.offset << " " << a[n].get_str()
                      << "\n";
    } else if (o.format == "json") {
        json seq = json::array();
        for (const Integer& v : a) seq.push_back(v.get_str());
        std::cout << json{{"order", o.order}, {"sequence", seq}}.dump(2) << "\n";
    } else {
        for (std::size_t n = 0; n < a.size(); ++n)
            std::cout << (n ? ", " : "") << a[n].get_str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_minpoly(const Options& o) {
    check_format(o, false);
    FreeProductSpec spec = resolve_spec(o);
    ComposerResult comp = compose_for_spec(spec);
    int dt = o.deg_t >= 0 ? o.deg_t : comp.bound;
    int dz = o.deg_z >= 1 ? o.deg_z : comp.bound;
    int need = (dt + 1) * (dz + 1) + 12;
    TruncatedSeries f = lifted_series(spec, comp.lambda, need, o.state_cap);
    GuessResult g = guess_algebraic(f, dt, dz);
    bool divides = g.found && divides_z(g.candidate, comp.lambda);
    if (o.format == "json") {
        json out{{"annihilator", poly_json(comp.lambda)},
                 {"degree_bound", comp.bound},
                 {"minimal_found", g.found}};
        if (g.found) {
            out["minimal"] = poly_json(g.candidate);
            out["deg_t"] = g.deg_t_used;
            out["deg_z"] = g.deg_z_used;
            out["verified_order"] = g.verification_order;
            out["divides_annihilator"] = divides;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "annihilator: " << comp.lambda.str() << "\n";
        if (g.found) {
            std::cout << "minimal:     " << g.candidate.str() << "\n"
                      << "deg_t " << g.deg_t_used << ", deg_z " << g.deg_z_used
                      << ", series match to order " << g.verification_order
                      << ", divides annihilator: " << (divides ? "yes" : "NO")
                      << "\n";
        } else {
            std::cout << "no minimal polynomial found within bounds deg_t <= " << dt
                      << ", deg_z <= " << dz << "; annihilator reported above\n";
        }
    }
    if (g.found && !divides) return 1;
    return 0;
}

json interval_json(const RootInterval& r) {
    return json{{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"mid", r.mid()}};
}

int cmd_radius(const Options& o, int series_order) {
    check_format(o, false);
    FreeProductSpec spec = resolve_spec(o);
    // single plain cyclic family: the closed-form equation is sharper
    BivariatePoly lambda;
    TruncatedSeries f;
    if (spec.factors.size() == 1 &&
        spec.factors[0].kind == FactorSpec::Kind::finite &&
        spec.factors[0].gens == std::vector<int>{1} &&
        spec.factors[0].multiplicity >= 2) {
        lambda = cyclic_equation(spec.factors[0].order(), spec.factors[0].multiplicity);
        f = lifted_series(spec, lambda, series_order, o.state_cap);
    } else {
        // the composed annihilator carries spurious branches whose
        // singularities can crowd the true one; select on the minimal
        // polynomial when it can be pinned down
        ComposerResult comp = compose_for_spec(spec);
        lambda = comp.lambda;
        int need = (comp.bound + 1) * (comp.bound + 1) + 12;
        f = lifted_series(spec, lambda, std::max(series_order, need), o.state_cap);
        GuessResult g = guess_algebraic(f, comp.bound, comp.bound);
        if (g.found && divides_z(g.candidate, lambda)) lambda = g.candidate;
    }
    SingularityReport rep = radius(lambda, f);
    if (o.format == "json") {
        json lead = json::array(), disc = json::array();
        for (const RootInterval& r : rep.lead_roots) lead.push_back(interval_json(r));
        for (const RootInterval& r : rep.disc_roots) disc.push_back(interval_json(r));
        std::cout << json{{"rho", rep.rho.mid()},
                          {"interval", interval_json(rep.rho)},
                          {"method", rep.method},
                          {"growth_estimate", rep.growth},
                          {"lead_candidates", lead},
                          {"disc_candidates", disc}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout.precision(12);
        std::cout << "rho = " << rep.rho.mid() << "  (1/rho = " << 1.0 / rep.rho.mid()
                  << ")\n"
                  << "selection: " << rep.method
                  << ", growth estimate = " << rep.growth << "\n"
                  << "candidates: " << rep.lead_roots.size() << " from leading coeff, "
                  << rep.disc_roots.size() << " from discriminant\n";
    }
    return 0;
}

int cmd_verify(const Options& o, const std::string& fixture_set) {
    check_format(o, false);
    VerificationReport rep = run_verification(fixture_set);
    std::cout << (o.format == "json" ? render_report_json(rep) + "\n"
                                     : render_report_text(rep));
    return rep.pass() ? 0 : 1;
}

int cmd_grammar(const Options& o) {
    check_format(o, false);
    FreeProductSpec spec = resolve_spec(o);
    EquationSystem sys = build_system(spec);
    std::cout << export_system(sys, o.format);
    if (o.format == "text") std::cout << std::flush;
    return 0;
}

// COGROWTH_THREADS caps parallel sections; current pipelines are sequential,
// so the value is validated and retained for forward compatibility.
int thread_cap() {
    const char* v = std::getenv("COGROWTH_THREADS");
    if (!v) return 0;
    int n = std::atoi(v);
    return n > 0 ? n : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cogrowth: cogrowth sequences of free products of finite groups"};
    app.require_subcommand(1);
    (void)thread_cap();

    Options o;
    std::string fixture_set;
    int radius_order = 400;

    CLI::App* count = app.add_subcommand("count", "print the cogrowth sequence");
    add_spec_flags(count, o);
    count->add_option("-N,--order", o.order, "highest index");
    count->add_option("--format", o.format, "text | json | bfile");
    count->add_option("--offset", o.offset, "index offset for bfile output");
    count->add_option("--state-cap", o.state_cap, "oracle state cap");

    CLI::App* minpoly =
        app.add_subcommand("minpoly", "annihilating and minimal polynomials");
    add_spec_flags(minpoly, o);
    minpoly->add_option("--format", o.format, "text | json");
    minpoly->add_option("--deg-t", o.deg_t, "guessing bound for deg_t");
    minpoly->add_option("--deg-z", o.deg_z, "guessing bound for deg_z");
    minpoly->add_option("--state-cap", o.state_cap, "oracle state cap");

    CLI::App* rad = app.add_subcommand("radius", "radius of convergence");
    add_spec_flags(rad, o);
    rad->add_option("--format", o.format, "text | json");
    rad->add_option("-N,--order", radius_order, "series terms for selection");
    rad->add_option("--state-cap", o.state_cap, "oracle state cap");

    CLI::App* verify = app.add_subcommand("verify", "run a builtin fixture set");
    verify->add_option("set", fixture_set, "table1 | thm12 | gap")->required();
    verify->add_option("--format", o.format, "text | json");

    CLI::App* grammar = app.add_subcommand("grammar", "export the equation system");
    add_spec_flags(grammar, o);
    grammar->add_option("--format", o.format, "text | json");

    try {
        app.parse(argc, argv);
        if (count->parsed()) return cmd_count(o);
        if (minpoly->parsed()) return cmd_minpoly(o);
        if (rad->parsed()) return cmd_radius(o, radius_order);
        if (verify->parsed()) return cmd_verify(o, fixture_set);
        if (grammar->parsed()) return cmd_grammar(o);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const SpecParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
