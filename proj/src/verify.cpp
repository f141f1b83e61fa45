#include "cogrowth/verify.hpp"

#include <json.hpp>
#include <sstream>

#include "cogrowth/analytic.hpp"
#include "cogrowth/composer.hpp"
#include "cogrowth/oracle.hpp"
#include "cogrowth/solver.hpp"
#include "cogrowth/spec_json.hpp"

namespace cogrowth {

bool VerificationReport::pass() const {
    for (const VerificationRecord& r : records)
        if (!r.pass) return false;
    return true;
}

namespace {

std::string join(const std::vector<Integer>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str();
    return os.str();
}

void check_sequence(VerificationReport& rep, const std::string& name,
                    const std::string& source, const FreeProductSpec& spec,
                    const std::vector<long>& expect, int stride = 1) {
    int N = stride * (static_cast<int>(expect.size()) - 1);
    std::vector<Integer> got = cogrowth_sequence(spec, N);
    bool ok = true;
    for (std::size_t i = 0; i < expect.size(); ++i)
        if (got[stride * i] != Integer(expect[i])) ok = false;
    std::vector<Integer> sub;
    for (std::size_t i = 0; i < expect.size(); ++i) sub.push_back(got[stride * i]);
    rep.records.push_back({name, source, join(sub), ok});
}

TruncatedSeries oracle_series(const FreeProductSpec& spec, int N) {
    auto a = cogrowth_sequence(spec, N);
    TruncatedSeries f(N);
    for (int k = 0; k <= N; ++k) f.set_coeff(k, Rational(a[k]));
    return f;
}

TruncatedSeries unit_root(const BivariatePoly& lambda, int N) {
    TruncatedSeries one(0);
    one.set_coeff(0, Rational(1));
    return series_root({lambda, one, N});
}

void check_series(VerificationReport& rep, const std::string& name,
                  const std::string& source, const TruncatedSeries& got,
                  const TruncatedSeries& want) {
    bool ok = got == want;
    rep.records.push_back({name, source, got.str(), ok});
}

VerificationReport verify_table1() {
    VerificationReport rep{"table1", {}};
    const std::string src = "reference sequence row";
    check_sequence(rep, "Z2*Z2", src, family_cyclic(2, 2),
                   {1, 0, 2, 0, 6, 0, 20, 0, 70, 0, 252, 0, 924, 0, 3432, 0, 12870,
                    0, 48620, 0, 184756});
    check_sequence(rep, "Z3*Z3", src, family_cyclic(3, 2),
                   {1, 0, 0, 2, 0, 0, 8, 0, 0, 38, 0, 0, 196, 0, 0, 1062, 0, 0,
                    5948, 0, 0, 34120});
    check_sequence(rep, "Z4*Z4", src, family_cyclic(4, 2),
                   {1, 0, 0, 0, 2, 0, 0, 0, 10, 0, 0, 0, 62, 0, 0, 0, 426, 0, 0, 0,
                    3112, 0, 0, 0, 23686});
    check_sequence(rep, "Z5*Z5", src, family_cyclic(5, 2),
                   {1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 12, 0, 0, 0, 0, 92, 0, 0, 0, 0,
                    792, 0, 0, 0, 0, 7302});
    check_sequence(rep, "Z2*Z3", src, family_z2zn(3),
                   {1, 0, 1, 1, 1, 5, 2, 14, 13, 31, 66, 77, 240, 286, 722, 1226,
                    2141, 4760, 7268, 16473});
    check_sequence(rep, "Z2*Z4", src, family_z2zn(4),
                   {1, 0, 1, 0, 2, 0, 7, 0, 22, 0, 66, 0, 209, 0, 687, 0, 2278, 0,
                    7612, 0});
    check_sequence(rep, "Z2*Z5", src, family_z2zn(5),
                   {1, 0, 1, 0, 1, 1, 1, 7, 1, 27, 2, 77, 19, 182, 148, 379, 793,
                    748, 3268, 1729});
    check_sequence(rep, "Z2*Z6", src, family_z2zn(6),
                   {1, 0, 1, 0, 1, 0, 2, 0, 9, 0, 36, 0, 114, 0, 316, 0, 873, 0,
                    2636, 0});
    check_sequence(rep, "Z2*Z7", src, family_z2zn(7),
                   {1, 0, 1, 0, 1, 0, 1, 1, 1, 9, 1, 44, 1, 156, 2, 450, 25, 1122,
                    262, 2508, 1851, 5149});
    // the Z2 * Z row lists the even-index subsequence
    check_sequence(rep, "Z2*Z (even indices)", src, family_z2_free(1, 1),
                   {1, 3, 15, 87, 543, 3543, 23823, 163719, 1143999, 8099511,
                    57959535, 418441191},
                   2);
    return rep;
}

VerificationReport verify_thm12() {
    VerificationReport rep{"thm12", {}};
    const int N = 14;
    for (int d = 2; d <= 4; ++d)
        for (int m = 2; m <= 4; ++m)
            check_series(rep,
                         "(a) cyclic d=" + std::to_string(d) +
                             " m=" + std::to_string(m),
                         "cyclic-family equation",
                         unit_root(cyclic_equation(d, m), N),
                         oracle_series(family_cyclic(d, m), N));
    for (auto [m, s] : {std::pair{0, 1}, {1, 1}, {0, 2}, {2, 1}}) {
        // Z2^{*m} * Z^{*s} shares its series with Z2^{*(m+2s)}
        FreeProductSpec spec = family_z2_free(m, s);
        TruncatedSeries f = unit_root(cyclic_equation(2, m + 2 * s), N);
        std::string tag = "(b) m=" + std::to_string(m) + " s=" + std::to_string(s);
        check_series(rep, tag, "quadratic equation", f, oracle_series(spec, N));
        check_series(rep, tag + " (Z2-image)", "quadratic equation", f,
                     oracle_series(z_to_z2z2(spec), N));
    }
    for (int n = 3; n <= 5; ++n) {
        Z2ZnSystem sys = z2_zn_system(n);
        TruncatedSeries d0(n - 1);
        d0.set_coeff(n - 1, Rational(1));
        TruncatedSeries d = series_root({sys.d_equation, d0, N});
        check_series(rep, "(c) Z2*Z" + std::to_string(n), "D-equation pipeline",
                     sys.f_from_d(d), oracle_series(family_z2zn(n), N));
    }
    return rep;
}

VerificationReport verify_gap() {
    VerificationReport rep{"gap", {}};
    auto sym_cyclic = [](int d, int m) {
        FiniteGroupTable g = FiniteGroupTable::cyclic(d);
        std::vector<int> gens{1};
        if (d > 2) gens.push_back(d - 1);
        return FactorSpec::finite(g, GeneratingSetSpec(g, gens), m);
    };
    std::vector<std::pair<std::string, FreeProductSpec>> fixtures;
    fixtures.push_back({"Z2", FreeProductSpec({sym_cyclic(2, 1)})});
    fixtures.push_back({"Z3 sym", FreeProductSpec({sym_cyclic(3, 1)})});
    fixtures.push_back({"Z2*Z2", FreeProductSpec({sym_cyclic(2, 2)})});
    fixtures.push_back({"Z2^*3", FreeProductSpec({sym_cyclic(2, 3)})});
    fixtures.push_back({"Z3*Z3 sym", FreeProductSpec({sym_cyclic(3, 2)})});
    fixtures.push_back({"Z2*Z3 sym", FreeProductSpec({sym_cyclic(2, 1), sym_cyclic(3, 1)})});
    fixtures.push_back({"Z4*Z2 sym", FreeProductSpec({sym_cyclic(4, 1), sym_cyclic(2, 1)})});
    fixtures.push_back({"Z2*Z", family_z2_free(1, 1)});
    fixtures.push_back({"Z (free rank 1)", family_z2_free(0, 1)});
    for (auto& [name, spec] : fixtures) {
        ComposerResult c = compose_for_spec(spec);
        TruncatedSeries f = series_root({c.lambda, oracle_series(spec, 8), 120});
        SingularityReport r = radius(c.lambda, f);
        GapVerdict v = gap_check(Rational(1) / r.rho.hi, Rational(1) / r.rho.lo);
        std::ostringstream os;
        os << "1/rho = " << v.value;
        rep.records.push_back(
            {name, "gap classification", os.str(), v.verdict != GapVerdict::Violation});
    }
    return rep;
}

}  // namespace

VerificationReport run_verification(const std::string& fixture_set) {
    if (fixture_set == "table1") return verify_table1();
    if (fixture_set == "thm12") return verify_thm12();
    if (fixture_set == "gap") return verify_gap();
    throw std::invalid_argument("unknown fixture set \"" + fixture_set +
                                "\" (builtin: table1, thm12, gap)");
}

std::string render_report_text(const VerificationReport& rep) {
    std::ostringstream os;
    for (const VerificationRecord& r : rep.records)
        os << (r.pass ? "PASS" : "FAIL") << "  " << rep.fixture_set << "/" << r.name
           << "  [" << r.source << "]\n";
    os << (rep.pass() ? "OK" : "FAILED") << " (" << rep.records.size()
       << " checks)\n";
    return os.str();
}

std::string render_report_json(const VerificationReport& rep) {
    nlohmann::json out;
    out["fixture_set"] = rep.fixture_set;
    out["pass"] = rep.pass();
    nlohmann::json recs = nlohmann::json::array();
    for (const VerificationRecord& r : rep.records)
        recs.push_back({{"name", r.name},
                        {"source", r.source},
                        {"computed", r.computed},
                        {"pass", r.pass}});
    out["records"] = recs;
    return out.dump(2);
}

}  // namespace cogrowth
