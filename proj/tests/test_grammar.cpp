#include <algorithm>

#include "cogrowth/grammar.hpp"
#include "cogrowth/oracle.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cogrowth;

namespace {

FactorSpec cyc(int d, std::vector<int> gens, int m = 1) {
    FiniteGroupTable g = FiniteGroupTable::cyclic(d);
    return FactorSpec::finite(g, GeneratingSetSpec(g, std::move(gens)), m);
}

std::vector<Integer> series_ints(const TruncatedSeries& s) {
    std::vector<Integer> out;
    for (int k = 0; k <= s.order(); ++k) {
        const Rational& c = s.coeff(k);
        REQUIRE(denom(c) == 1);
        out.push_back(numer(c));
    }
    return out;
}

int find_unknown(const EquationSystem& sys, const std::string& name) {
    auto it = std::find(sys.unknown_names.begin(), sys.unknown_names.end(), name);
    REQUIRE(it != sys.unknown_names.end());
    return static_cast<int>(it - sys.unknown_names.begin());
}

TruncatedSeries eval_equation(const EquationSystem& sys, const GrammarEquation& eq,
                              const std::vector<TruncatedSeries>& vals, int N) {
    TruncatedSeries acc(N);
    for (const GrammarTerm& term : eq.rhs) {
        TruncatedSeries prod = TruncatedSeries::from_poly(term.coeff, N);
        for (int u : term.unknowns) prod = prod * vals[u];
        acc = acc + prod;
    }
    return acc;
}

}  // namespace

TEST_CASE("grammar: Z2*Z system size and solution") {
    FreeProductSpec spec({cyc(2, {1}), FactorSpec::z(1)});
    EquationSystem sys = build_system(spec);
    CHECK(sys.size() == 14);

    auto s = solve_system_series(sys, 6);
    CHECK(series_ints(s) == cogrowth_sequence(spec, 6));
    CHECK(s.coeff(2) == 3);
    CHECK(s.coeff(6) == 87);

    std::string text = export_system(sys, "text");
    CHECK(std::count(text.begin(), text.end(), '\n') == 14);
}

TEST_CASE("grammar: single Z2 solves to 1/(1-t^2)") {
    FreeProductSpec spec({cyc(2, {1})});
    auto s = solve_system_series(build_system(spec), 9);
    for (int k = 0; k <= 9; ++k) CHECK(s.coeff(k) == (k % 2 == 0 ? 1 : 0));
}

TEST_CASE("grammar: matches the oracle on fixtures") {
    std::vector<FreeProductSpec> fixtures;
    fixtures.push_back(FreeProductSpec({cyc(2, {1}, 2)}));
    fixtures.push_back(FreeProductSpec({cyc(2, {1}), cyc(3, {1})}));
    fixtures.push_back(FreeProductSpec({cyc(3, {1}, 2)}));
    fixtures.push_back(FreeProductSpec({cyc(3, {1, 2}), cyc(2, {1})}));
    fixtures.push_back(FreeProductSpec({FactorSpec::z(1)}));
    fixtures.push_back(FreeProductSpec({cyc(2, {1}), FactorSpec::z(1)}));
    fixtures.push_back(FreeProductSpec({FactorSpec::z(2)}));
    fixtures.push_back(FreeProductSpec({cyc(4, {1, 3}), FactorSpec::z(1)}));
    const int N = 14;
    for (const FreeProductSpec& spec : fixtures) {
        auto s = solve_system_series(build_system(spec), N);
        CHECK(series_ints(s) == cogrowth_sequence(spec, N));
    }
}

TEST_CASE("grammar: solution satisfies every equation") {
    FreeProductSpec spec({cyc(3, {1}), FactorSpec::z(1)});
    EquationSystem sys = build_system(spec);
    const int N = 10;
    auto vals = solve_system_all(sys, N);
    for (const GrammarEquation& eq : sys.equations)
        CHECK(eval_equation(sys, eq, vals, N) == vals[eq.lhs]);
}

TEST_CASE("grammar: copy relabeling leaves the root series unchanged") {
    FreeProductSpec a({cyc(3, {1, 2}), cyc(2, {1})});
    FreeProductSpec b({cyc(2, {1}), cyc(3, {1, 2})});
    CHECK(solve_system_series(build_system(a), 12) ==
          solve_system_series(build_system(b), 12));
}

TEST_CASE("grammar: Example-style relations for (Z/dZ)^m") {
    for (auto [d, m] : {std::pair{3, 2}, {2, 3}, {4, 2}}) {
        FreeProductSpec spec({cyc(d, {1}, m)});
        GrammarOptions opts;
        opts.syllable_shortcut = true;  // introduces the A unknown F[1,{x}]
        EquationSystem sys = build_system(spec, opts);
        const int N = 12;
        auto vals = solve_system_all(sys, N);

        std::string xinv = d == 2 ? "x" : "x^" + std::to_string(d - 1);
        TruncatedSeries A = vals[find_unknown(sys, "F[1,{x}]")];
        TruncatedSeries B = vals[find_unknown(sys, "F[1,{1,x}]")];
        TruncatedSeries C = vals[find_unknown(sys, "F[" + xinv + ",{" + xinv + "}]")];

        // A = 1/(2-B)
        TruncatedSeries two = TruncatedSeries::constant(Rational(2), N);
        CHECK(A * (two - B) == TruncatedSeries::constant(Rational(1), N));
        // B = 1 + (m-1) t C
        CHECK(B == TruncatedSeries::constant(Rational(1), N) +
                       (C * Rational(m - 1)).shift(1));
        // t^{d-1} A^{d-1} = C
        TruncatedSeries lhs = TruncatedSeries::constant(Rational(1), N);
        for (int i = 0; i < d - 1; ++i) lhs = lhs * A;
        CHECK(lhs.shift(d - 1) == C);
    }
}

TEST_CASE("grammar: syllable shortcut agrees with the plain system") {
    for (auto [d, m] : {std::pair{3, 2}, {2, 3}, {5, 2}}) {
        FreeProductSpec spec({cyc(d, {1}, m)});
        GrammarOptions fast;
        fast.syllable_shortcut = true;
        EquationSystem plain = build_system(spec);
        EquationSystem opt = build_system(spec, fast);
        CHECK(opt.size() <= plain.size());
        CHECK(solve_system_series(plain, 12) == solve_system_series(opt, 12));
    }
}

TEST_CASE("grammar: trivial factor gives the single equation F = 1") {
    FiniteGroupTable triv(std::vector<std::vector<int>>{{0}});
    FreeProductSpec spec({FactorSpec::finite(triv, GeneratingSetSpec(triv, {}), 1)});
    EquationSystem sys = build_system(spec);
    CHECK(sys.size() == 1);
    CHECK(export_system(sys, "text") == "F[1,{}] = 1\n");
    auto s = solve_system_series(sys, 5);
    CHECK(s.coeff(0) == 1);
    for (int k = 1; k <= 5; ++k) CHECK(s.coeff(k) == 0);
}

TEST_CASE("grammar: JSON export schema and unknown-count bound") {
    FreeProductSpec spec({cyc(3, {1}, 2)});
    EquationSystem sys = build_system(spec);
    CHECK(sys.size() <= 3 * 8 * 2);

    auto j = nlohmann::json::parse(export_system(sys, "json"));
    CHECK(j["unknowns"].size() == static_cast<size_t>(sys.size()));
    CHECK(j["equations"].size() == static_cast<size_t>(sys.size()));
    CHECK(j["equations"][0].contains("lhs"));
    CHECK(j["equations"][0].contains("rhs"));
    CHECK_THROWS_AS(export_system(sys, "yaml"), std::domain_error);
}

TEST_CASE("grammar: capacity guard on factor order") {
    FreeProductSpec spec({cyc(13, {1})});
    CHECK_THROWS_AS(build_system(spec), CapacityError);
    GrammarOptions big;
    big.max_factor_order = 13;
    CHECK(build_system(spec, big).size() > 0);
}
