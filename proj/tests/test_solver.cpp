#include "cogrowth/composer.hpp"
#include "cogrowth/oracle.hpp"
#include "cogrowth/solver.hpp"
#include "doctest.h"

using namespace cogrowth;

namespace {

UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.push_back(Rational(c));
    return UniPoly(v, 't');
}

BivariatePoly zterm(const UniPoly& c, int j) {
    return BivariatePoly::from_unipoly_t(c) * BivariatePoly::monomial(Rational(1), 0, j);
}

TruncatedSeries prefix(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.push_back(Rational(c));
    return TruncatedSeries(v);
}

FreeProductSpec z2_zn_spec(int n) {
    FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
    FiniteGroupTable zn = FiniteGroupTable::cyclic(n);
    return FreeProductSpec({FactorSpec::finite(z2, GeneratingSetSpec(z2, {1}), 1),
                            FactorSpec::finite(zn, GeneratingSetSpec(zn, {1}), 1)});
}

TruncatedSeries oracle_series(const FreeProductSpec& spec, int N) {
    auto a = cogrowth_sequence(spec, N);
    TruncatedSeries f(N);
    for (int k = 0; k <= N; ++k) f.set_coeff(k, Rational(a[k]));
    return f;
}

// Long series for a spec: short oracle prefix, then lifted through the
// composed annihilating polynomial.
TruncatedSeries long_series(const FreeProductSpec& spec, int N) {
    ComposerResult r = compose_for_spec(spec);
    return series_root({r.lambda, oracle_series(spec, 8), N});
}

// ((t-1)^n + t^n)((t+1)^n - t^n) z^n + lower terms for n = 3
BivariatePoly example_cubic() {
    UniPoly lead = up({-1, 3, -3, 2}) * up({1, 3, 3});
    return (zterm(lead, 3) + zterm(up({-1, 0, 2, 1, -1, 1}), 2) +
            zterm(up({1, 0, -1, 1}), 1) + zterm(up({1}), 0))
        .normalized();
}

}  // namespace

TEST_CASE("series_root: quadratic with unit derivative (Newton path)") {
    // (9t^2-1)z^2 - z + 2 has the root 4/(1 + 3 sqrt(1-8t^2))
    BivariatePoly lam = BivariatePoly::monomial(Rational(9), 2, 2) -
                        BivariatePoly::monomial(Rational(1), 0, 2) -
                        BivariatePoly::monomial(Rational(1), 0, 1) +
                        BivariatePoly::monomial(Rational(2), 0, 0);
    const int N = 10;
    TruncatedSeries f = series_root({lam, prefix({1}), N});
    TruncatedSeries closed =
        TruncatedSeries::constant(Rational(4), N) /
        (TruncatedSeries::constant(Rational(1), N) +
         Rational(3) * (TruncatedSeries::constant(Rational(1), N) -
                        TruncatedSeries::constant(Rational(8), N).shift(2))
                           .sqrt());
    CHECK(f == closed);
    CHECK(f.coeff(6) == 87);
}

TEST_CASE("series_root: linear equation gives a constant") {
    BivariatePoly lam = BivariatePoly::monomial(Rational(1), 0, 1) -
                        BivariatePoly::monomial(Rational(1), 0, 0);
    TruncatedSeries f = series_root({lam, prefix({1}), 12});
    CHECK(f == TruncatedSeries::constant(Rational(1), 12));
}

TEST_CASE("series_root: target shorter than the prefix") {
    BivariatePoly lam = BivariatePoly::monomial(Rational(1), 0, 1) -
                        BivariatePoly::monomial(Rational(1), 0, 0);
    TruncatedSeries f = series_root({lam, prefix({1, 0, 0, 0}), 1});
    CHECK(f.order() == 1);
    CHECK(f.coeff(0) == 1);
}

TEST_CASE("series_root: z2_zn auxiliary equations reproduce the oracle") {
    for (int n : {2, 3, 4}) {
        const int N = 8;
        Z2ZnSystem sys = z2_zn_system(n);
        TruncatedSeries d0(n - 1);
        d0.set_coeff(n - 1, Rational(1));
        TruncatedSeries d = series_root({sys.d_equation, d0, N});
        TruncatedSeries f = sys.f_from_d(d);
        CHECK(f == oracle_series(z2_zn_spec(n), N));
    }
}

TEST_CASE("series_root: error cases") {
    // prefix violating the equation
    BivariatePoly lin = BivariatePoly::monomial(Rational(1), 0, 1) -
                        BivariatePoly::monomial(Rational(1), 1, 0);
    CHECK_THROWS_AS(series_root({lin, prefix({1}), 5}), InconsistencyError);

    // z^2 - t^2: the zero prefix cannot pin down a branch
    BivariatePoly quad = BivariatePoly::monomial(Rational(1), 0, 2) -
                         BivariatePoly::monomial(Rational(1), 2, 0);
    CHECK_THROWS_AS(series_root({quad, prefix({0}), 5}), AmbiguityError);

    // consistent to prefix order but not liftable: f = t + t^2 + ...
    CHECK_THROWS_AS(series_root({quad, prefix({0, 1, 1}), 6}), InconsistencyError);

    // the branch f = t lifts fine through the vanishing derivative
    TruncatedSeries f = series_root({quad, prefix({0, 1}), 8});
    CHECK(f == TruncatedSeries::constant(Rational(1), 8).shift(1));

    BivariatePoly tonly = BivariatePoly::monomial(Rational(1), 1, 0);
    CHECK_THROWS_AS(series_root({tonly, prefix({0}), 3}), std::domain_error);
}

TEST_CASE("guess_algebraic: recovers the Z2*Z2 equation from 40 terms") {
    FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
    FreeProductSpec spec(
        {FactorSpec::finite(z2, GeneratingSetSpec(z2, {1}), 2)});
    TruncatedSeries f = oracle_series(spec, 40);
    GuessResult g = guess_algebraic(f, 3, 3);
    REQUIRE(g.found);
    BivariatePoly expect = (BivariatePoly::monomial(Rational(4), 2, 2) -
                            BivariatePoly::monomial(Rational(1), 0, 2) +
                            BivariatePoly::monomial(Rational(1), 0, 0))
                               .normalized();
    CHECK(g.candidate == expect);
    CHECK(g.deg_z_used == 2);
    CHECK(g.deg_t_used == 2);
    CHECK(g.verification_order == 40);

    // deterministic: same input, same output
    GuessResult g2 = guess_algebraic(f, 3, 3);
    CHECK(g2.candidate == g.candidate);

    // scaling the series keeps it algebraic with the same degrees
    GuessResult gs = guess_algebraic(f * Rational(7, 3), 3, 3);
    REQUIRE(gs.found);
    CHECK(gs.deg_z_used == 2);
    CHECK(gs.deg_t_used == 2);

    // round trip: lift the guessed equation back to the oracle series
    TruncatedSeries back = series_root({g.candidate, oracle_series(spec, 4), 40});
    CHECK(back == f);
}

TEST_CASE("guess_algebraic: minimal cubic for Z2*Z3") {
    FreeProductSpec spec = z2_zn_spec(3);
    TruncatedSeries f = long_series(spec, 60);
    CHECK(f.truncate(8) == oracle_series(spec, 8));
    GuessResult g = guess_algebraic(f, 6, 3);
    REQUIRE(g.found);
    CHECK(g.candidate == example_cubic());
    CHECK(g.deg_z_used == 3);
    CHECK(g.deg_t_used == 5);

    // the minimal equation divides the composed one
    ComposerResult r = compose_for_spec(spec);
    CHECK(divides_z(g.candidate, r.lambda));
}

TEST_CASE("guess_algebraic: constant series") {
    TruncatedSeries one = TruncatedSeries::constant(Rational(1), 30);
    GuessResult g = guess_algebraic(one, 1, 1);
    REQUIRE(g.found);
    BivariatePoly expect = BivariatePoly::monomial(Rational(1), 0, 1) -
                           BivariatePoly::monomial(Rational(1), 0, 0);
    CHECK(g.candidate == expect);
    CHECK(g.deg_z_used == 1);
    CHECK(g.deg_t_used == 0);
}

TEST_CASE("guess_algebraic: leading coefficient of Z2*Zn minimal equations") {
    for (int n : {3, 4, 5}) {
        const int dt = 2 * n - 1;
        const int N = (dt + 1) * (n + 1) + 12;
        TruncatedSeries f = long_series(z2_zn_spec(n), N);
        GuessResult g = guess_algebraic(f, dt, n);
        REQUIRE(g.found);
        CHECK(g.deg_z_used == n);
        // lead = -((t+1)^n - t^n)((1-t)^n - t^n)
        UniPoly tp1 = up({1, 1});
        UniPoly omt = up({1, -1});
        UniPoly tn = UniPoly::monomial(Rational(1), n);
        UniPoly pow_tp1 = up({1}), pow_omt = up({1});
        for (int i = 0; i < n; ++i) {
            pow_tp1 = pow_tp1 * tp1;
            pow_omt = pow_omt * omt;
        }
        UniPoly lead = -((pow_tp1 - tn) * (pow_omt - tn));
        CHECK(g.candidate.leading_z() == lead);
    }
}

TEST_CASE("guess_algebraic: no relation within bounds") {
    // exp is not algebraic; factorials defeat any small relation
    const int N = 40;
    TruncatedSeries e(N);
    Rational c(1);
    for (int k = 0; k <= N; ++k) {
        e.set_coeff(k, c);
        c /= Rational(k + 1);
    }
    GuessResult g = guess_algebraic(e, 2, 2);
    CHECK(!g.found);
}

TEST_CASE("guess_algebraic: preconditions") {
    TruncatedSeries s = TruncatedSeries::constant(Rational(1), 10);
    CHECK_THROWS_AS(guess_algebraic(s, 3, 3), std::domain_error);
    CHECK_THROWS_AS(guess_algebraic(s, 1, 0), std::domain_error);
}
