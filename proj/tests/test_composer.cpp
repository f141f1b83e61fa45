#include <cmath>

#include "cogrowth/composer.hpp"
#include "cogrowth/oracle.hpp"
#include "doctest.h"

using namespace cogrowth;

namespace {

UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.push_back(Rational(c));
    return UniPoly(v, 't');
}

FactorRational fr(int d, bool symmetric = false) {
    FiniteGroupTable g = FiniteGroupTable::cyclic(d);
    std::vector<int> gens{1};
    if (symmetric && d > 2) gens.push_back(d - 1);
    return factor_rational(g, GeneratingSetSpec(g, gens));
}

TruncatedSeries oracle_series(const FreeProductSpec& spec, int N) {
    auto a = cogrowth_sequence(spec, N);
    TruncatedSeries f(N);
    for (int k = 0; k <= N; ++k) f.set_coeff(k, Rational(a[k]));
    return f;
}

}  // namespace

TEST_CASE("factor_rational: cyclic groups") {
    FactorRational z2 = fr(2);
    CHECK(z2.p == up({1}));
    CHECK(z2.q == up({1, 0, -1}));
    CHECK(z2.delta == 2);

    FactorRational z3 = fr(3);
    CHECK(z3.p == up({1}));
    CHECK(z3.q == up({1, 0, 0, -1}));
    CHECK(z3.delta == 3);

    FactorRational z3s = fr(3, true);
    CHECK(z3s.p == up({1, -1}));
    CHECK(z3s.q == up({1, -1, -2}));
    CHECK(z3s.delta == 2);
}

TEST_CASE("lambda_poly: shape and coefficients") {
    BivariatePoly l2 = lambda_poly(fr(2));  // 1 - z^2 - t z
    CHECK(l2.deg_z() == 2);
    CHECK(l2.deg_t() == 1);
    CHECK(l2.coeff(0, 0) == 1);
    CHECK(l2.coeff(0, 2) == -1);
    CHECK(l2.coeff(1, 1) == -1);

    BivariatePoly l3 = lambda_poly(fr(3));  // 1 - z^3 - t z
    CHECK(l3.coeff(0, 3) == -1);
    CHECK(l3.coeff(1, 1) == -1);

    // (1 - z - 2z^2) - t z (1 - z)
    BivariatePoly l3s = lambda_poly(fr(3, true));
    CHECK(l3s.coeff(0, 1) == -1);
    CHECK(l3s.coeff(0, 2) == -2);
    CHECK(l3s.coeff(1, 1) == -1);
    CHECK(l3s.coeff(1, 2) == 1);
}

TEST_CASE("lambda_poly: root recovers the Cauchy transform value") {
    // At small t the branch z*(t) -> 0 of lambda(t,z)=0 satisfies
    // z* P(z*)/Q(z*) = 1/t.
    for (bool sym : {false, true}) {
        FactorRational f = fr(3, sym);
        BivariatePoly lam = lambda_poly(f);
        const double t = 0.1;
        double z = t;
        for (int iter = 0; iter < 80; ++iter) {
            double val = lam.eval_double(t, z);
            double der = lam.derivative_z().eval_double(t, z);
            z -= val / der;
        }
        double c = z * f.p.eval_double(z) / f.q.eval_double(z);
        CHECK(std::abs(c - 1.0 / t) < 1e-12);
    }
}

TEST_CASE("compose: Z2 multiplicities against closed forms") {
    // m=2: Lambda proportional to 4 t^2 z^2 - z^2 + 1
    ComposerResult r2 = compose({{fr(2), 2}});
    BivariatePoly expect2 =
        (BivariatePoly::monomial(Rational(4), 2, 2) -
         BivariatePoly::monomial(Rational(1), 0, 2) +
         BivariatePoly::monomial(Rational(1), 0, 0))
            .normalized();
    CHECK(r2.lambda.normalized() == expect2);

    // m=3: the irreducible factor (9t^2-1)z^2 - z + 2 divides Lambda
    ComposerResult r3 = compose({{fr(2), 3}});
    BivariatePoly factor = BivariatePoly::monomial(Rational(9), 2, 2) -
                           BivariatePoly::monomial(Rational(1), 0, 2) -
                           BivariatePoly::monomial(Rational(1), 0, 1) +
                           BivariatePoly::monomial(Rational(2), 0, 0);
    CHECK(divides_z(factor, r3.lambda));
}

TEST_CASE("compose: cyclic_equation divides the composed polynomial") {
    for (auto [d, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        ComposerResult r = compose({{fr(d), m}});
        CHECK(divides_z(cyclic_equation(d, m), r.lambda));
        CHECK(r.lambda.deg_t() <= r.bound);
        CHECK(r.lambda.deg_z() <= r.bound);
    }
}

TEST_CASE("compose: single factor annihilates its own rational series") {
    for (bool sym : {false, true}) {
        FactorRational f = fr(4, sym);
        const int N = 20;
        TruncatedSeries s = TruncatedSeries::from_poly(f.p, N) /
                            TruncatedSeries::from_poly(f.q, N);
        CHECK_NOTHROW(compose({{f, 1}}, &s));
    }
}

TEST_CASE("compose: permutation invariance") {
    ComposerResult a = compose({{fr(2), 1}, {fr(3, true), 2}});
    ComposerResult b = compose({{fr(3, true), 2}, {fr(2), 1}});
    CHECK(a.lambda.normalized() == b.lambda.normalized());
    CHECK(a.delta == b.delta);
    CHECK(a.bound == b.bound);
}

TEST_CASE("compose_for_spec: oracle verification on fixtures") {
    FiniteGroupTable z2t = FiniteGroupTable::cyclic(2);
    FiniteGroupTable z3t = FiniteGroupTable::cyclic(3);
    std::vector<FreeProductSpec> fixtures;
    fixtures.push_back(FreeProductSpec(
        {FactorSpec::finite(z2t, GeneratingSetSpec(z2t, {1}), 2)}));
    fixtures.push_back(FreeProductSpec(
        {FactorSpec::finite(z2t, GeneratingSetSpec(z2t, {1}), 1),
         FactorSpec::finite(z3t, GeneratingSetSpec(z3t, {1}), 1)}));
    fixtures.push_back(FreeProductSpec(
        {FactorSpec::finite(z2t, GeneratingSetSpec(z2t, {1}), 1), FactorSpec::z(1)}));
    fixtures.push_back(FreeProductSpec({FactorSpec::z(1)}));
    for (const FreeProductSpec& spec : fixtures) {
        ComposerResult r = compose_for_spec(spec);
        CHECK(r.lambda.deg_t() <= r.bound);
        CHECK(r.lambda.deg_z() <= r.bound);
        // independent re-check at a higher order
        TruncatedSeries f = oracle_series(z_to_z2z2(spec), 18);
        CHECK_NOTHROW(compose(
            [&] {
                FreeProductSpec fs = z_to_z2z2(spec);
                std::vector<std::pair<FactorRational, int>> parts;
                for (const FactorSpec& fac : fs.factors) {
                    FiniteGroupTable g(fac.mul);
                    parts.push_back(
                        {factor_rational(g, GeneratingSetSpec(g, fac.gens)),
                         fac.multiplicity});
                }
                return parts;
            }(),
            &f));
    }
}

TEST_CASE("cyclic_equation: closed forms and guards") {
    BivariatePoly e22 = cyclic_equation(2, 2);
    CHECK(e22.coeff(2, 2) == 4);
    CHECK(e22.coeff(0, 2) == -1);
    CHECK(e22.coeff(0, 0) == 1);
    CHECK(e22.coeff(0, 1) == 0);

    BivariatePoly e23 = cyclic_equation(2, 3);  // 9t^2z^2 - z^2 - z + 2
    CHECK(e23.coeff(2, 2) == 9);
    CHECK(e23.coeff(0, 2) == -1);
    CHECK(e23.coeff(0, 1) == -1);
    CHECK(e23.coeff(0, 0) == 2);

    // 8t^3z^3 - (z-1)(z+1)^2
    BivariatePoly e32 = cyclic_equation(3, 2);
    BivariatePoly check = BivariatePoly::monomial(Rational(8), 3, 3) -
                          (BivariatePoly::monomial(Rational(1), 0, 1) -
                           BivariatePoly::monomial(Rational(1), 0, 0)) *
                              (BivariatePoly::monomial(Rational(1), 0, 1) +
                               BivariatePoly::monomial(Rational(1), 0, 0)) *
                              (BivariatePoly::monomial(Rational(1), 0, 1) +
                               BivariatePoly::monomial(Rational(1), 0, 0));
    CHECK(e32 == check);

    CHECK_THROWS_AS(cyclic_equation(1, 2), std::domain_error);
    CHECK_THROWS_AS(cyclic_equation(2, 1), std::domain_error);
}

TEST_CASE("z2_zn_system: equation shape") {
    Z2ZnSystem sys = z2_zn_system(3);
    CHECK(sys.n == 3);
    CHECK(sys.d_equation.deg_z() <= 3);
    // D == t^{n-1} + O(t^n) must satisfy the equation to low order
    const int N = 3;
    TruncatedSeries d(N);
    d.set_coeff(2, Rational(1));
    TruncatedSeries residual(N);
    TruncatedSeries zpow = TruncatedSeries::constant(Rational(1), N);
    for (int j = 0; j <= sys.d_equation.deg_z(); ++j) {
        residual = residual +
                   TruncatedSeries::from_poly(sys.d_equation.zcoeff(j), N) * zpow;
        zpow = zpow * d;
    }
    for (int k = 0; k <= N; ++k) CHECK(residual.coeff(k) == 0);
    CHECK_THROWS_AS(z2_zn_system(1), std::domain_error);
}

TEST_CASE("degree_bound examples") {
    CHECK(degree_bound({{2, 5}}) == 3);
    CHECK(degree_bound({{3, 2}}) == 4);
    CHECK(degree_bound({{2, 1}, {3, 1}}) == 11);
    CHECK_THROWS_AS(degree_bound({{0, 1}}), std::domain_error);
}
