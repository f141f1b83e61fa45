#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cogrowth/bivariate.hpp"
#include "cogrowth/groups.hpp"
#include "cogrowth/series.hpp"
#include "cogrowth/unipoly.hpp"

namespace cogrowth {

// Rational moment generating function P/Q of one finite factor.
struct FactorRational {
    UniPoly p;  // in t
    UniPoly q;  // in t, q(0) = 1
    int delta = 1;  // max(deg p + 1, deg q)
};

struct ComposerResult {
    BivariatePoly lambda;  // annihilates the cogrowth series; integer, normalized
    int delta = 1;         // product of the factor deltas
    int bound = 1;         // degree bound for both deg_t and deg_z
    std::string provenance;
};

// Fit the minimal linear recurrence to the factor's moments and reconstruct
// P/Q; verified against 3|G| further moments.
FactorRational factor_rational(const FiniteGroupTable& g, const GeneratingSetSpec& s);

// lambda(t,z) = Q(z) - t z P(z)
BivariatePoly lambda_poly(const FactorRational& f);

// Free-probability composition for a free product of factors with
// multiplicities.  If verify_series is non-null, checks
// Lambda(t, F) == 0 mod t^{verify_order+1} and throws on failure.
ComposerResult compose(const std::vector<std::pair<FactorRational, int>>& factors,
                       const TruncatedSeries* verify_series = nullptr);

// Convenience: factor the spec (Z factors converted via z_to_z2z2), compose,
// and verify against the walk oracle mod t^{verify_order+1}.
ComposerResult compose_for_spec(const FreeProductSpec& spec, int verify_order = 14);

// m^d t^d z^d - (z-1)(z+m-1)^{d-1}
BivariatePoly cyclic_equation(int d, int m);

// Theorem-1.2(c)-style system for Z/2 * Z/n with S={x,y}:
// t^{n-1}(1-tD)^{n-1} = (1-tD-t^2)^{n-1} D, then F = (1-tD)/((1-tD)^2-t^2).
struct Z2ZnSystem {
    int n;
    BivariatePoly d_equation;  // z-variable plays the role of D
    TruncatedSeries f_from_d(const TruncatedSeries& d_series) const;
};
Z2ZnSystem z2_zn_system(int n);

// floor((prod delta_i) * (1 + sum 1/delta_i))
int degree_bound(const std::vector<std::pair<int, int>>& delta_mult);

}  // namespace cogrowth
