#pragma once

#include <stdexcept>

#include "cogrowth/bivariate.hpp"
#include "cogrowth/series.hpp"

namespace cogrowth {

struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SeriesRootProblem {
    BivariatePoly lambda;
    TruncatedSeries prefix;  // initial segment; must satisfy lambda to its order
    int target_order = 0;
};

// The unique series extending the prefix with lambda(t, f) == 0 mod
// t^{N+1}.  Newton (quadratic) lifting when the z-derivative is a unit,
// order-by-order linear lifting past its t-valuation otherwise.
TruncatedSeries series_root(const SeriesRootProblem& p);

struct GuessResult {
    bool found = false;  // false: no algebraic relation within bounds
    BivariatePoly candidate;  // integer, z-primitive, canonical sign
    int deg_t_used = 0;
    int deg_z_used = 0;
    int verification_order = 0;
};

// Minimal-degree annihilating polynomial from series data: solves
// sum c_ij t^i F^j == 0 mod t^{N+1} exactly, scanning deg_z then deg_t.
GuessResult guess_algebraic(const TruncatedSeries& series, int deg_t_max, int deg_z_max);

}  // namespace cogrowth
