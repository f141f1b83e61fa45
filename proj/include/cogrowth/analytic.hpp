#pragma once

#include <string>
#include <vector>

#include "cogrowth/bivariate.hpp"
#include "cogrowth/series.hpp"

namespace cogrowth {

// Isolating interval (lo, hi] for a single real root, rational endpoints.
struct RootInterval {
    Rational lo, hi;
    double mid() const { return Rational((lo + hi) / 2).get_d(); }
};

// Positive real roots of p, isolated by a Sturm chain on the square-free
// part and bisected down to the requested interval width.
std::vector<RootInterval> isolate_positive_roots(const UniPoly& p,
                                                 const Rational& width);

struct SingularityReport {
    std::vector<RootInterval> lead_roots;  // positive roots of lc_z(lambda)
    std::vector<RootInterval> disc_roots;  // positive roots of disc_z(lambda)
    bool selected = false;
    RootInterval rho;      // chosen candidate, when selected
    std::string method;
    double growth = 0;     // coefficient-growth estimate of 1/rho
};

// Candidate singularities only: every singularity of an algebraic series
// annihilated by lambda lies among these (plus t=0, excluded here).
SingularityReport singularity_candidates(const BivariatePoly& lambda);

// Estimate of limsup a_n^{1/n} from the tail of the series: ratios of the
// trailing nonzero coefficients at spacings up to 4, maximized.
double growth_estimate(const TruncatedSeries& series);

// Candidate set plus selection: picks the candidate nearest to the
// reciprocal of the coefficient-growth estimate.
SingularityReport radius(const BivariatePoly& lambda, const TruncatedSeries& series);

struct GapVerdict {
    enum Region { One, Two, AtLeastTwoSqrtTwo, Violation };
    Region verdict;
    double value;
    double slack;  // distance to the nearest allowed region; 0 when allowed
};

// Classify 1/rho (given as an interval of width <= 1e-9) against
// {1} u {2} u [2*sqrt(2), oo) with tolerance 1e-9.  The 2*sqrt(2)
// boundary is decided exactly by comparing squares against 8.
GapVerdict gap_check(const Rational& lo, const Rational& hi);

// (d-1)^{(d-1)/d} / (d (m-1)^{1/d}) for the cyclic family, d, m >= 2.
double cyclic_radius(int d, int m);

struct RepeatedRoot {
    Rational beta_pow_d;  // beta^d = (d-1)^{d-1} / ((m-1) d^d)
    double beta;
    bool z0_defined;      // false exactly for (d,m) = (2,2)
    Rational z0;          // (m-1)d / (dm-d-m) when defined
};

// Parameters where the cyclic-family polynomial acquires a repeated z-root;
// the double root is verified symbolically before returning.
RepeatedRoot repeated_root_locus(int d, int m);

}  // namespace cogrowth
