#include "cogrowth/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cogrowth {

namespace {

// scale by a positive constant only: keeps every sign in the chain
UniPoly positive_primitive(const UniPoly& p) {
    UniPoly prim = p.primitive();
    return p.leading() < 0 ? -prim : prim;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{positive_primitive(p), positive_primitive(p.derivative())};
    while (!chain.back().is_zero()) {
        UniPoly q, r;
        UniPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        // primitive parts tame the coefficient swell of the raw remainders
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const UniPoly& p : chain) {
        Rational v = p.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

}  // namespace

std::vector<RootInterval> isolate_positive_roots(const UniPoly& p,
                                                 const Rational& width) {
    std::vector<RootInterval> out;
    UniPoly sf = p.squarefree_part();
    if (sf.degree() <= 0) return out;
    std::vector<UniPoly> chain = sturm_chain(sf);

    // Cauchy bound on root magnitude
    Rational bound(1);
    Rational lead = abs(sf.leading());
    for (const Rational& c : sf.coeffs()) {
        Rational b = Rational(1) + abs(c) / lead;
        if (b > bound) bound = b;
    }
    // roots in the half-open interval (a, b]
    auto count = [&](const Rational& a, const Rational& b) {
        return sign_variations(chain, a) - sign_variations(chain, b);
    };

    std::vector<std::pair<Rational, Rational>> work{{Rational(0), bound}};
    std::vector<std::pair<Rational, Rational>> isolated;
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = count(a, b);
        if (n == 0) continue;
        if (n == 1) {
            isolated.push_back({a, b});
            continue;
        }
        Rational mid = (a + b) / Rational(2);
        work.push_back({a, mid});
        work.push_back({mid, b});
    }
    // keep the output sorted by position
    std::sort(isolated.begin(), isolated.end());
    for (auto& [a, b] : isolated) {
        // isolated root of a square-free polynomial: refine on the endpoint
        // sign change (one evaluation per step instead of two chain sweeps)
        Rational fb = sf.eval(b);
        if (fb == 0) {
            out.push_back({b, b});
            continue;
        }
        int sb = sgn(fb);
        while (b - a > width) {
            Rational mid = (a + b) / Rational(2);
            Rational fm = sf.eval(mid);
            if (fm == 0) {
                a = b = mid;
                break;
            }
            if (sgn(fm) == sb)
                b = mid;
            else
                a = mid;
        }
        out.push_back({a, b});
    }
    return out;
}

SingularityReport singularity_candidates(const BivariatePoly& lambda) {
    if (lambda.is_zero() || lambda.deg_z() < 1)
        throw std::domain_error("singularity_candidates: need deg_z >= 1");
    const Rational width(1, Integer("1000000000000"));
    // repeated z-factors would zero out the discriminant wholesale; the
    // square-free part keeps every branch and every candidate
    BivariatePoly sf = squarefree_z(lambda);
    SingularityReport rep;
    rep.lead_roots = isolate_positive_roots(sf.leading_z(), width);
    if (sf.deg_z() >= 1)
        rep.disc_roots = isolate_positive_roots(discriminant_z(sf), width);
    return rep;
}

double growth_estimate(const TruncatedSeries& series) {
    std::vector<int> nz;
    for (int k = 0; k <= series.order(); ++k)
        if (series.coeff(k) != 0) nz.push_back(k);
    if (nz.size() < 2)
        throw std::domain_error("growth_estimate: too few nonzero terms");
    const int N = nz.back();
    double best = 0;
    for (int k = 1; k <= 4 && k < static_cast<int>(nz.size()); ++k) {
        int M = nz[nz.size() - 1 - k];
        Rational ratio = series.coeff(N) / series.coeff(M);
        double est = std::pow(std::fabs(ratio.get_d()), 1.0 / (N - M));
        if (est > best) best = est;
    }
    return best;
}

SingularityReport radius(const BivariatePoly& lambda, const TruncatedSeries& series) {
    if (series.order() < 15)
        throw std::domain_error("radius: need at least 16 series terms");
    for (int k = 0; k <= series.order(); ++k)
        if (series.coeff(k) < 0)
            throw std::domain_error("radius: coefficients must be nonnegative");
    SingularityReport rep = singularity_candidates(lambda);
    std::vector<RootInterval> all = rep.lead_roots;
    all.insert(all.end(), rep.disc_roots.begin(), rep.disc_roots.end());
    if (all.empty())
        throw std::runtime_error("no positive singularity candidates");
    rep.growth = growth_estimate(series);
    double target = 1.0 / rep.growth;
    const RootInterval* pick = &all.front();
    for (const RootInterval& c : all)
        if (std::fabs(c.mid() - target) < std::fabs(pick->mid() - target)) pick = &c;
    rep.rho = *pick;
    rep.selected = true;
    rep.method = "coefficient-growth";
    return rep;
}

GapVerdict gap_check(const Rational& lo, const Rational& hi) {
    const Rational tol(1, 1000000000);
    if (hi < lo || hi - lo > tol)
        throw std::domain_error("gap_check: interval too wide");
    GapVerdict v;
    v.value = Rational((lo + hi) / 2).get_d();
    v.slack = 0;
    auto meets = [&](long c) { return lo <= Rational(c) + tol && hi >= Rational(c) - tol; };
    if (meets(1)) {
        v.verdict = GapVerdict::One;
        return v;
    }
    if (meets(2)) {
        v.verdict = GapVerdict::Two;
        return v;
    }
    // x >= 2*sqrt(2) - tol, decided via squares: x > 0 and x^2 >= 8
    Rational x = hi + tol;
    if (x > 0 && x * x >= 8) {
        v.verdict = GapVerdict::AtLeastTwoSqrtTwo;
        return v;
    }
    v.verdict = GapVerdict::Violation;
    double d1 = std::fabs(v.value - 1.0);
    double d2 = std::fabs(v.value - 2.0);
    double d3 = 2.0 * std::sqrt(2.0) - v.value;
    v.slack = std::min(d1, std::min(d2, d3 > 0 ? d3 : 0.0));
    return v;
}

double cyclic_radius(int d, int m) {
    if (d < 2 || m < 2) throw std::domain_error("cyclic_radius: need d, m >= 2");
    return std::pow(d - 1, (d - 1.0) / d) / (d * std::pow(m - 1, 1.0 / d));
}

RepeatedRoot repeated_root_locus(int d, int m) {
    if (d < 2 || m < 2)
        throw std::domain_error("repeated_root_locus: need d, m >= 2");
    RepeatedRoot r;
    Integer num = 1, den = m - 1;
    for (int i = 0; i < d - 1; ++i) num *= d - 1;
    for (int i = 0; i < d; ++i) den *= d;
    r.beta_pow_d = Rational(num, den);
    r.beta_pow_d.canonicalize();
    r.beta = std::pow(r.beta_pow_d.get_d(), 1.0 / d);
    r.z0_defined = (d * m - d - m) != 0;
    if (!r.z0_defined) return r;
    r.z0 = Rational(Integer((m - 1) * d), Integer(d * m - d - m));
    r.z0.canonicalize();

    // double root check: m^d beta^d z^d - (z-1)(z+m-1)^{d-1} vanishes to
    // second order at z0
    Integer md = 1;
    for (int i = 0; i < d; ++i) md *= m;
    UniPoly p = UniPoly::monomial(Rational(md) * r.beta_pow_d, d, 'z');
    UniPoly fac({Rational(-1), Rational(1)}, 'z');
    for (int i = 0; i < d - 1; ++i)
        fac = fac * UniPoly({Rational(m - 1), Rational(1)}, 'z');
    p = p - fac;
    if (p.eval(r.z0) != 0 || p.derivative().eval(r.z0) != 0)
        throw std::logic_error("repeated_root_locus: double-root check failed");
    return r;
}

}  // namespace cogrowth
