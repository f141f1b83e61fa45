#include "cogrowth/bivariate.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "cogrowth/ratfunc.hpp"

namespace cogrowth {

BivariatePoly::BivariatePoly(std::vector<UniPoly> zcoeffs) : zc_(std::move(zcoeffs)) {
    trim();
}

void BivariatePoly::trim() {
    while (!zc_.empty() && zc_.back().is_zero()) zc_.pop_back();
}

BivariatePoly BivariatePoly::constant(const Rational& c) {
    return monomial(c, 0, 0);
}

BivariatePoly BivariatePoly::monomial(const Rational& c, int i, int j) {
    BivariatePoly p;
    if (c == 0) return p;
    p.zc_.assign(j + 1, UniPoly::zero('t'));
    p.zc_[j] = UniPoly::monomial(c, i, 't');
    return p;
}

BivariatePoly BivariatePoly::from_unipoly_t(const UniPoly& p) {
    BivariatePoly b;
    if (!p.is_zero()) b.zc_ = {p};
    return b;
}

BivariatePoly BivariatePoly::from_unipoly_z(const UniPoly& p) {
    BivariatePoly b;
    for (int j = 0; j <= p.degree(); ++j)
        b.zc_.push_back(UniPoly::constant(p.coeff(j), 't'));
    b.trim();
    return b;
}

int BivariatePoly::deg_t() const {
    int d = -1;
    for (const auto& c : zc_) d = std::max(d, c.degree());
    return d;
}

Rational BivariatePoly::coeff(int i, int j) const {
    if (j < 0 || j >= static_cast<int>(zc_.size())) return Rational(0);
    return zc_[j].coeff(i);
}

const UniPoly& BivariatePoly::zcoeff(int j) const {
    static const UniPoly kZero;
    if (j < 0 || j >= static_cast<int>(zc_.size())) return kZero;
    return zc_[j];
}

UniPoly BivariatePoly::leading_z() const {
    return zc_.empty() ? UniPoly() : zc_.back();
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r(*this);
    for (auto& c : r.zc_) c = -c;
    return r;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r;
    r.zc_.resize(std::max(zc_.size(), o.zc_.size()));
    for (size_t j = 0; j < r.zc_.size(); ++j) {
        if (j < zc_.size()) r.zc_[j] = r.zc_[j] + zc_[j];
        if (j < o.zc_.size()) r.zc_[j] = r.zc_[j] + o.zc_[j];
    }
    r.trim();
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    return *this + (-o);
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r;
    if (is_zero() || o.is_zero()) return r;
    r.zc_.assign(zc_.size() + o.zc_.size() - 1, UniPoly::zero('t'));
    for (size_t i = 0; i < zc_.size(); ++i) {
        if (zc_[i].is_zero()) continue;
        for (size_t j = 0; j < o.zc_.size(); ++j)
            r.zc_[i + j] = r.zc_[i + j] + zc_[i] * o.zc_[j];
    }
    r.trim();
    return r;
}

BivariatePoly BivariatePoly::operator*(const Rational& c) const {
    BivariatePoly r;
    if (c == 0) return r;
    r.zc_ = zc_;
    for (auto& p : r.zc_) p = p * c;
    return r;
}

BivariatePoly operator*(const Rational& c, const BivariatePoly& p) { return p * c; }

BivariatePoly BivariatePoly::derivative_z() const {
    BivariatePoly r;
    for (size_t j = 1; j < zc_.size(); ++j)
        r.zc_.push_back(zc_[j] * Rational(static_cast<long>(j)));
    r.trim();
    return r;
}

BivariatePoly BivariatePoly::derivative_t() const {
    BivariatePoly r;
    r.zc_.reserve(zc_.size());
    for (const auto& c : zc_) r.zc_.push_back(c.derivative());
    r.trim();
    return r;
}

Rational BivariatePoly::eval(const Rational& t, const Rational& z) const {
    Rational acc(0);
    for (auto it = zc_.rbegin(); it != zc_.rend(); ++it) acc = acc * z + it->eval(t);
    return acc;
}

double BivariatePoly::eval_double(double t, double z) const {
    double acc = 0;
    for (auto it = zc_.rbegin(); it != zc_.rend(); ++it)
        acc = acc * z + it->eval_double(t);
    return acc;
}

UniPoly BivariatePoly::eval_z(const UniPoly& p) const {
    UniPoly acc('t');
    for (auto it = zc_.rbegin(); it != zc_.rend(); ++it) acc = acc * p + *it;
    return acc;
}

BivariatePoly BivariatePoly::subst_t_times_z() const {
    BivariatePoly r;
    for (int j = 0; j < static_cast<int>(zc_.size()); ++j) {
        for (int i = 0; i <= zc_[j].degree(); ++i) {
            const Rational c = zc_[j].coeff(i);
            if (c != 0) r = r + monomial(c, i, i + j);
        }
    }
    return r;
}

BivariatePoly BivariatePoly::normalized() const {
    if (is_zero()) return *this;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& p : zc_)
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), denom(c).get_mpz_t());
        }
    BivariatePoly r = *this * Rational(den_lcm);
    for (const auto& p : r.zc_)
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), numer(c).get_mpz_t());
        }
    r = r * (Rational(1) / Rational(num_gcd));
    // Lex (t, then z) leading coefficient must be positive.
    const int dt = r.deg_t();
    for (int j = r.deg_z(); j >= 0; --j)
        if (r.coeff(dt, j) != 0) {
            if (r.coeff(dt, j) < 0) r = -r;
            break;
        }
    return r;
}

BivariatePoly BivariatePoly::z_primitive() const {
    if (is_zero()) return *this;
    UniPoly g = UniPoly::zero('t');
    for (const auto& c : zc_) g = UniPoly::gcd(g, c);
    if (g.degree() <= 0 && g.valuation() <= 0) return *this;
    BivariatePoly r;
    r.zc_.reserve(zc_.size());
    for (const auto& c : zc_) r.zc_.push_back(UniPoly::divexact(c, g));
    r.trim();
    return r;
}

std::string BivariatePoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = deg_z(); j >= 0; --j) {
        const UniPoly& c = zc_[j];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        if (j == 0) {
            os << c.str();
        } else {
            os << "(" << c.str() << ")*z";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Pseudo-remainder of a by b in z: lc_z(b)^{da-db+1} * a = q*b + r.
BivariatePoly pseudo_rem_z(const BivariatePoly& a, const BivariatePoly& b) {
    const int db = b.deg_z();
    const UniPoly lb = b.leading_z();
    BivariatePoly r = a;
    int steps = a.deg_z() - db + 1;
    while (!r.is_zero() && r.deg_z() >= db) {
        const int shift = r.deg_z() - db;
        const UniPoly lr = r.leading_z();
        std::vector<UniPoly> shifted(shift, UniPoly::zero('t'));
        for (const auto& c : b.zcoeffs()) shifted.push_back(c * UniPoly::constant(Rational(1), 't'));
        BivariatePoly mul_b(shifted);
        // r <- lb*r - lr*z^shift*b
        BivariatePoly lb_r = BivariatePoly::from_unipoly_t(lb) * r;
        BivariatePoly lr_b = BivariatePoly::from_unipoly_t(lr) * mul_b;
        r = lb_r - lr_b;
        --steps;
    }
    // Pad remaining lb powers so the pseudo-division identity holds exactly.
    for (; steps > 0; --steps) r = BivariatePoly::from_unipoly_t(lb) * r;
    return r;
}

BivariatePoly divide_coeffs(const BivariatePoly& a, const UniPoly& d) {
    std::vector<UniPoly> out;
    out.reserve(a.zcoeffs().size());
    for (const auto& c : a.zcoeffs()) out.push_back(UniPoly::divexact(c, d));
    return BivariatePoly(std::move(out));
}

UniPoly pow_poly(const UniPoly& p, int e) {
    UniPoly r = UniPoly::constant(Rational(1), 't');
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// Subresultant PRS resultant in z of two bivariate polynomials (Cohen,
// Algorithm 3.3.7). Coefficient ring is Q[t].
UniPoly resultant_z(BivariatePoly a, BivariatePoly b) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("poly_resultant: zero input polynomial");
    int sign = 1;
    if (a.deg_z() < b.deg_z()) {
        if ((a.deg_z() & 1) && (b.deg_z() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.deg_z() == 0) {
        // Res(a, c) = c^{deg a}
        return pow_poly(b.zcoeff(0), a.deg_z());
    }
    UniPoly g = UniPoly::constant(Rational(1), 't');
    UniPoly h = g;
    while (true) {
        const int da = a.deg_z(), db = b.deg_z();
        const int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        BivariatePoly r = pseudo_rem_z(a, b);
        a = b;
        b = divide_coeffs(r, g * pow_poly(h, delta));
        g = a.leading_z();
        // h = g^delta * h^{1-delta}
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = UniPoly::divexact(pow_poly(g, delta), pow_poly(h, delta - 1));
        }
        if (b.is_zero()) return UniPoly::zero('t');
        if (b.deg_z() == 0) break;
    }
    // h^{1-da} * lc(b)^{da} with da the degree of the last nonconstant term.
    const int da = a.deg_z();
    UniPoly res = UniPoly::divexact(pow_poly(b.zcoeff(0), da), pow_poly(h, da - 1));
    if (sign < 0) res = -res;
    return res;
}

BivariatePoly transpose(const BivariatePoly& p) {
    const int dt = p.deg_t(), dz = p.deg_z();
    std::vector<UniPoly> out;
    for (int i = 0; i <= dt; ++i) {
        std::vector<Rational> row;
        for (int j = 0; j <= dz; ++j) row.push_back(p.coeff(i, j));
        out.emplace_back(std::move(row), 't');
    }
    return BivariatePoly(std::move(out));
}

}  // namespace

UniPoly poly_resultant(const BivariatePoly& p, const BivariatePoly& q, char eliminate) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("poly_resultant: zero input polynomial");
    if (eliminate == 'z') return resultant_z(p, q);
    if (eliminate == 't') {
        // Swap the roles of the two variables; the result is a polynomial in
        // the surviving variable, reported with tag 'z'.
        UniPoly r = resultant_z(transpose(p), transpose(q));
        return UniPoly(r.coeffs(), 'z');
    }
    throw std::domain_error("poly_resultant: unknown variable");
}

UniPoly discriminant_z(const BivariatePoly& p) {
    if (p.is_zero() || p.deg_z() < 1)
        throw std::domain_error("discriminant_z: need deg_z >= 1");
    UniPoly res = poly_resultant(p, p.derivative_z(), 'z');
    // disc = (-1)^{n(n-1)/2} Res_z(p, p_z) / lc_z(p); division is exact.
    const int n = p.deg_z();
    UniPoly disc = UniPoly::divexact(res, p.leading_z());
    if (((n * (n - 1) / 2) % 2) != 0) disc = -disc;
    return disc;
}

namespace {

using PPoly = std::vector<UniPoly>;  // z-coefficients over Q[t], trimmed

void trim_z(PPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// strip the gcd of the z-coefficients (the content as a poly in z over Q[t])
PPoly prim_part(PPoly p) {
    trim_z(p);
    if (p.empty()) return p;
    UniPoly content = UniPoly::zero('t');
    for (const UniPoly& c : p) content = UniPoly::gcd(content, c);
    for (UniPoly& c : p) c = UniPoly::divexact(c, content);
    return p;
}

// pseudo-remainder of a by b in z: lc(b)^k a mod b, fraction-free
PPoly prem_z(PPoly a, const PPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UniPoly& lead = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        UniPoly top = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (UniPoly& c : a) c = c * lead;
        for (int j = 0; j <= db; ++j) a[shift + j] = a[shift + j] - top * b[j];
        a.pop_back();
        trim_z(a);
    }
    return a;
}

PPoly to_ppoly(const BivariatePoly& p) {
    PPoly out;
    for (int j = 0; j <= p.deg_z(); ++j) out.emplace_back(p.zcoeff(j));
    trim_z(out);
    return out;
}

}  // namespace

BivariatePoly squarefree_z(const BivariatePoly& p) {
    if (p.is_zero() || p.deg_z() < 1) return p;
    // primitive PRS for gcd(p, dp/dz) in Q[t][z]
    PPoly a = prim_part(to_ppoly(p));
    PPoly b = prim_part(to_ppoly(p.derivative_z()));
    while (!b.empty()) {
        PPoly r = prem_z(a, b);
        a = std::move(b);
        b = prim_part(std::move(r));
    }
    if (a.size() <= 1) return p.z_primitive().normalized();
    // divide the primitive part of p by the primitive gcd; the quotient has
    // polynomial coefficients, so every leading-term division is exact
    PPoly n = prim_part(to_ppoly(p));
    const int dg = static_cast<int>(a.size()) - 1;
    PPoly q(n.size() - dg, UniPoly::zero('t'));
    while (static_cast<int>(n.size()) - 1 >= dg) {
        UniPoly f = UniPoly::divexact(n.back(), a.back());
        int shift = static_cast<int>(n.size()) - 1 - dg;
        q[shift] = f;
        for (int j = 0; j <= dg; ++j) n[shift + j] = n[shift + j] - f * a[j];
        n.pop_back();
        trim_z(n);
    }
    return BivariatePoly(std::move(q)).z_primitive().normalized();
}

bool divides_z(const BivariatePoly& d, const BivariatePoly& n) {
    if (d.is_zero()) return n.is_zero();
    if (n.is_zero()) return true;
    if (n.deg_z() < d.deg_z()) return false;
    // long division in z over Q(t)
    std::vector<RatFunc> rem;
    for (int j = 0; j <= n.deg_z(); ++j) rem.emplace_back(n.zcoeff(j));
    const RatFunc lead{d.leading_z()};
    int deg = n.deg_z();
    auto top = [&](int k) { return k >= 0 && k < static_cast<int>(rem.size()) ? rem[k] : RatFunc(); };
    while (deg >= d.deg_z()) {
        RatFunc f = top(deg) / lead;
        if (!f.is_zero())
            for (int j = 0; j <= d.deg_z(); ++j)
                rem[deg - d.deg_z() + j] = rem[deg - d.deg_z() + j] - f * RatFunc(d.zcoeff(j));
        --deg;
    }
    for (int j = 0; j < d.deg_z(); ++j)
        if (!top(j).is_zero()) return false;
    return true;
}

}  // namespace cogrowth
