#include "cogrowth/unipoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cogrowth {

UniPoly::UniPoly(std::initializer_list<Rational> coeffs, char var)
    : var_(var), coeffs_(coeffs) {
    trim();
}

UniPoly::UniPoly(std::vector<Rational> coeffs, char var)
    : var_(var), coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c, char var) {
    UniPoly p(var);
    if (c != 0) p.coeffs_ = {c};
    return p;
}

UniPoly UniPoly::monomial(const Rational& c, int k, char var) {
    UniPoly p(var);
    if (c != 0) {
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = c;
    }
    return p;
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

Rational UniPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

int UniPoly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r(var_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r(var_);
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const Rational& c) const {
    UniPoly r(var_);
    if (c == 0) return r;
    r.coeffs_ = coeffs_;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UniPoly UniPoly::operator/(const Rational& c) const {
    if (c == 0) throw std::domain_error("UniPoly: division by zero scalar");
    return *this * (Rational(1) / c);
}

UniPoly UniPoly::derivative() const {
    UniPoly r(var_);
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    r.trim();
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval_double(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    q = UniPoly(a.var_);
    r = a;
    const int db = b.degree();
    const Rational lb = b.leading();
    if (r.degree() >= db)
        q.coeffs_.assign(r.degree() - db + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        Rational f = r.leading() / lb;
        q.coeffs_[shift] = f;
        for (int i = 0; i <= db; ++i) r.coeffs_[shift + i] -= f * b.coeffs_[i];
        r.trim();
    }
    q.trim();
}

UniPoly UniPoly::divexact(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
    return q;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this / leading();
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), denom(c).get_mpz_t());
    }
    UniPoly scaled = *this * Rational(den_lcm);
    for (const auto& c : scaled.coeffs_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), numer(c).get_mpz_t());
    }
    scaled = scaled / Rational(num_gcd);
    if (scaled.leading() < 0) scaled = -scaled;
    return scaled;
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    UniPoly g = gcd(*this, derivative());
    return divexact(*this, g);
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace cogrowth
