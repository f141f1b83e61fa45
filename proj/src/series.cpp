#include "cogrowth/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cogrowth {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_poly(const UniPoly& p, int order) {
    TruncatedSeries s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s.coeffs_[k] = p.coeff(k);
    return s;
}

Rational TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order()) return Rational(0);
    return coeffs_[k];
}

void TruncatedSeries::set_coeff(int k, const Rational& c) {
    if (k < 0 || k > order()) throw std::out_of_range("TruncatedSeries::set_coeff");
    coeffs_[k] = c;
}

int TruncatedSeries::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (coeffs_[k] != 0) return k;
    return order() + 1;
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
    TruncatedSeries s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const int n = std::min(order(), o.order());
    TruncatedSeries s(n);
    for (int k = 0; k <= n; ++k) s.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const int n = std::min(order(), o.order());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            s.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries s(*this);
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& o) const {
    if (o.coeffs_[0] == 0)
        throw std::domain_error("TruncatedSeries: division by series with zero constant term");
    const int n = std::min(order(), o.order());
    TruncatedSeries s(n);
    const Rational inv0 = Rational(1) / o.coeffs_[0];
    for (int k = 0; k <= n; ++k) {
        Rational acc = coeffs_[k];
        for (int j = 1; j <= k; ++j) acc -= o.coeff(j) * s.coeffs_[k - j];
        s.coeffs_[k] = acc * inv0;
    }
    return s;
}

TruncatedSeries TruncatedSeries::shift(int k) const {
    TruncatedSeries s(order());
    for (int i = k; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - k];
    return s;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
    if (g.coeff(0) != 0)
        throw std::domain_error("TruncatedSeries::compose: inner series must vanish at 0");
    const int n = std::min(order(), g.order());
    TruncatedSeries acc = TruncatedSeries::constant(Rational(0), n);
    for (int k = order(); k >= 0; --k)
        acc = acc * g.truncate(n) + TruncatedSeries::constant(coeffs_[k], n);
    return acc;
}

TruncatedSeries TruncatedSeries::sqrt() const {
    Rational r0;
    if (!exact_sqrt(coeffs_[0], r0))
        throw std::domain_error("TruncatedSeries::sqrt: constant term is not a rational square");
    if (r0 == 0)
        throw std::domain_error("TruncatedSeries::sqrt: zero constant term");
    TruncatedSeries s(order());
    s.coeffs_[0] = r0;
    // (s^2)_k = a_k order by order.
    for (int k = 1; k <= order(); ++k) {
        Rational acc = coeffs_[k];
        for (int j = 1; j < k; ++j) acc -= s.coeffs_[j] * s.coeffs_[k - j];
        s.coeffs_[k] = acc / (2 * r0);
    }
    return s;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k <= order(); ++k) {
        if (k) os << ", ";
        os << coeffs_[k].get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace cogrowth
