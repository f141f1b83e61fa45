#ifndef COGROWTH_SERIES_HPP
#define COGROWTH_SERIES_HPP

#include <string>
#include <vector>

#include "cogrowth/rational.hpp"
#include "cogrowth/unipoly.hpp"

namespace cogrowth {

/// Power series in t truncated at a fixed order: exact coefficients
/// a_0..a_N. Binary operations truncate to the smaller order.
class TruncatedSeries {
  public:
    TruncatedSeries() : coeffs_(1, Rational(0)) {}
    explicit TruncatedSeries(int order) : coeffs_(order + 1, Rational(0)) {}
    TruncatedSeries(std::vector<Rational> coeffs);
    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries from_poly(const UniPoly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    void set_coeff(int k, const Rational& c);
    // Smallest k with a_k != 0, or order()+1 if all stored terms vanish.
    int valuation() const;
    bool is_zero() const { return valuation() > order(); }

    TruncatedSeries truncate(int order) const;

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;
    // Requires an invertible (nonzero) constant term in the divisor.
    TruncatedSeries operator/(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    TruncatedSeries shift(int k) const;  // multiply by t^k
    // Substitute g for t; g must have valuation >= 1.
    TruncatedSeries compose(const TruncatedSeries& g) const;
    // Square root with sqrt(a_0) rational; consistency is checked at every
    // order. Throws std::domain_error otherwise.
    TruncatedSeries sqrt() const;

    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
};

inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    return s * c;
}

}  // namespace cogrowth

#endif
