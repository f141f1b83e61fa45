#ifndef COGROWTH_UNIPOLY_HPP
#define COGROWTH_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "cogrowth/rational.hpp"

namespace cogrowth {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The trailing (highest-degree) coefficient is nonzero unless the
/// polynomial is zero, in which case the coefficient vector is empty.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(char var) : var_(var) {}
    UniPoly(std::initializer_list<Rational> coeffs, char var = 't');
    explicit UniPoly(std::vector<Rational> coeffs, char var = 't');

    static UniPoly zero(char var = 't') { return UniPoly(var); }
    static UniPoly constant(const Rational& c, char var = 't');
    // c * var^k
    static UniPoly monomial(const Rational& c, int k, char var = 't');

    char var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;
    // Smallest k with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    UniPoly operator/(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly derivative() const;
    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    // Quotient/remainder over Q; divisor must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // Exact division; throws if the remainder is nonzero.
    static UniPoly divexact(const UniPoly& a, const UniPoly& b);
    // Monic gcd over Q; gcd(0,0) = 0.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    UniPoly monic() const;
    // Integer-coefficient primitive part with positive leading coefficient.
    UniPoly primitive() const;
    // p / gcd(p, p').
    UniPoly squarefree_part() const;

    std::string str() const;

  private:
    void trim();
    char var_ = 't';
    std::vector<Rational> coeffs_;
};

inline UniPoly operator*(const Rational& c, const UniPoly& p) { return p * c; }

}  // namespace cogrowth

#endif
