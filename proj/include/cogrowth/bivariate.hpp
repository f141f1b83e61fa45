#ifndef COGROWTH_BIVARIATE_HPP
#define COGROWTH_BIVARIATE_HPP

#include <string>
#include <vector>

#include "cogrowth/unipoly.hpp"

namespace cogrowth {

/// Element of Q[t,z], stored as coefficients of z^j, each a UniPoly in t.
/// The top z-coefficient is nonzero unless the polynomial is zero.
class BivariatePoly {
  public:
    BivariatePoly() = default;
    explicit BivariatePoly(std::vector<UniPoly> zcoeffs);

    static BivariatePoly zero() { return {}; }
    static BivariatePoly constant(const Rational& c);
    // c * t^i z^j
    static BivariatePoly monomial(const Rational& c, int i, int j);
    static BivariatePoly from_unipoly_t(const UniPoly& p);
    // p(z): a univariate polynomial reinterpreted in the z variable.
    static BivariatePoly from_unipoly_z(const UniPoly& p);

    bool is_zero() const { return zc_.empty(); }
    int deg_z() const { return static_cast<int>(zc_.size()) - 1; }
    int deg_t() const;
    Rational coeff(int i, int j) const;  // coefficient of t^i z^j
    const UniPoly& zcoeff(int j) const;  // coefficient of z^j as poly in t
    const std::vector<UniPoly>& zcoeffs() const { return zc_; }
    UniPoly leading_z() const;  // top z-coefficient

    BivariatePoly operator-() const;
    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator*(const Rational& c) const;
    bool operator==(const BivariatePoly& o) const { return zc_ == o.zc_; }

    BivariatePoly derivative_z() const;
    BivariatePoly derivative_t() const;
    // Substitute a rational point for both variables.
    Rational eval(const Rational& t, const Rational& z) const;
    double eval_double(double t, double z) const;
    // Evaluate at z = p(t), yielding a polynomial in t.
    UniPoly eval_z(const UniPoly& p) const;

    // p(t,z) -> p(a*t, b*z) for monomials a = c_a * t^{da} z^{ea} etc.
    // Used for substitutions of the form t -> t*z.
    BivariatePoly subst_t_times_z() const;  // t -> t*z

    // Integer-coefficient form: content removed, leading coefficient in the
    // lex (t, then z) order positive.
    BivariatePoly normalized() const;
    // Remove any factor free of z (content as a polynomial in z over Q[t]).
    BivariatePoly z_primitive() const;

    std::string str() const;

  private:
    void trim();
    std::vector<UniPoly> zc_;
};

BivariatePoly operator*(const Rational& c, const BivariatePoly& p);

/// Resultant eliminating the named variable ('z' or 't') via the
/// subresultant polynomial remainder sequence. Zero iff the inputs share a
/// factor involving that variable. Throws std::domain_error on zero input.
UniPoly poly_resultant(const BivariatePoly& p, const BivariatePoly& q, char eliminate);

/// (-1)^{n(n-1)/2} Res_z(p, dp/dz) / lc_z(p): the z-discriminant as a
/// polynomial in t.
UniPoly discriminant_z(const BivariatePoly& p);

/// True iff d divides n in Q(t)[z] (univariate division over the fraction
/// field of Q[t] in the z variable).
bool divides_z(const BivariatePoly& d, const BivariatePoly& n);

/// p / gcd(p, dp/dz) over Q(t)[z], normalized to integer coefficients.
/// Keeps exactly the distinct z-irreducible factors of p.
BivariatePoly squarefree_z(const BivariatePoly& p);

}  // namespace cogrowth

#endif
