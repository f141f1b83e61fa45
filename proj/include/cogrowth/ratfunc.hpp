#ifndef COGROWTH_RATFUNC_HPP
#define COGROWTH_RATFUNC_HPP

#include <string>

#include "cogrowth/unipoly.hpp"

namespace cogrowth {

/// Rational function in t, kept gcd-reduced with a monic denominator.
class RatFunc {
  public:
    RatFunc() : num_(UniPoly::zero('t')), den_(UniPoly::constant(Rational(1), 't')) {}
    RatFunc(UniPoly num, UniPoly den);
    explicit RatFunc(const UniPoly& num) : RatFunc(num, UniPoly::constant(Rational(1), 't')) {}
    explicit RatFunc(const Rational& c) : RatFunc(UniPoly::constant(c, 't')) {}

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    Rational eval(const Rational& x) const;
    std::string str() const;

  private:
    void reduce();
    UniPoly num_, den_;
};

}  // namespace cogrowth

#endif
