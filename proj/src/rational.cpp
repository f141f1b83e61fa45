#include "cogrowth/rational.hpp"

namespace cogrowth {

bool exact_sqrt(const Integer& n, Integer& r) {
    if (n < 0) return false;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r * r == n;
}

bool exact_sqrt(const Rational& q, Rational& r) {
    Integer rn, rd;
    if (!exact_sqrt(numer(q), rn) || !exact_sqrt(denom(q), rd)) return false;
    r = Rational(rn, rd);
    r.canonicalize();
    return true;
}

}  // namespace cogrowth
