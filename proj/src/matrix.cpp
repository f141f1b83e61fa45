#include "cogrowth/matrix.hpp"

#include <stdexcept>

namespace cogrowth {

RatFuncMatrix::RatFuncMatrix(int dim) : dim_(dim), entries_(dim * dim) {
    if (dim < 1) throw std::domain_error("RatFuncMatrix: dimension must be >= 1");
}

RatFuncMatrix RatFuncMatrix::identity(int dim) {
    RatFuncMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = RatFunc(Rational(1));
    return m;
}

RatFuncMatrix RatFuncMatrix::operator*(const RatFuncMatrix& o) const {
    RatFuncMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < dim_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

RatFuncMatrix RatFuncMatrix::operator+(const RatFuncMatrix& o) const {
    RatFuncMatrix r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

RatFuncMatrix RatFuncMatrix::operator*(const RatFunc& c) const {
    RatFuncMatrix r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

std::vector<UniPoly> charpoly_poly(const std::vector<std::vector<UniPoly>>& a) {
    const int n = static_cast<int>(a.size());
    using Mat = std::vector<std::vector<UniPoly>>;
    auto mul = [n](const Mat& x, const Mat& y) {
        Mat r(n, std::vector<UniPoly>(n, UniPoly::zero('t')));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (x[i][k].is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    if (y[k][j].is_zero()) continue;
                    r[i][j] = r[i][j] + x[i][k] * y[k][j];
                }
            }
        return r;
    };

    std::vector<UniPoly> c(n + 1, UniPoly::zero('t'));
    c[n] = UniPoly::constant(Rational(1), 't');
    Mat m = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // m <- a * (m + c_{n-k+1} I)
            Mat shifted = m;
            for (int i = 0; i < n; ++i) shifted[i][i] = shifted[i][i] + c[n - k + 1];
            m = mul(a, shifted);
        }
        UniPoly trace = UniPoly::zero('t');
        for (int i = 0; i < n; ++i) trace = trace + m[i][i];
        c[n - k] = -(trace / Rational(k));
    }
    return c;
}

std::vector<RatFunc> charpoly(const RatFuncMatrix& m) {
    const int n = m.dim();
    // Clear denominators to the scalar lcm D, take the characteristic
    // polynomial of the polynomial matrix D*M, and restore D afterwards.
    UniPoly d = UniPoly::constant(Rational(1), 't');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const UniPoly& den = m.at(i, j).den();
            UniPoly g = UniPoly::gcd(d, den);
            d = UniPoly::divexact(d * den, g);
        }
    std::vector<std::vector<UniPoly>> b(n, std::vector<UniPoly>(n, UniPoly::zero('t')));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b[i][j] = m.at(i, j).num() * UniPoly::divexact(d, m.at(i, j).den());
    std::vector<UniPoly> cb = charpoly_poly(b);
    std::vector<RatFunc> out(n + 1);
    UniPoly dk = UniPoly::constant(Rational(1), 't');
    for (int k = n; k >= 0; --k) {
        out[k] = RatFunc(cb[k], dk);
        if (k > 0) dk = dk * d;
    }
    return out;
}

}  // namespace cogrowth
