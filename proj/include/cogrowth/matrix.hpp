#ifndef COGROWTH_MATRIX_HPP
#define COGROWTH_MATRIX_HPP

#include <vector>

#include "cogrowth/ratfunc.hpp"

namespace cogrowth {

/// Square matrix over the field of rational functions in t.
class RatFuncMatrix {
  public:
    explicit RatFuncMatrix(int dim);

    int dim() const { return dim_; }
    RatFunc& at(int i, int j) { return entries_[i * dim_ + j]; }
    const RatFunc& at(int i, int j) const { return entries_[i * dim_ + j]; }

    static RatFuncMatrix identity(int dim);
    RatFuncMatrix operator*(const RatFuncMatrix& o) const;
    RatFuncMatrix operator+(const RatFuncMatrix& o) const;
    RatFuncMatrix operator*(const RatFunc& c) const;

  private:
    int dim_;
    std::vector<RatFunc> entries_;
};

/// Coefficients, lowest degree first, of the monic characteristic polynomial
/// det(xI - M). Denominators are cleared to a scalar polynomial first and the
/// characteristic polynomial of the integer-polynomial matrix is computed by
/// Faddeev-LeVerrier (only exact scalar divisions), then the scalar
/// denominator is restored.
std::vector<RatFunc> charpoly(const RatFuncMatrix& m);

/// Same, for a matrix with polynomial entries given as a dense grid.
std::vector<UniPoly> charpoly_poly(const std::vector<std::vector<UniPoly>>& m);

}  // namespace cogrowth

#endif
