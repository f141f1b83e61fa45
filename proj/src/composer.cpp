#include "cogrowth/composer.hpp"

#include <sstream>
#include <stdexcept>

#include "cogrowth/matrix.hpp"
#include "cogrowth/oracle.hpp"

namespace cogrowth {

namespace {

// Solve A x = b exactly; returns false if inconsistent.  A is m x n.
bool solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = Rational(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return false;
    x.assign(cols, Rational(0));
    for (size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
    return true;
}

Integer int_pow(long base, int e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return out;
}

}  // namespace

FactorRational factor_rational(const FiniteGroupTable& g, const GeneratingSetSpec& s) {
    const int order = g.order;
    const int fit_hi = 2 * order;        // fit window
    const int n_max = 5 * order;         // plus 3|G| verification moments
    std::vector<Integer> m = finite_group_moments(g, s, n_max);

    std::vector<Rational> c;
    int deg = -1;
    for (int L = 0; L <= order; ++L) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (int n = L; n <= fit_hi; ++n) {
            std::vector<Rational> row(L);
            for (int k = 1; k <= L; ++k) row[k - 1] = Rational(m[n - k]);
            rows.push_back(std::move(row));
            rhs.emplace_back(m[n]);
        }
        if (solve_linear(rows, rhs, c)) {
            deg = L;
            break;
        }
    }
    if (deg < 0)
        throw std::runtime_error("factor_rational: no recurrence of order <= |G|");

    UniPoly q = UniPoly::constant(Rational(1), 't');
    for (int k = 1; k <= deg; ++k)
        q = q - UniPoly::monomial(c[k - 1], k, 't');
    // p = (q * moment series) truncated below t^deg
    std::vector<Rational> pc(std::max(deg, 1), Rational(0));
    for (int i = 0; i < deg; ++i)
        for (int k = 0; k <= i; ++k) pc[i] += q.coeff(k) * Rational(m[i - k]);
    if (deg == 0) pc[0] = Rational(m[0]);  // constant series (never hit in practice)
    UniPoly p(pc, 't');

    // reduce and normalize q(0) = 1
    UniPoly gcd = UniPoly::gcd(p, q);
    if (gcd.degree() > 0) {
        p = UniPoly::divexact(p, gcd);
        q = UniPoly::divexact(q, gcd);
    }
    if (q.coeff(0) == 0) throw std::runtime_error("factor_rational: q(0) = 0");
    Rational scale = Rational(1) / q.coeff(0);
    p = p * scale;
    q = q * scale;
    for (int k = 0; k <= std::max(p.degree(), q.degree()); ++k)
        if (denom(p.coeff(k)) != 1 || denom(q.coeff(k)) != 1)
            throw std::runtime_error("factor_rational: non-integer coefficients");

    // verify against all computed moments
    TruncatedSeries series = TruncatedSeries::from_poly(p, n_max) /
                             TruncatedSeries::from_poly(q, n_max);
    for (int n = 0; n <= n_max; ++n)
        if (series.coeff(n) != Rational(m[n]))
            throw std::runtime_error("factor_rational: verification failed");

    FactorRational f;
    f.p = p;
    f.q = q;
    f.delta = std::max(p.degree() + 1, q.degree());
    return f;
}

BivariatePoly lambda_poly(const FactorRational& f) {
    // Q(z) - t z P(z): z-degree delta, t-degree 1
    BivariatePoly out = BivariatePoly::zero();
    for (int k = 0; k <= f.q.degree(); ++k)
        out = out + BivariatePoly::monomial(f.q.coeff(k), 0, k);
    for (int k = 0; k <= f.p.degree(); ++k)
        out = out - BivariatePoly::monomial(f.p.coeff(k), 1, k + 1);
    return out;
}

ComposerResult compose(const std::vector<std::pair<FactorRational, int>>& factors,
                       const TruncatedSeries* verify_series) {
    if (factors.empty()) throw std::domain_error("compose: need at least one factor");
    for (const auto& [f, m] : factors)
        if (m < 1) throw std::domain_error("compose: multiplicities must be >= 1");

    // Per factor, mu(w,z) = w z^D Q(1/z) - z^{D-1} P(1/z) annihilates the
    // inverse Cauchy transform K(w); w * (multiplication-by-K companion
    // matrix) has entries p_j - w q_j off the w-subdiagonal.
    int dim = 1;
    long mult_sum = 0;
    for (const auto& [f, m] : factors) {
        dim *= f.delta;
        mult_sum += m;
    }

    const UniPoly zero_w = UniPoly('w');
    std::vector<std::vector<UniPoly>> a(dim, std::vector<UniPoly>(dim, zero_w));

    int stride = 1;  // index = sum_i j_i * stride_i, built factor by factor
    for (const auto& [f, m] : factors) {
        const int d = f.delta;
        // wL[row][col] for the companion action on K-powers
        std::vector<std::vector<UniPoly>> wl(d, std::vector<UniPoly>(d, zero_w));
        for (int j = 0; j + 1 < d; ++j)
            wl[j + 1][j] = UniPoly::monomial(Rational(1), 1, 'w');
        for (int k = 0; k < d; ++k) {
            // q_k = [z^k] z^D Q(1/z) = Q coeff (D-k); p_k = P coeff (D-1-k)
            Rational qk = f.q.coeff(d - k);
            Rational pk = f.p.coeff(d - 1 - k);
            UniPoly entry = UniPoly::constant(pk, 'w') -
                            UniPoly::monomial(qk, 1, 'w');
            wl[k][d - 1] = wl[k][d - 1] + entry;
        }
        // add m * (wL acting on this tensor slot)
        for (int base = 0; base < dim; ++base) {
            int j = (base / stride) % d;
            if ((base / stride) % d != j) continue;
            for (int jj = 0; jj < d; ++jj) {
                if (wl[jj][j].is_zero()) continue;
                int target = base + (jj - j) * stride;
                a[target][base] = a[target][base] + wl[jj][j] * Rational(m);
            }
        }
        stride *= d;
    }
    const UniPoly shift = UniPoly::constant(Rational(mult_sum - 1), 'w');
    for (int i = 0; i < dim; ++i) a[i][i] = a[i][i] - shift;

    std::vector<UniPoly> cp = charpoly_poly(a);  // coeffs a_l(w), l = 0..dim

    // Lambda(t,z) = sum_l a_l(t z) z^l
    BivariatePoly pre = BivariatePoly::zero();
    for (size_t l = 0; l < cp.size(); ++l) {
        for (int k = 0; k <= cp[l].degree(); ++k) {
            if (cp[l].coeff(k) == 0) continue;
            pre = pre + BivariatePoly::monomial(cp[l].coeff(k), k,
                                                static_cast<int>(l));
        }
    }
    BivariatePoly lambda = pre.subst_t_times_z().normalized();

    ComposerResult result;
    result.lambda = lambda;
    result.delta = dim;
    std::vector<std::pair<int, int>> dm;
    std::ostringstream prov;
    for (const auto& [f, m] : factors) {
        dm.push_back({f.delta, m});
        prov << "(delta=" << f.delta << ",m=" << m << ")";
    }
    result.bound = degree_bound(dm);
    result.provenance = prov.str();

    if (lambda.deg_t() > result.bound || lambda.deg_z() > result.bound)
        throw std::runtime_error("compose: degree bound violated");

    if (verify_series) {
        const int N = verify_series->order();
        TruncatedSeries residual(N);
        TruncatedSeries zpow = TruncatedSeries::constant(Rational(1), N);
        for (int j = 0; j <= lambda.deg_z(); ++j) {
            residual = residual +
                       TruncatedSeries::from_poly(lambda.zcoeff(j), N) * zpow;
            zpow = zpow * *verify_series;
        }
        for (int k = 0; k <= N; ++k)
            if (residual.coeff(k) != 0)
                throw std::runtime_error(
                    "compose: verification against reference series failed");
    }
    return result;
}

ComposerResult compose_for_spec(const FreeProductSpec& spec, int verify_order) {
    FreeProductSpec finite_spec = z_to_z2z2(spec);
    std::vector<std::pair<FactorRational, int>> parts;
    for (const FactorSpec& fac : finite_spec.factors) {
        FiniteGroupTable g(fac.mul);
        GeneratingSetSpec s(g, fac.gens);
        parts.push_back({factor_rational(g, s), fac.multiplicity});
    }
    std::vector<Integer> a = cogrowth_sequence(finite_spec, verify_order);
    TruncatedSeries f(verify_order);
    for (int k = 0; k <= verify_order; ++k) f.set_coeff(k, Rational(a[k]));
    return compose(parts, &f);
}

BivariatePoly cyclic_equation(int d, int m) {
    if (d < 2 || m < 2) throw std::domain_error("cyclic_equation: need d, m >= 2");
    BivariatePoly lhs = BivariatePoly::monomial(Rational(int_pow(m, d)), d, d);
    // (z - 1)(z + m - 1)^{d-1}
    BivariatePoly rhs = BivariatePoly::monomial(Rational(1), 0, 1) -
                        BivariatePoly::monomial(Rational(1), 0, 0);
    BivariatePoly lin = BivariatePoly::monomial(Rational(1), 0, 1) +
                        BivariatePoly::monomial(Rational(m - 1), 0, 0);
    for (int i = 0; i < d - 1; ++i) rhs = rhs * lin;
    return lhs - rhs;
}

TruncatedSeries Z2ZnSystem::f_from_d(const TruncatedSeries& d_series) const {
    const int N = d_series.order();
    TruncatedSeries one = TruncatedSeries::constant(Rational(1), N);
    TruncatedSeries t2 = TruncatedSeries::from_poly(
        UniPoly::monomial(Rational(1), 2, 't'), N);
    TruncatedSeries u = one - d_series.shift(1);  // 1 - t D
    return u / (u * u - t2);
}

Z2ZnSystem z2_zn_system(int n) {
    if (n < 2) throw std::domain_error("z2_zn_system: need n >= 2");
    // t^{n-1}(1-tz)^{n-1} - (1-tz-t^2)^{n-1} z, with z standing for D
    BivariatePoly one = BivariatePoly::monomial(Rational(1), 0, 0);
    BivariatePoly tz = BivariatePoly::monomial(Rational(1), 1, 1);
    BivariatePoly t2 = BivariatePoly::monomial(Rational(1), 2, 0);
    BivariatePoly lhs = BivariatePoly::monomial(Rational(1), n - 1, 0);
    BivariatePoly rhs = BivariatePoly::monomial(Rational(1), 0, 1);
    for (int i = 0; i < n - 1; ++i) {
        lhs = lhs * (one - tz);
        rhs = rhs * (one - tz - t2);
    }
    Z2ZnSystem sys;
    sys.n = n;
    sys.d_equation = lhs - rhs;
    return sys;
}

int degree_bound(const std::vector<std::pair<int, int>>& delta_mult) {
    Rational prod(1), inv_sum(0);
    for (const auto& [delta, m] : delta_mult) {
        if (delta < 1) throw std::domain_error("degree_bound: delta must be >= 1");
        prod *= delta;
        inv_sum += Rational(1, delta);
    }
    Rational value = prod * (Rational(1) + inv_sum);
    return static_cast<int>(rational_floor(value).get_si());
}

}  // namespace cogrowth
