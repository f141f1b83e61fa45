#include "cogrowth/solver.hpp"

#include <string>
#include <vector>

namespace cogrowth {

namespace {

TruncatedSeries eval_at(const BivariatePoly& p, const TruncatedSeries& f, int order) {
    TruncatedSeries acc(order);
    for (int j = p.deg_z(); j >= 0; --j) {
        acc = acc * f.truncate(order);
        acc = acc + TruncatedSeries::from_poly(p.zcoeff(j), order);
    }
    return acc;
}

TruncatedSeries from_coeffs(const std::vector<Rational>& c, int order) {
    TruncatedSeries s(order);
    for (int k = 0; k <= order && k < static_cast<int>(c.size()); ++k)
        s.set_coeff(k, c[k]);
    return s;
}

}  // namespace

TruncatedSeries series_root(const SeriesRootProblem& p) {
    const BivariatePoly& lam = p.lambda;
    if (lam.is_zero() || lam.deg_z() < 1)
        throw std::domain_error("series_root: polynomial must involve z");
    const int N = p.target_order;
    if (N < 0) throw std::domain_error("series_root: target order must be >= 0");
    const int op = p.prefix.order();
    const BivariatePoly dlam = lam.derivative_z();

    std::vector<Rational> f(std::max(N, op) + 1, Rational(0));
    for (int k = 0; k <= op; ++k) f[k] = p.prefix.coeff(k);

    // prefix residual and derivative valuation
    {
        TruncatedSeries f0 = from_coeffs(f, op);
        TruncatedSeries r = eval_at(lam, f0, op);
        for (int k = 0; k <= op; ++k)
            if (r.coeff(k) != 0)
                throw InconsistencyError(
                    "series_root: prefix violates the equation at order " +
                    std::to_string(k));
    }
    int v = -1;
    {
        TruncatedSeries d = eval_at(dlam, from_coeffs(f, op), op);
        v = d.valuation();
        if (v > op)
            throw AmbiguityError(
                "series_root: derivative vanishes through order " + std::to_string(op) +
                "; supply a longer prefix");
    }

    if (op >= N) {
        TruncatedSeries out = from_coeffs(f, N);
        TruncatedSeries r = eval_at(lam, out, N);
        for (int k = 0; k <= N; ++k)
            if (r.coeff(k) != 0)
                throw InconsistencyError("series_root: no solution at order " +
                                         std::to_string(k));
        return out;
    }

    if (v == 0) {
        // Newton lifting, precision doubles each round
        TruncatedSeries cur = from_coeffs(f, N);
        int m = op + 1;
        while (m <= N) {
            TruncatedSeries r = eval_at(lam, cur, N);
            TruncatedSeries d = eval_at(dlam, cur, N);
            cur = cur - r / d;
            m = 2 * m;
        }
        TruncatedSeries r = eval_at(lam, cur, N);
        for (int k = 0; k <= N; ++k)
            if (r.coeff(k) != 0)
                throw InconsistencyError("series_root: no solution at order " +
                                         std::to_string(k));
        return cur;
    }

    // linear order-by-order lifting past the derivative valuation v
    for (int k = op + 1; k <= N; ++k) {
        TruncatedSeries fk = from_coeffs(f, k + v);
        TruncatedSeries d = eval_at(dlam, fk, v);
        Rational dv = d.coeff(v);
        if (dv == 0) {
            // valuation may have dropped; re-certify
            TruncatedSeries dfull = eval_at(dlam, fk, k - 1);
            int nv = dfull.valuation();
            if (nv >= k)
                throw AmbiguityError(
                    "series_root: derivative vanishes through order " +
                    std::to_string(k - 1));
            v = nv;
            fk = from_coeffs(f, k + v);
            dv = eval_at(dlam, fk, v).coeff(v);
        }
        TruncatedSeries r = eval_at(lam, fk, k + v);
        for (int i = 0; i < k + v; ++i)
            if (r.coeff(i) != 0)
                throw InconsistencyError("series_root: no solution at order " +
                                         std::to_string(i));
        f[k] = -r.coeff(k + v) / dv;
    }
    return from_coeffs(f, N);
}

GuessResult guess_algebraic(const TruncatedSeries& series, int deg_t_max,
                            int deg_z_max) {
    const int N = series.order();
    if (deg_t_max < 0 || deg_z_max < 1)
        throw std::domain_error("guess_algebraic: bad degree bounds");
    if (N + 1 < (deg_t_max + 1) * (deg_z_max + 1) + 10)
        throw std::domain_error(
            "guess_algebraic: insufficient series terms for the requested bounds");

    std::vector<TruncatedSeries> powers;
    powers.push_back(TruncatedSeries::constant(Rational(1), N));
    for (int j = 1; j <= deg_z_max; ++j) powers.push_back(powers.back() * series);

    for (int dz = 1; dz <= deg_z_max; ++dz) {
        for (int dt = 0; dt <= deg_t_max; ++dt) {
            const int cols = (dt + 1) * (dz + 1);
            if (cols + 10 > N + 1) break;  // keep the over-determination margin
            // rows n = 0..N; col (j,i) -> coefficient of t^n in t^i F^j
            std::vector<std::vector<Rational>> m(
                N + 1, std::vector<Rational>(cols, Rational(0)));
            for (int j = 0; j <= dz; ++j)
                for (int i = 0; i <= dt; ++i) {
                    int col = j * (dt + 1) + i;
                    for (int n = i; n <= N; ++n) m[n][col] = powers[j].coeff(n - i);
                }
            // reduced row echelon; first kernel basis vector is canonical
            std::vector<int> pivot_of_col(cols, -1);
            int rank = 0;
            for (int c = 0; c < cols && rank <= N; ++c) {
                int p = rank;
                while (p <= N && m[p][c] == 0) ++p;
                if (p > N) continue;
                std::swap(m[p], m[rank]);
                Rational inv = Rational(1) / m[rank][c];
                for (int j = c; j < cols; ++j) m[rank][j] *= inv;
                for (int i = 0; i <= N; ++i) {
                    if (i == rank || m[i][c] == 0) continue;
                    Rational fmul = m[i][c];
                    for (int j = c; j < cols; ++j) m[i][j] -= fmul * m[rank][j];
                }
                pivot_of_col[c] = rank;
                ++rank;
            }
            int free_col = -1;
            for (int c = 0; c < cols; ++c)
                if (pivot_of_col[c] < 0) {
                    free_col = c;
                    break;
                }
            if (free_col < 0) continue;
            std::vector<Rational> x(cols, Rational(0));
            x[free_col] = Rational(1);
            for (int c = 0; c < free_col; ++c)
                if (pivot_of_col[c] >= 0) x[c] = -m[pivot_of_col[c]][free_col];

            BivariatePoly cand = BivariatePoly::zero();
            for (int j = 0; j <= dz; ++j)
                for (int i = 0; i <= dt; ++i) {
                    const Rational& c = x[j * (dt + 1) + i];
                    if (c != 0) cand = cand + BivariatePoly::monomial(c, i, j);
                }
            // t-content removal may cost a few verified orders at the top
            BivariatePoly reduced = cand.z_primitive().normalized();
            TruncatedSeries r = eval_at(reduced, series, N);
            int lost = 0;
            while (lost <= N && r.coeff(N - lost) != 0) ++lost;
            for (int k = 0; k <= N - lost; ++k)
                if (r.coeff(k) != 0)
                    throw std::runtime_error(
                        "guess_algebraic: kernel vector fails verification");
            GuessResult out;
            out.found = true;
            out.candidate = reduced;
            out.deg_t_used = dt;
            out.deg_z_used = dz;
            out.verification_order = N - lost;
            return out;
        }
    }
    GuessResult out;
    out.found = false;
    out.verification_order = N;
    return out;
}

}  // namespace cogrowth
