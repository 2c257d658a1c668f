#include "hopfpi/exact/smith.hpp"

#include <optional>
#include <stdexcept>

namespace hopfpi::exact {

namespace {

// Smallest |entry| != 0 in the trailing block starting at (t,t); ties go to
// the lowest row, then the lowest column.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const BigInt& e = a.at(i, j);
            if (e == 0) continue;
            BigInt ae = abs(e);
            if (!best || ae < best_abs) {
                best = {i, j};
                best_abs = ae;
            }
        }
    return best;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    std::size_t t = 0;
    const std::size_t bound = rows < cols ? rows : cols;
    while (t < bound) {
        auto piv = find_pivot(a, t);
        if (!piv) break;
        a.swap_rows(t, piv->first);
        u.swap_rows(t, piv->first);
        a.swap_cols(t, piv->second);
        v.swap_cols(t, piv->second);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a.at(i, t) == 0) continue;
            BigInt q = a.at(i, t) / a.at(t, t);
            if (q != 0) {
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
            }
            if (a.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a.at(t, j) == 0) continue;
            BigInt q = a.at(t, j) / a.at(t, t);
            if (q != 0) {
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
            }
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // smaller pivot now exists; redo this stage

        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    std::size_t rank = t;

    // Enforce the divisibility chain d_i | d_{i+1}.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < rank; ++i) {
            if (a.at(i + 1, i + 1) % a.at(i, i) == 0) continue;
            changed = true;
            // Mix column i+1 into column i, then (gcd, lcm) the 2x2 block.
            a.add_col(i, i + 1, 1);
            v.add_col(i, i + 1, 1);
            while (a.at(i + 1, i) != 0) {
                BigInt q = a.at(i, i) / a.at(i + 1, i);
                if (q != 0) {
                    a.add_row(i, i + 1, -q);
                    u.add_row(i, i + 1, -q);
                }
                a.swap_rows(i, i + 1);
                u.swap_rows(i, i + 1);
            }
            if (a.at(i, i + 1) != 0) {
                BigInt q = a.at(i, i + 1) / a.at(i, i);
                a.add_col(i + 1, i, -q);
                v.add_col(i + 1, i, -q);
            }
            if (a.at(i, i) < 0) {
                a.negate_row(i);
                u.negate_row(i);
            }
            if (a.at(i + 1, i + 1) < 0) {
                a.negate_row(i + 1);
                u.negate_row(i + 1);
            }
        }
    }

    SmithResult res;
    res.u = std::move(u);
    res.d = std::move(a);
    res.v = std::move(v);
    res.rank = rank;
    return res;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    // Rational Gauss-Jordan; the result must come out integral.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("inverse: singular matrix");
        std::swap(a[p], a[c]);
        Rational inv = Rational(1) / a[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j) a[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = a[i][n + j];
            if (denominator(e) != 1) throw std::invalid_argument("inverse: matrix not unimodular");
            r.at(i, j) = numerator(e);
        }
    return r;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : BigInt(-a.at(n - 1, n - 1));
}

IntMatrix lattice_basis(const IntMatrix& m) {
    const std::size_t n = m.rows();
    SmithResult s = smith_normal_form(m);
    if (s.rank != n) throw std::invalid_argument("lattice_basis: lattice not of full rank");
    IntMatrix uinv = inverse_unimodular(s.u);
    IntMatrix diag(n, n);
    for (std::size_t i = 0; i < n; ++i) diag.at(i, i) = s.d.at(i, i);
    return uinv * diag;
}

IntMatrix kernel_lattice(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = s.rank; j < m.cols(); ++j) free_cols.push_back(j);
    return s.v.submatrix_cols(free_cols);
}

}  // namespace hopfpi::exact
