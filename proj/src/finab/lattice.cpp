#include "hopfpi/finab/lattice.hpp"

#include <stdexcept>

#include "hopfpi/exact/smith.hpp"

namespace hopfpi::finab {

using exact::inverse_unimodular;
using exact::lattice_basis;
using exact::mod_floor;
using exact::Rational;
using exact::smith_normal_form;
using exact::SmithResult;

IntMatrix solve_integral(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve_integral shape mismatch");
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n + b.cols()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) w[i][n + j] = Rational(b.at(i, j));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w[p][c] == 0) ++p;
        if (p == n) throw std::logic_error("solve_integral: singular system");
        std::swap(w[p], w[c]);
        Rational inv = Rational(1) / w[c][c];
        for (std::size_t j = 0; j < n + b.cols(); ++j) w[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            Rational f = w[i][c];
            for (std::size_t j = 0; j < n + b.cols(); ++j) w[i][j] -= f * w[c][j];
        }
    }
    IntMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (denominator(w[i][n + j]) != 1)
                throw std::logic_error("solve_integral: columns not in the lattice");
            x.at(i, j) = numerator(w[i][n + j]);
        }
    return x;
}

LatticeQuotient::LatticeQuotient(const IntMatrix& big_gens, const IntMatrix& sub_gens) {
    const std::size_t n = big_gens.rows();
    bl_ = n ? lattice_basis(big_gens) : IntMatrix(0, 0);
    IntMatrix bs = n ? lattice_basis(sub_gens) : IntMatrix(0, 0);
    IntMatrix c = n ? solve_integral(bl_, bs) : IntMatrix(0, 0);
    SmithResult s = smith_normal_form(c);
    if (s.rank != n) throw std::logic_error("lattice quotient is not finite");
    u_ = s.u;
    uinv_ = inverse_unimodular(u_);
    std::vector<BigInt> orders;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.d.at(i, i) > 1) {
            kept_.push_back(i);
            orders.push_back(s.d.at(i, i));
        }
    }
    group_ = FinAbGroup(orders);
}

IntMatrix LatticeQuotient::express_matrix(const IntMatrix& cols) const {
    const std::size_t n = bl_.rows();
    IntMatrix w = n ? solve_integral(bl_, cols) : IntMatrix(0, cols.cols());
    IntMatrix full = u_ * w;
    IntMatrix r = full.submatrix_rows(kept_);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            r.at(i, j) = mod_floor(r.at(i, j), group_.orders()[i]);
    return r;
}

IntMatrix LatticeQuotient::lift_matrix() const { return (bl_ * uinv_).submatrix_cols(kept_); }

}  // namespace hopfpi::finab
