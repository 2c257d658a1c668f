#include "hopfpi/exact/congruence.hpp"

#include <stdexcept>

#include "hopfpi/exact/smith.hpp"

namespace hopfpi::exact {

namespace {

// [A | diag(moduli)], turning the congruence into a linear system over Z.
IntMatrix augmented(const IntMatrix& a, const std::vector<BigInt>& moduli) {
    if (moduli.size() != a.rows()) throw std::invalid_argument("moduli length must match rows");
    for (const auto& m : moduli)
        if (m <= 0) throw std::invalid_argument("moduli must be positive");
    return a.hstack(IntMatrix::diagonal(moduli));
}

}  // namespace

std::optional<CongruenceSolution> solve_congruence(const IntMatrix& a,
                                                   const std::vector<BigInt>& b,
                                                   const std::vector<BigInt>& moduli) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length must match rows");
    const std::size_t n = a.cols();
    IntMatrix w = augmented(a, moduli);
    SmithResult s = smith_normal_form(w);
    std::vector<BigInt> c = s.u.apply(b);

    std::vector<BigInt> t(w.cols(), BigInt(0));
    for (std::size_t i = 0; i < w.rows(); ++i) {
        if (i < s.rank) {
            const BigInt& d = s.d.at(i, i);
            if (c[i] % d != 0) return std::nullopt;
            t[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<BigInt> z = s.v.apply(t);
    CongruenceSolution sol;
    sol.particular.assign(z.begin(), z.begin() + n);

    for (std::size_t j = s.rank; j < w.cols(); ++j) {
        std::vector<BigInt> gen(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            gen[i] = s.v.at(i, j);
            if (gen[i] != 0) nonzero = true;
        }
        if (nonzero) sol.homogeneous_basis.push_back(std::move(gen));
    }
    return sol;
}

IntMatrix congruence_kernel(const IntMatrix& a, const std::vector<BigInt>& moduli) {
    IntMatrix w = augmented(a, moduli);
    IntMatrix k = kernel_lattice(w);
    std::vector<std::size_t> top(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) top[i] = i;
    return k.submatrix_rows(top);
}

}  // namespace hopfpi::exact
