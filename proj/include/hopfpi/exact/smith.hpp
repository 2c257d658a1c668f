#pragma once

#include <vector>

#include "hopfpi/exact/int_matrix.hpp"

namespace hopfpi::exact {

struct SmithResult {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // diagonal, d1 | d2 | ... | dr, di > 0
    IntMatrix v;  // cols x cols, unimodular
    std::size_t rank = 0;
};

/// U * M * V = D with D in Smith normal form.  Pivot choice: smallest
/// absolute value among the remaining nonzero entries, ties broken by
/// lowest row then column index.
SmithResult smith_normal_form(const IntMatrix& m);

/// Inverse of a unimodular integer matrix (exact; throws if not unimodular).
IntMatrix inverse_unimodular(const IntMatrix& u);

/// Exact determinant (Bareiss).
BigInt determinant(const IntMatrix& m);

/// Basis of the column lattice of m as columns of a square matrix.
/// Requires the lattice to have full rank m.rows() (throws otherwise).
IntMatrix lattice_basis(const IntMatrix& m);

/// Basis of the integer kernel { x : m x = 0 } as columns.
IntMatrix kernel_lattice(const IntMatrix& m);

}  // namespace hopfpi::exact
