#pragma once

#include <optional>
#include <vector>

#include "hopfpi/exact/int_matrix.hpp"

namespace hopfpi::exact {

struct CongruenceSolution {
    std::vector<BigInt> particular;
    std::vector<std::vector<BigInt>> homogeneous_basis;  // generators of the solution lattice
};

/// Solve A x = b (mod moduli), componentwise.  moduli.size() must equal
/// A.rows(); every modulus must be positive.  Absence of a solution is a
/// value, not an error.
std::optional<CongruenceSolution> solve_congruence(const IntMatrix& a,
                                                   const std::vector<BigInt>& b,
                                                   const std::vector<BigInt>& moduli);

/// Generators of { x : A x = 0 (mod moduli) } as columns.
IntMatrix congruence_kernel(const IntMatrix& a, const std::vector<BigInt>& moduli);

}  // namespace hopfpi::exact
