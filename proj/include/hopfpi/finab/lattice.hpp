#pragma once

#include <vector>

#include "hopfpi/finab/group.hpp"

namespace hopfpi::finab {

/// Exact solve A X = B for square nonsingular A where the solution is known
/// to be integral (throws std::logic_error otherwise).
IntMatrix solve_integral(const IntMatrix& a, const IntMatrix& b);

/// The finite quotient L / S of full-rank lattices S <= L <= Z^n in
/// invariant-factor form, together with the coordinate maps.
class LatticeQuotient {
  public:
    LatticeQuotient(const IntMatrix& big_gens, const IntMatrix& sub_gens);

    const FinAbGroup& group() const { return group_; }

    /// Canonical coordinates of ambient columns (which must lie in L).
    IntMatrix express_matrix(const IntMatrix& cols) const;

    /// Ambient representatives of the canonical generators.
    IntMatrix lift_matrix() const;

  private:
    FinAbGroup group_;
    IntMatrix bl_, u_, uinv_;
    std::vector<std::size_t> kept_;
};

}  // namespace hopfpi::finab
