#pragma once

#include <memory>
#include <vector>

#include "hopfpi/finab/lattice.hpp"
#include "hopfpi/finab/ops.hpp"
#include "hopfpi/space/chain.hpp"

namespace hopfpi::space {

using finab::FinAbGroup;
using finab::GroupHom;

/// (Co)homology of one complex at one degree with one cyclic coefficient
/// Z/d: the canonical group, representative (co)cycles, and the map that
/// expresses an arbitrary (co)cycle in canonical coordinates.
class BlockHomology {
  public:
    BlockHomology(const ChainComplex& k, const BigInt& modulus, int q, bool cohomology);

    const FinAbGroup& group() const { return group_; }
    /// Chain coordinates of the canonical generators (rank_q x group rank).
    const IntMatrix& representatives() const { return reps_; }
    /// Canonical coordinates of (co)cycle columns.
    IntMatrix express(const IntMatrix& cycles) const;

  private:
    FinAbGroup group_;
    IntMatrix reps_;
    std::shared_ptr<finab::LatticeQuotient> lq_;
};

/// H_q(K; G) or H^q(K; G) for G in invariant factors, assembled from the
/// cyclic blocks through the canonical biproduct.
class HomologyData {
  public:
    HomologyData(const ChainComplex& k, const FinAbGroup& coeff, int q, bool cohomology);

    const FinAbGroup& group() const { return assembled_.sum; }
    const ChainComplex& complex() const { return complex_; }
    std::size_t blocks() const { return blocks_.size(); }
    const BlockHomology& block(std::size_t j) const { return blocks_[j]; }
    const GroupHom& inj(std::size_t j) const { return assembled_.inj[j]; }
    const GroupHom& proj(std::size_t j) const { return assembled_.proj[j]; }
    int degree() const { return q_; }
    bool is_cohomology() const { return cohomology_; }

  private:
    ChainComplex complex_;
    int q_;
    bool cohomology_;
    std::vector<BlockHomology> blocks_;
    finab::BiproductData assembled_;
};

/// Shared, memoized access; safe for concurrent readers.
std::shared_ptr<const HomologyData> homology_data(const ChainComplex& k, const FinAbGroup& coeff,
                                                  int q, bool cohomology);

FinAbGroup homology(const ChainComplex& k, const FinAbGroup& coeff, int q);
FinAbGroup cohomology(const ChainComplex& k, const FinAbGroup& coeff, int q);

/// Functorial map on homology (covariant) or cohomology (contravariant:
/// the returned hom runs H^q(tgt) -> H^q(src)).
GroupHom induced(const ChainMap& f, const FinAbGroup& coeff, int q, bool cohomology);

/// The degree-raising isomorphism H_q(K) -> H_{q+1}(SK); for cohomology the
/// degree-lowering H^{q+1}(SK) -> H^q(K).
GroupHom suspension_iso(const ChainComplex& k, const FinAbGroup& coeff, int q, bool cohomology);

}  // namespace hopfpi::space
