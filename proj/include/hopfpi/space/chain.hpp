#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfpi/exact/int_matrix.hpp"

namespace hopfpi::space {

using exact::BigInt;
using exact::IntMatrix;

/// Reduced cellular chain complex of a pointed finite CW-space: finitely many
/// degrees >= 0, boundary[n] maps degree n to degree n-1, and dd = 0.
class ChainComplex {
  public:
    ChainComplex() = default;
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    static ChainComplex zero() { return ChainComplex(); }

    std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
    /// Top degree with a cell; the zero complex reports -1.
    int dim() const;
    std::size_t degrees() const { return ranks_.size(); }

    /// Boundary in degree n as a rank(n-1) x rank(n) matrix (zero matrices
    /// where ranks vanish).
    IntMatrix boundary(std::size_t n) const;

    bool operator==(const ChainComplex& o) const;
    bool operator!=(const ChainComplex& o) const { return !(*this == o); }

    std::uint64_t digest() const;
    std::string str() const;

  private:
    void trim_();
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;  // boundaries_[n] : n -> n-1, index 0 unused
};

/// Degreewise matrices commuting with the boundaries exactly.
class ChainMap {
  public:
    ChainMap() = default;
    ChainMap(ChainComplex src, ChainComplex tgt, std::vector<IntMatrix> components);

    static ChainMap identity(const ChainComplex& k);
    static ChainMap zero(const ChainComplex& src, const ChainComplex& tgt);

    const ChainComplex& src() const { return src_; }
    const ChainComplex& tgt() const { return tgt_; }
    IntMatrix component(std::size_t n) const;

    ChainMap scaled(const BigInt& c) const;

    bool operator==(const ChainMap& o) const;
    bool operator!=(const ChainMap& o) const { return !(*this == o); }

    std::uint64_t digest() const;

  private:
    ChainComplex src_, tgt_;
    std::vector<IntMatrix> components_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

}  // namespace hopfpi::space
