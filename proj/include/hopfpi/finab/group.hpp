#pragma once

#include <string>
#include <vector>

#include "hopfpi/exact/int_matrix.hpp"

namespace hopfpi::finab {

using exact::BigInt;
using exact::IntMatrix;

/// A finite abelian group presented as Z/d_1 + ... + Z/d_n with all d_i >= 2.
/// Groups produced by this module's constructors are in invariant-factor form
/// (d_1 | d_2 | ... | d_n); structured presentations (e.g. tensor factors of
/// Hopf objects) may carry any diagonal orders.
class FinAbGroup {
  public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<BigInt> orders);

    static FinAbGroup trivial() { return FinAbGroup(); }

    const std::vector<BigInt>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    BigInt order() const;
    bool is_trivial() const { return orders_.empty(); }
    bool is_canonical() const;

    bool operator==(const FinAbGroup& o) const { return orders_ == o.orders_; }
    bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

    /// "Z/2+Z/4"; the trivial group renders as "0".
    std::string str() const;
    static FinAbGroup parse(const std::string& text);

    /// All elements as coordinate vectors; gated at 4096 elements.
    std::vector<std::vector<BigInt>> elements() const;

  private:
    std::vector<BigInt> orders_;
};

struct GroupElement {
    FinAbGroup group;
    std::vector<BigInt> coords;  // reduced mod orders
};

GroupElement make_element(const FinAbGroup& g, std::vector<BigInt> coords);

/// Homomorphism between presented groups, stored as an integer matrix acting
/// on coordinates (tgt.rank x src.rank), reduced mod the target orders.
class GroupHom {
  public:
    GroupHom() = default;
    GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix matrix);

    static GroupHom identity(const FinAbGroup& g);
    static GroupHom zero(const FinAbGroup& src, const FinAbGroup& tgt);

    const FinAbGroup& src() const { return src_; }
    const FinAbGroup& tgt() const { return tgt_; }
    const IntMatrix& matrix() const { return matrix_; }

    GroupElement apply(const GroupElement& x) const;
    std::vector<BigInt> apply_coords(const std::vector<BigInt>& coords) const;

    GroupHom operator-() const;
    GroupHom operator+(const GroupHom& o) const;

    bool is_zero() const;
    /// Equality of homs: same endpoints, matrices agree entrywise mod the
    /// target orders (both sides stored reduced, so plain comparison).
    bool operator==(const GroupHom& o) const {
        return src_ == o.src_ && tgt_ == o.tgt_ && matrix_ == o.matrix_;
    }
    bool operator!=(const GroupHom& o) const { return !(*this == o); }

  private:
    void reduce_();
    FinAbGroup src_, tgt_;
    IntMatrix matrix_;
};

/// g after f; endpoints must match.
GroupHom compose(const GroupHom& g, const GroupHom& f);

bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);

}  // namespace hopfpi::finab
