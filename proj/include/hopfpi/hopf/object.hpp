#pragma once

#include <string>

#include "hopfpi/exact/field.hpp"
#include "hopfpi/finab/ops.hpp"

namespace hopfpi::hopf {

using exact::Field;
using exact::Scalar;
using finab::BigInt;
using finab::FinAbGroup;
using finab::GroupHom;
using finab::IntMatrix;

/// kG (GroupAlgebra) or k^G (FunctionAlgebra).
enum class Flavor { GroupAlgebra, FunctionAlgebra };

std::string flavor_str(Flavor f);
Flavor parse_flavor(const std::string& text);

/// A bicommutative Hopf algebra induced by a finite abelian group, kept
/// symbolic: the group plus the flavor.
struct HopfObject {
    FinAbGroup group;
    Flavor flavor = Flavor::GroupAlgebra;

    BigInt dim() const { return group.order(); }
    bool is_trivial() const { return group.is_trivial(); }
    bool operator==(const HopfObject& o) const { return group == o.group && flavor == o.flavor; }
    bool operator!=(const HopfObject& o) const { return !(*this == o); }
    std::string str() const;
};

HopfObject trivial_object(Flavor flavor);
/// Tensor product: direct sum of groups in presentation order (no
/// re-canonicalization, so the basis enumeration matches Kronecker order).
HopfObject tensor_object(const HopfObject& a, const HopfObject& b);

/// Finite volume of A over k: char(k) must not divide dim A.
bool has_finite_volume(const HopfObject& a, const Field& k);
void require_finite_volume(const HopfObject& a, const Field& k);

/// A Hopf homomorphism between group-induced objects of one flavor.  The
/// carrier runs src.group -> tgt.group for kG (covariant) and
/// tgt.group -> src.group for k^G (contravariant).
struct HopfMorphism {
    HopfObject src, tgt;
    GroupHom carrier;

    bool operator==(const HopfMorphism& o) const {
        return src == o.src && tgt == o.tgt && carrier == o.carrier;
    }
    bool operator!=(const HopfMorphism& o) const { return !(*this == o); }
};

HopfMorphism make_morphism(HopfObject src, HopfObject tgt, GroupHom carrier);
HopfMorphism identity_morphism(const HopfObject& a);
HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f);
HopfMorphism tensor_morphism(const HopfMorphism& a, const HopfMorphism& b);

/// Unit k -> A, counit A -> k, multiplication A (x) A -> A.
HopfMorphism unit_morphism(const HopfObject& a);
HopfMorphism counit_morphism(const HopfObject& a);
HopfMorphism mult_morphism(const HopfObject& a);

/// Mono/epi in the Hopf category (flavor-aware on the carrier).
bool is_mono(const HopfMorphism& f);
bool is_epi(const HopfMorphism& f);

}  // namespace hopfpi::hopf
