#pragma once

#include <optional>

#include "hopfpi/cospan/cospan.hpp"
#include "hopfpi/hopf/tensors.hpp"

namespace hopfpi::cospan {

using exact::FieldMatrix;

/// A morphism of C_k: a nonzero scalar times an integral along a cospan.
/// Equality is matrix equality; the (scale, cospan) pair only accelerates
/// composition.  When present, matrix = scale * integral of the cospan.
struct CkMorphism {
    HopfObject src, tgt;
    Field field = Field::rationals();
    Scalar scale;
    HopfCospan cospan;  // reduced representative
    std::optional<FieldMatrix> matrix;

    /// The materialized matrix; throws when the size gates suppressed it.
    const FieldMatrix& mat() const;
    bool same_matrix(const CkMorphism& o) const;
};

/// Materialization gate for integrals: dim(src) * dim(tgt) <= 2^20 and the
/// apex within the element-enumeration gate.
bool within_gate(const HopfCospan& c);

/// The integral along a cospan: mu_{leg1} o leg0, evaluated on the raw
/// representative; the stored cospan is the reduced form.
CkMorphism integrate_cospan(const HopfCospan& c, const Field& k);
/// The integral along a span: leg1 o mu_{leg0}; equals the integral along
/// the transposed cospan.
CkMorphism integrate_span(const HopfSpan& v, const Field& k);

CkMorphism compose_ck(const CkMorphism& outer, const CkMorphism& inner);
CkMorphism tensor_ck(const CkMorphism& a, const CkMorphism& b);
CkMorphism scale_ck(const CkMorphism& m, const Scalar& c);

/// Self-duality data of an object in C_k: the coevaluation i_A along
/// (k -> A <- A (x) A) and the evaluation e_A = dim_k(A) times the integral
/// along the dagger.
struct DualityData {
    CkMorphism coev;  // k -> A (x) A
    CkMorphism ev;    // A (x) A -> k
};
DualityData duality(const HopfObject& a, const Field& k);

CkMorphism identity_ck(const HopfObject& a, const Field& k);

}  // namespace hopfpi::cospan
