#include "hopfpi/cospan/ck.hpp"

namespace hopfpi::cospan {

using hopf::integral_matrix;
using hopf::materialize_hom;

const FieldMatrix& CkMorphism::mat() const {
    if (!matrix) throw std::logic_error("integral matrix suppressed by the size gate");
    return *matrix;
}

bool CkMorphism::same_matrix(const CkMorphism& o) const {
    if (!matrix || !o.matrix) throw std::invalid_argument("CkMorphism comparison needs matrices");
    return *matrix == *o.matrix;
}

bool within_gate(const HopfCospan& c) {
    static const exact::BigInt gate = exact::BigInt(1) << 20;
    return c.foot0.dim() * c.foot1.dim() <= gate && c.apex.dim() <= 4096;
}

CkMorphism integrate_cospan(const HopfCospan& c, const Field& k) {
    hopf::require_finite_volume(c.foot0, k);
    hopf::require_finite_volume(c.foot1, k);
    hopf::require_finite_volume(c.apex, k);
    CkMorphism m;
    m.src = c.foot0;
    m.tgt = c.foot1;
    m.field = k;
    m.scale = Scalar::one(k);
    m.cospan = reduce(c);
    if (within_gate(c)) {
        m.matrix = integral_matrix(c.leg1, k) * materialize_hom(c.leg0, k);
    } else if (within_gate(m.cospan)) {
        // The integral is invariant under the apex reduction, which shrinks
        // the apex into the feet product.
        m.matrix = integral_matrix(m.cospan.leg1, k) * materialize_hom(m.cospan.leg0, k);
    }
    return m;
}

CkMorphism integrate_span(const HopfSpan& v, const Field& k) {
    hopf::require_finite_volume(v.foot0, k);
    hopf::require_finite_volume(v.foot1, k);
    hopf::require_finite_volume(v.apex, k);
    CkMorphism m;
    m.src = v.foot0;
    m.tgt = v.foot1;
    m.field = k;
    m.scale = Scalar::one(k);
    m.cospan = reduce(transpose(v));
    exact::BigInt gate = exact::BigInt(1) << 20;
    if (v.foot0.dim() * v.foot1.dim() <= gate && v.apex.dim() <= 4096) {
        m.matrix = materialize_hom(v.leg1, k) * integral_matrix(v.leg0, k);
    } else if (within_gate(m.cospan)) {
        // Equal to the span integral by the transposition identity.
        m.matrix = integral_matrix(m.cospan.leg1, k) * materialize_hom(m.cospan.leg0, k);
    }
    return m;
}

CkMorphism compose_ck(const CkMorphism& outer, const CkMorphism& inner) {
    if (inner.tgt != outer.src || inner.field != outer.field)
        throw std::invalid_argument("CkMorphism composition mismatch");
    ComposedCospan cc = compose_cospans(outer.cospan, inner.cospan, inner.field);
    CkMorphism m;
    m.src = inner.src;
    m.tgt = outer.tgt;
    m.field = inner.field;
    m.scale = outer.scale * inner.scale * cc.defect;
    m.cospan = reduce(cc.cospan);
    if (outer.matrix && inner.matrix) m.matrix = *outer.matrix * *inner.matrix;
    return m;
}

CkMorphism tensor_ck(const CkMorphism& a, const CkMorphism& b) {
    if (a.field != b.field) throw std::invalid_argument("CkMorphism tensor field mismatch");
    CkMorphism m;
    m.src = hopf::tensor_object(a.src, b.src);
    m.tgt = hopf::tensor_object(a.tgt, b.tgt);
    m.field = a.field;
    m.scale = a.scale * b.scale;
    m.cospan = reduce(tensor(a.cospan, b.cospan));
    if (a.matrix && b.matrix) m.matrix = a.matrix->kron(*b.matrix);
    return m;
}

CkMorphism scale_ck(const CkMorphism& m, const Scalar& c) {
    CkMorphism out = m;
    out.scale = m.scale * c;
    if (m.matrix) out.matrix = m.matrix->scaled(c);
    return out;
}

DualityData duality(const HopfObject& a, const Field& k) {
    HopfCospan coev_cospan = HopfCospan::make(hopf::unit_morphism(a), hopf::mult_morphism(a));
    CkMorphism coev = integrate_cospan(coev_cospan, k);
    CkMorphism ev = integrate_cospan(coev_cospan.dagger(), k);
    ev = scale_ck(ev, Scalar::from_integer(k, a.dim()));
    return DualityData{coev, ev};
}

CkMorphism identity_ck(const HopfObject& a, const Field& k) {
    return integrate_cospan(HopfCospan::identity(a), k);
}

}  // namespace hopfpi::cospan
