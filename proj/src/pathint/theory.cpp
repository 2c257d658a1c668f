#include "hopfpi/pathint/theory.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfpi::pathint {

using space::brown_eval;
using space::brown_induced;
using space::compose_space_cospans;
using space::mapping_cone;
using space::smash_cospan;
using space::t_sigma;

HopfCospan cospanical_value(const BrownTheory& t, const SpaceCospan& c) {
    if (t.dim_cap) {
        if (c.l.dim() > *t.dim_cap || c.k0.dim() > *t.dim_cap - 1 || c.k1.dim() > *t.dim_cap - 1)
            throw std::invalid_argument("cospan exceeds the theory's dimension cap");
    }
    return HopfCospan::make(brown_induced(t, c.f0), brown_induced(t, c.f1));
}

HopfSpan spanical_value(const BrownTheory& t, const SpaceCospan& c) {
    if (t.dim_cap) {
        if (c.l.dim() > *t.dim_cap || c.k0.dim() > *t.dim_cap - 1 || c.k1.dim() > *t.dim_cap - 1)
            throw std::invalid_argument("cospan exceeds the theory's dimension cap");
    }
    space::TSigmaData ts = t_sigma(c);
    return HopfSpan::make(brown_induced(t, ts.to_sk0), brown_induced(t, ts.to_sk1));
}

CkMorphism pi_hat(const BrownTheory& t, const SpaceCospan& c) {
    return cospan::integrate_cospan(cospanical_value(t, c), t.field);
}

CkMorphism pi_check(const BrownTheory& t, const SpaceCospan& c) {
    return cospan::integrate_span(spanical_value(t, c), t.field);
}

namespace {

Scalar checked_defect(const Scalar& defect, const CkMorphism& outer, const CkMorphism& inner,
                      const CkMorphism& composite, const char* label) {
    if (outer.matrix && inner.matrix && composite.matrix) {
        FieldMatrix lhs = outer.mat() * inner.mat();
        FieldMatrix rhs = composite.mat().scaled(defect);
        if (lhs != rhs) {
            std::ostringstream os;
            os << label << ": symbolic defect " << defect.str()
               << " disagrees with the matrix ratio; lhs=" << lhs.str() << " rhs=" << rhs.str();
            throw std::logic_error(os.str());
        }
    }
    return defect;
}

}  // namespace

Scalar omega_hat(const BrownTheory& t, const SpaceCospan& outer, const SpaceCospan& inner) {
    HopfCospan ho = cospanical_value(t, outer);
    HopfCospan hi = cospanical_value(t, inner);
    cospan::ComposedCospan cc = cospan::compose_cospans(ho, hi, t.field);
    SpaceCospan glued = compose_space_cospans(outer, inner);
    return checked_defect(cc.defect, pi_hat(t, outer), pi_hat(t, inner), pi_hat(t, glued),
                          "omega_hat");
}

Scalar omega_check(const BrownTheory& t, const SpaceCospan& outer, const SpaceCospan& inner) {
    HopfSpan vo = spanical_value(t, outer);
    HopfSpan vi = spanical_value(t, inner);
    cospan::ComposedSpan cs = cospan::compose_spans(vo, vi, t.field);
    SpaceCospan glued = compose_space_cospans(outer, inner);
    return checked_defect(cs.defect, pi_check(t, outer), pi_check(t, inner), pi_check(t, glued),
                          "omega_check");
}

Scalar theta(const BrownTheory& t, const SpaceCospan& c) {
    ChainComplex cone = mapping_cone(c.f1).cone;
    return hopf::inverse_volume(brown_eval(t, cone), t.field);
}

Scalar theta_leq(const OrdinaryFamily& fam, int q, const SpaceCospan& c) {
    Scalar out = Scalar::one(fam.field);
    for (int l = 0; q - l >= 0; ++l) {
        Scalar term = theta(fam.theory(q - l), c);
        out = out * (l % 2 == 0 ? term : term.inverse());
    }
    return out;
}

CkMorphism lift_tensor_Z(const BrownTheory& t, const SpaceCospan& c) {
    CkMorphism z = cospan::tensor_ck(pi_hat(t, c), pi_check(t, c));
    return cospan::scale_ck(z, theta(t, c).inverse());
}

CkMorphism lift_ordinary_Z(const OrdinaryFamily& fam, int q, const SpaceCospan& c) {
    CkMorphism z = pi_hat(fam.theory(q), c);
    return cospan::scale_ck(z, theta_leq(fam, q, c).inverse());
}

Scalar closed_invariant(const OrdinaryFamily& fam, int q, const ChainComplex& l) {
    CkMorphism z = lift_ordinary_Z(fam, q, SpaceCospan::closed(l));
    if (!z.matrix || z.mat().rows() != 1 || z.mat().cols() != 1)
        throw std::logic_error("closed invariant did not evaluate to a scalar");
    return z.mat().at(0, 0);
}

SpaceCospan phi(const Cobordism& cob) {
    if (cob.incl0.tgt() != cob.total || cob.incl1.tgt() != cob.total)
        throw std::invalid_argument("cobordism inclusions must land in the total space");
    return SpaceCospan::make(cob.incl0, cob.incl1);
}

namespace {

FieldMatrix reshape_row(const FieldMatrix& row, std::size_t dim) {
    if (row.rows() != 1 || row.cols() != dim * dim)
        throw std::logic_error("pairing expected a 1 x dim^2 matrix");
    FieldMatrix out(row.field(), dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out.at(i, j) = row.at(0, i * dim + j);
    return out;
}

SpaceCospan ev_cospan(const ChainComplex& k) {
    return SpaceCospan::make(space::fold(k), ChainMap::zero(ChainComplex::zero(), k));
}

}  // namespace

FieldMatrix pairing(const OrdinaryFamily& fam, int q, const ChainComplex& k) {
    if (fam.flavor != hopf::Flavor::FunctionAlgebra)
        throw std::invalid_argument("pairing requires the function flavor");
    CkMorphism z = lift_ordinary_Z(fam, q, ev_cospan(k));
    std::size_t dim = brown_eval(fam.theory(q), k).dim().convert_to<std::size_t>();
    return reshape_row(z.mat(), dim);
}

FieldMatrix pairing_unlifted(const OrdinaryFamily& fam, int q, const ChainComplex& k) {
    if (fam.flavor != hopf::Flavor::FunctionAlgebra)
        throw std::invalid_argument("pairing requires the function flavor");
    CkMorphism z = pi_hat(fam.theory(q), ev_cospan(k));
    std::size_t dim = brown_eval(fam.theory(q), k).dim().convert_to<std::size_t>();
    return reshape_row(z.mat(), dim);
}

SpaceCospan dim_reduce_cospan(const SpaceCospan& c) {
    return smash_cospan(c, space::circle_plus());
}

CkMorphism pi_hat_reduced(const BrownTheory& t, const SpaceCospan& c) {
    return pi_hat(t, dim_reduce_cospan(c));
}

Scalar omega_reduced(const BrownTheory& t, const SpaceCospan& outer, const SpaceCospan& inner) {
    SpaceCospan ro = dim_reduce_cospan(outer);
    SpaceCospan ri = dim_reduce_cospan(inner);
    HopfCospan ho = cospanical_value(t, ro);
    HopfCospan hi = cospanical_value(t, ri);
    cospan::ComposedCospan cc = cospan::compose_cospans(ho, hi, t.field);
    SpaceCospan glued = compose_space_cospans(ro, ri);
    return checked_defect(cc.defect, pi_hat(t, ro), pi_hat(t, ri), pi_hat(t, glued),
                          "omega_reduced");
}

SuspensionConjugators suspension_conjugators(const OrdinaryFamily& fam, int q,
                                             const SpaceCospan& c) {
    BrownTheory t = fam.theory(q);
    hopf::HopfMorphism s0 = space::brown_suspension(t, c.k0);
    hopf::HopfMorphism s1 = space::brown_suspension(t, c.k1);
    return SuspensionConjugators{hopf::materialize_hom(s0, fam.field),
                                 hopf::materialize_hom(s1, fam.field)};
}

}  // namespace hopfpi::pathint
