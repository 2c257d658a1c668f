#pragma once

#include "hopfpi/cospan/ck.hpp"
#include "hopfpi/space/brown.hpp"

namespace hopfpi::pathint {

using cospan::CkMorphism;
using cospan::HopfCospan;
using cospan::HopfSpan;
using exact::Field;
using exact::FieldMatrix;
using exact::Scalar;
using space::BrownTheory;
using space::ChainComplex;
using space::ChainMap;
using space::SpaceCospan;

/// A degree-indexed family of ordinary Brown functors sharing flavor,
/// coefficients and field; the engine's properly extensible theories.
struct OrdinaryFamily {
    hopf::Flavor flavor = hopf::Flavor::FunctionAlgebra;
    finab::FinAbGroup coefficients;
    Field field = Field::rationals();

    BrownTheory theory(int q) const { return BrownTheory(flavor, coefficients, q, field); }
    /// Degrees with finite-volume coefficients: all of them.
    static bool gamma_contains(int) { return true; }
    /// d(theory; q): unbounded for the ordinary families handled here.
    static std::optional<int> dimension_bound(int) { return std::nullopt; }
};

/// The induced cospan of Hopf objects (legwise Brown evaluation).
HopfCospan cospanical_value(const BrownTheory& t, const SpaceCospan& c);
/// The induced span: E applied to the cone-collapse span of the cospan.
HopfSpan spanical_value(const BrownTheory& t, const SpaceCospan& c);

/// The cospanical and spanical path-integrals on one representative.
CkMorphism pi_hat(const BrownTheory& t, const SpaceCospan& c);
CkMorphism pi_check(const BrownTheory& t, const SpaceCospan& c);

/// Obstruction 2-cocycles.  Both are computed symbolically from the
/// composition defect and cross-checked against the matrix route; a
/// disagreement raises std::logic_error with a diagnostic.
Scalar omega_hat(const BrownTheory& t, const SpaceCospan& outer, const SpaceCospan& inner);
Scalar omega_check(const BrownTheory& t, const SpaceCospan& outer, const SpaceCospan& inner);

/// theta(E)([c]) = vol^{-1}(E(cone of the incoming leg f1)).
Scalar theta(const BrownTheory& t, const SpaceCospan& c);
/// Alternating product theta(E_q) theta(E_{q-1})^{-1} ... theta(E_0)^{+-1}.
Scalar theta_leq(const OrdinaryFamily& fam, int q, const SpaceCospan& c);

/// Z = theta(E)^{-1} (pi_hat (x) pi_check): the lifted tensor theory.
CkMorphism lift_tensor_Z(const BrownTheory& t, const SpaceCospan& c);
/// Z = theta_{<=q}^{-1} pi_hat(E_q): the lifted bounded-below theory.
CkMorphism lift_ordinary_Z(const OrdinaryFamily& fam, int q, const SpaceCospan& c);

/// The closed invariant Z(L) of the lifted ordinary theory on (* -> L <- *).
Scalar closed_invariant(const OrdinaryFamily& fam, int q, const ChainComplex& l);

/// A cobordism as chain data: unreduced complexes standing for the
/// plus-spaces, with boundary inclusions.
struct Cobordism {
    ChainComplex total;
    ChainMap incl0, incl1;  // boundary pieces into the total space
};
SpaceCospan phi(const Cobordism& cob);

/// The bilinear form of the lifted ordinary theory on E(K): the matrix of
/// Z(ev_K) for ev_K = (K v K -> K <- *), reshaped to dim x dim.
FieldMatrix pairing(const OrdinaryFamily& fam, int q, const ChainComplex& k);
/// The unlifted form |H^q(K)|^{-1} sum, i.e. pi_hat(ev_K) reshaped.
FieldMatrix pairing_unlifted(const OrdinaryFamily& fam, int q, const ChainComplex& k);

/// Dimension reduction: precompose with the smash by T^+.
SpaceCospan dim_reduce_cospan(const SpaceCospan& c);
CkMorphism pi_hat_reduced(const BrownTheory& t, const SpaceCospan& c);
/// omega of the reduced theory, cross-checked like omega_hat.
Scalar omega_reduced(const BrownTheory& t, const SpaceCospan& outer, const SpaceCospan& inner);

/// Matrices of the suspension conjugators E_q(K_i) -> E_{q+1}(SK_i) on the
/// feet of a cospan.
struct SuspensionConjugators {
    FieldMatrix p0, p1;
};
SuspensionConjugators suspension_conjugators(const OrdinaryFamily& fam, int q,
                                             const SpaceCospan& c);

}  // namespace hopfpi::pathint
