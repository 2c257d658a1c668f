#pragma once

#include "hopfpi/hopf/object.hpp"

namespace hopfpi::hopf {

/// vol^{-1}(A) = (dim_k A)^{-1}; requires finite volume over k.
Scalar inverse_volume(const HopfObject& a, const Field& k);

struct SubquotientData {
    HopfObject object;
    HopfMorphism morphism;  // Ker_H -> A ; B -> Cok_H ; Im_H -> B
};

/// Kernel, cokernel, image in Hopf^{bc}: for kG these are induced by the
/// carrier's kernel/cokernel/image; for k^G the roles dualize (the kernel of
/// rho^* is k^{Cok rho}, and so on).
SubquotientData hopf_kernel(const HopfMorphism& xi);
SubquotientData hopf_cokernel(const HopfMorphism& xi);
struct ImageFactorization {
    HopfObject object;
    HopfMorphism incl;        // Im_H -> tgt
    HopfMorphism corestrict;  // src -> Im_H
};
ImageFactorization hopf_image(const HopfMorphism& xi);

/// d(xi', xi) = cok_H(xi) o ker_H(xi') : Ker_H(xi') -> Cok_H(xi).
HopfMorphism hopf_connecting(const HopfMorphism& xi_prime, const HopfMorphism& xi);

/// <xi> = sigma^B o xi o sigma_A; for group-induced objects this is
/// (dim Im_H(xi))^{-1}, certified against the materialized oracle in tests.
Scalar bracket(const HopfMorphism& xi, const Field& k);

/// The scalar lambda with mu_xi o mu_xi' = lambda * mu_{xi' o xi}, computed
/// as <d(xi', xi)>.
Scalar composition_defect(const HopfMorphism& xi_prime, const HopfMorphism& xi, const Field& k);

}  // namespace hopfpi::hopf
