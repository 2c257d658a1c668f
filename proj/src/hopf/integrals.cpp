#include "hopfpi/hopf/integrals.hpp"

namespace hopfpi::hopf {

Scalar inverse_volume(const HopfObject& a, const Field& k) {
    require_finite_volume(a, k);
    return Scalar::integer_inverse(k, a.dim());
}

SubquotientData hopf_kernel(const HopfMorphism& xi) {
    if (xi.src.flavor == Flavor::GroupAlgebra) {
        auto kd = finab::kernel(xi.carrier);
        HopfObject obj{kd.kernel, Flavor::GroupAlgebra};
        return SubquotientData{obj, HopfMorphism{obj, xi.src, kd.incl}};
    }
    // Ker_H(rho^*) = k^{Cok rho}, included via the cokernel projection.
    auto cd = finab::cokernel(xi.carrier);
    HopfObject obj{cd.cokernel, Flavor::FunctionAlgebra};
    return SubquotientData{obj, HopfMorphism{obj, xi.src, cd.proj}};
}

SubquotientData hopf_cokernel(const HopfMorphism& xi) {
    if (xi.src.flavor == Flavor::GroupAlgebra) {
        auto cd = finab::cokernel(xi.carrier);
        HopfObject obj{cd.cokernel, Flavor::GroupAlgebra};
        return SubquotientData{obj, HopfMorphism{xi.tgt, obj, cd.proj}};
    }
    // Cok_H(rho^*) = k^{Ker rho}, projected via the kernel inclusion.
    auto kd = finab::kernel(xi.carrier);
    HopfObject obj{kd.kernel, Flavor::FunctionAlgebra};
    return SubquotientData{obj, HopfMorphism{xi.tgt, obj, kd.incl}};
}

ImageFactorization hopf_image(const HopfMorphism& xi) {
    auto im = finab::image(xi.carrier);
    if (xi.src.flavor == Flavor::GroupAlgebra) {
        HopfObject obj{im.image, Flavor::GroupAlgebra};
        return ImageFactorization{obj, HopfMorphism{obj, xi.tgt, im.incl},
                                  HopfMorphism{xi.src, obj, im.corestrict}};
    }
    // Im_H(rho^*) = k^{Im rho}: incl carried by the corestriction, and
    // conversely.
    HopfObject obj{im.image, Flavor::FunctionAlgebra};
    return ImageFactorization{obj, HopfMorphism{obj, xi.tgt, im.corestrict},
                              HopfMorphism{xi.src, obj, im.incl}};
}

HopfMorphism hopf_connecting(const HopfMorphism& xi_prime, const HopfMorphism& xi) {
    if (xi.tgt != xi_prime.src) throw std::invalid_argument("hopf_connecting: endpoint mismatch");
    SubquotientData ker = hopf_kernel(xi_prime);
    SubquotientData cok = hopf_cokernel(xi);
    return compose(cok.morphism, ker.morphism);
}

Scalar bracket(const HopfMorphism& xi, const Field& k) {
    require_finite_volume(xi.src, k);
    require_finite_volume(xi.tgt, k);
    return Scalar::integer_inverse(k, finab::image(xi.carrier).image.order());
}

Scalar composition_defect(const HopfMorphism& xi_prime, const HopfMorphism& xi, const Field& k) {
    return bracket(hopf_connecting(xi_prime, xi), k);
}

}  // namespace hopfpi::hopf
