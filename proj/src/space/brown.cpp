#include "hopfpi/space/brown.hpp"

#include <stdexcept>

namespace hopfpi::space {

BrownTheory::BrownTheory(Flavor fl, FinAbGroup g, int q, Field k, std::optional<int> cap)
    : flavor(fl), coefficients(std::move(g)), degree(q), field(k), dim_cap(cap) {
    if (!k.is_rationals() && coefficients.order() % k.characteristic() == 0)
        throw exact::NotFiniteVolume("coefficient group order shares the field characteristic");
}

BrownTheory BrownTheory::at_degree(int q) const {
    BrownTheory t = *this;
    t.degree = q;
    return t;
}

HopfObject brown_eval(const BrownTheory& t, const ChainComplex& k) {
    if (t.dim_cap && k.dim() > *t.dim_cap)
        throw std::invalid_argument("space exceeds the theory's dimension cap");
    auto data = homology_data(k, t.coefficients, t.degree, t.is_cohomology());
    return HopfObject{data->group(), t.flavor};
}

HopfMorphism brown_induced(const BrownTheory& t, const ChainMap& f) {
    HopfObject src = brown_eval(t, f.src());
    HopfObject tgt = brown_eval(t, f.tgt());
    GroupHom carrier = induced(f, t.coefficients, t.degree, t.is_cohomology());
    return HopfMorphism{src, tgt, carrier};
}

HopfMorphism brown_suspension(const BrownTheory& t, const ChainComplex& k) {
    HopfObject low = brown_eval(t, k);
    HopfObject high = brown_eval(t.at_degree(t.degree + 1), suspend(k).suspension);
    GroupHom carrier = suspension_iso(k, t.coefficients, t.degree, t.is_cohomology());
    return HopfMorphism{low, high, carrier};
}

bool exact_square_check(const BrownTheory& t, const Triad& tr) {
    if (!is_chain_triad(tr)) throw std::invalid_argument("inputs do not form a chain triad");
    HopfMorphism e_t_k0 = brown_induced(t, tr.t_to_k0);
    HopfMorphism e_t_k1 = brown_induced(t, tr.t_to_k1);
    HopfMorphism e_k0_l = brown_induced(t, tr.k0_to_l);
    HopfMorphism e_k1_l = brown_induced(t, tr.k1_to_l);
    // The function flavor reverses every carrier, so the induced square is
    // traversed from the apex side.
    if (t.flavor == Flavor::GroupAlgebra)
        return finab::is_exact_square(e_t_k0.carrier, e_t_k1.carrier, e_k0_l.carrier,
                                      e_k1_l.carrier);
    return finab::is_exact_square(e_k0_l.carrier, e_k1_l.carrier, e_t_k0.carrier,
                                  e_t_k1.carrier);
}

}  // namespace hopfpi::space
