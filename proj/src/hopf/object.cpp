#include "hopfpi/hopf/object.hpp"

#include <stdexcept>

namespace hopfpi::hopf {

std::string flavor_str(Flavor f) {
    return f == Flavor::GroupAlgebra ? "group" : "function";
}

Flavor parse_flavor(const std::string& text) {
    if (text == "group" || text == "g") return Flavor::GroupAlgebra;
    if (text == "function" || text == "f") return Flavor::FunctionAlgebra;
    throw std::invalid_argument("unknown flavor: " + text);
}

std::string HopfObject::str() const {
    if (flavor == Flavor::GroupAlgebra) return "k[" + group.str() + "]";
    return "k^(" + group.str() + ")";
}

HopfObject trivial_object(Flavor flavor) { return HopfObject{FinAbGroup::trivial(), flavor}; }

HopfObject tensor_object(const HopfObject& a, const HopfObject& b) {
    if (a.flavor != b.flavor) throw std::invalid_argument("tensor: flavor mismatch");
    std::vector<BigInt> orders = a.group.orders();
    for (const auto& d : b.group.orders()) orders.push_back(d);
    return HopfObject{FinAbGroup(orders), a.flavor};
}

bool has_finite_volume(const HopfObject& a, const Field& k) {
    if (k.is_rationals()) return true;
    return a.dim() % k.characteristic() != 0;
}

void require_finite_volume(const HopfObject& a, const Field& k) {
    if (!has_finite_volume(a, k))
        throw exact::NotFiniteVolume(a.str() + " has no finite volume over " + k.str());
}

HopfMorphism make_morphism(HopfObject src, HopfObject tgt, GroupHom carrier) {
    if (src.flavor != tgt.flavor) throw std::invalid_argument("morphism flavors must match");
    const FinAbGroup& from = src.flavor == Flavor::GroupAlgebra ? src.group : tgt.group;
    const FinAbGroup& to = src.flavor == Flavor::GroupAlgebra ? tgt.group : src.group;
    if (carrier.src() != from || carrier.tgt() != to)
        throw std::invalid_argument("carrier endpoints do not match the morphism");
    return HopfMorphism{std::move(src), std::move(tgt), std::move(carrier)};
}

HopfMorphism identity_morphism(const HopfObject& a) {
    return HopfMorphism{a, a, GroupHom::identity(a.group)};
}

HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f) {
    if (f.tgt != g.src) throw std::invalid_argument("hopf compose: endpoint mismatch");
    if (f.src.flavor == Flavor::GroupAlgebra)
        return HopfMorphism{f.src, g.tgt, finab::compose(g.carrier, f.carrier)};
    return HopfMorphism{f.src, g.tgt, finab::compose(f.carrier, g.carrier)};
}

HopfMorphism tensor_morphism(const HopfMorphism& a, const HopfMorphism& b) {
    HopfObject src = tensor_object(a.src, b.src);
    HopfObject tgt = tensor_object(a.tgt, b.tgt);
    IntMatrix m = IntMatrix::block_diag(a.carrier.matrix(), b.carrier.matrix());
    const FinAbGroup& from = src.flavor == Flavor::GroupAlgebra ? src.group : tgt.group;
    const FinAbGroup& to = src.flavor == Flavor::GroupAlgebra ? tgt.group : src.group;
    return HopfMorphism{src, tgt, GroupHom(from, to, m)};
}

HopfMorphism unit_morphism(const HopfObject& a) {
    HopfObject k = trivial_object(a.flavor);
    if (a.flavor == Flavor::GroupAlgebra)
        return HopfMorphism{k, a, GroupHom::zero(FinAbGroup::trivial(), a.group)};
    return HopfMorphism{k, a, GroupHom::zero(a.group, FinAbGroup::trivial())};
}

HopfMorphism counit_morphism(const HopfObject& a) {
    HopfObject k = trivial_object(a.flavor);
    if (a.flavor == Flavor::GroupAlgebra)
        return HopfMorphism{a, k, GroupHom::zero(a.group, FinAbGroup::trivial())};
    return HopfMorphism{a, k, GroupHom::zero(FinAbGroup::trivial(), a.group)};
}

HopfMorphism mult_morphism(const HopfObject& a) {
    HopfObject aa = tensor_object(a, a);
    IntMatrix fold = IntMatrix::identity(a.group.rank()).hstack(IntMatrix::identity(a.group.rank()));
    if (a.flavor == Flavor::GroupAlgebra)
        return HopfMorphism{aa, a, GroupHom(aa.group, a.group, fold)};
    // Pointwise product of functions restricts along the diagonal.
    return HopfMorphism{aa, a, GroupHom(a.group, aa.group, fold.transposed())};
}

bool is_mono(const HopfMorphism& f) {
    return f.src.flavor == Flavor::GroupAlgebra ? finab::is_injective(f.carrier)
                                                : finab::is_surjective(f.carrier);
}

bool is_epi(const HopfMorphism& f) {
    return f.src.flavor == Flavor::GroupAlgebra ? finab::is_surjective(f.carrier)
                                                : finab::is_injective(f.carrier);
}

}  // namespace hopfpi::hopf
