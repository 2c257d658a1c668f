#include "hopfpi/cospan/cospan.hpp"

#include <stdexcept>

namespace hopfpi::cospan {

using finab::FinAbGroup;
using finab::GroupHom;
using finab::IntMatrix;

namespace {

struct HopfPushout {
    HopfObject object;
    HopfMorphism in_left, in_right;
};

// Pushout of left <- shared -> right in the Hopf category: the carrier-level
// pushout for kG, the carrier-level pullback for k^G.
HopfPushout hopf_pushout(const HopfMorphism& f, const HopfMorphism& g) {
    if (f.src != g.src) throw std::invalid_argument("hopf pushout: shared source required");
    if (f.src.flavor == Flavor::GroupAlgebra) {
        auto po = finab::pushout(f.carrier, g.carrier);
        HopfObject obj{po.pushout, Flavor::GroupAlgebra};
        return HopfPushout{obj, HopfMorphism{f.tgt, obj, po.in_b},
                           HopfMorphism{g.tgt, obj, po.in_c}};
    }
    auto pb = finab::pullback(f.carrier, g.carrier);
    HopfObject obj{pb.pullback, Flavor::FunctionAlgebra};
    return HopfPushout{obj, HopfMorphism{f.tgt, obj, pb.pr_b},
                       HopfMorphism{g.tgt, obj, pb.pr_c}};
}

struct HopfPullback {
    HopfObject object;
    HopfMorphism pr_left, pr_right;
};

HopfPullback hopf_pullback(const HopfMorphism& f, const HopfMorphism& g) {
    if (f.tgt != g.tgt) throw std::invalid_argument("hopf pullback: shared target required");
    if (f.src.flavor == Flavor::GroupAlgebra) {
        auto pb = finab::pullback(f.carrier, g.carrier);
        HopfObject obj{pb.pullback, Flavor::GroupAlgebra};
        return HopfPullback{obj, HopfMorphism{obj, f.src, pb.pr_b},
                            HopfMorphism{obj, g.src, pb.pr_c}};
    }
    auto po = finab::pushout(f.carrier, g.carrier);
    HopfObject obj{po.pushout, Flavor::FunctionAlgebra};
    return HopfPullback{obj, HopfMorphism{obj, f.src, po.in_b},
                        HopfMorphism{obj, g.src, po.in_c}};
}

// Joint map foot0 (x) foot1 -> apex as carrier data in the concatenated
// presentation of the tensor group.
GroupHom joint_carrier(const HopfCospan& c) {
    HopfObject feet = hopf::tensor_object(c.foot0, c.foot1);
    if (c.flavor() == Flavor::GroupAlgebra) {
        IntMatrix m = c.leg0.carrier.matrix().hstack(c.leg1.carrier.matrix());
        return GroupHom(feet.group, c.apex.group, m);
    }
    IntMatrix m = c.leg0.carrier.matrix().vstack(c.leg1.carrier.matrix());
    return GroupHom(c.apex.group, feet.group, m);
}

}  // namespace

HopfCospan HopfCospan::make(HopfMorphism leg0, HopfMorphism leg1) {
    if (leg0.tgt != leg1.tgt) throw std::invalid_argument("cospan legs must share the apex");
    return HopfCospan{leg0.src, leg0.tgt, leg1.src, std::move(leg0), std::move(leg1)};
}

HopfCospan HopfCospan::identity(const HopfObject& a) {
    return make(hopf::identity_morphism(a), hopf::identity_morphism(a));
}

HopfCospan HopfCospan::dagger() const { return make(leg1, leg0); }

HopfSpan HopfSpan::make(HopfMorphism leg0, HopfMorphism leg1) {
    if (leg0.src != leg1.src) throw std::invalid_argument("span legs must share the apex");
    return HopfSpan{leg0.tgt, leg0.src, leg1.tgt, std::move(leg0), std::move(leg1)};
}

HopfSpan HopfSpan::identity(const HopfObject& a) {
    return make(hopf::identity_morphism(a), hopf::identity_morphism(a));
}

HopfSpan HopfSpan::dagger() const { return make(leg1, leg0); }

HopfCospan reduce(const HopfCospan& c) {
    GroupHom joint = joint_carrier(c);
    auto im = finab::image(joint);
    std::size_t r0 = c.foot0.group.rank();
    if (c.flavor() == Flavor::GroupAlgebra) {
        HopfObject apex{im.image, Flavor::GroupAlgebra};
        std::vector<std::size_t> cols0(r0), cols1(c.foot1.group.rank());
        for (std::size_t i = 0; i < cols0.size(); ++i) cols0[i] = i;
        for (std::size_t i = 0; i < cols1.size(); ++i) cols1[i] = r0 + i;
        GroupHom l0(c.foot0.group, im.image, im.corestrict.matrix().submatrix_cols(cols0));
        GroupHom l1(c.foot1.group, im.image, im.corestrict.matrix().submatrix_cols(cols1));
        return HopfCospan::make(HopfMorphism{c.foot0, apex, l0}, HopfMorphism{c.foot1, apex, l1});
    }
    HopfObject apex{im.image, Flavor::FunctionAlgebra};
    std::vector<std::size_t> rows0(r0), rows1(c.foot1.group.rank());
    for (std::size_t i = 0; i < rows0.size(); ++i) rows0[i] = i;
    for (std::size_t i = 0; i < rows1.size(); ++i) rows1[i] = r0 + i;
    GroupHom l0(im.image, c.foot0.group, im.incl.matrix().submatrix_rows(rows0));
    GroupHom l1(im.image, c.foot1.group, im.incl.matrix().submatrix_rows(rows1));
    return HopfCospan::make(HopfMorphism{c.foot0, apex, l0}, HopfMorphism{c.foot1, apex, l1});
}

bool equivalent(const HopfCospan& a, const HopfCospan& b) {
    if (a.foot0 != b.foot0 || a.foot1 != b.foot1) throw std::invalid_argument("feet mismatch");
    HopfCospan ra = reduce(a), rb = reduce(b);
    if (a.flavor() == Flavor::GroupAlgebra) {
        auto ka = finab::kernel(joint_carrier(ra));
        auto kb = finab::kernel(joint_carrier(rb));
        return finab::same_subgroup(ka.incl, kb.incl);
    }
    auto ia = finab::image(joint_carrier(ra));
    auto ib = finab::image(joint_carrier(rb));
    return finab::same_subgroup(ia.incl, ib.incl);
}

ComposedCospan compose_cospans(const HopfCospan& outer, const HopfCospan& inner, const Field& k) {
    if (inner.foot1 != outer.foot0)
        throw std::invalid_argument("cospans not composable: feet mismatch");
    HopfPushout po = hopf_pushout(inner.leg1, outer.leg0);
    HopfCospan out = HopfCospan::make(hopf::compose(po.in_left, inner.leg0),
                                      hopf::compose(po.in_right, outer.leg1));
    Scalar defect = hopf::composition_defect(po.in_right, outer.leg1, k);
    return ComposedCospan{out, defect};
}

ComposedSpan compose_spans(const HopfSpan& outer, const HopfSpan& inner, const Field& k) {
    if (inner.foot1 != outer.foot0)
        throw std::invalid_argument("spans not composable: feet mismatch");
    HopfPullback pb = hopf_pullback(inner.leg1, outer.leg0);
    HopfSpan out = HopfSpan::make(hopf::compose(inner.leg0, pb.pr_left),
                                  hopf::compose(outer.leg1, pb.pr_right));
    Scalar defect = hopf::composition_defect(inner.leg0, pb.pr_left, k);
    return ComposedSpan{out, defect};
}

HopfCospan transpose(const HopfSpan& v) {
    HopfPushout po = hopf_pushout(v.leg0, v.leg1);
    return HopfCospan::make(po.in_left, po.in_right);
}

HopfSpan transpose_cospan(const HopfCospan& c) {
    HopfPullback pb = hopf_pullback(c.leg0, c.leg1);
    return HopfSpan::make(pb.pr_left, pb.pr_right);
}

HopfCospan tensor(const HopfCospan& a, const HopfCospan& b) {
    return HopfCospan::make(hopf::tensor_morphism(a.leg0, b.leg0),
                            hopf::tensor_morphism(a.leg1, b.leg1));
}

HopfSpan tensor_spans(const HopfSpan& a, const HopfSpan& b) {
    return HopfSpan::make(hopf::tensor_morphism(a.leg0, b.leg0),
                          hopf::tensor_morphism(a.leg1, b.leg1));
}

HopfCospan mono_extend(const HopfCospan& c, const HopfObject& pad) {
    if (pad.flavor != c.flavor()) throw std::invalid_argument("pad flavor mismatch");
    HopfObject big = hopf::tensor_object(c.apex, pad);
    std::size_t r = c.apex.group.rank();
    HopfMorphism mono;
    if (c.flavor() == Flavor::GroupAlgebra) {
        IntMatrix m(big.group.rank(), r);
        for (std::size_t i = 0; i < r; ++i) m.at(i, i) = 1;
        mono = HopfMorphism{c.apex, big, GroupHom(c.apex.group, big.group, m)};
    } else {
        IntMatrix m(r, big.group.rank());
        for (std::size_t i = 0; i < r; ++i) m.at(i, i) = 1;
        mono = HopfMorphism{c.apex, big, GroupHom(big.group, c.apex.group, m)};
    }
    return HopfCospan::make(hopf::compose(mono, c.leg0), hopf::compose(mono, c.leg1));
}

}  // namespace hopfpi::cospan
