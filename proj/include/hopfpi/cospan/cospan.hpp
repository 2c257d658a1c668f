#pragma once

#include "hopfpi/hopf/integrals.hpp"

namespace hopfpi::cospan {

using exact::Field;
using exact::Scalar;
using hopf::Flavor;
using hopf::HopfMorphism;
using hopf::HopfObject;

/// foot0 --leg0--> apex <--leg1-- foot1, one flavor throughout.
struct HopfCospan {
    HopfObject foot0, apex, foot1;
    HopfMorphism leg0, leg1;

    static HopfCospan make(HopfMorphism leg0, HopfMorphism leg1);
    static HopfCospan identity(const HopfObject& a);
    HopfCospan dagger() const;
    Flavor flavor() const { return apex.flavor; }
};

/// foot0 <--leg0-- apex --leg1--> foot1.
struct HopfSpan {
    HopfObject foot0, apex, foot1;
    HopfMorphism leg0, leg1;

    static HopfSpan make(HopfMorphism leg0, HopfMorphism leg1);
    static HopfSpan identity(const HopfObject& a);
    HopfSpan dagger() const;
    Flavor flavor() const { return apex.flavor; }
};

/// Replace the apex by the Hopf image of the joint map foot0 (x) foot1 ->
/// apex; the result is ~-equivalent with jointly epi legs.
HopfCospan reduce(const HopfCospan& c);

/// Decidable ~-equivalence for cospans with equal feet: the joint-map
/// kernels of the reduced forms must agree as subobjects (for the function
/// flavor this is the joint carrier images inside foot0 (+) foot1).
///
/// Soundness: a monomorphism extending one apex into another leaves the
/// joint-map kernel unchanged, so the kernel is invariant along the
/// generating preorder and therefore on equivalence classes.
/// Completeness: two reduced cospans have jointly epi legs, so each apex is
/// the image of foot0 (+) foot1; equal kernels make those images isomorphic
/// by an isomorphism commuting with the legs, hence the cospans are
/// equivalent.
bool equivalent(const HopfCospan& a, const HopfCospan& b);

struct ComposedCospan {
    HopfCospan cospan;
    Scalar defect;  // integral composition defect over the supplied field
};
/// Pushout composition (group pushout for kG, group pullback for k^G); the
/// defect is <cok_H(outer incoming) o ker_H(pushout leg)>.
ComposedCospan compose_cospans(const HopfCospan& outer, const HopfCospan& inner, const Field& k);

struct ComposedSpan {
    HopfSpan span;
    Scalar defect;
};
ComposedSpan compose_spans(const HopfSpan& outer, const HopfSpan& inner, const Field& k);

/// Transposition between spans and cospans via the (co)limit of the other
/// shape; the associated square is exact.
HopfCospan transpose(const HopfSpan& v);
HopfSpan transpose_cospan(const HopfCospan& c);

HopfCospan tensor(const HopfCospan& a, const HopfCospan& b);
HopfSpan tensor_spans(const HopfSpan& a, const HopfSpan& b);

/// Embed the apex into apex (+) pad by a Hopf monomorphism; the integral
/// must not change.
HopfCospan mono_extend(const HopfCospan& c, const HopfObject& pad);

}  // namespace hopfpi::cospan
