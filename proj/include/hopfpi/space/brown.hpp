#pragma once

#include <optional>

#include "hopfpi/hopf/object.hpp"
#include "hopfpi/space/builders.hpp"
#include "hopfpi/space/homology.hpp"

namespace hopfpi::space {

using exact::Field;
using hopf::Flavor;
using hopf::HopfMorphism;
using hopf::HopfObject;

/// One Hopf-valued Brown functor of ordinary type: k[H_q(-;G)] for the
/// group flavor, k^{H^q(-;G)} for the function flavor.  char(field) must
/// not divide |G| so every value has a finite volume.
struct BrownTheory {
    Flavor flavor = Flavor::FunctionAlgebra;
    FinAbGroup coefficients;
    int degree = 1;
    Field field = Field::rationals();
    std::optional<int> dim_cap;  // caps dim(apex); feet one lower

    BrownTheory() = default;
    BrownTheory(Flavor fl, FinAbGroup g, int q, Field k,
                std::optional<int> cap = std::nullopt);

    BrownTheory at_degree(int q) const;
    bool is_cohomology() const { return flavor == Flavor::FunctionAlgebra; }

    /// Coefficient-range metadata of the ordinary family: every degree has
    /// finite-volume values, in every dimension.
    static bool gamma_contains(int) { return true; }
    static std::optional<int> dimension_bound() { return std::nullopt; }  // unbounded
};

HopfObject brown_eval(const BrownTheory& t, const ChainComplex& k);
HopfMorphism brown_induced(const BrownTheory& t, const ChainMap& f);

/// The Hopf morphism E(K) -> E(SK) carried by the suspension isomorphism
/// between degree q on K and degree q+1 on SK.
HopfMorphism brown_suspension(const BrownTheory& t, const ChainComplex& k);

/// Applies E to a chain-level triad square and tests exactness of the
/// induced square of groups.  Throws when the input is not a triad.
bool exact_square_check(const BrownTheory& t, const Triad& triad);

}  // namespace hopfpi::space
