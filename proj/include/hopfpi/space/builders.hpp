#pragma once

#include <string>
#include <vector>

#include "hopfpi/space/chain.hpp"

namespace hopfpi::space {

/// Minimal reduced cellular models.  Builtin names: point, sphere:n, torus,
/// klein, rp2, moore:p:n, circle_plus, solid_torus; "name" may also be a
/// manifold literal handled by manifold_plus.
ChainComplex builtin(const std::string& name);

ChainComplex point();
ChainComplex sphere(std::size_t n);
ChainComplex torus();
ChainComplex klein();
ChainComplex rp2();
ChainComplex moore(const BigInt& p, std::size_t n);
/// Reduced model of the disjoint-basepoint circle T^+.
ChainComplex circle_plus();
/// Chains of D^2 x S^1, i.e. the reduced model of (solid torus)^+.
ChainComplex solid_torus_plus();

/// Unreduced chains of a closed manifold M, read as the reduced complex of
/// M^+.  Known names: circle, torus, klein, rp2, sphere:n (n>=1), s2, s3.
ChainComplex manifold_plus(const std::string& name);

struct WedgeData {
    ChainComplex wedge;
    ChainMap incl0, incl1;   // summand inclusions
    ChainMap proj0, proj1;   // collapse maps
};
WedgeData wedge(const ChainComplex& k, const ChainComplex& l);

/// Fold map K v K -> K.
ChainMap fold(const ChainComplex& k);
/// Block sum of chain maps on wedges.
ChainMap wedge_map(const ChainMap& f, const ChainMap& g);

/// Reduced chains of the smash product (tensor of reduced complexes with
/// Koszul signs); left factor comes first in the basis order.
ChainComplex smash(const ChainComplex& k, const ChainComplex& l);
ChainMap smash_maps(const ChainMap& f, const ChainMap& g);

struct SuspensionData {
    ChainComplex suspension;
    ChainMap twist;  // the loop-reversal involution: -1 in every degree
};
/// Suspension = smash with sphere(1); degree shift by one.
SuspensionData suspend(const ChainComplex& k);
ChainMap suspend_map(const ChainMap& f);

struct ConeData {
    ChainComplex cone;   // C_n = L_n + K_{n-1}, d(l,k) = (dl + f k, -dk)
    ChainMap incl;       // L -> C
    ChainMap collapse;   // C -> Suspension(K)
};
ConeData mapping_cone(const ChainMap& f);

struct HomotopyPushoutData {
    ChainComplex pushout;  // L0_n + L1_n + K_{n-1}
    ChainMap j0, j1;       // inclusions of L0, L1
};
HomotopyPushoutData homotopy_pushout(const ChainMap& f, const ChainMap& g);

struct TSigmaData {
    ChainComplex apex;   // cone of f0 v f1 : K0 v K1 -> L
    ChainMap to_sk0;     // twist o collapse, apex -> Suspension(K0)
    ChainMap to_sk1;     // collapse, apex -> Suspension(K1)
};

/// Cospan of spaces K0 -> L <- K1.
struct SpaceCospan {
    ChainComplex k0, l, k1;
    ChainMap f0, f1;

    static SpaceCospan make(ChainMap f0, ChainMap f1);
    static SpaceCospan identity(const ChainComplex& k);
    /// (* -> L <- *)
    static SpaceCospan closed(const ChainComplex& l);
    SpaceCospan dagger() const;
    std::uint64_t digest() const;
};

TSigmaData t_sigma(const SpaceCospan& c);

/// Composition by gluing: apex = homotopy pushout over the shared foot.
SpaceCospan compose_space_cospans(const SpaceCospan& outer, const SpaceCospan& inner);
/// Monoidal structure: wedge of feet and apexes.
SpaceCospan tensor_space_cospans(const SpaceCospan& a, const SpaceCospan& b);
/// Smash every space and leg with X (dimension reduction uses X = T^+).
SpaceCospan smash_cospan(const SpaceCospan& c, const ChainComplex& x);

/// Chain-level triad: subcomplex inclusions T -> K0, T -> K1, K0 -> L,
/// K1 -> L with L spanned by the two pieces and T their intersection,
/// expressed by exactness of 0 -> C(T) -> C(K0) (+) C(K1) -> C(L) -> 0.
struct Triad {
    ChainComplex t, k0, k1, l;
    ChainMap t_to_k0, t_to_k1, k0_to_l, k1_to_l;
};
bool is_chain_triad(const Triad& triad);
/// The torus split into two cylinders along two circles.
Triad torus_cylinder_triad();

}  // namespace hopfpi::space
