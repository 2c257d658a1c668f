#pragma once

#include <vector>

#include "hopfpi/finab/group.hpp"

namespace hopfpi::finab {

/// Canonical invariant-factor form of Z^n / diag(orders), with the
/// structure maps expressed on coordinates.
struct CanonicalPresentation {
    FinAbGroup group;
    IntMatrix to_canonical;    // group.rank x n
    IntMatrix from_canonical;  // n x group.rank
};
CanonicalPresentation canonical_presentation(const std::vector<BigInt>& orders);

/// Invariant-factor form; isomorphic inputs give identical output.
FinAbGroup make_group(const std::vector<BigInt>& orders);

struct KernelData {
    FinAbGroup kernel;
    GroupHom incl;  // mono kernel -> src
};
KernelData kernel(const GroupHom& f);

struct CokernelData {
    FinAbGroup cokernel;
    GroupHom proj;  // epi tgt -> cokernel
};
CokernelData cokernel(const GroupHom& f);

struct ImageData {
    FinAbGroup image;
    GroupHom incl;        // mono image -> tgt
    GroupHom corestrict;  // epi src -> image
};
ImageData image(const GroupHom& f);

struct BiproductData {
    FinAbGroup sum;
    std::vector<GroupHom> inj;   // factor -> sum
    std::vector<GroupHom> proj;  // sum -> factor
};
BiproductData direct_sum(const std::vector<FinAbGroup>& factors);

struct PushoutData {
    FinAbGroup pushout;
    GroupHom in_b;
    GroupHom in_c;
};
/// Pushout of B <-f- A -g-> C, i.e. cokernel of (f,-g) : A -> B (+) C.
PushoutData pushout(const GroupHom& f, const GroupHom& g);

struct PullbackData {
    FinAbGroup pullback;
    GroupHom pr_b;
    GroupHom pr_c;
};
/// Pullback of B -f-> D <-g- C, i.e. kernel of (f,-g) : B (+) C -> D.
PullbackData pullback(const GroupHom& f, const GroupHom& g);

/// The connecting map Ker(g) -> Cok(f) for composable f : A -> B, g : B -> C,
/// i.e. cokernel projection after kernel inclusion.
GroupHom connecting(const GroupHom& f, const GroupHom& g);

/// Mid-exactness of the complex A -> B (+) C -> D induced by a commuting
/// square (f : A->B, fp : A->C, g : B->D, gp : C->D).  Throws when the
/// square does not commute.
bool is_exact_square(const GroupHom& f, const GroupHom& fp, const GroupHom& g, const GroupHom& gp);

/// Membership of y in the image of f (solved as a congruence).
bool in_image(const GroupHom& f, const std::vector<BigInt>& y_coords);

/// Do two monos into the same group have equal images?  Tested by mutual
/// membership of generators.
bool same_subgroup(const GroupHom& incl_a, const GroupHom& incl_b);

}  // namespace hopfpi::finab
