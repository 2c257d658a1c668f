#include "hopfpi/finab/ops.hpp"

#include <stdexcept>

#include "hopfpi/exact/congruence.hpp"
#include "hopfpi/finab/lattice.hpp"
#include "hopfpi/exact/smith.hpp"

namespace hopfpi::finab {

using exact::congruence_kernel;
using exact::inverse_unimodular;
using exact::lattice_basis;
using exact::mod_floor;
using exact::Rational;
using exact::smith_normal_form;
using exact::SmithResult;
using exact::solve_congruence;

namespace {

std::vector<BigInt> reduced_coords(const FinAbGroup& g, const std::vector<BigInt>& coords) {
    std::vector<BigInt> r(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) r[i] = mod_floor(coords[i], g.orders()[i]);
    return r;
}

}  // namespace

CanonicalPresentation canonical_presentation(const std::vector<BigInt>& orders) {
    for (const auto& d : orders)
        if (d < 1) throw std::invalid_argument("presentation orders must be positive");
    const std::size_t n = orders.size();
    LatticeQuotient lq(IntMatrix::identity(n), IntMatrix::diagonal(orders));
    return CanonicalPresentation{lq.group(), lq.express_matrix(IntMatrix::identity(n)),
                                 lq.lift_matrix()};
}

FinAbGroup make_group(const std::vector<BigInt>& orders) {
    return canonical_presentation(orders).group;
}

KernelData kernel(const GroupHom& f) {
    IntMatrix gens = congruence_kernel(f.matrix(), f.tgt().orders());
    IntMatrix big = gens.hstack(IntMatrix::diagonal(f.src().orders()));
    LatticeQuotient lq(big, IntMatrix::diagonal(f.src().orders()));
    return KernelData{lq.group(), GroupHom(lq.group(), f.src(), lq.lift_matrix())};
}

CokernelData cokernel(const GroupHom& f) {
    const std::size_t m = f.tgt().rank();
    IntMatrix rel = f.matrix().hstack(IntMatrix::diagonal(f.tgt().orders()));
    LatticeQuotient lq(IntMatrix::identity(m), rel);
    return CokernelData{lq.group(),
                        GroupHom(f.tgt(), lq.group(), lq.express_matrix(IntMatrix::identity(m)))};
}

ImageData image(const GroupHom& f) {
    IntMatrix big = f.matrix().hstack(IntMatrix::diagonal(f.tgt().orders()));
    LatticeQuotient lq(big, IntMatrix::diagonal(f.tgt().orders()));
    return ImageData{lq.group(), GroupHom(lq.group(), f.tgt(), lq.lift_matrix()),
                     GroupHom(f.src(), lq.group(), lq.express_matrix(f.matrix()))};
}

BiproductData direct_sum(const std::vector<FinAbGroup>& factors) {
    std::vector<BigInt> orders;
    std::vector<std::size_t> offsets;
    for (const auto& g : factors) {
        offsets.push_back(orders.size());
        for (const auto& d : g.orders()) orders.push_back(d);
    }
    CanonicalPresentation cp = canonical_presentation(orders);
    BiproductData out;
    out.sum = cp.group;
    for (std::size_t t = 0; t < factors.size(); ++t) {
        const auto& g = factors[t];
        std::vector<std::size_t> block(g.rank());
        for (std::size_t i = 0; i < g.rank(); ++i) block[i] = offsets[t] + i;
        out.inj.push_back(GroupHom(g, cp.group, cp.to_canonical.submatrix_cols(block)));
        out.proj.push_back(GroupHom(cp.group, g, cp.from_canonical.submatrix_rows(block)));
    }
    return out;
}

PushoutData pushout(const GroupHom& f, const GroupHom& g) {
    if (f.src() != g.src()) throw std::invalid_argument("pushout: shared source required");
    BiproductData bc = direct_sum({f.tgt(), g.tgt()});
    GroupHom h = compose(bc.inj[0], f) + compose(bc.inj[1], -g);
    CokernelData ck = cokernel(h);
    return PushoutData{ck.cokernel, compose(ck.proj, bc.inj[0]), compose(ck.proj, bc.inj[1])};
}

PullbackData pullback(const GroupHom& f, const GroupHom& g) {
    if (f.tgt() != g.tgt()) throw std::invalid_argument("pullback: shared target required");
    BiproductData bc = direct_sum({f.src(), g.src()});
    GroupHom h = compose(f, bc.proj[0]) + compose(-g, bc.proj[1]);
    KernelData k = kernel(h);
    return PullbackData{k.kernel, compose(bc.proj[0], k.incl), compose(bc.proj[1], k.incl)};
}

GroupHom connecting(const GroupHom& f, const GroupHom& g) {
    if (f.tgt() != g.src()) throw std::invalid_argument("connecting: endpoint mismatch");
    KernelData k = kernel(g);
    CokernelData c = cokernel(f);
    return compose(c.proj, k.incl);
}

bool is_exact_square(const GroupHom& f, const GroupHom& fp, const GroupHom& g,
                     const GroupHom& gp) {
    if (compose(g, f) != compose(gp, fp)) throw std::invalid_argument("square does not commute");
    BiproductData bc = direct_sum({f.tgt(), fp.tgt()});
    GroupHom u = compose(bc.inj[0], f) + compose(bc.inj[1], -fp);
    GroupHom v = compose(g, bc.proj[0]) + compose(gp, bc.proj[1]);
    BigInt im_u = f.src().order() / kernel(u).kernel.order();
    BigInt ker_v = kernel(v).kernel.order();
    return im_u == ker_v;
}

bool in_image(const GroupHom& f, const std::vector<BigInt>& y_coords) {
    auto y = reduced_coords(f.tgt(), y_coords);
    return solve_congruence(f.matrix(), y, f.tgt().orders()).has_value();
}

bool same_subgroup(const GroupHom& incl_a, const GroupHom& incl_b) {
    if (incl_a.tgt() != incl_b.tgt()) throw std::invalid_argument("subgroups of different groups");
    for (std::size_t j = 0; j < incl_a.matrix().cols(); ++j)
        if (!in_image(incl_b, incl_a.matrix().col(j))) return false;
    for (std::size_t j = 0; j < incl_b.matrix().cols(); ++j)
        if (!in_image(incl_a, incl_b.matrix().col(j))) return false;
    return true;
}

bool is_injective(const GroupHom& f) { return kernel(f).kernel.is_trivial(); }

bool is_surjective(const GroupHom& f) { return cokernel(f).cokernel.is_trivial(); }

}  // namespace hopfpi::finab
