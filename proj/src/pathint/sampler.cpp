#include "hopfpi/pathint/sampler.hpp"

#include <stdexcept>

namespace hopfpi::pathint {

using space::builtin;
using space::ChainComplex;
using space::ChainMap;
using space::circle_plus;
using space::IntMatrix;
using space::klein;
using space::manifold_plus;
using space::moore;
using space::rp2;
using space::solid_torus_plus;
using space::sphere;
using space::torus;
using space::wedge;

namespace {

ChainMap one_cell_map(const ChainComplex& src, const ChainComplex& tgt, std::size_t deg,
                      std::size_t src_idx, std::size_t tgt_idx, long value) {
    std::vector<IntMatrix> comps(std::max(src.degrees(), tgt.degrees()));
    for (std::size_t n = 0; n < comps.size(); ++n) comps[n] = IntMatrix(tgt.rank(n), src.rank(n));
    comps[deg].at(tgt_idx, src_idx) = value;
    return ChainMap(src, tgt, comps);
}

}  // namespace

void SpaceCorpus::add(const ChainMap& m) {
    catalog_.push_back(Entry{m.src().digest(), m.tgt().digest(), m});
}

SpaceCorpus::SpaceCorpus() {
    ChainComplex pt = space::point();
    ChainComplex s1 = sphere(1), s2 = sphere(2);
    ChainComplex t2 = torus(), kl = klein(), rp = rp2();
    ChainComplex m21 = moore(2, 1), m31 = moore(3, 1);
    ChainComplex cp = circle_plus();
    space::WedgeData w11 = wedge(s1, s1);

    spaces_ = {pt, s1, s2, t2, kl, rp, m21, m31, cp, w11.wedge};
    names_ = {"point", "s1",       "s2",       "torus",       "klein",
              "rp2",   "moore:2:1", "moore:3:1", "circle_plus", "wedge:s1:s1"};

    for (const auto& k : spaces_) add(ChainMap::identity(k));

    // Degree self-maps of spheres.
    for (long m : {-1L, 2L, 3L}) {
        add(one_cell_map(s1, s1, 1, 0, 0, m));
        add(one_cell_map(s2, s2, 2, 0, 0, m));
    }
    // One-cell inclusions into the surfaces.
    add(one_cell_map(s1, t2, 1, 0, 0, 1));
    add(one_cell_map(s1, t2, 1, 0, 1, 1));
    add(one_cell_map(s1, kl, 1, 0, 0, 1));
    add(one_cell_map(s1, kl, 1, 0, 1, 1));
    add(one_cell_map(s1, rp, 1, 0, 0, 1));
    add(one_cell_map(s1, m21, 1, 0, 0, 1));
    add(one_cell_map(s1, m31, 1, 0, 0, 1));
    add(one_cell_map(s1, cp, 1, 0, 0, 1));
    // Collapses of the top cell.
    add(one_cell_map(t2, s2, 2, 0, 0, 1));
    add(one_cell_map(kl, s2, 2, 0, 0, 1));
    add(one_cell_map(rp, s2, 2, 0, 0, 1));
    add(one_cell_map(m21, s2, 2, 0, 0, 1));
    add(one_cell_map(m31, s2, 2, 0, 0, 1));
    add(one_cell_map(cp, s1, 1, 0, 0, 1));
    // Wedge structure maps and the 1-skeleton of the torus.
    add(w11.incl0);
    add(w11.incl1);
    add(w11.proj0);
    add(w11.proj1);
    add(space::fold(s1));
    {
        std::vector<IntMatrix> comps(2);
        comps[0] = IntMatrix(0, 0);
        comps[1] = IntMatrix::identity(2);
        add(ChainMap(w11.wedge, t2, comps));
    }
    {
        // Klein bottle onto the wedge: kill a, keep b.
        std::vector<IntMatrix> comps(3);
        comps[0] = IntMatrix(0, 0);
        IntMatrix m(2, 2);
        m.at(0, 1) = 1;
        comps[1] = m;
        comps[2] = IntMatrix(0, 1);
        add(ChainMap(kl, w11.wedge, comps));
    }
}

std::vector<ChainMap> SpaceCorpus::maps_between(const ChainComplex& src,
                                                const ChainComplex& tgt) const {
    std::vector<ChainMap> out;
    out.push_back(ChainMap::zero(src, tgt));
    std::uint64_t ds = src.digest(), dt = tgt.digest();
    for (const auto& e : catalog_)
        if (e.src == ds && e.tgt == dt) out.push_back(e.map);
    return out;
}

ChainMap SpaceCorpus::random_map(Rng& rng, const ChainComplex& src,
                                 const ChainComplex& tgt) const {
    auto pool = maps_between(src, tgt);
    ChainMap pick = pool[rng.below(pool.size())];
    // Occasionally rescale; integral multiples of chain maps are chain maps.
    std::size_t roll = rng.below(4);
    if (roll == 1) return pick.scaled(-1);
    if (roll == 2) return pick.scaled(2);
    return pick;
}

SpaceCospan SpaceCorpus::random_cospan(Rng& rng) const {
    const ChainComplex& apex = spaces_[rng.below(spaces_.size())];
    const ChainComplex& k0 = spaces_[rng.below(spaces_.size())];
    const ChainComplex& k1 = spaces_[rng.below(spaces_.size())];
    return SpaceCospan::make(random_map(rng, k0, apex), random_map(rng, k1, apex));
}

std::pair<SpaceCospan, SpaceCospan> SpaceCorpus::random_pair(Rng& rng) const {
    SpaceCospan inner = random_cospan(rng);
    const ChainComplex& apex = spaces_[rng.below(spaces_.size())];
    const ChainComplex& k2 = spaces_[rng.below(spaces_.size())];
    SpaceCospan outer =
        SpaceCospan::make(random_map(rng, inner.k1, apex), random_map(rng, k2, apex));
    return {inner, outer};
}

std::vector<SpaceCospan> SpaceCorpus::random_triple(Rng& rng) const {
    auto [inner, mid] = random_pair(rng);
    const ChainComplex& apex = spaces_[rng.below(spaces_.size())];
    const ChainComplex& k3 = spaces_[rng.below(spaces_.size())];
    SpaceCospan outer = SpaceCospan::make(random_map(rng, mid.k1, apex), random_map(rng, k3, apex));
    return {inner, mid, outer};
}

std::pair<SpaceCospan, SpaceCospan> heegaard_pair() {
    ChainComplex st = solid_torus_plus();
    ChainComplex t2 = manifold_plus("torus");
    IntMatrix i1(2, 2);
    i1.at(0, 0) = 1;
    i1.at(1, 1) = 1;
    IntMatrix i2(2, 1);
    i2.at(1, 0) = 1;
    ChainMap incl_std(t2, st, {IntMatrix::identity(1), i1, i2});
    IntMatrix s1m(2, 2);
    s1m.at(0, 1) = 1;
    s1m.at(1, 0) = 1;
    IntMatrix s2m(2, 1);
    s2m.at(1, 0) = -1;
    ChainMap incl_swap(t2, st, {IntMatrix::identity(1), s1m, s2m});
    SpaceCospan inner =
        SpaceCospan::make(ChainMap::zero(ChainComplex::zero(), st), incl_std);
    SpaceCospan outer =
        SpaceCospan::make(incl_swap, ChainMap::zero(ChainComplex::zero(), st));
    return {inner, outer};
}

SpaceCospan named_cospan(const std::string& name) {
    if (name == "heegaard1") return heegaard_pair().first;
    if (name == "heegaard2") return heegaard_pair().second;
    if (name == "mcg_neg_s1") {
        ChainComplex s1 = sphere(1);
        return SpaceCospan::make(one_cell_map(s1, s1, 1, 0, 0, -1), ChainMap::identity(s1));
    }
    if (name == "mcg_swap_s1s1") {
        ChainComplex w = wedge(sphere(1), sphere(1)).wedge;
        std::vector<IntMatrix> comps(2);
        comps[0] = IntMatrix(0, 0);
        IntMatrix swap(2, 2);
        swap.at(0, 1) = 1;
        swap.at(1, 0) = 1;
        comps[1] = swap;
        return SpaceCospan::make(ChainMap(w, w, comps), ChainMap::identity(w));
    }
    if (name.rfind("closed:", 0) == 0) return SpaceCospan::closed(builtin(name.substr(7)));
    if (name.rfind("id:", 0) == 0) return SpaceCospan::identity(builtin(name.substr(3)));
    if (name.rfind("ev:", 0) == 0) {
        ChainComplex k = builtin(name.substr(3));
        return SpaceCospan::make(space::fold(k), ChainMap::zero(ChainComplex::zero(), k));
    }
    throw std::invalid_argument("unknown named cospan: " + name);
}

std::vector<std::string> named_cospans() {
    return {"heegaard1",  "heegaard2",  "mcg_neg_s1", "mcg_swap_s1s1",
            "closed:<space>", "id:<space>", "ev:<space>"};
}

}  // namespace hopfpi::pathint
