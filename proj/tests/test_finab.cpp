#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpi/finab/ops.hpp"

#include <random>

using namespace hopfpi::finab;
using hopfpi::exact::BigInt;
using hopfpi::exact::IntMatrix;
using hopfpi::exact::mod_floor;

namespace {

FinAbGroup Z(long n) { return FinAbGroup({BigInt(n)}); }

GroupHom hom1(const FinAbGroup& a, const FinAbGroup& b, long entry) {
    return GroupHom(a, b, IntMatrix{{BigInt(entry)}});
}

// Exhaustive membership of x in the image of incl.
bool in_subgroup_brute(const GroupHom& incl, const std::vector<BigInt>& x) {
    for (const auto& k : incl.src().elements()) {
        if (incl.apply_coords(k) == x) return true;
    }
    return false;
}

std::vector<BigInt> zero_coords(const FinAbGroup& g) { return std::vector<BigInt>(g.rank(), BigInt(0)); }

GroupHom random_hom(std::mt19937_64& rng, const FinAbGroup& a, const FinAbGroup& b) {
    // Random well-defined hom: entry (i,j) is a multiple of e_i / gcd(e_i, d_j).
    IntMatrix m(b.rank(), a.rank());
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) {
            BigInt step = b.orders()[i] / hopfpi::exact::gcd(b.orders()[i], a.orders()[j]);
            BigInt count = b.orders()[i] / step;
            m.at(i, j) = step * BigInt(static_cast<long>(rng() % static_cast<unsigned long>(count)));
        }
    return GroupHom(a, b, m);
}

FinAbGroup random_group(std::mt19937_64& rng) {
    static const std::vector<std::vector<long>> pool = {
        {}, {2}, {3}, {4}, {2, 2}, {6}, {8}, {2, 4}, {12}, {2, 2, 2}, {9}, {2, 6}};
    const auto& o = pool[rng() % pool.size()];
    std::vector<BigInt> v(o.begin(), o.end());
    return FinAbGroup(v);
}

}  // namespace

TEST_CASE("make_group canonicalizes") {
    CHECK(make_group({BigInt(2), BigInt(3)}) == Z(6));
    CHECK(make_group({BigInt(1), BigInt(1)}) == FinAbGroup::trivial());
    CHECK(make_group({BigInt(2), BigInt(4)}) == FinAbGroup({BigInt(2), BigInt(4)}));
    CHECK(make_group({BigInt(4), BigInt(2)}) == FinAbGroup({BigInt(2), BigInt(4)}));
    CHECK(make_group({BigInt(6), BigInt(4)}) == FinAbGroup({BigInt(2), BigInt(12)}));
    CHECK_THROWS_AS(make_group({BigInt(0)}), std::invalid_argument);
}

TEST_CASE("compose and identities") {
    FinAbGroup z2 = Z(2), z4 = Z(4), z3 = Z(3);
    GroupHom proj = hom1(z4, z2, 1);
    GroupHom incl = hom1(z2, z4, 2);
    CHECK(compose(proj, incl).is_zero());
    GroupHom f = hom1(z4, z4, 3);
    CHECK(compose(GroupHom::identity(z4), f) == f);
    GroupHom neg = hom1(z3, z3, -1);
    CHECK(compose(neg, neg) == GroupHom::identity(z3));
}

TEST_CASE("kernel examples") {
    FinAbGroup z2 = Z(2), z4 = Z(4), z6 = Z(6);
    auto k = kernel(hom1(z4, z2, 1));
    CHECK(k.kernel == z2);
    CHECK(k.incl.matrix().at(0, 0) == 2);
    CHECK(kernel(GroupHom::identity(z6)).kernel.is_trivial());
    auto kz = kernel(GroupHom::zero(z2, z2));
    CHECK(kz.kernel == z2);
    CHECK(kz.incl == GroupHom::identity(z2));
}

TEST_CASE("cokernel examples") {
    FinAbGroup z2 = Z(2), z4 = Z(4);
    auto c = cokernel(hom1(z2, z4, 2));
    CHECK(c.cokernel == z2);
    CHECK(cokernel(hom1(z4, z2, 1)).cokernel.is_trivial());
    auto cz = cokernel(GroupHom::zero(z2, z4));
    CHECK(cz.cokernel == z4);
    CHECK(cz.proj == GroupHom::identity(z4));
}

TEST_CASE("image examples") {
    FinAbGroup z2 = Z(2), z4 = Z(4);
    CHECK(image(hom1(z4, z2, 1)).image == z2);
    CHECK(image(GroupHom::zero(z4, z2)).image.is_trivial());
    auto im = image(hom1(z4, z4, 2));
    CHECK(im.image == z2);
    CHECK(compose(im.incl, im.corestrict) == hom1(z4, z4, 2));
}

TEST_CASE("direct sum biproduct laws") {
    FinAbGroup z2 = Z(2), z3 = Z(3);
    auto s = direct_sum({z2, z2});
    CHECK(s.sum == FinAbGroup({BigInt(2), BigInt(2)}));
    auto s23 = direct_sum({z2, z3});
    CHECK(s23.sum == Z(6));
    auto st = direct_sum({z2, FinAbGroup::trivial()});
    CHECK(st.sum == z2);
    for (const auto& d : {s, s23}) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                GroupHom pj_ij = compose(d.proj[i], d.inj[j]);
                if (i == j)
                    CHECK(pj_ij == GroupHom::identity(d.inj[j].src()));
                else
                    CHECK(pj_ij.is_zero());
            }
        GroupHom idsum = compose(d.inj[0], d.proj[0]) + compose(d.inj[1], d.proj[1]);
        CHECK(idsum == GroupHom::identity(d.sum));
    }
}

TEST_CASE("pushout examples") {
    FinAbGroup z2 = Z(2), z4 = Z(4);
    auto p1 = pushout(GroupHom::zero(FinAbGroup::trivial(), z2),
                      GroupHom::zero(FinAbGroup::trivial(), z2));
    CHECK(p1.pushout == FinAbGroup({BigInt(2), BigInt(2)}));
    auto p2 = pushout(hom1(z2, z4, 2), GroupHom::identity(z2));
    CHECK(p2.pushout == z4);
    // The image of the Z/4 leg generates; (1,0) has order 4.
    CHECK(is_surjective(p2.in_b));
    auto p3 = pushout(GroupHom::identity(z4), hom1(z4, z2, 1));
    CHECK(p3.pushout == z2);
}

TEST_CASE("pullback examples") {
    FinAbGroup z2 = Z(2), z4 = Z(4);
    auto p1 = pullback(GroupHom::identity(z2), GroupHom::identity(z2));
    CHECK(p1.pullback == z2);
    CHECK(p1.pr_b == p1.pr_c);
    auto p2 = pullback(GroupHom::zero(z2, FinAbGroup::trivial()),
                       GroupHom::zero(z4, FinAbGroup::trivial()));
    CHECK(p2.pullback.order() == 8);
    auto p3 = pullback(hom1(z4, z2, 1), hom1(z4, z2, 1));
    CHECK(p3.pullback.order() == 8);
}

TEST_CASE("connecting map examples") {
    FinAbGroup z2 = Z(2), z4 = Z(4);
    GroupHom f = hom1(z2, z4, 2);
    GroupHom g = hom1(z4, z2, 1);
    CHECK(connecting(f, g).is_zero());
    GroupHom f0 = GroupHom::zero(FinAbGroup::trivial(), z2);
    GroupHom g0 = GroupHom::zero(z2, FinAbGroup::trivial());
    GroupHom d = connecting(f0, g0);
    CHECK(d.src() == z2);
    CHECK(d.tgt() == z2);
    CHECK(d == GroupHom::identity(z2));
    // g mono => trivial source
    CHECK(connecting(g, f).src().is_trivial());
}

TEST_CASE("exact squares") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        FinAbGroup a = random_group(rng), b = random_group(rng), c = random_group(rng);
        GroupHom f = random_hom(rng, a, b);
        GroupHom g = random_hom(rng, a, c);
        auto po = pushout(f, g);
        CHECK(is_exact_square(f, g, po.in_b, po.in_c));
        FinAbGroup d = random_group(rng);
        GroupHom u = random_hom(rng, b, d);
        GroupHom v = random_hom(rng, c, d);
        auto pb = pullback(u, v);
        CHECK(is_exact_square(pb.pr_b, pb.pr_c, u, v));
    }
    // Non-commuting square is rejected.
    FinAbGroup z2 = Z(2);
    CHECK_THROWS_AS(is_exact_square(GroupHom::identity(z2), GroupHom::identity(z2),
                                    GroupHom::identity(z2), GroupHom::zero(z2, z2)),
                    std::invalid_argument);
    // All-zero square Z/2 -> 0 -> Z/2: the induced complex has trivial middle,
    // so mid-exactness holds.
    FinAbGroup t = FinAbGroup::trivial();
    CHECK(is_exact_square(GroupHom::zero(z2, t), GroupHom::zero(z2, t), GroupHom::zero(t, z2),
                          GroupHom::zero(t, z2)));
}

TEST_CASE("order bookkeeping |Ker||Im| = |src|, |Cok||Im| = |tgt|") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        FinAbGroup a = random_group(rng), b = random_group(rng);
        GroupHom f = random_hom(rng, a, b);
        BigInt ker = kernel(f).kernel.order();
        BigInt cok = cokernel(f).cokernel.order();
        BigInt im = image(f).image.order();
        CHECK(ker * im == a.order());
        CHECK(cok * im == b.order());
    }
}

TEST_CASE("kernel and cokernel universal properties, exhaustively") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        FinAbGroup a = random_group(rng), b = random_group(rng);
        if (a.order() > 64 || b.order() > 64) continue;
        GroupHom f = random_hom(rng, a, b);
        auto k = kernel(f);
        CHECK(compose(f, k.incl).is_zero());
        CHECK(is_injective(k.incl));
        for (const auto& x : a.elements()) {
            bool in_ker = true;
            auto y = f.apply_coords(x);
            for (const auto& c : y)
                if (c != 0) in_ker = false;
            CHECK(in_ker == in_subgroup_brute(k.incl, x));
        }
        auto c = cokernel(f);
        CHECK(compose(c.proj, f).is_zero());
        CHECK(is_surjective(c.proj));
        // proj(y) = 0 exactly on the image of f.
        for (const auto& y : b.elements()) {
            auto q = c.proj.apply_coords(y);
            bool killed = true;
            for (const auto& e : q)
                if (e != 0) killed = false;
            CHECK(killed == in_image(f, y));
        }
    }
}

TEST_CASE("connecting matches elementwise computation") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        FinAbGroup a = random_group(rng), b = random_group(rng), c = random_group(rng);
        if (a.order() > 16 || b.order() > 16 || c.order() > 16) continue;
        GroupHom f = random_hom(rng, a, b);
        GroupHom g = random_hom(rng, b, c);
        GroupHom d = connecting(f, g);
        auto k = kernel(g);
        auto q = cokernel(f);
        for (const auto& x : k.kernel.elements()) {
            auto via_d = d.apply_coords(x);
            auto via_elts = q.proj.apply_coords(k.incl.apply_coords(x));
            CHECK(via_d == via_elts);
        }
    }
}

TEST_CASE("group literals") {
    CHECK(FinAbGroup::parse("Z/2+Z/4").str() == "Z/2+Z/4");
    CHECK(FinAbGroup::parse("0").is_trivial());
    CHECK(FinAbGroup::trivial().str() == "0");
}

TEST_CASE("subgroup equality via membership") {
    FinAbGroup z4 = Z(4);
    auto k1 = kernel(hom1(z4, Z(2), 1)).incl;  // {0,2}
    auto k2 = image(hom1(z4, z4, 2)).incl;     // {0,2}
    CHECK(same_subgroup(k1, k2));
    auto whole = GroupHom::identity(z4);
    CHECK(!same_subgroup(k1, whole));
}
