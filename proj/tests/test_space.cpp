#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpi/space/brown.hpp"

using namespace hopfpi::space;
using hopfpi::exact::BigInt;
using hopfpi::exact::Field;
using hopfpi::exact::IntMatrix;
using hopfpi::hopf::Flavor;
namespace finab = hopfpi::finab;

namespace {

FinAbGroup Zn(long n) { return FinAbGroup({BigInt(n)}); }
FinAbGroup Z22() { return FinAbGroup({BigInt(2), BigInt(2)}); }

// dim over F_p from the group order p^d.
long dim_p(const BigInt& order, long p) {
    long d = 0;
    BigInt n = order;
    while (n > 1) {
        n /= p;
        ++d;
    }
    return d;
}

}  // namespace

TEST_CASE("builtin models") {
    CHECK(sphere(2).rank(2) == 1);
    CHECK(sphere(2).rank(1) == 0);
    CHECK(klein().rank(1) == 2);
    CHECK(klein().boundary(2).at(0, 0) == 2);
    CHECK(torus().rank(1) == 2);
    CHECK(torus().boundary(2).is_zero());
    CHECK(circle_plus().rank(0) == 1);
    CHECK(circle_plus().rank(1) == 1);
    CHECK(builtin("moore:3:1").boundary(2).at(0, 0) == 3);
    CHECK_THROWS_AS(builtin("nonsense"), std::invalid_argument);
}

TEST_CASE("homology of builtins") {
    CHECK(homology(torus(), Zn(2), 1) == Z22());
    CHECK(homology(torus(), Zn(2), 2) == Zn(2));
    CHECK(homology(torus(), Zn(3), 2) == Zn(3));
    CHECK(cohomology(klein(), Zn(3), 1) == Zn(3));
    CHECK(homology(klein(), Zn(2), 1) == Z22());
    CHECK(homology(klein(), Zn(2), 2) == Zn(2));
    CHECK(homology(klein(), Zn(3), 1) == Zn(3));
    CHECK(homology(point(), Zn(5), 0).is_trivial());
    CHECK(homology(point(), Zn(5), 3).is_trivial());
    CHECK(homology(rp2(), Zn(3), 1).is_trivial());
    CHECK(homology(rp2(), Zn(2), 1) == Zn(2));
    CHECK(cohomology(rp2(), Zn(2), 2) == Zn(2));
    CHECK(homology(sphere(0), Zn(4), 0) == Zn(4));
    CHECK(homology(builtin("moore:2:1"), Zn(4), 1) == Zn(2));
    CHECK(homology(sphere(3), Zn(2), -1).is_trivial());
}

TEST_CASE("plus models of manifolds") {
    CHECK(homology(manifold_plus("torus"), Zn(2), 0) == Zn(2));
    CHECK(homology(manifold_plus("torus"), Zn(2), 1) == Z22());
    CHECK(cohomology(manifold_plus("klein"), Zn(3), 1) == Zn(3));
    CHECK(cohomology(manifold_plus("rp2"), Zn(3), 1).is_trivial());
    CHECK(cohomology(manifold_plus("rp2"), Zn(3), 0) == Zn(3));
    CHECK(homology(manifold_plus("empty"), Zn(2), 0).is_trivial());
    CHECK(homology(manifold_plus("s3"), Zn(2), 3) == Zn(2));
    CHECK(homology(solid_torus_plus(), Zn(2), 1) == Zn(2));
    CHECK(homology(solid_torus_plus(), Zn(2), 2).is_trivial());
    CHECK(homology(solid_torus_plus(), Zn(2), 3).is_trivial());
}

TEST_CASE("suspension shifts and twist squares to the identity") {
    auto s = suspend(sphere(1));
    CHECK(s.suspension == sphere(2));
    CHECK(compose(s.twist, s.twist) == ChainMap::identity(s.suspension));
    auto sk = suspend(klein()).suspension;
    CHECK(homology(sk, Zn(2), 2) == Z22());
    CHECK(homology(sk, Zn(3), 2) == Zn(3));
}

TEST_CASE("smash with circle_plus adds a shifted copy") {
    ChainComplex k = klein();
    ChainComplex s = smash(k, circle_plus());
    CHECK(s.rank(1) == k.rank(1));
    CHECK(s.rank(2) == k.rank(2) + k.rank(1));
    CHECK(s.rank(3) == k.rank(2));
}

TEST_CASE("kuenneth count for smash over prime fields") {
    std::vector<ChainComplex> corpus = {sphere(1), sphere(2), torus(), klein(), rp2(),
                                        circle_plus()};
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (long p : {2L, 3L}) {
                ChainComplex ab = smash(a, b);
                for (int q = 0; q <= ab.dim(); ++q) {
                    long lhs = dim_p(homology(ab, Zn(p), q).order(), p);
                    long rhs = 0;
                    for (int i = 0; i <= q; ++i)
                        rhs += dim_p(homology(a, Zn(p), i).order(), p) *
                               dim_p(homology(b, Zn(p), q - i).order(), p);
                    CHECK(lhs == rhs);
                }
            }
}

TEST_CASE("mapping cone examples") {
    auto cone_id = mapping_cone(ChainMap::identity(sphere(1)));
    for (int q = 0; q <= 3; ++q) CHECK(homology(cone_id.cone, Zn(2), q).is_trivial());

    auto cone_zero = mapping_cone(ChainMap::zero(ChainComplex::zero(), sphere(1)));
    CHECK(cone_zero.cone == sphere(1));

    auto cone_collapse = mapping_cone(ChainMap::zero(sphere(1), ChainComplex::zero()));
    CHECK(homology(cone_collapse.cone, Zn(2), 2) == Zn(2));
    CHECK(homology(cone_collapse.cone, Zn(2), 1).is_trivial());

    IntMatrix deg2(1, 1);
    deg2.at(0, 0) = 2;
    ChainMap two(sphere(1), sphere(1), {IntMatrix(0, 0), deg2});
    auto cone2 = mapping_cone(two);
    CHECK(homology(cone2.cone, Zn(4), 1) == Zn(2));

    // Cone maps are chain maps and the collapse hits the suspension.
    CHECK(cone2.incl.tgt() == cone2.cone);
    CHECK(cone2.collapse.tgt() == suspend(sphere(1)).suspension);
}

TEST_CASE("homotopy pushout examples") {
    ChainMap c = ChainMap::zero(sphere(1), ChainComplex::zero());
    auto hp = homotopy_pushout(c, c);
    CHECK(homology(hp.pushout, Zn(2), 2) == Zn(2));
    CHECK(homology(hp.pushout, Zn(2), 1).is_trivial());

    ChainMap idk = ChainMap::identity(klein());
    auto hp2 = homotopy_pushout(idk, idk);
    for (int q = 0; q <= 2; ++q)
        CHECK(homology(hp2.pushout, Zn(2), q) == homology(klein(), Zn(2), q));
}

TEST_CASE("heegaard gluing yields the three-sphere") {
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

    auto hp = homotopy_pushout(incl_std, incl_swap);
    CHECK(homology(hp.pushout, Zn(2), 0) == Zn(2));
    CHECK(homology(hp.pushout, Zn(2), 1).is_trivial());
    CHECK(homology(hp.pushout, Zn(2), 2).is_trivial());
    CHECK(homology(hp.pushout, Zn(6), 3) == Zn(6));
}

TEST_CASE("induced maps on homology") {
    IntMatrix deg2(1, 1);
    deg2.at(0, 0) = 2;
    ChainMap two(sphere(1), sphere(1), {IntMatrix(0, 0), deg2});
    GroupHom h = induced(two, Zn(4), 1, false);
    CHECK(h.matrix().at(0, 0) == 2);

    CHECK(induced(ChainMap::identity(torus()), Zn(2), 1, false) ==
          GroupHom::identity(homology(torus(), Zn(2), 1)));

    IntMatrix topcell(1, 1);
    topcell.at(0, 0) = 1;
    ChainMap collapse(torus(), sphere(2), {IntMatrix(0, 0), IntMatrix(0, 2), topcell});
    GroupHom h2 = induced(collapse, Zn(2), 2, false);
    CHECK(h2.matrix().at(0, 0) == 1);
    // Contravariant on cohomology.
    GroupHom h3 = induced(collapse, Zn(2), 2, true);
    CHECK(h3.src() == cohomology(sphere(2), Zn(2), 2));
    CHECK(h3.tgt() == cohomology(torus(), Zn(2), 2));
    CHECK(h3.matrix().at(0, 0) == 1);
}

TEST_CASE("suspension isomorphism is an isomorphism") {
    std::vector<ChainComplex> corpus = {sphere(1), torus(), klein(), rp2(), circle_plus()};
    for (const auto& k : corpus)
        for (long p : {2L, 4L})
            for (int q = 0; q <= 2; ++q) {
                GroupHom up = suspension_iso(k, Zn(p), q, false);
                CHECK(up.src() == homology(k, Zn(p), q));
                CHECK(up.tgt() == homology(suspend(k).suspension, Zn(p), q + 1));
                CHECK(finab::is_injective(up));
                CHECK(finab::is_surjective(up));
                GroupHom down = suspension_iso(k, Zn(p), q, true);
                CHECK(down.src() == cohomology(suspend(k).suspension, Zn(p), q + 1));
                CHECK(down.tgt() == cohomology(k, Zn(p), q));
                CHECK(finab::is_injective(down));
                CHECK(finab::is_surjective(down));
            }
}

TEST_CASE("chain triad detection and Mayer-Vietoris") {
    Triad tr = torus_cylinder_triad();
    CHECK(is_chain_triad(tr));
    CHECK(homology(tr.l, Zn(2), 1) == Z22());
    CHECK(homology(tr.l, Zn(2), 2) == Zn(2));

    for (long p : {2L, 3L, 4L})
        for (int q = 0; q <= 2; ++q) {
            CHECK(exact_square_check(
                BrownTheory(Flavor::GroupAlgebra, Zn(p), q, Field::rationals()), tr));
            CHECK(exact_square_check(
                BrownTheory(Flavor::FunctionAlgebra, Zn(p), q, Field::rationals()), tr));
        }

    Triad trivial{ChainComplex::zero(),
                  ChainComplex::zero(),
                  ChainComplex::zero(),
                  ChainComplex::zero(),
                  ChainMap::zero(ChainComplex::zero(), ChainComplex::zero()),
                  ChainMap::zero(ChainComplex::zero(), ChainComplex::zero()),
                  ChainMap::zero(ChainComplex::zero(), ChainComplex::zero()),
                  ChainMap::zero(ChainComplex::zero(), ChainComplex::zero())};
    CHECK(is_chain_triad(trivial));
    CHECK(exact_square_check(BrownTheory(Flavor::GroupAlgebra, Zn(2), 1, Field::rationals()),
                             trivial));
}

TEST_CASE("mapping-cone triad squares are exact") {
    // K -> L -> C(f) against K -> pt, for the degree-2 self-map of S1.
    IntMatrix deg2(1, 1);
    deg2.at(0, 0) = 2;
    ChainMap two(sphere(1), sphere(1), {IntMatrix(0, 0), deg2});
    auto cone = mapping_cone(two);
    ChainMap to_pt = ChainMap::zero(sphere(1), ChainComplex::zero());
    ChainMap pt_to_cone = ChainMap::zero(ChainComplex::zero(), cone.cone);
    for (int q = 0; q <= 2; ++q) {
        BrownTheory th(Flavor::GroupAlgebra, Zn(4), q, Field::rationals());
        auto ef = brown_induced(th, two).carrier;
        auto eg = brown_induced(th, to_pt).carrier;
        auto ej0 = brown_induced(th, cone.incl).carrier;
        auto ej1 = brown_induced(th, pt_to_cone).carrier;
        CHECK(finab::is_exact_square(ef, eg, ej0, ej1));
    }
}

TEST_CASE("brown evaluation") {
    BrownTheory tf(Flavor::FunctionAlgebra, Zn(2), 1, Field::rationals());
    CHECK(brown_eval(tf, sphere(1)) == (HopfObject{Zn(2), Flavor::FunctionAlgebra}));
    CHECK(brown_eval(tf, point()).is_trivial());
    BrownTheory tg(Flavor::GroupAlgebra, Zn(3), 1, Field::rationals());
    CHECK(brown_eval(tg, rp2()).is_trivial());
    CHECK_THROWS_AS(BrownTheory(Flavor::GroupAlgebra, Zn(2), 1, Field::parse("F2")),
                    hopfpi::exact::NotFiniteVolume);
    BrownTheory capped(Flavor::GroupAlgebra, Zn(2), 1, Field::rationals(), 1);
    CHECK_THROWS_AS(brown_eval(capped, torus()), std::invalid_argument);
}

TEST_CASE("mayer-vietoris for homotopy pushout squares") {
    IntMatrix deg2(1, 1);
    deg2.at(0, 0) = 2;
    IntMatrix incl_a(2, 1);
    incl_a.at(0, 0) = 1;
    std::vector<ChainMap> maps = {
        ChainMap::identity(sphere(1)),
        ChainMap(sphere(1), sphere(1), {IntMatrix(0, 0), deg2}),
        ChainMap::zero(sphere(1), torus()),
        ChainMap(sphere(1), torus(), {IntMatrix(0, 0), incl_a}),
        ChainMap(sphere(1), klein(), {IntMatrix(0, 0), incl_a}),
    };
    for (const auto& f : maps)
        for (const auto& g : maps) {
            if (f.src() != g.src()) continue;
            auto hp = homotopy_pushout(f, g);
            for (long p : {2L, 3L})
                for (int q = 0; q <= 2; ++q) {
                    BrownTheory th(Flavor::GroupAlgebra, Zn(p), q, Field::rationals());
                    auto ef = brown_induced(th, f).carrier;
                    auto eg = brown_induced(th, g).carrier;
                    auto ej0 = brown_induced(th, hp.j0).carrier;
                    auto ej1 = brown_induced(th, hp.j1).carrier;
                    CHECK(finab::is_exact_square(ef, eg, ej0, ej1));
                }
        }
}

TEST_CASE("t_sigma spans") {
    // Closed cospan: the apex cone collapses back to the middle space.
    SpaceCospan closed = SpaceCospan::closed(sphere(1));
    TSigmaData ts = t_sigma(closed);
    CHECK(homology(ts.apex, Zn(2), 1) == Zn(2));
    CHECK(homology(ts.apex, Zn(2), 2).is_trivial());

    // A circle foot over a point apex suspends: cone of S1 -> pt is S2.
    SpaceCospan collapse_leg = SpaceCospan::make(
        ChainMap::zero(ChainComplex::zero(), ChainComplex::zero()),
        ChainMap::zero(sphere(1), ChainComplex::zero()));
    TSigmaData tsc = t_sigma(collapse_leg);
    CHECK(homology(tsc.apex, Zn(2), 2) == Zn(2));
    CHECK(tsc.to_sk1.tgt() == sphere(2));

    SpaceCospan id1 = SpaceCospan::identity(sphere(1));
    TSigmaData ts2 = t_sigma(id1);
    CHECK(homology(ts2.apex, Zn(2), 2) == Zn(2));
    CHECK(homology(ts2.apex, Zn(2), 1).is_trivial());

    SpaceCospan triv = SpaceCospan::closed(ChainComplex::zero());
    TSigmaData ts3 = t_sigma(triv);
    CHECK(ts3.apex.dim() < 0);
}

TEST_CASE("space cospan composition") {
    SpaceCospan left = SpaceCospan::make(ChainMap::zero(ChainComplex::zero(), solid_torus_plus()),
                                         ChainMap::identity(solid_torus_plus()));
    SpaceCospan right = SpaceCospan::make(ChainMap::identity(solid_torus_plus()),
                                          ChainMap::zero(ChainComplex::zero(), solid_torus_plus()));
    SpaceCospan glued = compose_space_cospans(right, left);
    CHECK(glued.k0.dim() < 0);
    CHECK(glued.k1.dim() < 0);
    CHECK(homology(glued.l, Zn(2), 1) == Zn(2));
}
