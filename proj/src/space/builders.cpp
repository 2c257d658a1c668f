#include "hopfpi/space/builders.hpp"

#include <stdexcept>

#include "hopfpi/exact/smith.hpp"

namespace hopfpi::space {

namespace {

ChainComplex one_cell(std::size_t degree) {
    std::vector<std::size_t> ranks(degree + 1, 0);
    ranks[degree] = 1;
    return ChainComplex(ranks, {});
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

}  // namespace

ChainComplex point() { return ChainComplex::zero(); }

ChainComplex sphere(std::size_t n) { return one_cell(n); }

ChainComplex torus() {
    return ChainComplex({0, 2, 1}, {IntMatrix(0, 0), IntMatrix(0, 2), IntMatrix(2, 1)});
}

ChainComplex klein() {
    IntMatrix d2(2, 1);
    d2.at(0, 0) = 2;
    return ChainComplex({0, 2, 1}, {IntMatrix(0, 0), IntMatrix(0, 2), d2});
}

ChainComplex rp2() {
    IntMatrix d2(1, 1);
    d2.at(0, 0) = 2;
    return ChainComplex({0, 1, 1}, {IntMatrix(0, 0), IntMatrix(0, 1), d2});
}

ChainComplex moore(const BigInt& p, std::size_t n) {
    if (p < 2) throw std::invalid_argument("moore space needs p >= 2");
    std::vector<std::size_t> ranks(n + 2, 0);
    ranks[n] = 1;
    ranks[n + 1] = 1;
    std::vector<IntMatrix> bds(n + 2);
    IntMatrix d(1, 1);
    d.at(0, 0) = p;
    bds[n + 1] = d;
    return ChainComplex(ranks, bds);
}

ChainComplex circle_plus() { return ChainComplex({1, 1}, {IntMatrix(0, 1), IntMatrix(1, 1)}); }

ChainComplex solid_torus_plus() {
    // D^2 x S^1 with cells v; m, l; D, F = m x l; T = D x l.
    IntMatrix d2(2, 2);
    d2.at(0, 0) = 1;  // dD = m
    IntMatrix d3(2, 1);
    d3.at(1, 0) = 1;  // dT = F
    return ChainComplex({1, 2, 2, 1}, {IntMatrix(0, 1), IntMatrix(1, 2), d2, d3});
}

ChainComplex manifold_plus(const std::string& name) {
    if (name == "empty") return ChainComplex::zero();
    if (name == "circle" || name == "s1") return circle_plus();
    if (name == "torus")
        return ChainComplex({1, 2, 1}, {IntMatrix(0, 1), IntMatrix(1, 2), IntMatrix(2, 1)});
    if (name == "klein") {
        IntMatrix d2(2, 1);
        d2.at(0, 0) = 2;
        return ChainComplex({1, 2, 1}, {IntMatrix(0, 1), IntMatrix(1, 2), d2});
    }
    if (name == "rp2") {
        IntMatrix d2(1, 1);
        d2.at(0, 0) = 2;
        return ChainComplex({1, 1, 1}, {IntMatrix(0, 1), IntMatrix(1, 1), d2});
    }
    if (name == "point" || name == "s0") return ChainComplex({1}, {IntMatrix(0, 1)});
    if (name.rfind("sphere:", 0) == 0 || name == "s2" || name == "s3") {
        std::size_t n = name == "s2" ? 2 : name == "s3" ? 3 : std::stoul(name.substr(7));
        if (n < 1) throw std::invalid_argument("manifold sphere:n needs n >= 1");
        std::vector<std::size_t> ranks(n + 1, 0);
        ranks[0] = 1;
        ranks[n] = 1;
        return ChainComplex(ranks, {});
    }
    if (name == "solid_torus") return solid_torus_plus();
    throw std::invalid_argument("unknown manifold: " + name);
}

ChainComplex builtin(const std::string& name) {
    if (name == "point" || name == "*") return point();
    if (name == "torus") return torus();
    if (name == "klein") return klein();
    if (name == "rp2") return rp2();
    if (name == "circle_plus" || name == "tplus") return circle_plus();
    if (name == "solid_torus") return solid_torus_plus();
    if (name.size() == 2 && name[0] == 's' && name[1] >= '0' && name[1] <= '9')
        return sphere(static_cast<std::size_t>(name[1] - '0'));
    if (name.rfind("sphere:", 0) == 0) return sphere(std::stoul(name.substr(7)));
    if (name.rfind("moore:", 0) == 0) {
        auto parts = split(name, ':');
        if (parts.size() != 3) throw std::invalid_argument("moore:p:n expected");
        return moore(BigInt(parts[1]), std::stoul(parts[2]));
    }
    if (name.rfind("plus:", 0) == 0) return manifold_plus(name.substr(5));
    if (name.rfind("wedge:", 0) == 0) {
        auto parts = split(name, ':');
        if (parts.size() != 3) throw std::invalid_argument("wedge:a:b expected");
        return wedge(builtin(parts[1]), builtin(parts[2])).wedge;
    }
    if (name.rfind("susp:", 0) == 0) return suspend(builtin(name.substr(5))).suspension;
    throw std::invalid_argument("unknown builtin space: " + name);
}

WedgeData wedge(const ChainComplex& k, const ChainComplex& l) {
    std::size_t degs = std::max(k.degrees(), l.degrees());
    std::vector<std::size_t> ranks(degs);
    std::vector<IntMatrix> bds(degs);
    std::vector<IntMatrix> i0(degs), i1(degs), p0(degs), p1(degs);
    for (std::size_t n = 0; n < degs; ++n) {
        ranks[n] = k.rank(n) + l.rank(n);
        bds[n] = IntMatrix::block_diag(k.boundary(n), l.boundary(n));
        IntMatrix a(ranks[n], k.rank(n)), b(ranks[n], l.rank(n));
        for (std::size_t i = 0; i < k.rank(n); ++i) a.at(i, i) = 1;
        for (std::size_t i = 0; i < l.rank(n); ++i) b.at(k.rank(n) + i, i) = 1;
        i0[n] = a;
        i1[n] = b;
        p0[n] = a.transposed();
        p1[n] = b.transposed();
    }
    ChainComplex w(ranks, bds);
    return WedgeData{w, ChainMap(k, w, i0), ChainMap(l, w, i1), ChainMap(w, k, p0),
                     ChainMap(w, l, p1)};
}

ChainMap fold(const ChainComplex& k) {
    WedgeData w = wedge(k, k);
    std::size_t degs = w.wedge.degrees();
    std::vector<IntMatrix> comps(degs);
    for (std::size_t n = 0; n < degs; ++n)
        comps[n] = IntMatrix::identity(k.rank(n)).hstack(IntMatrix::identity(k.rank(n)));
    return ChainMap(w.wedge, k, comps);
}

ChainMap wedge_map(const ChainMap& f, const ChainMap& g) {
    WedgeData ws = wedge(f.src(), g.src());
    WedgeData wt = wedge(f.tgt(), g.tgt());
    std::size_t degs = std::max(ws.wedge.degrees(), wt.wedge.degrees());
    std::vector<IntMatrix> comps(degs);
    for (std::size_t n = 0; n < degs; ++n)
        comps[n] = IntMatrix::block_diag(f.component(n), g.component(n));
    return ChainMap(ws.wedge, wt.wedge, comps);
}

namespace {

// Offsets of the blocks K_i (x) L_{n-i} inside degree n of the tensor.
std::vector<std::size_t> tensor_offsets(const ChainComplex& k, const ChainComplex& l,
                                        std::size_t n) {
    std::vector<std::size_t> off(n + 2, 0);
    std::size_t acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        off[i] = acc;
        acc += k.rank(i) * l.rank(n - i);
    }
    off[n + 1] = acc;
    return off;
}

}  // namespace

ChainComplex smash(const ChainComplex& k, const ChainComplex& l) {
    if (k.dim() < 0 || l.dim() < 0) return ChainComplex::zero();
    std::size_t degs = static_cast<std::size_t>(k.dim() + l.dim()) + 1;
    std::vector<std::size_t> ranks(degs, 0);
    for (std::size_t n = 0; n < degs; ++n) ranks[n] = tensor_offsets(k, l, n).back();
    std::vector<IntMatrix> bds(degs);
    for (std::size_t n = 1; n < degs; ++n) {
        auto src_off = tensor_offsets(k, l, n);
        auto tgt_off = tensor_offsets(k, l, n - 1);
        IntMatrix d(ranks[n - 1], ranks[n]);
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t rk = k.rank(i), rl = l.rank(n - i);
            if (rk == 0 || rl == 0) continue;
            if (i >= 1 && k.rank(i - 1) > 0) {
                IntMatrix dk = k.boundary(i);
                for (std::size_t a = 0; a < k.rank(i - 1); ++a)
                    for (std::size_t ap = 0; ap < rk; ++ap) {
                        if (dk.at(a, ap) == 0) continue;
                        for (std::size_t b = 0; b < rl; ++b)
                            d.at(tgt_off[i - 1] + a * rl + b, src_off[i] + ap * rl + b) +=
                                dk.at(a, ap);
                    }
            }
            if (n - i >= 1 && l.rank(n - i - 1) > 0) {
                IntMatrix dl = l.boundary(n - i);
                BigInt sign = (i % 2 == 0) ? BigInt(1) : BigInt(-1);
                for (std::size_t a = 0; a < rk; ++a)
                    for (std::size_t b = 0; b < l.rank(n - i - 1); ++b)
                        for (std::size_t bp = 0; bp < rl; ++bp) {
                            if (dl.at(b, bp) == 0) continue;
                            d.at(tgt_off[i] + a * l.rank(n - i - 1) + b,
                                 src_off[i] + a * rl + bp) += sign * dl.at(b, bp);
                        }
            }
        }
        bds[n] = d;
    }
    return ChainComplex(ranks, bds);
}

ChainMap smash_maps(const ChainMap& f, const ChainMap& g) {
    ChainComplex s = smash(f.src(), g.src());
    ChainComplex t = smash(f.tgt(), g.tgt());
    std::size_t degs = std::max(s.degrees(), t.degrees());
    std::vector<IntMatrix> comps(degs);
    for (std::size_t n = 0; n < degs; ++n) {
        auto src_off = tensor_offsets(f.src(), g.src(), n);
        auto tgt_off = tensor_offsets(f.tgt(), g.tgt(), n);
        IntMatrix c(t.rank(n), s.rank(n));
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t rka = f.src().rank(i), rla = g.src().rank(n - i);
            std::size_t rkb = f.tgt().rank(i), rlb = g.tgt().rank(n - i);
            if (rka * rla == 0 || rkb * rlb == 0) continue;
            IntMatrix fi = f.component(i), gi = g.component(n - i);
            for (std::size_t a = 0; a < rkb; ++a)
                for (std::size_t ap = 0; ap < rka; ++ap) {
                    if (fi.at(a, ap) == 0) continue;
                    for (std::size_t b = 0; b < rlb; ++b)
                        for (std::size_t bp = 0; bp < rla; ++bp) {
                            if (gi.at(b, bp) == 0) continue;
                            c.at(tgt_off[i] + a * rlb + b, src_off[i] + ap * rla + bp) +=
                                fi.at(a, ap) * gi.at(b, bp);
                        }
                }
        }
        comps[n] = c;
    }
    return ChainMap(s, t, comps);
}

SuspensionData suspend(const ChainComplex& k) {
    ChainComplex s = smash(sphere(1), k);
    std::vector<IntMatrix> tw(s.degrees());
    for (std::size_t n = 0; n < s.degrees(); ++n)
        tw[n] = IntMatrix::identity(s.rank(n)).scaled(BigInt(-1));
    return SuspensionData{s, ChainMap(s, s, tw)};
}

ChainMap suspend_map(const ChainMap& f) { return smash_maps(ChainMap::identity(sphere(1)), f); }

ConeData mapping_cone(const ChainMap& f) {
    const ChainComplex& k = f.src();
    const ChainComplex& l = f.tgt();
    std::size_t degs = std::max(l.degrees(), k.degrees() + 1);
    std::vector<std::size_t> ranks(degs);
    std::vector<IntMatrix> bds(degs);
    for (std::size_t n = 0; n < degs; ++n) ranks[n] = l.rank(n) + (n >= 1 ? k.rank(n - 1) : 0);
    for (std::size_t n = 1; n < degs; ++n) {
        IntMatrix d(ranks[n - 1], ranks[n]);
        IntMatrix dl = l.boundary(n);
        for (std::size_t i = 0; i < dl.rows(); ++i)
            for (std::size_t j = 0; j < dl.cols(); ++j) d.at(i, j) = dl.at(i, j);
        IntMatrix fc = f.component(n - 1);
        for (std::size_t i = 0; i < fc.rows(); ++i)
            for (std::size_t j = 0; j < fc.cols(); ++j) d.at(i, l.rank(n) + j) = fc.at(i, j);
        if (n >= 2) {
            IntMatrix dk = k.boundary(n - 1);
            for (std::size_t i = 0; i < dk.rows(); ++i)
                for (std::size_t j = 0; j < dk.cols(); ++j)
                    d.at(l.rank(n - 1) + i, l.rank(n) + j) = -dk.at(i, j);
        }
        bds[n] = d;
    }
    ChainComplex cone(ranks, bds);

    ChainComplex sk = suspend(k).suspension;
    std::size_t all = std::max(degs, sk.degrees());
    std::vector<IntMatrix> incl(degs), coll(all);
    for (std::size_t n = 0; n < degs; ++n) {
        IntMatrix a(cone.rank(n), l.rank(n));
        for (std::size_t i = 0; i < l.rank(n); ++i) a.at(i, i) = 1;
        incl[n] = a;
    }
    for (std::size_t n = 0; n < all; ++n) {
        IntMatrix b(sk.rank(n), cone.rank(n));
        std::size_t shifted = n >= 1 ? k.rank(n - 1) : 0;
        for (std::size_t i = 0; i < shifted && i < sk.rank(n); ++i) b.at(i, l.rank(n) + i) = 1;
        coll[n] = b;
    }
    return ConeData{cone, ChainMap(l, cone, incl), ChainMap(cone, sk, coll)};
}

HomotopyPushoutData homotopy_pushout(const ChainMap& f, const ChainMap& g) {
    if (f.src() != g.src()) throw std::invalid_argument("homotopy pushout: shared source required");
    const ChainComplex& k = f.src();
    const ChainComplex& l0 = f.tgt();
    const ChainComplex& l1 = g.tgt();
    std::size_t degs = std::max(std::max(l0.degrees(), l1.degrees()), k.degrees() + 1);
    std::vector<std::size_t> ranks(degs);
    std::vector<IntMatrix> bds(degs);
    for (std::size_t n = 0; n < degs; ++n)
        ranks[n] = l0.rank(n) + l1.rank(n) + (n >= 1 ? k.rank(n - 1) : 0);
    for (std::size_t n = 1; n < degs; ++n) {
        IntMatrix d(ranks[n - 1], ranks[n]);
        auto put = [&d](const IntMatrix& m, std::size_t ro, std::size_t co, const BigInt& s) {
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) d.at(ro + i, co + j) += s * m.at(i, j);
        };
        put(l0.boundary(n), 0, 0, 1);
        put(l1.boundary(n), l0.rank(n - 1), l0.rank(n), 1);
        put(f.component(n - 1), 0, l0.rank(n) + l1.rank(n), 1);
        put(g.component(n - 1), l0.rank(n - 1), l0.rank(n) + l1.rank(n), -1);
        if (n >= 2)
            put(k.boundary(n - 1), l0.rank(n - 1) + l1.rank(n - 1), l0.rank(n) + l1.rank(n), -1);
        bds[n] = d;
    }
    ChainComplex m(ranks, bds);
    std::vector<IntMatrix> j0(degs), j1(degs);
    for (std::size_t n = 0; n < degs; ++n) {
        IntMatrix a(m.rank(n), l0.rank(n)), b(m.rank(n), l1.rank(n));
        for (std::size_t i = 0; i < l0.rank(n); ++i) a.at(i, i) = 1;
        for (std::size_t i = 0; i < l1.rank(n); ++i) b.at(l0.rank(n) + i, i) = 1;
        j0[n] = a;
        j1[n] = b;
    }
    return HomotopyPushoutData{m, ChainMap(l0, m, j0), ChainMap(l1, m, j1)};
}

SpaceCospan SpaceCospan::make(ChainMap f0, ChainMap f1) {
    if (f0.tgt() != f1.tgt()) throw std::invalid_argument("cospan legs must share the apex");
    return SpaceCospan{f0.src(), f0.tgt(), f1.src(), std::move(f0), std::move(f1)};
}

SpaceCospan SpaceCospan::identity(const ChainComplex& k) {
    return make(ChainMap::identity(k), ChainMap::identity(k));
}

SpaceCospan SpaceCospan::closed(const ChainComplex& l) {
    return make(ChainMap::zero(ChainComplex::zero(), l), ChainMap::zero(ChainComplex::zero(), l));
}

SpaceCospan SpaceCospan::dagger() const { return make(f1, f0); }

std::uint64_t SpaceCospan::digest() const { return f0.digest() * 1315423911ull + f1.digest(); }

TSigmaData t_sigma(const SpaceCospan& c) {
    WedgeData w = wedge(c.k0, c.k1);
    std::size_t degs = std::max(c.l.degrees(), w.wedge.degrees());
    std::vector<IntMatrix> comps(degs);
    for (std::size_t n = 0; n < degs; ++n) comps[n] = c.f0.component(n).hstack(c.f1.component(n));
    ChainMap joint(w.wedge, c.l, comps);
    ConeData cone = mapping_cone(joint);
    ChainMap p0 = compose(suspend_map(w.proj0), cone.collapse);
    ChainMap p1 = compose(suspend_map(w.proj1), cone.collapse);
    SuspensionData s0 = suspend(c.k0);
    return TSigmaData{cone.cone, compose(s0.twist, p0), p1};
}

SpaceCospan compose_space_cospans(const SpaceCospan& outer, const SpaceCospan& inner) {
    if (inner.k1 != outer.k0)
        throw std::invalid_argument("space cospans not composable: feet mismatch");
    HomotopyPushoutData hp = homotopy_pushout(inner.f1, outer.f0);
    return SpaceCospan::make(compose(hp.j0, inner.f0), compose(hp.j1, outer.f1));
}

SpaceCospan tensor_space_cospans(const SpaceCospan& a, const SpaceCospan& b) {
    return SpaceCospan::make(wedge_map(a.f0, b.f0), wedge_map(a.f1, b.f1));
}

SpaceCospan smash_cospan(const SpaceCospan& c, const ChainComplex& x) {
    ChainMap idx = ChainMap::identity(x);
    return SpaceCospan::make(smash_maps(c.f0, idx), smash_maps(c.f1, idx));
}

bool is_chain_triad(const Triad& tr) {
    if (compose(tr.k0_to_l, tr.t_to_k0) != compose(tr.k1_to_l, tr.t_to_k1)) return false;
    std::size_t degs = std::max(tr.l.degrees(), tr.t.degrees() + 1);
    for (std::size_t n = 0; n < degs; ++n) {
        IntMatrix u = tr.t_to_k0.component(n).vstack(tr.t_to_k1.component(n));
        IntMatrix v = tr.k0_to_l.component(n).hstack(tr.k1_to_l.component(n).scaled(BigInt(-1)));
        // u mono, v epi over Z, ker v = im u.
        if (exact::kernel_lattice(u).cols() != 0) return false;
        exact::SmithResult sv = exact::smith_normal_form(v);
        if (sv.rank != v.rows()) return false;
        for (std::size_t i = 0; i < sv.rank; ++i)
            if (sv.d.at(i, i) != 1) return false;
        IntMatrix kerv = exact::kernel_lattice(v);
        exact::SmithResult su = exact::smith_normal_form(u);
        for (std::size_t j = 0; j < kerv.cols(); ++j) {
            auto cvec = su.u.apply(kerv.col(j));
            for (std::size_t i = 0; i < cvec.size(); ++i) {
                if (i < su.rank) {
                    if (cvec[i] % su.d.at(i, i) != 0) return false;
                } else if (cvec[i] != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

Triad torus_cylinder_triad() {
    // T^2 = (b1 x S^1) u (b2 x S^1) glued along {p,q} x S^1; basepoint p.
    // Reduced cells of L: q; b1, b2, f_p, f_q; R1 = b1 x f, R2 = b2 x f.
    IntMatrix d1(1, 4);
    d1.at(0, 0) = 1;
    d1.at(0, 1) = -1;
    IntMatrix d2(4, 2);
    d2.at(2, 0) = -1;
    d2.at(3, 0) = 1;
    d2.at(2, 1) = 1;
    d2.at(3, 1) = -1;
    ChainComplex l({1, 4, 2}, {IntMatrix(0, 1), d1, d2});

    IntMatrix k0d1(1, 3);
    k0d1.at(0, 0) = 1;
    IntMatrix k0d2(3, 1);
    k0d2.at(1, 0) = -1;
    k0d2.at(2, 0) = 1;
    ChainComplex k0({1, 3, 1}, {IntMatrix(0, 1), k0d1, k0d2});

    IntMatrix k1d1(1, 3);
    k1d1.at(0, 0) = -1;
    IntMatrix k1d2(3, 1);
    k1d2.at(1, 0) = 1;
    k1d2.at(2, 0) = -1;
    ChainComplex k1({1, 3, 1}, {IntMatrix(0, 1), k1d1, k1d2});

    ChainComplex t({1, 2}, {IntMatrix(0, 1), IntMatrix(1, 2)});

    IntMatrix ti1(3, 2);
    ti1.at(1, 0) = 1;
    ti1.at(2, 1) = 1;
    ChainMap t_k0(t, k0, {IntMatrix::identity(1), ti1});
    ChainMap t_k1(t, k1, {IntMatrix::identity(1), ti1});

    IntMatrix m0_1(4, 3);
    m0_1.at(0, 0) = 1;
    m0_1.at(2, 1) = 1;
    m0_1.at(3, 2) = 1;
    IntMatrix m0_2(2, 1);
    m0_2.at(0, 0) = 1;
    ChainMap k0_l(k0, l, {IntMatrix::identity(1), m0_1, m0_2});

    IntMatrix m1_1(4, 3);
    m1_1.at(1, 0) = 1;
    m1_1.at(2, 1) = 1;
    m1_1.at(3, 2) = 1;
    IntMatrix m1_2(2, 1);
    m1_2.at(1, 0) = 1;
    ChainMap k1_l(k1, l, {IntMatrix::identity(1), m1_1, m1_2});

    return Triad{t, k0, k1, l, t_k0, t_k1, k0_l, k1_l};
}

}  // namespace hopfpi::space
