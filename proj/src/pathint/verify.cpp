#include "hopfpi/pathint/verify.hpp"

#include <functional>

#include "hopfpi/cat/cochain.hpp"
#include "hopfpi/hopf/tensors.hpp"
#include "hopfpi/pathint/sampler.hpp"
#include "hopfpi/pathint/theory.hpp"

namespace hopfpi::pathint {

using cat::Cochain1;
using cat::Cochain2;
using exact::BigInt;
using exact::Field;
using exact::FieldMatrix;
using exact::Scalar;
using finab::FinAbGroup;
using finab::GroupHom;
using finab::IntMatrix;
using hopf::Flavor;
using hopf::HopfMorphism;
using hopf::HopfObject;
using json = nlohmann::json;

namespace {

struct Report {
    json out;
    int passed = 0;
    std::vector<json> checks;

    Report(const std::string& suite, const VerifyConfig& cfg) {
        out["suite"] = suite;
        out["seed"] = cfg.seed;
        out["config"] = {{"samples", cfg.samples}, {"field", cfg.field},   {"group", cfg.group},
                         {"flavor", cfg.flavor},   {"q", cfg.q},           {"max_order", cfg.max_order}};
    }

    void check(const std::string& name, bool ok, const std::string& lhs = "",
               const std::string& rhs = "") {
        json c = {{"name", name}, {"status", ok ? "pass" : "fail"}};
        if (!lhs.empty()) c["lhs"] = lhs;
        if (!rhs.empty()) c["rhs"] = rhs;
        checks.push_back(c);
        if (ok) ++passed;
    }

    void bulk(const std::string& name, const cat::CheckReport& r) {
        json c = {{"name", name},
                  {"status", r.ok() ? "pass" : "fail"},
                  {"checked", r.checked}};
        if (!r.ok()) c["violations"] = r.violations;
        checks.push_back(c);
        if (r.ok()) ++passed;
    }

    json finish() {
        out["checks"] = checks;
        out["passed"] = passed;
        out["failed"] = static_cast<int>(checks.size()) - passed;
        out["ok"] = passed == static_cast<int>(checks.size());
        return out;
    }
};

FinAbGroup small_group(Rng& rng, const BigInt& max_order) {
    static const std::vector<std::vector<long>> pool = {
        {}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
    for (;;) {
        const auto& o = pool[rng.below(pool.size())];
        FinAbGroup g(std::vector<BigInt>(o.begin(), o.end()));
        if (g.order() <= max_order) return g;
    }
}

GroupHom random_hom(Rng& rng, const FinAbGroup& a, const FinAbGroup& b) {
    IntMatrix m(b.rank(), a.rank());
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) {
            BigInt step = b.orders()[i] / exact::gcd(b.orders()[i], a.orders()[j]);
            BigInt count = b.orders()[i] / step;
            m.at(i, j) = step * BigInt(static_cast<long>(rng.below(count.convert_to<std::size_t>())));
        }
    return GroupHom(a, b, m);
}

HopfMorphism as_hopf(Flavor fl, const GroupHom& rho) {
    if (fl == Flavor::GroupAlgebra)
        return hopf::make_morphism(HopfObject{rho.src(), fl}, HopfObject{rho.tgt(), fl}, rho);
    return hopf::make_morphism(HopfObject{rho.tgt(), fl}, HopfObject{rho.src(), fl}, rho);
}

cospan::HopfCospan random_hopf_cospan(Rng& rng, Flavor fl, const BigInt& max_order) {
    FinAbGroup apex = small_group(rng, max_order);
    FinAbGroup f0 = small_group(rng, max_order), f1 = small_group(rng, max_order);
    if (fl == Flavor::GroupAlgebra)
        return cospan::HopfCospan::make(as_hopf(fl, random_hom(rng, f0, apex)),
                                        as_hopf(fl, random_hom(rng, f1, apex)));
    return cospan::HopfCospan::make(as_hopf(fl, random_hom(rng, apex, f0)),
                                    as_hopf(fl, random_hom(rng, apex, f1)));
}

cospan::HopfSpan random_hopf_span(Rng& rng, Flavor fl, const BigInt& max_order) {
    FinAbGroup apex = small_group(rng, max_order);
    FinAbGroup f0 = small_group(rng, max_order), f1 = small_group(rng, max_order);
    if (fl == Flavor::GroupAlgebra)
        return cospan::HopfSpan::make(as_hopf(fl, random_hom(rng, apex, f0)),
                                      as_hopf(fl, random_hom(rng, apex, f1)));
    return cospan::HopfSpan::make(as_hopf(fl, random_hom(rng, f0, apex)),
                                  as_hopf(fl, random_hom(rng, f1, apex)));
}

OrdinaryFamily family_from(const VerifyConfig& cfg) {
    OrdinaryFamily fam;
    fam.flavor = hopf::parse_flavor(cfg.flavor);
    fam.coefficients = FinAbGroup::parse(cfg.group);
    fam.field = Field::parse(cfg.field);
    return fam;
}

// pi_1 data of the builtin closed manifolds: free rank and torsion orders.
struct Pi1 {
    int free_rank;
    std::vector<long> torsion;
};

std::optional<Pi1> pi1_of(const std::string& manifold) {
    if (manifold == "circle") return Pi1{1, {}};
    if (manifold == "torus") return Pi1{2, {}};
    if (manifold == "klein") return Pi1{1, {2}};
    if (manifold == "rp2") return Pi1{0, {2}};
    if (manifold == "s2" || manifold == "s3") return Pi1{0, {}};
    return std::nullopt;
}

BigInt hom_count(const Pi1& p, const FinAbGroup& g) {
    BigInt count = 1;
    for (int i = 0; i < p.free_rank; ++i) count *= g.order();
    for (long m : p.torsion) {
        BigInt tors = 1;
        for (const auto& d : g.orders()) tors *= exact::gcd(BigInt(m), d);
        count *= tors;
    }
    return count;
}

}  // namespace

namespace {

json suite_oracle(const VerifyConfig& cfg) {
    Report rep("oracle", cfg);
    Rng rng(cfg.seed);
    BigInt max_order(cfg.max_order);
    Field fields[2] = {Field::rationals(), Field::parse("F5")};

    static const std::vector<std::vector<long>> pool = {
        {}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
    std::vector<FinAbGroup> groups;
    for (const auto& o : pool) {
        FinAbGroup g(std::vector<BigInt>(o.begin(), o.end()));
        if (g.order() <= max_order) groups.push_back(g);
    }

    // Generated family: zero, identity, and every single-entry generator hom.
    std::vector<GroupHom> family;
    for (const auto& a : groups)
        for (const auto& b : groups) {
            family.push_back(GroupHom::zero(a, b));
            if (a == b) family.push_back(GroupHom::identity(a));
            for (std::size_t i = 0; i < b.rank(); ++i)
                for (std::size_t j = 0; j < a.rank(); ++j) {
                    BigInt step = b.orders()[i] / exact::gcd(b.orders()[i], a.orders()[j]);
                    if (step == b.orders()[i]) continue;  // only the zero multiple is defined
                    IntMatrix m(b.rank(), a.rank());
                    m.at(i, j) = step;
                    family.push_back(GroupHom(a, b, m));
                }
        }
    std::vector<GroupHom> randoms;
    for (int i = 0; i < 200; ++i) {
        FinAbGroup a = small_group(rng, max_order), b = small_group(rng, max_order);
        randoms.push_back(random_hom(rng, a, b));
    }

    bool tensors_ok = true;
    for (const auto& g : groups)
        for (Flavor fl : {Flavor::GroupAlgebra, Flavor::FunctionAlgebra})
            for (const Field& k : fields) {
                if (!hopf::has_finite_volume(HopfObject{g, fl}, k)) continue;
                try {
                    hopf::validate_tensors(hopf::materialize(HopfObject{g, fl}, k));
                } catch (const std::exception&) {
                    tensors_ok = false;
                }
            }
    rep.check("structure tensors satisfy all Hopf axioms", tensors_ok);

    auto run_laws = [&](const std::vector<GroupHom>& homs, const std::string& label) {
        int bad_section = 0, bad_retract = 0, bad_bracket = 0, bad_hopfmap = 0, n = 0;
        for (const auto& rho : homs)
            for (Flavor fl : {Flavor::GroupAlgebra, Flavor::FunctionAlgebra}) {
                HopfMorphism xi = as_hopf(fl, rho);
                for (const Field& k : fields) {
                    if (!hopf::has_finite_volume(xi.src, k) || !hopf::has_finite_volume(xi.tgt, k))
                        continue;
                    FieldMatrix m = hopf::materialize_hom(xi, k);
                    FieldMatrix mu = hopf::integral_matrix(xi, k);
                    std::size_t ds = xi.src.dim().convert_to<std::size_t>();
                    std::size_t dt = xi.tgt.dim().convert_to<std::size_t>();
                    if (hopf::is_epi(xi) && m * mu != FieldMatrix::identity(k, dt)) ++bad_section;
                    if (hopf::is_mono(xi) && mu * m != FieldMatrix::identity(k, ds)) ++bad_retract;
                    auto ts = hopf::materialize(xi.src, k);
                    auto tt = hopf::materialize(xi.tgt, k);
                    if (hopf::bracket(xi, k) != (tt.cointegral * m * ts.integral).at(0, 0))
                        ++bad_bracket;
                    if (m * ts.unit != tt.unit || tt.counit * m != ts.counit) ++bad_hopfmap;
                    ++n;
                }
            }
        rep.check(label + ": section law (epi => xi o mu = id)", bad_section == 0,
                  std::to_string(n) + " homs checked", std::to_string(bad_section) + " violations");
        rep.check(label + ": retract law (mono => mu o xi = id)", bad_retract == 0);
        rep.check(label + ": bracket closed form equals the materialized value",
                  bad_bracket == 0);
        rep.check(label + ": unit/counit preservation", bad_hopfmap == 0);
    };
    run_laws(family, "generated family");
    run_laws(randoms, "random homs");

    // Full multiplicative/comultiplicative Hopf-map law on a smaller sample.
    {
        int bad = 0;
        for (int i = 0; i < 40; ++i) {
            const GroupHom& rho = randoms[rng.below(randoms.size())];
            Flavor fl = rng.below(2) ? Flavor::GroupAlgebra : Flavor::FunctionAlgebra;
            HopfMorphism xi = as_hopf(fl, rho);
            for (const Field& k : fields) {
                if (!hopf::has_finite_volume(xi.src, k) || !hopf::has_finite_volume(xi.tgt, k))
                    continue;
                FieldMatrix m = hopf::materialize_hom(xi, k);
                auto ts = hopf::materialize(xi.src, k);
                auto tt = hopf::materialize(xi.tgt, k);
                if (m * ts.mult != tt.mult * m.kron(m)) ++bad;
                if (tt.comult * m != m.kron(m) * ts.comult) ++bad;
            }
        }
        rep.check("sampled homs preserve multiplication and comultiplication", bad == 0);
    }

    // Composition rule mu_xi o mu_xi' = <d(xi', xi)> mu_{xi' o xi}.
    {
        int bad = 0, n = 0;
        for (int i = 0; i < std::max(cfg.samples, 200); ++i) {
            FinAbGroup a = small_group(rng, max_order), b = small_group(rng, max_order),
                       c = small_group(rng, max_order);
            GroupHom r1 = random_hom(rng, a, b), r2 = random_hom(rng, b, c);
            for (Flavor fl : {Flavor::GroupAlgebra, Flavor::FunctionAlgebra}) {
                HopfMorphism xi, xi2;
                if (fl == Flavor::GroupAlgebra) {
                    xi = as_hopf(fl, r1);
                    xi2 = as_hopf(fl, r2);
                } else {
                    xi = as_hopf(fl, r2);
                    xi2 = as_hopf(fl, r1);
                }
                for (const Field& k : fields) {
                    if (!hopf::has_finite_volume(xi.src, k) || !hopf::has_finite_volume(xi.tgt, k) ||
                        !hopf::has_finite_volume(xi2.tgt, k))
                        continue;
                    FieldMatrix lhs = hopf::integral_matrix(xi, k) * hopf::integral_matrix(xi2, k);
                    Scalar lambda = hopf::composition_defect(xi2, xi, k);
                    FieldMatrix rhs =
                        hopf::integral_matrix(hopf::compose(xi2, xi), k).scaled(lambda);
                    if (lhs != rhs) ++bad;
                    ++n;
                }
            }
        }
        rep.check("composition rule with connecting defect", bad == 0, std::to_string(n) + " pairs",
                  std::to_string(bad) + " violations");
    }

    // Volume multiplicativity over kernel/cokernel short exact sequences.
    {
        int bad = 0;
        for (int i = 0; i < 60; ++i) {
            const GroupHom& rho = randoms[rng.below(randoms.size())];
            for (Flavor fl : {Flavor::GroupAlgebra, Flavor::FunctionAlgebra}) {
                HopfMorphism xi = as_hopf(fl, rho);
                Field Q = Field::rationals();
                auto ker = hopf::hopf_kernel(xi);
                auto cok = hopf::hopf_cokernel(xi);
                auto im = hopf::hopf_image(xi);
                if (hopf::inverse_volume(xi.src, Q) !=
                    hopf::inverse_volume(ker.object, Q) * hopf::inverse_volume(im.object, Q))
                    ++bad;
                if (hopf::inverse_volume(xi.tgt, Q) !=
                    hopf::inverse_volume(im.object, Q) * hopf::inverse_volume(cok.object, Q))
                    ++bad;
            }
        }
        rep.check("inverse volume is multiplicative over short exact sequences", bad == 0);
    }
    return rep.finish();
}

json suite_integrals(const VerifyConfig& cfg) {
    Report rep("integrals", cfg);
    Rng rng(cfg.seed);
    BigInt max_order(8);
    Field fields[2] = {Field::rationals(), Field::parse("F5")};

    {
        int bad = 0, n = 0;
        while (n < std::max(cfg.samples, 100)) {
            for (Flavor fl : {Flavor::GroupAlgebra, Flavor::FunctionAlgebra}) {
                auto c = random_hopf_cospan(rng, fl, max_order);
                HopfObject pad{small_group(rng, max_order), fl};
                auto ext = cospan::mono_extend(c, pad);
                for (const Field& k : fields) {
                    if (!hopf::has_finite_volume(ext.apex, k) ||
                        !hopf::has_finite_volume(c.foot0, k) ||
                        !hopf::has_finite_volume(c.foot1, k) ||
                        !hopf::has_finite_volume(c.apex, k))
                        continue;
                    if (!cospan::integrate_cospan(c, k).same_matrix(
                            cospan::integrate_cospan(ext, k)))
                        ++bad;
                }
                if (!cospan::equivalent(c, ext)) ++bad;
                ++n;
            }
        }
        rep.check("integral invariance under apex monomorphisms", bad == 0,
                  std::to_string(n) + " cospans", std::to_string(bad) + " violations");
    }
    {
        int bad = 0, n = 0;
        while (n < std::max(cfg.samples, 100)) {
            for (Flavor fl : {Flavor::GroupAlgebra, Flavor::FunctionAlgebra}) {
                auto v = random_hopf_span(rng, fl, max_order);
                auto t = cospan::transpose(v);
                for (const Field& k : fields) {
                    if (!hopf::has_finite_volume(v.apex, k) ||
                        !hopf::has_finite_volume(v.foot0, k) ||
                        !hopf::has_finite_volume(v.foot1, k) ||
                        !hopf::has_finite_volume(t.apex, k))
                        continue;
                    if (!cospan::integrate_span(v, k).same_matrix(cospan::integrate_cospan(t, k)))
                        ++bad;
                }
                ++n;
            }
        }
        rep.check("integral along a span equals the integral along its transpose", bad == 0,
                  std::to_string(n) + " spans", std::to_string(bad) + " violations");
    }
    {
        int bad = 0;
        for (int i = 0; i < cfg.samples; ++i) {
            for (Flavor fl : {Flavor::GroupAlgebra, Flavor::FunctionAlgebra}) {
                auto inner = random_hopf_cospan(rng, fl, max_order);
                FinAbGroup apex2 = small_group(rng, max_order), f2 = small_group(rng, max_order);
                cospan::HopfCospan outer =
                    fl == Flavor::GroupAlgebra
                        ? cospan::HopfCospan::make(
                              as_hopf(fl, random_hom(rng, inner.foot1.group, apex2)),
                              as_hopf(fl, random_hom(rng, f2, apex2)))
                        : cospan::HopfCospan::make(
                              as_hopf(fl, random_hom(rng, apex2, inner.foot1.group)),
                              as_hopf(fl, random_hom(rng, apex2, f2)));
                for (const Field& k : fields) {
                    try {
                        auto cc = cospan::compose_cospans(outer, inner, k);
                        FieldMatrix lhs = *cospan::integrate_cospan(outer, k).matrix *
                                          *cospan::integrate_cospan(inner, k).matrix;
                        FieldMatrix rhs =
                            cospan::integrate_cospan(cc.cospan, k).mat().scaled(cc.defect);
                        if (lhs != rhs) ++bad;
                    } catch (const exact::NotFiniteVolume&) {
                        // vacuous over this field
                    }
                }
            }
        }
        rep.check("cospan composition matches its defect on matrices", bad == 0);
    }
    {
        // Pivotal dimension and zigzag for the pinned objects.
        std::vector<HopfObject> objs = {
            HopfObject{FinAbGroup({BigInt(2)}), Flavor::GroupAlgebra},
            HopfObject{FinAbGroup({BigInt(3)}), Flavor::GroupAlgebra},
            HopfObject{FinAbGroup({BigInt(4)}), Flavor::GroupAlgebra},
            HopfObject{FinAbGroup({BigInt(2), BigInt(2)}), Flavor::FunctionAlgebra}};
        int bad = 0;
        for (const auto& a : objs)
            for (const Field& k : fields) {
                auto d = cospan::duality(a, k);
                auto dim = cospan::compose_ck(d.ev, d.coev);
                if (dim.mat().at(0, 0) != Scalar::from_integer(k, a.dim())) ++bad;
                auto id_a = cospan::identity_ck(a, k);
                std::size_t n = a.dim().convert_to<std::size_t>();
                if (*cospan::tensor_ck(d.ev, id_a).matrix *
                        *cospan::tensor_ck(id_a, d.coev).matrix !=
                    FieldMatrix::identity(k, n))
                    ++bad;
                if (*cospan::tensor_ck(id_a, d.ev).matrix *
                        *cospan::tensor_ck(d.coev, id_a).matrix !=
                    FieldMatrix::identity(k, n))
                    ++bad;
            }
        rep.check("zigzag identities and pivotal dimension e_A o i_A = dim A", bad == 0);
    }
    return rep.finish();
}

json suite_inversion(const VerifyConfig& cfg) {
    Report rep("inversion", cfg);
    Rng rng(cfg.seed);
    OrdinaryFamily fam = family_from(cfg);
    SpaceCorpus corpus;
    int q = cfg.q;

    std::vector<std::pair<space::SpaceCospan, space::SpaceCospan>> pairs;
    pairs.push_back(heegaard_pair());
    for (int i = 1; i < cfg.samples; ++i) pairs.push_back(corpus.random_pair(rng));

    int bad1 = 0, bad2 = 0, bad3 = 0, badx = 0;
    for (const auto& [inner, outer] : pairs) {
        auto tq = fam.theory(q);
        Scalar wh = omega_hat(tq, outer, inner);
        Scalar wc = omega_check(tq, outer, inner);
        Cochain1 th = [&](const space::SpaceCospan& c) { return theta(tq, c); };
        if (wh * wc != cat::delta1(th, outer, inner)) ++bad1;
        // Inversion formulae 2 and 3 through the suspension identification.
        Scalar wh_low = omega_hat(fam.theory(q - 1), outer, inner);
        Cochain1 th_low = [&](const space::SpaceCospan& c) { return theta(fam.theory(q - 1), c); };
        if (wh * wh_low != cat::delta1(th, outer, inner)) ++bad2;
        Scalar wc_low = omega_check(fam.theory(q - 1), outer, inner);
        if (wc * wc_low != cat::delta1(th_low, outer, inner)) ++bad3;
        // Degree exchange.
        if (omega_check(fam.theory(q + 1), outer, inner) != wh) ++badx;
    }
    rep.check("inversion formula 1: omega_hat * omega_check = d theta", bad1 == 0,
              std::to_string(pairs.size()) + " pairs", std::to_string(bad1) + " violations");
    rep.check("inversion formula 2 under the suspension identification", bad2 == 0);
    rep.check("inversion formula 3 under the suspension identification", bad3 == 0);
    rep.check("degree exchange: omega_check at q+1 equals omega_hat at q", badx == 0);

    {
        // pi_check(q+1) equals pi_hat(q) under the explicit suspension iso.
        int bad = 0, n = 0;
        for (int i = 0; i < cfg.samples; ++i) {
            space::SpaceCospan c = corpus.random_cospan(rng);
            auto conj = suspension_conjugators(fam, q, c);
            FieldMatrix lhs = *pi_check(fam.theory(q + 1), c).matrix * conj.p0;
            FieldMatrix rhs = conj.p1 * *pi_hat(fam.theory(q), c).matrix;
            if (lhs != rhs) ++bad;
            ++n;
        }
        rep.check("pi_check at q+1 matches pi_hat at q through the suspension isomorphism",
                  bad == 0, std::to_string(n) + " cospans", std::to_string(bad) + " violations");
    }
    return rep.finish();
}

json suite_cocycle(const VerifyConfig& cfg) {
    Report rep("cocycle", cfg);
    OrdinaryFamily fam = family_from(cfg);
    SpaceCorpus corpus;
    auto tq = fam.theory(cfg.q);

    Cochain2 wh = [&](const space::SpaceCospan& outer, const space::SpaceCospan& inner) {
        return omega_hat(tq, outer, inner);
    };
    Cochain2 wc = [&](const space::SpaceCospan& outer, const space::SpaceCospan& inner) {
        return omega_check(tq, outer, inner);
    };
    {
        Rng rng(cfg.seed);
        rep.bulk("omega_hat is a 2-cocycle on sampled triples",
                 cat::cocycle_check(wh, corpus, rng, cfg.samples));
    }
    {
        Rng rng(cfg.seed);
        rep.bulk("omega_check is a 2-cocycle on sampled triples",
                 cat::cocycle_check(wc, corpus, rng, cfg.samples));
    }
    {
        Rng rng(cfg.seed);
        rep.bulk("omega_hat is normalized", cat::normalized_check(wh, corpus, rng, cfg.samples));
    }
    {
        Rng rng(cfg.seed);
        rep.bulk("omega_check is normalized", cat::normalized_check(wc, corpus, rng, cfg.samples));
    }
    {
        Rng rng(cfg.seed);
        rep.bulk("omega_hat is monoidal", cat::monoidal_check(wh, corpus, rng, cfg.samples / 2 + 1));
    }
    {
        Rng rng(cfg.seed);
        rep.bulk("omega_check is monoidal",
                 cat::monoidal_check(wc, corpus, rng, cfg.samples / 2 + 1));
    }
    {
        // delta o delta = 1 for the canonical 1-cochain theta.
        Rng rng(cfg.seed);
        Cochain1 th = [&](const space::SpaceCospan& c) { return theta(tq, c); };
        Cochain2 dth = [&](const space::SpaceCospan& outer, const space::SpaceCospan& inner) {
            return cat::delta1(th, outer, inner);
        };
        rep.bulk("delta(delta theta) vanishes on sampled triples",
                 cat::cocycle_check(dth, corpus, rng, cfg.samples));
        int bad = 0;
        Rng rng2(cfg.seed + 1);
        for (int i = 0; i < cfg.samples; ++i) {
            space::SpaceCospan c = corpus.random_cospan(rng2);
            if (!theta(tq, space::SpaceCospan::identity(c.k0)).is_one()) ++bad;
        }
        rep.check("theta is normalized on identity cospans", bad == 0);
    }
    return rep.finish();
}

json suite_lifts(const VerifyConfig& cfg) {
    Report rep("lifts", cfg);
    Rng rng(cfg.seed);
    OrdinaryFamily fam = family_from(cfg);
    SpaceCorpus corpus;
    int q = cfg.q;

    std::vector<std::pair<space::SpaceCospan, space::SpaceCospan>> pairs;
    pairs.push_back(heegaard_pair());
    for (int i = 1; i < cfg.samples; ++i) pairs.push_back(corpus.random_pair(rng));

    {
        int bad = 0;
        auto tq = fam.theory(q);
        for (const auto& [inner, outer] : pairs) {
            Scalar wh = omega_hat(tq, outer, inner);
            Cochain1 th = [&](const space::SpaceCospan& c) { return theta_leq(fam, q, c); };
            if (wh != cat::delta1(th, outer, inner)) ++bad;
        }
        rep.check("omega_hat equals the coboundary of the alternating theta product", bad == 0,
                  std::to_string(pairs.size()) + " pairs", std::to_string(bad) + " violations");
    }
    {
        int bad = 0;
        for (const auto& [inner, outer] : pairs) {
            auto zo = lift_ordinary_Z(fam, q, outer);
            auto zi = lift_ordinary_Z(fam, q, inner);
            auto zg = lift_ordinary_Z(fam, q, space::compose_space_cospans(outer, inner));
            if (zo.mat() * zi.mat() != zg.mat()) ++bad;
        }
        rep.check("the lifted ordinary theory preserves composition exactly", bad == 0);
    }
    {
        int bad = 0;
        auto tq = fam.theory(q);
        for (const auto& [inner, outer] : pairs) {
            auto zo = lift_tensor_Z(tq, outer);
            auto zi = lift_tensor_Z(tq, inner);
            auto zg = lift_tensor_Z(tq, space::compose_space_cospans(outer, inner));
            if (zo.mat() * zi.mat() != zg.mat()) ++bad;
        }
        rep.check("the lifted tensor theory preserves composition exactly", bad == 0);
    }
    {
        int bad = 0;
        auto tq = fam.theory(q);
        for (const auto& l : corpus.spaces()) {
            auto z = lift_tensor_Z(tq, space::SpaceCospan::closed(l));
            Scalar expect = Scalar::from_integer(fam.field, space::brown_eval(tq, l).dim());
            if (z.mat().at(0, 0) != expect) ++bad;
        }
        rep.check("closed tensor-lift values equal dim E(L)", bad == 0);
    }
    {
        // Heegaard composition: defect 1/|G| and strict functoriality.
        auto [inner, outer] = heegaard_pair();
        auto tq = fam.theory(1);
        Scalar wh = omega_hat(tq, outer, inner);
        Scalar expect = Scalar::integer_inverse(fam.field, fam.coefficients.order());
        rep.check("heegaard obstruction equals 1/|G|", wh == expect, wh.str(), expect.str());
        Scalar closed = closed_invariant(fam, 1, space::compose_space_cospans(outer, inner).l);
        rep.check("heegaard composite reproduces the closed three-sphere value",
                  closed == expect, closed.str(), expect.str());
    }
    {
        // Mapping-class strictness: theta = 1 and Z equals the induced map.
        int bad = 0;
        for (const char* name : {"mcg_neg_s1", "mcg_swap_s1s1"}) {
            space::SpaceCospan c = named_cospan(name);
            auto tq = fam.theory(q);
            if (!theta(tq, c).is_one()) ++bad;
            if (!theta_leq(fam, q, c).is_one()) ++bad;
            auto z = lift_ordinary_Z(fam, q, c);
            FieldMatrix induced =
                hopf::materialize_hom(space::brown_induced(tq, c.f0), fam.field);
            if (z.mat() != induced) ++bad;
        }
        rep.check("mapping-class cospans evaluate strictly to the induced maps", bad == 0);
    }
    {
        // Dijkgraaf-Witten table over Q at q = 1, function flavor.
        struct Row {
            const char* manifold;
            const char* group;
            const char* expect;
        };
        const Row rows[] = {{"circle", "Z/2", "1"}, {"torus", "Z/2", "2"},  {"klein", "Z/2", "2"},
                            {"klein", "Z/3", "1"},  {"rp2", "Z/2", "1"},    {"rp2", "Z/3", "1/3"},
                            {"s3", "Z/2", "1/2"}};
        int bad = 0;
        for (const auto& row : rows) {
            OrdinaryFamily f{Flavor::FunctionAlgebra, FinAbGroup::parse(row.group),
                             Field::rationals()};
            Scalar z = closed_invariant(f, 1, space::manifold_plus(row.manifold));
            auto p = pi1_of(row.manifold);
            Scalar tab = Scalar(Field::rationals(),
                                exact::Rational(hom_count(*p, f.coefficients)) /
                                    exact::Rational(f.coefficients.order()));
            if (z.str() != row.expect || z != tab) ++bad;
        }
        rep.check("Dijkgraaf-Witten values match the pi_1 tabulation", bad == 0);
    }
    return rep.finish();
}

json suite_dimred(const VerifyConfig& cfg) {
    Report rep("dimred", cfg);
    Rng rng(cfg.seed);
    OrdinaryFamily fam = family_from(cfg);
    SpaceCorpus corpus;
    auto tq = fam.theory(cfg.q);

    {
        int bad = 0;
        for (const auto& k : corpus.spaces()) {
            BigInt lhs = space::brown_eval(tq, space::smash(k, space::circle_plus())).dim();
            BigInt rhs = space::brown_eval(tq, k).dim() *
                         space::brown_eval(tq, space::suspend(k).suspension).dim();
            if (lhs != rhs) ++bad;
        }
        rep.check("dim E(K ^ T+) = dim E(K) dim E(SK) on the corpus", bad == 0);
    }
    {
        int bad = 0;
        std::vector<std::pair<space::SpaceCospan, space::SpaceCospan>> pairs;
        pairs.push_back(heegaard_pair());
        for (int i = 1; i < cfg.samples; ++i) pairs.push_back(corpus.random_pair(rng));
        Cochain1 th = [&](const space::SpaceCospan& c) { return theta(tq, c); };
        for (const auto& [inner, outer] : pairs) {
            Scalar w = omega_reduced(tq, outer, inner);
            if (w != cat::delta1(th, outer, inner)) ++bad;
        }
        rep.check("omega of the reduced theory equals the coboundary of theta", bad == 0,
                  std::to_string(pairs.size()) + " pairs", std::to_string(bad) + " violations");
        // Lift of the reduced theory is functorial.
        int bad2 = 0;
        auto z_red = [&](const space::SpaceCospan& c) {
            return cospan::scale_ck(pi_hat_reduced(tq, c), theta(tq, c).inverse());
        };
        for (const auto& [inner, outer] : pairs) {
            auto zo = z_red(outer), zi = z_red(inner);
            auto zg = z_red(space::compose_space_cospans(outer, inner));
            if (zo.mat() * zi.mat() != zg.mat()) ++bad2;
        }
        rep.check("the lifted reduced theory preserves composition exactly", bad2 == 0);
    }
    {
        int bad = 0;
        Rng rng2(cfg.seed + 13);
        for (int i = 0; i < cfg.samples / 4 + 1; ++i) {
            space::SpaceCospan c = corpus.random_cospan(rng2);
            space::SpaceCospan idc = space::SpaceCospan::identity(c.k0);
            auto m = pi_hat_reduced(tq, idc);
            std::size_t n = m.mat().rows();
            if (m.mat() != FieldMatrix::identity(fam.field, n)) ++bad;
        }
        rep.check("reduced theory sends identity cospans to identities", bad == 0);
    }
    return rep.finish();
}

json suite_char2(const VerifyConfig& cfg) {
    Report rep("char2", cfg);
    Rng rng(cfg.seed);
    SpaceCorpus corpus;

    OrdinaryFamily f2fam{hopf::parse_flavor(cfg.flavor), FinAbGroup::parse(cfg.group),
                         Field::parse("F2")};
    if (f2fam.coefficients.order() % 2 == 0)
        throw std::invalid_argument("char2 suite needs an odd coefficient group");
    auto t2 = f2fam.theory(cfg.q);

    std::vector<std::pair<space::SpaceCospan, space::SpaceCospan>> pairs;
    pairs.push_back(heegaard_pair());
    for (int i = 1; i < cfg.samples; ++i) pairs.push_back(corpus.random_pair(rng));

    int bad = 0;
    for (const auto& [inner, outer] : pairs) {
        if (!omega_hat(t2, outer, inner).is_one()) ++bad;
        if (!omega_check(t2, outer, inner).is_one()) ++bad;
    }
    rep.check("every obstruction value over F2 equals 1", bad == 0,
              std::to_string(pairs.size()) + " pairs", std::to_string(bad) + " violations");

    OrdinaryFamily qfam{f2fam.flavor, f2fam.coefficients, Field::rationals()};
    auto tq = qfam.theory(cfg.q);
    int nontrivial = 0;
    for (const auto& [inner, outer] : pairs) {
        if (!omega_hat(tq, outer, inner).is_one()) ++nontrivial;
    }
    rep.check("over Q at least one sampled obstruction differs from 1", nontrivial > 0,
              std::to_string(nontrivial) + " nontrivial samples");
    return rep.finish();
}

json suite_pairing(const VerifyConfig& cfg) {
    Report rep("pairing", cfg);
    const char* manifolds[] = {"circle", "torus"};
    const char* groups[] = {"Z/2", "Z/3"};
    int bad_lifted = 0, bad_unlifted = 0;
    for (const char* m : manifolds)
        for (const char* g : groups) {
            OrdinaryFamily fam{Flavor::FunctionAlgebra, FinAbGroup::parse(g), Field::rationals()};
            space::ChainComplex k = space::manifold_plus(m);
            FieldMatrix form = pairing(fam, 1, k);
            auto t1 = fam.theory(1);
            std::size_t dim = space::brown_eval(t1, k).dim().convert_to<std::size_t>();
            BigInt h0 = space::brown_eval(fam.theory(0), k).dim();
            FieldMatrix expect =
                FieldMatrix::identity(fam.field, dim).scaled(Scalar::integer_inverse(fam.field, h0));
            if (form != expect) ++bad_lifted;
            FieldMatrix unl = pairing_unlifted(fam, 1, k);
            FieldMatrix expect_unl = FieldMatrix::identity(fam.field, dim)
                                         .scaled(Scalar::integer_inverse(fam.field, BigInt(dim)));
            if (unl != expect_unl) ++bad_unlifted;
        }
    rep.check("lifted pairing equals |H0|^{-1} times the delta form", bad_lifted == 0);
    rep.check("unlifted pairing equals |Hq|^{-1} times the delta form", bad_unlifted == 0);

    {
        // Point target: the 1x1 form (1).
        OrdinaryFamily fam{Flavor::FunctionAlgebra, FinAbGroup::parse("Z/2"), Field::rationals()};
        FieldMatrix form = pairing(fam, 1, space::point());
        bool ok = form.rows() == 1 && form.at(0, 0).is_one();
        rep.check("pairing on the point is the unit form", ok);
    }
    return rep.finish();
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"oracle", "integrals", "inversion", "cocycle", "lifts", "dimred", "char2", "pairing"};
}

nlohmann::json run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "oracle") return suite_oracle(cfg);
    if (name == "integrals") return suite_integrals(cfg);
    if (name == "inversion") return suite_inversion(cfg);
    if (name == "cocycle") return suite_cocycle(cfg);
    if (name == "lifts") return suite_lifts(cfg);
    if (name == "dimred") return suite_dimred(cfg);
    if (name == "char2") return suite_char2(cfg);
    if (name == "pairing") return suite_pairing(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace hopfpi::pathint
