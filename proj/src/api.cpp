#include "hopfpi/api.hpp"

#include <fstream>

#include "hopfpi/io/json.hpp"
#include "hopfpi/pathint/sampler.hpp"

namespace hopfpi::api {

using exact::Field;
using exact::Scalar;
using finab::FinAbGroup;
using hopf::Flavor;
using pathint::OrdinaryFamily;
using space::BrownTheory;
using space::ChainComplex;
using space::SpaceCospan;

namespace {

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

BrownTheory theory_of(const std::string& flavor, const std::string& coeff, int q,
                      const std::string& field) {
    return BrownTheory(hopf::parse_flavor(flavor), FinAbGroup::parse(coeff), q,
                       Field::parse(field));
}

OrdinaryFamily family_of(const std::string& flavor, const std::string& coeff,
                         const std::string& field) {
    return OrdinaryFamily{hopf::parse_flavor(flavor), FinAbGroup::parse(coeff),
                          Field::parse(field)};
}

json ck_to_json(const cospan::CkMorphism& m) {
    json out;
    out["src"] = m.src.str();
    out["tgt"] = m.tgt.str();
    out["scale"] = m.scale.str();
    out["cospan"] = io::hopf_cospan_to_json(m.cospan);
    if (m.matrix) {
        out["matrix"] = io::matrix_to_json(*m.matrix);
        if (m.matrix->rows() == 1 && m.matrix->cols() == 1) out["scalar"] = m.matrix->at(0, 0).str();
    }
    return out;
}

}  // namespace

ChainComplex resolve_space(const std::string& arg) {
    if (arg.find(".json") != std::string::npos) return io::complex_from_json(load_file(arg));
    try {
        return space::builtin(arg);
    } catch (const std::invalid_argument&) {
        return space::manifold_plus(arg);
    }
}

SpaceCospan resolve_cospan(const std::string& arg) {
    if (arg.find(".json") != std::string::npos)
        return io::space_cospan_from_json(load_file(arg));
    return pathint::named_cospan(arg);
}

json homology_cmd(const std::string& spc, const std::string& coeff, int q, bool cohomology) {
    ChainComplex k = resolve_space(spc);
    FinAbGroup g = FinAbGroup::parse(coeff);
    auto data = space::homology_data(k, g, q, cohomology);
    json reps = json::array();
    for (std::size_t j = 0; j < data->blocks(); ++j)
        reps.push_back(io::int_matrix_to_json(data->block(j).representatives()));
    return {{"space", spc},
            {"coefficients", g.str()},
            {"q", q},
            {"kind", cohomology ? "cohomology" : "homology"},
            {"group", data->group().str()},
            {"representatives", reps}};
}

json brown_cmd(const std::string& spc, const std::string& flavor, const std::string& coeff, int q,
               const std::string& field) {
    BrownTheory t = theory_of(flavor, coeff, q, field);
    hopf::HopfObject e = space::brown_eval(t, resolve_space(spc));
    return {{"space", spc}, {"object", e.str()}, {"dim", e.dim().str()},
            {"inverse_volume", hopf::inverse_volume(e, t.field).str()}};
}

json pi_cmd(const std::string& kind, const std::string& cospan, const std::string& flavor,
            const std::string& coeff, int q, const std::string& field, int dim_cap) {
    BrownTheory t = theory_of(flavor, coeff, q, field);
    if (dim_cap >= 0) t.dim_cap = dim_cap;
    SpaceCospan c = resolve_cospan(cospan);
    cospan::CkMorphism m = kind == "check" ? pathint::pi_check(t, c) : pathint::pi_hat(t, c);
    json out = ck_to_json(m);
    out["kind"] = kind == "check" ? "pi-check" : "pi-hat";
    return out;
}

json omega_cmd(const std::string& inner, const std::string& outer, const std::string& flavor,
               const std::string& coeff, int q, const std::string& field) {
    BrownTheory t = theory_of(flavor, coeff, q, field);
    SpaceCospan ci = resolve_cospan(inner);
    SpaceCospan co = resolve_cospan(outer);
    return {{"omega_hat", pathint::omega_hat(t, co, ci).str()},
            {"omega_check", pathint::omega_check(t, co, ci).str()}};
}

json theta_cmd(const std::string& cospan, const std::string& flavor, const std::string& coeff,
               int q, const std::string& field) {
    BrownTheory t = theory_of(flavor, coeff, q, field);
    OrdinaryFamily fam = family_of(flavor, coeff, field);
    SpaceCospan c = resolve_cospan(cospan);
    return {{"theta", pathint::theta(t, c).str()},
            {"theta_leq", pathint::theta_leq(fam, q, c).str()}};
}

json lift_cmd(const std::string& kind, const std::string& cospan, const std::string& flavor,
              const std::string& coeff, int q, const std::string& field) {
    SpaceCospan c = resolve_cospan(cospan);
    cospan::CkMorphism m = kind == "tensor"
                               ? pathint::lift_tensor_Z(theory_of(flavor, coeff, q, field), c)
                               : pathint::lift_ordinary_Z(family_of(flavor, coeff, field), q, c);
    json out = ck_to_json(m);
    out["kind"] = kind;
    return out;
}

json dw_cmd(const std::string& manifold, const std::string& group, const std::string& field,
            int q) {
    OrdinaryFamily fam = family_of("function", group, field);
    ChainComplex m = space::manifold_plus(manifold);
    Scalar z = pathint::closed_invariant(fam, q, m);
    json out = {{"manifold", manifold}, {"group", group}, {"q", q}, {"field", field},
                {"invariant", z.str()}};
    // Independent tabulation from the fundamental group, when classical.
    struct Pi1 {
        int free_rank;
        std::vector<long> torsion;
    };
    Pi1 pi1;
    bool known = true;
    if (manifold == "circle" || manifold == "s1")
        pi1 = {1, {}};
    else if (manifold == "torus")
        pi1 = {2, {}};
    else if (manifold == "klein")
        pi1 = {1, {2}};
    else if (manifold == "rp2")
        pi1 = {0, {2}};
    else if (manifold == "s2" || manifold == "s3")
        pi1 = {0, {}};
    else
        known = false;
    if (known && q == 1) {
        exact::BigInt count = 1;
        for (int i = 0; i < pi1.free_rank; ++i) count *= fam.coefficients.order();
        for (long t : pi1.torsion) {
            exact::BigInt tors = 1;
            for (const auto& d : fam.coefficients.orders()) tors *= exact::gcd(exact::BigInt(t), d);
            count *= tors;
        }
        Scalar tab = Scalar::from_integer(fam.field, count) *
                     Scalar::integer_inverse(fam.field, fam.coefficients.order());
        out["tabulated"] = tab.str();
        out["match"] = tab == z;
    }
    return out;
}

json pairing_cmd(const std::string& manifold, const std::string& coeff, int q,
                 const std::string& field) {
    OrdinaryFamily fam = family_of("function", coeff, field);
    ChainComplex k = space::manifold_plus(manifold);
    exact::FieldMatrix form = pathint::pairing(fam, q, k);
    exact::FieldMatrix unl = pathint::pairing_unlifted(fam, q, k);
    return {{"manifold", manifold},
            {"coefficients", coeff},
            {"q", q},
            {"lifted", io::matrix_to_json(form)},
            {"unlifted", io::matrix_to_json(unl)}};
}

json verify_cmd(const std::string& suite, const pathint::VerifyConfig& cfg) {
    return pathint::run_suite(suite, cfg);
}

json corpus_cmd() {
    pathint::SpaceCorpus corpus;
    json spaces = json::array();
    for (std::size_t i = 0; i < corpus.spaces().size(); ++i)
        spaces.push_back({{"name", corpus.names()[i]}, {"ranks", corpus.spaces()[i].str()}});
    return {{"spaces", spaces},
            {"manifolds", {"circle", "torus", "klein", "rp2", "s2", "s3", "solid_torus", "point"}},
            {"cospans", pathint::named_cospans()},
            {"suites", pathint::suite_names()}};
}

}  // namespace hopfpi::api
