// Command-line surface of the engine.  Exit codes: 0 ok, 1 check failure,
// 2 validation error.
#include <CLI11.hpp>

#include <iostream>

#include "hopfpi/api.hpp"

namespace {

using hopfpi::api::json;

struct CommonOpts {
    std::string coeff = "Z/2";
    std::string flavor = "function";
    std::string field = "Q";
    int q = 1;
    int dim_cap = -1;  // negative: uncapped
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--coeff", o.coeff, "coefficient group literal, e.g. Z/2+Z/4");
    cmd->add_option("--flavor", o.flavor, "group | function");
    cmd->add_option("--field", o.field, "Q or F<p>");
    cmd->add_option("--q", o.q, "degree");
    cmd->add_option("--dim-cap", o.dim_cap, "dimension cap on apexes (negative: none)");
    cmd->add_flag("--json", o.as_json, "machine-readable output");
}

void emit(const json& out, bool as_json, const std::string& headline) {
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << headline << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact path-integral engine for Hopf-valued Brown functors"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string space = "point", manifold = "torus", cospan = "closed:s1";
    std::string inner = "heegaard1", outer = "heegaard2", suite = "inversion", kind = "ordinary";
    std::uint64_t seed = 7;
    int samples = 50;

    auto* c_hom = app.add_subcommand("homology", "homology of a space");
    c_hom->add_option("--space,--file", space)->required();
    add_common(c_hom, o);

    auto* c_coh = app.add_subcommand("cohomology", "cohomology of a space");
    c_coh->add_option("--space,--file", space)->required();
    add_common(c_coh, o);

    auto* c_brown = app.add_subcommand("brown", "Brown functor value on a space");
    c_brown->add_option("--space,--file", space)->required();
    add_common(c_brown, o);

    auto* c_pihat = app.add_subcommand("pi-hat", "cospanical path-integral of a cospan");
    c_pihat->add_option("--cospan", cospan)->required();
    add_common(c_pihat, o);

    auto* c_picheck = app.add_subcommand("pi-check", "spanical path-integral of a cospan");
    c_picheck->add_option("--cospan", cospan)->required();
    add_common(c_picheck, o);

    auto* c_omega = app.add_subcommand("omega", "obstruction values on a composable pair");
    c_omega->add_option("--inner", inner);
    c_omega->add_option("--outer", outer);
    add_common(c_omega, o);

    auto* c_theta = app.add_subcommand("theta", "canonical 1-cochain on a cospan");
    c_theta->add_option("--cospan", cospan)->required();
    add_common(c_theta, o);

    auto* c_lift = app.add_subcommand("lift", "lifted theory value on a cospan");
    c_lift->add_option("--kind", kind, "ordinary | tensor");
    c_lift->add_option("--cospan", cospan)->required();
    add_common(c_lift, o);

    auto* c_dw = app.add_subcommand("dw", "closed manifold invariant");
    c_dw->add_option("--manifold", manifold)->required();
    c_dw->add_option("--group", o.coeff);
    add_common(c_dw, o);

    auto* c_pair = app.add_subcommand("pairing", "bilinear form of the lifted theory");
    c_pair->add_option("--manifold", manifold)->required();
    add_common(c_pair, o);

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite)->required();
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--n", samples);
    c_verify->add_option("--group", o.coeff, "alias of --coeff");
    int max_order = 8;
    c_verify->add_option("--max-order", max_order);
    add_common(c_verify, o);

    auto* c_corpus = app.add_subcommand("corpus", "list builtin spaces and cospans");
    c_corpus->add_flag("--json", o.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        namespace api = hopfpi::api;
        if (c_hom->parsed() || c_coh->parsed()) {
            json out = api::homology_cmd(space, o.coeff, o.q, c_coh->parsed());
            std::string name = c_coh->parsed() ? "H^" : "H_";
            std::string reps;
            for (const auto& block : out["representatives"])
                if (!block.empty()) reps += " " + block.dump();
            emit(out, o.as_json,
                 name + std::to_string(o.q) + "(" + space + "; " + o.coeff +
                     ") = " + out["group"].get<std::string>() +
                     (reps.empty() ? "" : "\n  representative cycles per block:" + reps));
        } else if (c_brown->parsed()) {
            json out = api::brown_cmd(space, o.flavor, o.coeff, o.q, o.field);
            emit(out, o.as_json, "E(" + space + ") = " + out["object"].get<std::string>());
        } else if (c_pihat->parsed() || c_picheck->parsed()) {
            json out = api::pi_cmd(c_picheck->parsed() ? "check" : "hat", cospan, o.flavor,
                                   o.coeff, o.q, o.field, o.dim_cap);
            std::string head = out.contains("scalar")
                                   ? "value = " + out["scalar"].get<std::string>()
                                   : out["src"].get<std::string>() + " -> " +
                                         out["tgt"].get<std::string>() + ", matrix " +
                                         out["matrix"].dump();
            emit(out, o.as_json, head);
        } else if (c_omega->parsed()) {
            json out = api::omega_cmd(inner, outer, o.flavor, o.coeff, o.q, o.field);
            emit(out, o.as_json,
                 "omega_hat = " + out["omega_hat"].get<std::string>() +
                     ", omega_check = " + out["omega_check"].get<std::string>());
        } else if (c_theta->parsed()) {
            json out = api::theta_cmd(cospan, o.flavor, o.coeff, o.q, o.field);
            emit(out, o.as_json,
                 "theta = " + out["theta"].get<std::string>() +
                     ", theta_leq = " + out["theta_leq"].get<std::string>());
        } else if (c_lift->parsed()) {
            json out = api::lift_cmd(kind, cospan, o.flavor, o.coeff, o.q, o.field);
            std::string head = out.contains("scalar")
                                   ? "Z = " + out["scalar"].get<std::string>()
                                   : "Z matrix " + out["matrix"].dump();
            emit(out, o.as_json, head);
        } else if (c_dw->parsed()) {
            json out = api::dw_cmd(manifold, o.coeff, o.field, o.q);
            std::string head = out["invariant"].get<std::string>();
            if (out.contains("tabulated"))
                head += out["match"].get<bool>() ? "  (matches the pi_1 tabulation)"
                                                 : "  (MISMATCH with the pi_1 tabulation)";
            emit(out, o.as_json, head);
            if (out.contains("match") && !out["match"].get<bool>()) return 1;
        } else if (c_pair->parsed()) {
            json out = api::pairing_cmd(manifold, o.coeff, o.q, o.field);
            emit(out, o.as_json, "pairing matrix " + out["lifted"].dump());
        } else if (c_verify->parsed()) {
            hopfpi::pathint::VerifyConfig cfg;
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.field = o.field;
            cfg.group = o.coeff;
            cfg.flavor = o.flavor;
            cfg.q = o.q;
            cfg.max_order = max_order;
            json out = api::verify_cmd(suite, cfg);
            std::cout << out.dump(2) << "\n";
            return out["ok"].get<bool>() ? 0 : 1;
        } else if (c_corpus->parsed()) {
            json out = api::corpus_cmd();
            emit(out, o.as_json, out.dump(2));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const hopfpi::exact::NotFiniteVolume& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
