#pragma once

#include <string>

#include <json.hpp>

#include "hopfpi/pathint/theory.hpp"
#include "hopfpi/pathint/verify.hpp"

namespace hopfpi::api {

using json = nlohmann::json;

/// Shared request surface for the CLI and the python module.  Space and
/// cospan arguments accept builtin names, named cospans, or inline JSON.

json homology_cmd(const std::string& space, const std::string& coeff, int q, bool cohomology);
json brown_cmd(const std::string& space, const std::string& flavor, const std::string& coeff,
               int q, const std::string& field);
json pi_cmd(const std::string& kind, const std::string& cospan, const std::string& flavor,
            const std::string& coeff, int q, const std::string& field, int dim_cap = -1);
json omega_cmd(const std::string& inner, const std::string& outer, const std::string& flavor,
               const std::string& coeff, int q, const std::string& field);
json theta_cmd(const std::string& cospan, const std::string& flavor, const std::string& coeff,
               int q, const std::string& field);
json lift_cmd(const std::string& kind, const std::string& cospan, const std::string& flavor,
              const std::string& coeff, int q, const std::string& field);
json dw_cmd(const std::string& manifold, const std::string& group, const std::string& field,
            int q);
json pairing_cmd(const std::string& manifold, const std::string& coeff, int q,
                 const std::string& field);
json verify_cmd(const std::string& suite, const pathint::VerifyConfig& cfg);
json corpus_cmd();

/// Resolve a space argument: builtin name, manifold literal, or a JSON file
/// path containing a chain complex.
hopfpi::space::ChainComplex resolve_space(const std::string& arg);
/// Resolve a cospan argument: named cospan or a JSON file path.
hopfpi::space::SpaceCospan resolve_cospan(const std::string& arg);

}  // namespace hopfpi::api
