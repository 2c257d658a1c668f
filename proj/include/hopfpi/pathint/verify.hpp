#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace hopfpi::pathint {

struct VerifyConfig {
    std::uint64_t seed = 7;
    int samples = 50;
    std::string field = "Q";
    std::string group = "Z/2";
    std::string flavor = "function";
    int q = 1;
    int max_order = 8;  // oracle suite bound
};

/// Runs one verification suite and returns the JSON report (deterministic
/// for a fixed config).  Suites: oracle, integrals, inversion, cocycle,
/// lifts, dimred, char2, pairing.
nlohmann::json run_suite(const std::string& name, const VerifyConfig& cfg);

std::vector<std::string> suite_names();

}  // namespace hopfpi::pathint
