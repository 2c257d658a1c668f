#pragma once

#include <json.hpp>

#include "hopfpi/pathint/theory.hpp"

namespace hopfpi::io {

using json = nlohmann::json;

json group_to_json(const finab::FinAbGroup& g);
finab::FinAbGroup group_from_json(const json& j);

json hom_to_json(const finab::GroupHom& f);
finab::GroupHom hom_from_json(const json& j);

json matrix_to_json(const exact::FieldMatrix& m);
json int_matrix_to_json(const exact::IntMatrix& m);
exact::IntMatrix int_matrix_from_json(const json& j);

json complex_to_json(const space::ChainComplex& k);
space::ChainComplex complex_from_json(const json& j);

json chain_map_to_json(const space::ChainMap& f);
space::ChainMap chain_map_from_json(const json& j);

json space_cospan_to_json(const space::SpaceCospan& c);
space::SpaceCospan space_cospan_from_json(const json& j);

json hopf_cospan_to_json(const cospan::HopfCospan& c);
cospan::HopfCospan hopf_cospan_from_json(const json& j);

}  // namespace hopfpi::io
