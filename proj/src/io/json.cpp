#include "hopfpi/io/json.hpp"

#include <stdexcept>

namespace hopfpi::io {

using exact::BigInt;
using exact::IntMatrix;
using finab::FinAbGroup;
using finab::GroupHom;
using space::ChainComplex;
using space::ChainMap;

json group_to_json(const FinAbGroup& g) { return g.str(); }

FinAbGroup group_from_json(const json& j) {
    if (j.is_string()) return FinAbGroup::parse(j.get<std::string>());
    std::vector<BigInt> orders;
    for (const auto& e : j) orders.emplace_back(e.get<long long>());
    return finab::make_group(orders);
}

json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

IntMatrix int_matrix_from_json(const json& j) {
    std::size_t rows = j.size();
    std::size_t cols = rows ? j.at(0).size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("ragged matrix in JSON");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = j.at(i).at(c);
            m.at(i, c) = e.is_string() ? BigInt(e.get<std::string>()) : BigInt(e.get<long long>());
        }
    }
    return m;
}

json hom_to_json(const GroupHom& f) {
    return {{"src", f.src().str()}, {"tgt", f.tgt().str()}, {"matrix", int_matrix_to_json(f.matrix())}};
}

GroupHom hom_from_json(const json& j) {
    return GroupHom(group_from_json(j.at("src")), group_from_json(j.at("tgt")),
                    int_matrix_from_json(j.at("matrix")));
}

json matrix_to_json(const exact::FieldMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json complex_to_json(const ChainComplex& k) {
    json ranks = json::object();
    json bds = json::object();
    for (std::size_t n = 0; n < k.degrees(); ++n) {
        ranks[std::to_string(n)] = k.rank(n);
        if (n >= 1 && k.rank(n) > 0) bds[std::to_string(n)] = int_matrix_to_json(k.boundary(n));
    }
    return {{"ranks", ranks}, {"boundaries", bds}};
}

ChainComplex complex_from_json(const json& j) {
    std::size_t top = 0;
    for (const auto& [key, value] : j.at("ranks").items())
        top = std::max(top, static_cast<std::size_t>(std::stoul(key)) + 1);
    std::vector<std::size_t> ranks(top, 0);
    for (const auto& [key, value] : j.at("ranks").items())
        ranks[std::stoul(key)] = value.get<std::size_t>();
    std::vector<IntMatrix> bds(top);
    if (j.contains("boundaries"))
        for (const auto& [key, value] : j.at("boundaries").items())
            bds[std::stoul(key)] = int_matrix_from_json(value);
    return ChainComplex(ranks, bds);
}

json chain_map_to_json(const ChainMap& f) {
    json comps = json::object();
    std::size_t degs = std::max(f.src().degrees(), f.tgt().degrees());
    for (std::size_t n = 0; n < degs; ++n)
        if (f.src().rank(n) && f.tgt().rank(n)) comps[std::to_string(n)] = int_matrix_to_json(f.component(n));
    return {{"src", complex_to_json(f.src())}, {"tgt", complex_to_json(f.tgt())},
            {"components", comps}};
}

ChainMap chain_map_from_json(const json& j) {
    ChainComplex src = complex_from_json(j.at("src"));
    ChainComplex tgt = complex_from_json(j.at("tgt"));
    std::size_t degs = std::max(src.degrees(), tgt.degrees());
    std::vector<IntMatrix> comps(degs);
    if (j.contains("components"))
        for (const auto& [key, value] : j.at("components").items())
            comps[std::stoul(key)] = int_matrix_from_json(value);
    return ChainMap(src, tgt, comps);
}

json space_cospan_to_json(const space::SpaceCospan& c) {
    return {{"foot0", complex_to_json(c.k0)},
            {"leg0", chain_map_to_json(c.f0)},
            {"apex", complex_to_json(c.l)},
            {"leg1", chain_map_to_json(c.f1)},
            {"foot1", complex_to_json(c.k1)}};
}

space::SpaceCospan space_cospan_from_json(const json& j) {
    return space::SpaceCospan::make(chain_map_from_json(j.at("leg0")),
                                    chain_map_from_json(j.at("leg1")));
}

json hopf_cospan_to_json(const cospan::HopfCospan& c) {
    return {{"flavor", hopf::flavor_str(c.flavor())},
            {"foot0", c.foot0.group.str()},
            {"leg0", int_matrix_to_json(c.leg0.carrier.matrix())},
            {"apex", c.apex.group.str()},
            {"leg1", int_matrix_to_json(c.leg1.carrier.matrix())},
            {"foot1", c.foot1.group.str()}};
}

cospan::HopfCospan hopf_cospan_from_json(const json& j) {
    hopf::Flavor fl = hopf::parse_flavor(j.at("flavor").get<std::string>());
    FinAbGroup f0 = group_from_json(j.at("foot0"));
    FinAbGroup f1 = group_from_json(j.at("foot1"));
    FinAbGroup apex = group_from_json(j.at("apex"));
    IntMatrix m0 = int_matrix_from_json(j.at("leg0"));
    IntMatrix m1 = int_matrix_from_json(j.at("leg1"));
    hopf::HopfObject of0{f0, fl}, of1{f1, fl}, oa{apex, fl};
    if (fl == hopf::Flavor::GroupAlgebra)
        return cospan::HopfCospan::make(
            hopf::make_morphism(of0, oa, GroupHom(f0, apex, m0)),
            hopf::make_morphism(of1, oa, GroupHom(f1, apex, m1)));
    return cospan::HopfCospan::make(hopf::make_morphism(of0, oa, GroupHom(apex, f0, m0)),
                                    hopf::make_morphism(of1, oa, GroupHom(apex, f1, m1)));
}

}  // namespace hopfpi::io
