#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfpi/api.hpp"
#include "hopfpi/exact/congruence.hpp"
#include "hopfpi/exact/smith.hpp"
#include "hopfpi/finab/ops.hpp"
#include "hopfpi/io/json.hpp"

namespace py = pybind11;
using hopfpi::exact::BigInt;
using hopfpi::exact::IntMatrix;

namespace {

IntMatrix to_matrix(const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<std::string>> from_matrix(const IntMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).str();
    return out;
}

std::vector<BigInt> to_bigints(const std::vector<long long>& v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact path-integral engine for Hopf-valued Brown functors";

    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<long long>>& rows) {
            auto s = hopfpi::exact::smith_normal_form(to_matrix(rows));
            return py::make_tuple(from_matrix(s.u), from_matrix(s.d), from_matrix(s.v));
        },
        py::arg("matrix"), "U, D, V with U*M*V = D in Smith normal form");

    m.def(
        "solve_congruence",
        [](const std::vector<std::vector<long long>>& a, const std::vector<long long>& b,
           const std::vector<long long>& moduli) -> py::object {
            auto sol = hopfpi::exact::solve_congruence(to_matrix(a), to_bigints(b),
                                                       to_bigints(moduli));
            if (!sol) return py::none();
            std::vector<std::string> part;
            for (const auto& e : sol->particular) part.push_back(e.str());
            std::vector<std::vector<std::string>> basis;
            for (const auto& gen : sol->homogeneous_basis) {
                std::vector<std::string> g;
                for (const auto& e : gen) g.push_back(e.str());
                basis.push_back(g);
            }
            return py::make_tuple(part, basis);
        },
        py::arg("matrix"), py::arg("rhs"), py::arg("moduli"));

    m.def(
        "make_group",
        [](const std::vector<long long>& orders) {
            return hopfpi::finab::make_group(to_bigints(orders)).str();
        },
        py::arg("orders"), "invariant-factor literal of the presented group");

    auto call_json = [](auto&& fn) { return fn().dump(); };

    // Group homomorphisms travel as {"src": ..., "tgt": ..., "matrix": [[...]]}.
    m.def(
        "kernel",
        [](const std::string& hom_json) {
            auto f = hopfpi::io::hom_from_json(nlohmann::json::parse(hom_json));
            auto k = hopfpi::finab::kernel(f);
            return nlohmann::json{{"group", k.kernel.str()},
                                  {"incl", hopfpi::io::hom_to_json(k.incl)}}
                .dump();
        },
        py::arg("hom"));
    m.def(
        "cokernel",
        [](const std::string& hom_json) {
            auto f = hopfpi::io::hom_from_json(nlohmann::json::parse(hom_json));
            auto c = hopfpi::finab::cokernel(f);
            return nlohmann::json{{"group", c.cokernel.str()},
                                  {"proj", hopfpi::io::hom_to_json(c.proj)}}
                .dump();
        },
        py::arg("hom"));
    m.def(
        "image",
        [](const std::string& hom_json) {
            auto f = hopfpi::io::hom_from_json(nlohmann::json::parse(hom_json));
            auto i = hopfpi::finab::image(f);
            return nlohmann::json{{"group", i.image.str()},
                                  {"incl", hopfpi::io::hom_to_json(i.incl)},
                                  {"corestrict", hopfpi::io::hom_to_json(i.corestrict)}}
                .dump();
        },
        py::arg("hom"));

    m.def("homology", [call_json](const std::string& space, const std::string& coeff, int q,
                                  bool cohomology) {
        return call_json([&] { return hopfpi::api::homology_cmd(space, coeff, q, cohomology); });
    },
          py::arg("space"), py::arg("coeff") = "Z/2", py::arg("q") = 1,
          py::arg("cohomology") = false);

    m.def("brown", [call_json](const std::string& space, const std::string& flavor,
                               const std::string& coeff, int q, const std::string& field) {
        return call_json([&] { return hopfpi::api::brown_cmd(space, flavor, coeff, q, field); });
    },
          py::arg("space"), py::arg("flavor") = "function", py::arg("coeff") = "Z/2",
          py::arg("q") = 1, py::arg("field") = "Q");

    m.def("pi", [call_json](const std::string& kind, const std::string& cospan,
                            const std::string& flavor, const std::string& coeff, int q,
                            const std::string& field) {
        return call_json([&] { return hopfpi::api::pi_cmd(kind, cospan, flavor, coeff, q, field); });
    },
          py::arg("kind"), py::arg("cospan"), py::arg("flavor") = "function",
          py::arg("coeff") = "Z/2", py::arg("q") = 1, py::arg("field") = "Q");

    m.def("omega", [call_json](const std::string& inner, const std::string& outer,
                               const std::string& flavor, const std::string& coeff, int q,
                               const std::string& field) {
        return call_json(
            [&] { return hopfpi::api::omega_cmd(inner, outer, flavor, coeff, q, field); });
    },
          py::arg("inner"), py::arg("outer"), py::arg("flavor") = "function",
          py::arg("coeff") = "Z/2", py::arg("q") = 1, py::arg("field") = "Q");

    m.def("theta", [call_json](const std::string& cospan, const std::string& flavor,
                               const std::string& coeff, int q, const std::string& field) {
        return call_json([&] { return hopfpi::api::theta_cmd(cospan, flavor, coeff, q, field); });
    },
          py::arg("cospan"), py::arg("flavor") = "function", py::arg("coeff") = "Z/2",
          py::arg("q") = 1, py::arg("field") = "Q");

    m.def("lift", [call_json](const std::string& kind, const std::string& cospan,
                              const std::string& flavor, const std::string& coeff, int q,
                              const std::string& field) {
        return call_json(
            [&] { return hopfpi::api::lift_cmd(kind, cospan, flavor, coeff, q, field); });
    },
          py::arg("kind"), py::arg("cospan"), py::arg("flavor") = "function",
          py::arg("coeff") = "Z/2", py::arg("q") = 1, py::arg("field") = "Q");

    m.def("dw", [call_json](const std::string& manifold, const std::string& group,
                            const std::string& field, int q) {
        return call_json([&] { return hopfpi::api::dw_cmd(manifold, group, field, q); });
    },
          py::arg("manifold"), py::arg("group") = "Z/2", py::arg("field") = "Q",
          py::arg("q") = 1);

    m.def("pairing", [call_json](const std::string& manifold, const std::string& coeff, int q,
                                 const std::string& field) {
        return call_json([&] { return hopfpi::api::pairing_cmd(manifold, coeff, q, field); });
    },
          py::arg("manifold"), py::arg("coeff") = "Z/2", py::arg("q") = 1,
          py::arg("field") = "Q");

    m.def("verify", [call_json](const std::string& suite, std::uint64_t seed, int n,
                                const std::string& field, const std::string& group,
                                const std::string& flavor, int q) {
        hopfpi::pathint::VerifyConfig cfg;
        cfg.seed = seed;
        cfg.samples = n;
        cfg.field = field;
        cfg.group = group;
        cfg.flavor = flavor;
        cfg.q = q;
        return call_json([&] { return hopfpi::api::verify_cmd(suite, cfg); });
    },
          py::arg("suite"), py::arg("seed") = 7, py::arg("n") = 50, py::arg("field") = "Q",
          py::arg("group") = "Z/2", py::arg("flavor") = "function", py::arg("q") = 1);

    m.def("corpus", [call_json] { return call_json([] { return hopfpi::api::corpus_cmd(); }); });
}
