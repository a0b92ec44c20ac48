#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsl/canonical.hpp"
#include "qsl/claims.hpp"
#include "qsl/cli_commands.hpp"
#include "qsl/enumerate.hpp"
#include "qsl/families.hpp"
#include "qsl/graph6.hpp"
#include "qsl/spectral.hpp"
#include "qsl/suites.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

qsl::FamilyTag family_from(const std::string& name) {
    auto id = qsl::parse_family(name);
    if (!id) throw qsl::domain_error("unknown family name: " + name);
    return *id;
}

qsl::PolynomialClaim claim_from(const std::string& name) {
    auto c = qsl::parse_claim(name);
    if (!c) throw qsl::domain_error("unknown polynomial claim: " + name);
    return *c;
}

qsl::Filter filter_from(const std::string& name) {
    auto f = qsl::parse_filter(name);
    if (!f) throw qsl::domain_error("unknown filter: " + name);
    return *f;
}

py::object cert_to_py(const qsl::Certificate& c) { return to_py(c.to_json()); }

}  // namespace

PYBIND11_MODULE(_qsl, m) {
    m.doc() = "signless-Laplacian spectral verification toolkit";
    m.attr("__version__") = qsl::kToolkitVersion;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const qsl::io_error& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        } catch (const qsl::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const qsl::capability_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const qsl::parse_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<qsl::Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int, std::vector<qsl::Edge>>(), py::arg("n"), py::arg("edges"))
        .def("vertex_count", &qsl::Graph::vertex_count)
        .def("edge_count", &qsl::Graph::edge_count)
        .def("edges", &qsl::Graph::edges)
        .def("degree", &qsl::Graph::degree, py::arg("v"))
        .def("neighbors", &qsl::Graph::neighbors, py::arg("v"))
        .def("has_edge", &qsl::Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const qsl::Graph& a, const qsl::Graph& b) { return a == b; })
        .def("__repr__", [](const qsl::Graph& g) {
            return "Graph(graph6='" + qsl::encode_graph6(g) + "')";
        });

    m.def("encode_graph6", &qsl::encode_graph6, py::arg("graph"));
    m.def("decode_graph6", &qsl::decode_graph6, py::arg("text"));
    m.def("to_dot", &qsl::to_dot, py::arg("graph"));
    m.def("canonical_form", &qsl::canonical_form, py::arg("graph"));
    m.def("is_isomorphic", &qsl::is_isomorphic, py::arg("g"), py::arg("h"));

    m.def(
        "q_index",
        [](const qsl::Graph& g, double tol) {
            qsl::QSpectrumResult r = qsl::q_index(g, tol);
            py::dict out;
            out["q"] = r.q;
            out["perron"] = to_py(r.perron);
            out["residual"] = r.residual;
            out["component_q"] = to_py(r.component_q);
            return out;
        },
        py::arg("graph"), py::arg("tol") = 1e-10,
        "Certified largest signless-Laplacian eigenvalue with its eigenvector.");
    m.def("perron_vector", &qsl::perron_vector, py::arg("graph"));

    m.def("family_names", [] {
        std::vector<std::string> names;
        for (qsl::FamilyTag id : qsl::all_family_tags()) names.push_back(qsl::family_name(id));
        return names;
    });
    m.def("min_k", [](const std::string& name) { return qsl::min_k(family_from(name)); },
          py::arg("family"));
    m.def(
        "build_family",
        [](const std::string& name, int k) { return qsl::build_family(family_from(name), k).graph; },
        py::arg("family"), py::arg("k"));
    m.def(
        "closed_form_q",
        [](const std::string& name, int k) -> py::object {
            auto surd = qsl::closed_form_q(family_from(name), k);
            if (!surd) return py::none();
            return py::float_(surd->value());
        },
        py::arg("family"), py::arg("k"));
    m.def(
        "predicted_extremal",
        [](int m) {
            qsl::PredictedExtremal p = qsl::predicted_extremal(m);
            py::dict out;
            out["family"] = qsl::family_name(p.id);
            out["k"] = p.k;
            out["below_size_hypothesis"] = p.below_size_hypothesis;
            return out;
        },
        py::arg("m"));

    m.def("claim_names", [] {
        std::vector<std::string> names;
        for (qsl::PolynomialClaim c : qsl::all_polynomial_claims())
            names.push_back(qsl::claim_name(c));
        return names;
    });
    m.def(
        "stored_polynomial_str",
        [](const std::string& name) { return qsl::stored_polynomial(claim_from(name)).str(); },
        py::arg("claim"));
    m.def(
        "verify_polynomial_claim",
        [](const std::string& name, int k_min, int k_max, double num_tol) {
            return cert_to_py(
                qsl::verify_polynomial_claim(claim_from(name), k_min, k_max, num_tol));
        },
        py::arg("claim"), py::arg("k_min") = 2, py::arg("k_max") = 40,
        py::arg("num_tol") = 1e-7);

    m.def(
        "enumerate_graph6",
        [](int m, int max_n, const std::string& filter) {
            int cap = max_n < 0 ? qsl::default_max_n(m) : max_n;
            std::vector<std::string> out;
            for (const qsl::Graph& g : qsl::enumerate_graphs(m, cap, filter_from(filter)))
                out.push_back(qsl::encode_graph6(g));
            return out;
        },
        py::arg("m"), py::arg("max_n") = -1, py::arg("filter") = "all",
        "graph6 strings of all isomorphism classes with m edges, canonically sorted.");
    m.def(
        "extremal_search",
        [](int m, const std::string& filter, int max_n) {
            return to_py(qsl::search_result_json(qsl::extremal_search(m, filter_from(filter), max_n)));
        },
        py::arg("m"), py::arg("filter") = "all", py::arg("max_n") = -1);

    m.def("suite_names", &qsl::suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, int k_min, int k_max, int m_max, double num_tol,
           double gap_tol, double closed_tol, unsigned seed) {
            qsl::SuiteOptions opt;
            opt.k_min = k_min;
            opt.k_max = k_max;
            opt.m_max = m_max;
            opt.num_tol = num_tol;
            opt.gap_tol = gap_tol;
            opt.closed_tol = closed_tol;
            opt.seed = seed;
            py::list out;
            for (const qsl::Certificate& c : qsl::run_suite(name, opt))
                out.append(cert_to_py(c));
            return out;
        },
        py::arg("suite"), py::arg("k_min") = 2, py::arg("k_max") = 40, py::arg("m_max") = 9,
        py::arg("num_tol") = 1e-7, py::arg("gap_tol") = 1e-9, py::arg("closed_tol") = 1e-8,
        py::arg("seed") = 97,
        "Run a verification suite and return its certificates as dictionaries.");
}
