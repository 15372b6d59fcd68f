// Python bindings for the core operations. Exact integer counts cross the
// boundary as Python ints (built from decimal strings, so arbitrary
// precision survives the trip).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "gtm/binomial.hpp"
#include "gtm/factorization.hpp"
#include "gtm/factors.hpp"
#include "gtm/formulas.hpp"
#include "gtm/rauzy.hpp"
#include "gtm/verify.hpp"
#include "gtm/word.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const gtm::Count& c) {
    py::object int_type = py::module_::import("builtins").attr("int");
    return int_type(c.str());
}

gtm::Word parse(int m, const std::string& text) { return gtm::Word::parse(m, text); }

py::dict factorization_dict(const gtm::SigmaFactorization& f) {
    py::dict d;
    d["x"] = f.x.str();
    d["u"] = f.u.str();
    d["y"] = f.y.str();
    d["a"] = f.a ? py::object(py::int_(static_cast<int>(*f.a))) : py::object(py::none());
    d["b"] = f.b ? py::object(py::int_(static_cast<int>(*f.b))) : py::object(py::none());
    d["k"] = f.k;
    return d;
}

py::dict graph_dict(const gtm::AbelianRauzyGraph& g) {
    py::dict d;
    d["m"] = g.m;
    d["order"] = g.order;
    py::list vertices;
    for (const auto& v : g.vertices) vertices.append(v);
    d["vertices"] = vertices;
    py::list edges;
    for (const auto& e : g.edges) {
        py::dict edge;
        edge["src"] = e.src;
        edge["a"] = static_cast<int>(e.a);
        edge["b"] = static_cast<int>(e.b);
        edges.append(edge);
    }
    d["edges"] = edges;
    return d;
}

py::dict report_dict(const gtm::CheckReport& r) {
    py::dict d;
    d["check"] = r.check;
    d["instances"] = r.instances;
    d["failures"] = static_cast<std::int64_t>(r.failures.size());
    d["passed"] = r.passed();
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gtm, mod) {
    mod.doc() = "Generalized Thue-Morse words: subword counting, binomial equivalence, "
                "desubstitution, abelian Rauzy graphs, and closed-form complexities";

    mod.def(
        "tm_prefix", [](int m, std::size_t length) { return gtm::tm_prefix(m, length).str(); },
        py::arg("m"), py::arg("length"));
    mod.def(
        "subword_count",
        [](int m, const std::string& u, const std::string& w) {
            return to_pyint(gtm::subword_count(parse(m, u), parse(m, w)));
        },
        py::arg("m"), py::arg("u"), py::arg("w"));
    mod.def(
        "signature",
        [](int m, const std::string& u, int k) {
            const gtm::Signature s = gtm::signature(parse(m, u), k);
            py::dict d;
            for (std::size_t i = 0; i < s.counts.size(); ++i)
                d[py::str(gtm::signature_domain_word(m, k, i).str())] = to_pyint(s.counts[i]);
            return d;
        },
        py::arg("m"), py::arg("u"), py::arg("k"));
    mod.def(
        "equivalent",
        [](int m, const std::string& u, const std::string& v, int k) {
            return gtm::equivalent(parse(m, u), parse(m, v), k);
        },
        py::arg("m"), py::arg("u"), py::arg("v"), py::arg("k"));

    mod.def("factor_complexity", &gtm::factor_complexity, py::arg("m"), py::arg("n"));
    mod.def("abelian_complexity", &gtm::abelian_complexity, py::arg("m"), py::arg("n"));
    mod.def("kbinomial_complexity", &gtm::kbinomial_complexity, py::arg("m"), py::arg("k"),
            py::arg("n"));
    mod.def(
        "class_partition",
        [](int m, int k, std::size_t n) {
            py::list classes;
            for (const auto& cls : gtm::class_partition(m, k, n)) {
                py::list members;
                for (const auto& w : cls) members.append(w.str());
                classes.append(members);
            }
            return classes;
        },
        py::arg("m"), py::arg("k"), py::arg("n"));
    mod.def(
        "shortest_equivalent_pair",
        [](int m, int k) {
            const gtm::EquivalentPair p = gtm::shortest_equivalent_pair(m, k);
            return py::make_tuple(p.n, p.first.str(), p.second.str());
        },
        py::arg("m"), py::arg("k"));

    mod.def("factor_count_formula", &gtm::factor_count_formula, py::arg("m"), py::arg("n"));
    mod.def("abelian_count_formula", &gtm::abelian_count_formula, py::arg("m"), py::arg("n"));
    mod.def("binary_kbinomial_formula", &gtm::binary_kbinomial_formula, py::arg("k"), py::arg("n"));
    mod.def("order2_kbinomial_formula", &gtm::order2_kbinomial_formula, py::arg("m"), py::arg("n"));
    mod.def("kbinomial_formula", &gtm::kbinomial_formula, py::arg("m"), py::arg("k"), py::arg("n"));
    mod.def("block_kbinomial_formula", &gtm::block_kbinomial_formula, py::arg("m"), py::arg("k"),
            py::arg("j"), py::arg("r"));
    mod.def("pair_class_formula", &gtm::pair_class_formula, py::arg("m"), py::arg("k"), py::arg("n"));
    mod.def("rauzy_edge_formula", &gtm::rauzy_edge_formula, py::arg("m"), py::arg("nu"));
    mod.def("extension_pair_formula", &gtm::extension_pair_formula, py::arg("m"), py::arg("nu"));

    mod.def(
        "enumerate_factorizations",
        [](int m, int k, const std::string& word) {
            py::list out;
            for (const auto& f : gtm::enumerate_factorizations(m, k, parse(m, word)))
                out.append(factorization_dict(f));
            return out;
        },
        py::arg("m"), py::arg("k"), py::arg("word"));
    mod.def(
        "unique_factorization",
        [](int m, int k, const std::string& word) {
            return factorization_dict(gtm::unique_factorization(m, k, parse(m, word)));
        },
        py::arg("m"), py::arg("k"), py::arg("word"));
    mod.def(
        "ps_pair",
        [](int m, int k, const std::string& word) {
            const gtm::PSPair p = gtm::ps_pair(m, k, parse(m, word));
            return py::make_tuple(p.p.str(), p.s.str());
        },
        py::arg("m"), py::arg("k"), py::arg("word"));
    mod.def(
        "equivalent_pairs",
        [](int m, int k, const std::string& p1, const std::string& s1, const std::string& p2,
           const std::string& s2) {
            return gtm::equivalent_pairs(m, k, {parse(m, p1), parse(m, s1)},
                                         {parse(m, p2), parse(m, s2)});
        },
        py::arg("m"), py::arg("k"), py::arg("p1"), py::arg("s1"), py::arg("p2"), py::arg("s2"));
    mod.def("count_pair_classes", &gtm::count_pair_classes, py::arg("m"), py::arg("k"), py::arg("n"));

    mod.def(
        "build_graph", [](int m, std::size_t order) { return graph_dict(gtm::build_graph(m, order)); },
        py::arg("m"), py::arg("order"));
    mod.def("edge_count", &gtm::edge_count, py::arg("m"), py::arg("order"));
    mod.def(
        "y_counts",
        [](int m, std::size_t order) {
            const gtm::YSets y = gtm::y_sets(m, order);
            return py::make_tuple(y.right.size(), y.left.size());
        },
        py::arg("m"), py::arg("order"));
    mod.def(
        "eulerian_check",
        [](int m, std::size_t order) { return gtm::eulerian_check(gtm::build_graph(m, order)); },
        py::arg("m"), py::arg("order"));
    mod.def("shift_isomorphism_check", &gtm::shift_isomorphism_check, py::arg("m"), py::arg("order"),
            py::arg("t"));
    mod.def(
        "export_dot",
        [](int m, std::size_t order, bool color) {
            return gtm::export_dot(gtm::build_graph(m, order), color);
        },
        py::arg("m"), py::arg("order"), py::arg("color") = false);

    mod.def(
        "run_suite",
        [](const std::string& suite, int m, int k, std::size_t max_n, std::uint64_t seed,
           int instances) {
            gtm::SuiteOptions options;
            options.m = m;
            options.k = k;
            options.max_n = max_n;
            options.seed = seed;
            options.instances = instances;
            py::list out;
            for (const auto& r : gtm::run_suite(suite, options)) out.append(report_dict(r));
            return out;
        },
        py::arg("suite"), py::arg("m") = 3, py::arg("k") = 2, py::arg("max_n") = 0,
        py::arg("seed") = 1729, py::arg("instances") = 200);
}
