#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergehit/absorption.hpp"
#include "bergehit/engine.hpp"
#include "bergehit/errors.hpp"
#include "bergehit/generators.hpp"
#include "bergehit/io.hpp"
#include "bergehit/oracle.hpp"
#include "bergehit/process.hpp"
#include "bergehit/thresholds.hpp"

namespace py = pybind11;
using namespace bergehit;

namespace {

// JSON documents cross the boundary as text; the Python side parses them.
std::string dump(const Json& j) { return j.dump(); }

std::vector<std::vector<Vertex>> edge_list(const Hypergraph& h) {
    std::vector<std::vector<Vertex>> out;
    out.reserve(h.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e) out.emplace_back(h.edge(e).begin(), h.edge(e).end());
    return out;
}

}  // namespace

PYBIND11_MODULE(_bergehit, m) {
    m.doc() = "Berge Hamiltonicity and hitting times of uniform hypergraph processes";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<NoHitError>(m, "NoHitError", PyExc_RuntimeError);
    py::register_exception<NoRootError>(m, "NoRootError", PyExc_RuntimeError);
    py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<std::size_t, std::size_t, const std::vector<std::vector<Vertex>>&>(), py::arg("n"),
             py::arg("r"), py::arg("edges"))
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("r", &Hypergraph::r)
        .def_property_readonly("num_edges", &Hypergraph::num_edges)
        .def("edges", &edge_list)
        .def("degree", &Hypergraph::degree)
        .def("codegree", &Hypergraph::codegree)
        .def("min_degree", &Hypergraph::min_degree)
        .def("max_degree", &Hypergraph::max_degree)
        .def("is_connected", [](const Hypergraph& h) { return is_connected(h); })
        .def("serialize", [](const Hypergraph& h) { return serialize_hypergraph(h); })
        .def_static("parse", [](const std::string& text) { return parse_hypergraph(text); })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.n()) + ", r=" + std::to_string(h.r()) +
                   ", edges=" + std::to_string(h.num_edges()) + ")";
        });

    m.def("complete", &complete, py::arg("n"), py::arg("r"));
    m.def("two_cliques", &two_cliques, py::arg("n"), py::arg("r"));
    m.def("two_cliques_matching", &two_cliques_matching, py::arg("n"), py::arg("seed"));
    m.def("binomial", &binomial, py::arg("n"), py::arg("r"), py::arg("p"), py::arg("seed"));
    m.def(
        "degree_condition_random",
        [](std::size_t n, std::size_t r, double eps, std::uint64_t seed) {
            return degree_condition_random(n, r, eps, seed);
        },
        py::arg("n"), py::arg("r"), py::arg("eps"), py::arg("seed"));
    m.def(
        "theorem_condition_holds", [](const Hypergraph& h, double eps) { return check_theorem_condition(h, eps).holds; },
        py::arg("h"), py::arg("eps"));

    m.def(
        "exact_hamiltonian",
        [](const Hypergraph& h) -> std::optional<std::string> {
            auto c = exact_hamiltonian(h);
            if (!c) return std::nullopt;
            return dump(certificate_json(*c));
        },
        py::arg("h"), "certificate JSON text, or None when no Berge Hamilton cycle exists");
    m.def(
        "exact_longest_path_length", [](const Hypergraph& h) { return exact_longest_path(h).length(); }, py::arg("h"));
    m.def(
        "decide",
        [](const Hypergraph& h, std::size_t budget, std::uint64_t seed, bool fallback) {
            DecideOptions opt;
            opt.budget = budget;
            opt.seed = seed;
            opt.fallback = fallback;
            return dump(outcome_json(decide_hamiltonian(h, opt)));
        },
        py::arg("h"), py::arg("budget") = 200000, py::arg("seed") = 0, py::arg("fallback") = false);
    m.def(
        "absorb",
        [](const Hypergraph& h, std::size_t d0, std::size_t budget, std::uint64_t seed) {
            auto res = absorption_run(h, d0, budget, seed);
            Json j = outcome_json(res.outcome);
            j["steps"] = res.trace.size();
            return dump(j);
        },
        py::arg("h"), py::arg("d0"), py::arg("budget") = 200000, py::arg("seed") = 0);

    m.def(
        "sigma", [](const Hypergraph& h, std::uint64_t seed) { return random_process(h, seed).sigma; }, py::arg("h"),
        py::arg("seed"));
    m.def(
        "tau_min_degree",
        [](const Hypergraph& h, std::uint64_t seed, std::size_t k) { return tau_min_degree(random_process(h, seed), k); },
        py::arg("h"), py::arg("seed"), py::arg("k") = 2);
    m.def(
        "run_trials",
        [](const Hypergraph& h, std::size_t trials, std::uint64_t seed_base, bool full, std::size_t jobs) {
            TrialConfig cfg;
            cfg.full_tau_bh = full;
            cfg.jobs = jobs;
            TrialBatch batch;
            {
                py::gil_scoped_release release;
                batch = run_trials(h, trials, seed_base, cfg);
            }
            return py::make_tuple(trials_csv(batch, {}, false), dump(summary_json(batch.summary)));
        },
        py::arg("h"), py::arg("trials"), py::arg("seed_base"), py::arg("full") = false, py::arg("jobs") = 0,
        "(csv text, summary JSON text)");

    m.def(
        "thresholds",
        [](const Hypergraph& h, double eps, double c_gamma) { return dump(threshold_json(threshold_report(h, eps, c_gamma))); },
        py::arg("h"), py::arg("eps"), py::arg("c_gamma") = 1.0);
    m.def("regular_p0", &regular_p0, py::arg("n"), py::arg("degree"));
    m.def(
        "properties",
        [](const Hypergraph& h, double eps, bool sampled, std::size_t trials, std::uint64_t seed) {
            PropertyOptions opt;
            opt.sampled = sampled;
            opt.trials = trials;
            opt.seed = seed;
            return dump(properties_json(property_report(h, eps, opt)));
        },
        py::arg("h"), py::arg("eps"), py::arg("sampled") = false, py::arg("trials") = 1000, py::arg("seed") = 0);
}
