// bergehit: command-line front end for the hypergraph library.
//
// Exit codes: 0 success, 1 verdict "no" (decide, oracle), 2 usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bergehit/absorption.hpp"
#include "bergehit/engine.hpp"
#include "bergehit/errors.hpp"
#include "bergehit/generators.hpp"
#include "bergehit/io.hpp"
#include "bergehit/oracle.hpp"
#include "bergehit/process.hpp"
#include "bergehit/thresholds.hpp"

namespace {

using namespace bergehit;

struct HostArgs {
    std::string path;
    std::string family;
    std::size_t n = 0;
    std::size_t r = 3;
    double p = 0.5;
    double eps = 0.1;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> host_seed;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_host_options(CLI::App* cmd, HostArgs& a, bool with_eps = true) {
    cmd->add_option("--host", a.path, "host file in the text format");
    cmd->add_option("--family", a.family, "complete|two_cliques|two_cliques_matching|binomial|degree_condition_random");
    cmd->add_option("--n", a.n, "vertex count");
    cmd->add_option("--r", a.r, "uniformity")->capture_default_str();
    cmd->add_option("--p", a.p, "edge probability (binomial)")->capture_default_str();
    if (with_eps) cmd->add_option("--eps", a.eps, "epsilon")->capture_default_str();
    cmd->add_option("--seed", a.seed, "64-bit seed for the run (and the generator unless --host-seed is given)")
        ->capture_default_str();
    cmd->add_option("--host-seed", a.host_seed, "generator seed override");
}

Hypergraph load_host(const HostArgs& a) {
    if (!a.path.empty()) {
        if (!a.family.empty()) throw UsageError("give either --host or --family, not both");
        return read_hypergraph_file(a.path);
    }
    if (a.family.empty()) throw UsageError("a host is required: --host FILE or --family NAME --n N");
    GenSpec spec;
    try {
        spec.family = family_from_name(a.family);
    } catch (const std::invalid_argument&) {
        throw UsageError("unknown family '" + a.family + "'");
    }
    spec.n = a.n;
    spec.r = a.r;
    spec.p = a.p;
    spec.eps = a.eps;
    spec.seed = a.host_seed.value_or(a.seed);
    return generate(spec);
}

std::string describe(const HostArgs& a) {
    if (!a.path.empty()) return "host=" + a.path;
    std::ostringstream os;
    os << "family=" << a.family << " n=" << a.n << " r=" << a.r << " p=" << a.p << " eps=" << a.eps
       << " host_seed=" << a.host_seed.value_or(a.seed);
    return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge Hamiltonicity, rotation-extension and hitting-time experiments on r-uniform hypergraphs"};
    app.require_subcommand(1);

    HostArgs host;
    std::string out;
    std::size_t budget = 200000;
    bool fallback = false;
    OracleGuard guard;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a host and print it in the text format");
    add_host_options(gen, host);
    gen->add_option("--out", out, "output file (default stdout)");

    // oracle
    bool longest = false;
    auto* oracle = app.add_subcommand("oracle", "exact Berge Hamiltonicity by exhaustive search");
    add_host_options(oracle, host);
    oracle->add_option("--max-n", guard.max_n, "oracle guard on n")->capture_default_str();
    oracle->add_option("--max-edges", guard.max_edges, "oracle guard on edges")->capture_default_str();
    oracle->add_flag("--longest", longest, "also report an exact longest Berge path");
    oracle->add_option("--out", out, "output file (default stdout)");

    // decide
    auto* decide = app.add_subcommand("decide", "rotation-extension decision with a verified certificate");
    add_host_options(decide, host);
    decide->add_option("--budget", budget, "rotation attempts")->capture_default_str();
    decide->add_flag("--fallback", fallback, "use the exact oracle when the engine gives up and n is within the guard");
    decide->add_option("--max-n", guard.max_n, "oracle guard on n")->capture_default_str();
    decide->add_option("--out", out, "output file (default stdout)");

    // absorb
    std::size_t d0 = 0;
    auto* absorb = app.add_subcommand("absorb", "expander extraction plus booster absorption; JSON lines");
    add_host_options(absorb, host);
    absorb->add_option("--d0", d0, "degree cap for the sparse subgraph (default max(2, ceil(eps^8 ln n)))");
    absorb->add_option("--budget", budget, "rotation attempts")->capture_default_str();
    absorb->add_option("--out", out, "output file (default stdout)");

    // tau
    std::size_t trials = 100;
    std::size_t jobs = 0;
    bool full = false;
    bool timing = false;
    std::string summary_path;
    auto* tau = app.add_subcommand("tau", "Monte Carlo hitting times tau2 and tauBH; CSV plus JSON summary");
    add_host_options(tau, host);
    tau->add_option("--trials", trials, "number of trials")->capture_default_str();
    tau->add_option("--budget", budget, "rotation attempts per probe")->capture_default_str();
    tau->add_option("--jobs", jobs, "worker threads (0: all cores)")->capture_default_str();
    tau->add_option("--max-n", guard.max_n, "oracle guard on n")->capture_default_str();
    tau->add_flag("--full", full, "binary-search tauBH when it differs from tau2");
    tau->add_flag("--timing", timing, "fill the millis column (not byte-reproducible)");
    tau->add_option("--out", out, "CSV file (default stdout)");
    tau->add_option("--summary", summary_path, "summary JSON file (default stdout, or stderr when the CSV goes to stdout)");

    // thresholds
    double c_gamma = 1.0;
    double tol = 1e-9;
    auto* thr = app.add_subcommand("thresholds", "p1, p2, p0, p3, p4, m1..m4 and the L1-L3 report as JSON");
    add_host_options(thr, host);
    thr->add_option("--c-gamma", c_gamma, "gamma = c_gamma ln ln ln n")->capture_default_str();
    thr->add_option("--tol", tol, "residual tolerance for p0")->capture_default_str();
    thr->add_option("--out", out, "output file (default stdout)");

    // props
    std::string mode = "exact";
    std::size_t prop_trials = 1000;
    std::size_t exact_max_n = 12;
    double prop_d0 = -1;
    auto* props = app.add_subcommand("props", "properties P1-P7 as JSON");
    add_host_options(props, host);
    props->add_option("--mode", mode, "exact|sampled")->check(CLI::IsMember({"exact", "sampled"}))->capture_default_str();
    props->add_option("--trials", prop_trials, "draws per property in sampled mode")->capture_default_str();
    props->add_option("--max-n", exact_max_n, "exact-mode guard on n")->capture_default_str();
    props->add_option("--d0", prop_d0, "SMALL threshold (default eps^8 ln n)");
    props->add_option("--out", out, "output file (default stdout)");

    // rotate-trace
    std::string start_path;
    bool exact_start = false;
    std::size_t rot_budget = kUnlimited;
    auto* rot = app.add_subcommand("rotate-trace", "endpoint closure of a path; JSON lines in discovery order");
    add_host_options(rot, host);
    rot->add_option("--start", start_path, "JSON path certificate to rotate (default: greedy path)");
    rot->add_flag("--exact", exact_start, "start from an exact longest path (oracle guard applies)");
    rot->add_option("--budget", rot_budget, "rotation attempts (default unlimited)");
    rot->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::uint64_t seed = host.seed;
    try {
        if (gen->parsed()) {
            emit(out, serialize_hypergraph(load_host(host)));
            return 0;
        }
        if (oracle->parsed()) {
            const Hypergraph h = load_host(host);
            auto cycle = exact_hamiltonian(h, guard);
            Json j{{"verdict", cycle ? "yes" : "no"}, {"provenance", "oracle"}};
            j["certificate"] = cycle ? certificate_json(*cycle) : Json(nullptr);
            if (longest) j["longest_path"] = certificate_json(exact_longest_path(h, guard));
            emit(out, j.dump(2) + "\n");
            return cycle ? 0 : 1;
        }
        if (decide->parsed()) {
            const Hypergraph h = load_host(host);
            DecideOptions opts;
            opts.budget = budget;
            opts.seed = seed;
            opts.fallback = fallback;
            opts.guard = guard;
            DecisionOutcome res = decide_hamiltonian(h, opts);
            emit(out, outcome_json(res).dump(2) + "\n");
            return res.verdict == Verdict::no ? 1 : 0;
        }
        if (absorb->parsed()) {
            const Hypergraph h = load_host(host);
            const std::size_t cap = d0 != 0 ? d0 : default_d0(h.n(), host.eps);
            AbsorptionResult res = absorption_run(h, cap, budget, seed);
            Json head = outcome_json(res.outcome);
            head["d0"] = cap;
            head["seed"] = seed;
            head["gamma0_edges"] = res.gamma0_edges;
            head["patch_edges"] = res.patch_edges;
            head["final_gamma_edges"] = res.final_gamma_edges;
            head["steps"] = res.trace.size();
            emit(out, head.dump() + "\n" + trace_json_lines(res.trace));
            return 0;
        }
        if (tau->parsed()) {
            const Hypergraph h = load_host(host);
            TrialConfig cfg;
            cfg.probe.budget = budget;
            cfg.probe.guard = guard;
            cfg.full_tau_bh = full;
            cfg.jobs = jobs;
            TrialBatch batch = run_trials(h, trials, seed, cfg);
            std::vector<std::string> header{
                "bergehit tau " + describe(host),
                "n=" + std::to_string(h.n()) + " r=" + std::to_string(h.r()) + " N=" + std::to_string(h.num_edges()),
                "seed_base=" + std::to_string(seed) + " trials=" + std::to_string(trials) +
                    " trial_seed=seed_base_xor_i budget=" + std::to_string(budget) + " full=" + (full ? "1" : "0")};
            emit(out, trials_csv(batch, header, timing));
            Json summary = summary_json(batch.summary);
            summary["seed_base"] = seed;
            summary["host"] = describe(host);
            summary["budget"] = budget;
            summary["full_tau_bh"] = full;
            const std::string text = summary.dump(2) + "\n";
            if (!summary_path.empty())
                emit(summary_path, text);
            else if (out.empty() || out == "-")
                std::cerr << text;
            else
                std::cout << text;
            return 0;
        }
        if (thr->parsed()) {
            const Hypergraph h = load_host(host);
            emit(out, threshold_json(threshold_report(h, host.eps, c_gamma, tol)).dump(2) + "\n");
            return 0;
        }
        if (props->parsed()) {
            const Hypergraph h = load_host(host);
            PropertyOptions opts;
            opts.sampled = mode == "sampled";
            opts.trials = prop_trials;
            opts.seed = seed;
            opts.exact_max_n = exact_max_n;
            if (prop_d0 >= 0) opts.d0 = prop_d0;
            Json j{{"mode", mode}, {"eps", host.eps}, {"log_base", "e"}};
            if (opts.sampled) j["sample_seed"] = seed;
            j["properties"] = properties_json(property_report(h, host.eps, opts));
            emit(out, j.dump(2) + "\n");
            return 0;
        }
        if (rot->parsed()) {
            const Hypergraph h = load_host(host);
            BergePath start;
            if (!start_path.empty()) {
                std::ifstream f(start_path);
                if (!f) throw std::runtime_error("cannot read " + start_path);
                start = path_from_json(Json::parse(f));
            } else if (exact_start) {
                start = exact_longest_path(h);
            } else {
                start = greedy_path(h);
            }
            RotationClosure c = endpoint_closure(h, start, rot_budget);
            std::string text = Json{{"fixed", c.fixed}, {"start", certificate_json(start)}}.dump() + "\n";
            for (std::size_t i = 0; i < c.discovery.size(); ++i) {
                const Vertex v = c.discovery[i];
                text += Json{{"order", i}, {"endpoint", v}, {"path", certificate_json(c.paths.at(v))}}.dump() + "\n";
            }
            text += Json{{"endpoints", c.endpoint_count()}, {"rotations", c.rotations}, {"exhausted", c.exhausted}}.dump() +
                    "\n";
            emit(out, text);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "malformed host file: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 2;
    } catch (const GenerationError& e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return 2;
    } catch (const NoRootError& e) {
        std::cerr << "no root: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
