#ifndef BERGEHIT_PROCESS_HPP
#define BERGEHIT_PROCESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bergehit/engine.hpp"
#include "bergehit/hypergraph.hpp"
#include "bergehit/oracle.hpp"

namespace bergehit {

/// An ordering sigma of the host's edge ids. The host must outlive the process.
struct SubgraphProcess {
    const Hypergraph* host = nullptr;
    std::vector<EdgeId> sigma;
    std::uint64_t seed = 0;

    std::size_t size() const noexcept { return sigma.size(); }
    /// H_t: the first t edges of sigma, in process order.
    Hypergraph prefix(std::size_t t) const;
};

/// Uniform ordering by Fisher-Yates under Rng(derive_seed(seed, "sigma")). Throws on an edgeless host.
SubgraphProcess random_process(const Hypergraph& host, std::uint64_t seed);

/// Smallest t with min degree of H_t >= k. Throws NoHitError when the host itself falls short.
std::size_t tau_min_degree(const SubgraphProcess& proc, std::size_t k);

struct ProbeResult {
    Verdict verdict = Verdict::unknown;
    Provenance provenance = Provenance::none;
};

using Predicate = std::function<ProbeResult(const Hypergraph& prefix, std::size_t t)>;

enum class SearchStrategy { binary, linear };

struct TauOptions {
    SearchStrategy strategy = SearchStrategy::binary;
    std::optional<std::size_t> known_false;  // a step where the predicate is known to fail
};

struct TauResult {
    std::optional<std::size_t> tau;  // empty when inconclusive
    std::size_t lo = 0;              // predicate fails at lo (or lo is the search floor)
    std::size_t hi = 0;              // predicate holds at hi
    std::size_t probes = 0;
    std::vector<Provenance> provenance;  // one per probe, in probe order
    bool inconclusive() const noexcept { return !tau.has_value(); }
};

/**
 * Hitting time of a monotone increasing predicate. The predicate is probed at
 * t = N first (a definite no throws NoHitError). Binary search keeps the
 * answer inside (lo, hi]; an unknown probe stops the search and the result
 * is inconclusive with that bracket.
 */
TauResult tau_property(const SubgraphProcess& proc, const Predicate& predicate, const TauOptions& options = {});

struct ProbeConfig {
    std::size_t budget = 200000;
    std::size_t escalations = 2;   // engine reruns after the oracle step, budget x growth each
    std::size_t growth = 8;
    bool use_oracle = true;
    bool oracle_only = false;      // exact probes only; requires the host within the guard
    OracleGuard guard{};
};

/// Engine first, then the exact oracle when the host fits the guard, then larger engine budgets.
ProbeResult probe_hamiltonian(const Hypergraph& h, const ProbeConfig& config, std::uint64_t seed);

Predicate hamiltonicity_predicate(const ProbeConfig& config, std::uint64_t seed);

enum class TauStatus { not_computed, found, inconclusive, no_hit };

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> tau2;          // empty when the host has min degree < 2
    TauStatus tau_bh_status = TauStatus::not_computed;
    std::optional<std::size_t> tau_bh;
    std::optional<std::size_t> bracket_lo, bracket_hi;
    std::optional<bool> coincide;             // empty when the probe at tau2 was inconclusive
    Provenance provenance = Provenance::none; // provenance of the probe at tau2
    std::vector<Provenance> probe_provenance;
    double millis = 0;
};

struct TrialConfig {
    ProbeConfig probe{};
    bool full_tau_bh = false;
    std::size_t jobs = 0;  // 0: hardware concurrency
};

struct TrialSummary {
    std::size_t trials = 0;
    std::size_t coincidences = 0;
    std::size_t non_coincidences = 0;
    std::size_t inconclusive = 0;
    std::size_t no_hit = 0;
    double coincidence_fraction = 0;  // coincidences / trials
    double tau2_min = 0, tau2_q25 = 0, tau2_median = 0, tau2_q75 = 0, tau2_max = 0, tau2_mean = 0;
};

struct TrialBatch {
    std::vector<TrialRecord> records;  // ordered by trial index
    TrialSummary summary;
};

/// Seed for trial i: seed_base XOR i.
constexpr std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t i) noexcept { return seed_base ^ i; }

TrialRecord run_trial(const Hypergraph& host, std::size_t index, std::uint64_t seed_base, const TrialConfig& config);

/// Independent trials on a worker pool. Records and summary do not depend on the worker count.
TrialBatch run_trials(const Hypergraph& host, std::size_t trials, std::uint64_t seed_base, const TrialConfig& config);

TrialSummary summarize(const std::vector<TrialRecord>& records);

/// Linear-interpolation quantile (q in [0,1]) of a non-empty sample.
double quantile(std::vector<double> values, double q);

}  // namespace bergehit

#endif  // BERGEHIT_PROCESS_HPP
