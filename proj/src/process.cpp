#include "bergehit/process.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "bergehit/errors.hpp"
#include "bergehit/rng.hpp"

namespace bergehit {

Hypergraph SubgraphProcess::prefix(std::size_t t) const {
    if (host == nullptr) throw std::logic_error("process has no host");
    if (t > sigma.size()) throw std::out_of_range("prefix length exceeds the number of host edges");
    return host->subgraph(std::span<const EdgeId>(sigma.data(), t));
}

SubgraphProcess random_process(const Hypergraph& host, std::uint64_t seed) {
    if (host.num_edges() == 0) throw std::invalid_argument("random_process needs a host with at least one edge");
    SubgraphProcess proc;
    proc.host = &host;
    proc.seed = seed;
    proc.sigma.resize(host.num_edges());
    std::iota(proc.sigma.begin(), proc.sigma.end(), EdgeId{0});
    Rng rng(derive_seed(seed, 0x7369676d61ULL));
    rng.shuffle(proc.sigma);
    return proc;
}

std::size_t tau_min_degree(const SubgraphProcess& proc, std::size_t k) {
    if (k == 0) return 0;
    const Hypergraph& h = *proc.host;
    if (h.min_degree() < k)
        throw NoHitError("host minimum degree " + std::to_string(h.min_degree()) + " is below " + std::to_string(k));
    std::vector<std::size_t> deg(h.n(), 0);
    std::size_t deficit = h.n();
    for (std::size_t t = 0; t < proc.sigma.size(); ++t) {
        for (Vertex v : h.edge(proc.sigma[t]))
            if (++deg[v] == k) --deficit;
        if (deficit == 0) return t + 1;
    }
    throw NoHitError("minimum degree never reached");  // unreachable for a consistent host
}

TauResult tau_property(const SubgraphProcess& proc, const Predicate& predicate, const TauOptions& options) {
    const auto n_steps = static_cast<std::int64_t>(proc.size());
    std::int64_t lo = options.known_false ? static_cast<std::int64_t>(*options.known_false) : -1;
    TauResult res;
    auto probe = [&](std::int64_t t) {
        ProbeResult r = predicate(proc.prefix(static_cast<std::size_t>(t)), static_cast<std::size_t>(t));
        ++res.probes;
        res.provenance.push_back(r.provenance);
        return r.verdict;
    };
    auto finish = [&](std::int64_t l, std::int64_t h, bool found) {
        res.lo = static_cast<std::size_t>(std::max<std::int64_t>(l, 0));
        res.hi = static_cast<std::size_t>(h);
        if (found) res.tau = res.hi;
        return res;
    };

    if (options.strategy == SearchStrategy::linear) {
        for (std::int64_t t = lo + 1; t <= n_steps; ++t) {
            Verdict v = probe(t);
            if (v == Verdict::yes) return finish(t - 1, t, true);
            if (v == Verdict::unknown) return finish(t - 1, n_steps, false);
        }
        throw NoHitError("property does not hold on the full host");
    }

    std::int64_t hi = n_steps;
    Verdict top = probe(hi);
    if (top == Verdict::no) throw NoHitError("property does not hold on the full host");
    if (top == Verdict::unknown) return finish(lo, hi, false);
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        Verdict v = probe(mid);
        if (v == Verdict::yes) {
            hi = mid;
        } else if (v == Verdict::no) {
            lo = mid;
        } else {
            return finish(lo, hi, false);
        }
    }
    return finish(lo, hi, true);
}

ProbeResult probe_hamiltonian(const Hypergraph& h, const ProbeConfig& config, std::uint64_t seed) {
    auto exact = [&]() {
        return ProbeResult{exact_hamiltonian(h, config.guard) ? Verdict::yes : Verdict::no, Provenance::oracle};
    };
    if (config.oracle_only) return exact();
    if (h.n() < 3) {
        if (config.guard.admits(h)) return exact();
        return {};
    }
    DecideOptions opts;
    opts.budget = config.budget;
    opts.seed = seed;
    DecisionOutcome out = decide_hamiltonian(h, opts);
    if (out.verdict != Verdict::unknown) return {out.verdict, out.provenance};
    if (config.use_oracle && config.guard.admits(h)) return exact();
    std::size_t budget = config.budget;
    for (std::size_t k = 1; k <= config.escalations; ++k) {
        budget *= config.growth;
        opts.budget = budget;
        opts.seed = derive_seed(seed, k);
        out = decide_hamiltonian(h, opts);
        if (out.verdict != Verdict::unknown) return {out.verdict, out.provenance};
    }
    return {};
}

Predicate hamiltonicity_predicate(const ProbeConfig& config, std::uint64_t seed) {
    return [config, seed](const Hypergraph& prefix, std::size_t t) {
        return probe_hamiltonian(prefix, config, derive_seed(seed, t));
    };
}

TrialRecord run_trial(const Hypergraph& host, std::size_t index, std::uint64_t seed_base, const TrialConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.trial = index;
    rec.seed = trial_seed(seed_base, index);
    SubgraphProcess proc = random_process(host, rec.seed);
    try {
        rec.tau2 = tau_min_degree(proc, 2);
    } catch (const NoHitError&) {
        rec.tau_bh_status = TauStatus::no_hit;  // no Hamilton cycle without min degree 2
    }
    if (rec.tau2) {
        const Predicate pred = hamiltonicity_predicate(config.probe, derive_seed(rec.seed, 0x70726f6265ULL));
        ProbeResult at = pred(proc.prefix(*rec.tau2), *rec.tau2);
        rec.provenance = at.provenance;
        rec.probe_provenance.push_back(at.provenance);
        if (at.verdict == Verdict::yes) {
            rec.coincide = true;
            rec.tau_bh = rec.tau2;
            rec.tau_bh_status = TauStatus::found;
        } else {
            if (at.verdict == Verdict::no) rec.coincide = false;
            if (config.full_tau_bh) {
                TauOptions opts;
                opts.known_false = at.verdict == Verdict::no ? *rec.tau2 : *rec.tau2 - 1;
                try {
                    TauResult r = tau_property(proc, pred, opts);
                    rec.probe_provenance.insert(rec.probe_provenance.end(), r.provenance.begin(), r.provenance.end());
                    rec.bracket_lo = r.lo;
                    rec.bracket_hi = r.hi;
                    if (r.tau) {
                        rec.tau_bh = r.tau;
                        rec.tau_bh_status = TauStatus::found;
                        rec.coincide = *r.tau == *rec.tau2;
                    } else {
                        rec.tau_bh_status = TauStatus::inconclusive;
                    }
                } catch (const NoHitError&) {
                    rec.tau_bh_status = TauStatus::no_hit;
                }
            }
        }
    }
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

TrialBatch run_trials(const Hypergraph& host, std::size_t trials, std::uint64_t seed_base, const TrialConfig& config) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    TrialBatch batch;
    batch.records.resize(trials);
    std::size_t jobs = config.jobs != 0 ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, trials);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= trials) return;
            try {
                batch.records[i] = run_trial(host, i, seed_base, config);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    batch.summary = summarize(batch.records);
    return batch;
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto below = static_cast<std::size_t>(std::floor(pos));
    const std::size_t above = std::min(below + 1, values.size() - 1);
    return values[below] + (pos - static_cast<double>(below)) * (values[above] - values[below]);
}

TrialSummary summarize(const std::vector<TrialRecord>& records) {
    TrialSummary s;
    s.trials = records.size();
    std::vector<double> tau2;
    for (const auto& r : records) {
        if (r.coincide) {
            if (*r.coincide)
                ++s.coincidences;
            else
                ++s.non_coincidences;
        } else if (r.tau2) {
            ++s.inconclusive;
        }
        if (r.tau_bh_status == TauStatus::no_hit) ++s.no_hit;
        if (r.tau2) tau2.push_back(static_cast<double>(*r.tau2));
    }
    if (s.trials > 0) s.coincidence_fraction = static_cast<double>(s.coincidences) / static_cast<double>(s.trials);
    if (!tau2.empty()) {
        s.tau2_min = quantile(tau2, 0);
        s.tau2_q25 = quantile(tau2, 0.25);
        s.tau2_median = quantile(tau2, 0.5);
        s.tau2_q75 = quantile(tau2, 0.75);
        s.tau2_max = quantile(tau2, 1);
        // sorted summation keeps the mean independent of record order
        std::sort(tau2.begin(), tau2.end());
        s.tau2_mean = std::accumulate(tau2.begin(), tau2.end(), 0.0) / static_cast<double>(tau2.size());
    }
    return s;
}

}  // namespace bergehit
