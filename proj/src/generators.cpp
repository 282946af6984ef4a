#include "bergehit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bergehit/errors.hpp"
#include "bergehit/rng.hpp"

namespace bergehit {

namespace {

// Visit every r-subset of {lo, ..., hi-1} in lexicographic order.
template <typename Fn>
void for_each_combination(Vertex lo, Vertex hi, std::size_t r, Fn&& fn) {
    if (hi < lo || static_cast<std::size_t>(hi - lo) < r) return;
    std::vector<Vertex> idx(r);
    std::iota(idx.begin(), idx.end(), lo);
    while (true) {
        fn(idx);
        std::size_t pos = r;
        while (pos > 0 && idx[pos - 1] == hi - r + pos - 1) --pos;
        if (pos == 0) return;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void require_uniformity(std::size_t n, std::size_t r) {
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    if (n < r) throw std::invalid_argument("need n >= r");
}

}  // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::complete: return "complete";
        case Family::two_cliques: return "two_cliques";
        case Family::two_cliques_matching: return "two_cliques_matching";
        case Family::binomial: return "binomial";
        case Family::degree_condition_random: return "degree_condition_random";
    }
    return "unknown";
}

Family family_from_name(std::string_view name) {
    for (auto f : {Family::complete, Family::two_cliques, Family::two_cliques_matching, Family::binomial,
                   Family::degree_condition_random})
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown host family '" + std::string(name) + "'");
}

Hypergraph complete(std::size_t n, std::size_t r) {
    require_uniformity(n, r);
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(0, static_cast<Vertex>(n), r, [&](const std::vector<Vertex>& c) { edges.push_back(c); });
    return Hypergraph(n, r, edges);
}

Hypergraph two_cliques(std::size_t n, std::size_t r) {
    if (n % 2 != 0) throw std::invalid_argument("two_cliques needs even n");
    require_uniformity(n / 2, r);
    const auto half = static_cast<Vertex>(n / 2);
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(0, half, r, [&](const std::vector<Vertex>& c) { edges.push_back(c); });
    for_each_combination(half, static_cast<Vertex>(n), r, [&](const std::vector<Vertex>& c) { edges.push_back(c); });
    return Hypergraph(n, r, edges);
}

Hypergraph two_cliques_matching(std::size_t n, std::uint64_t seed) {
    if (n == 0 || n % 6 != 0) throw std::invalid_argument("two_cliques_matching needs n divisible by 6");
    const auto half = static_cast<Vertex>(n / 2);
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(0, half, 3, [&](const std::vector<Vertex>& c) { edges.push_back(c); });
    for_each_combination(half, static_cast<Vertex>(n), 3, [&](const std::vector<Vertex>& c) { edges.push_back(c); });

    Rng rng(derive_seed(seed, 0x6d61746368ULL));
    const std::size_t triples = n / 3;
    std::vector<char> one_left(triples, 0);
    std::fill(one_left.begin(), one_left.begin() + static_cast<std::ptrdiff_t>(n / 6), 1);
    rng.shuffle(one_left);
    std::vector<Vertex> left(half), right(half);
    std::iota(left.begin(), left.end(), Vertex{0});
    std::iota(right.begin(), right.end(), half);
    rng.shuffle(left);
    rng.shuffle(right);
    std::size_t li = 0, ri = 0;
    for (std::size_t t = 0; t < triples; ++t) {
        std::vector<Vertex> e;
        if (one_left[t]) {
            e = {left[li], right[ri], right[ri + 1]};
            li += 1;
            ri += 2;
        } else {
            e = {left[li], left[li + 1], right[ri]};
            li += 2;
            ri += 1;
        }
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, 3, edges);
}

Hypergraph binomial(std::size_t n, std::size_t r, double p, std::uint64_t seed) {
    require_uniformity(n, r);
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability p must lie in [0, 1]");
    Rng rng(derive_seed(seed, 0x62696e6f6dULL));
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(0, static_cast<Vertex>(n), r, [&](const std::vector<Vertex>& c) {
        if (rng.uniform() < p) edges.push_back(c);
    });
    return Hypergraph(n, r, edges);
}

Hypergraph degree_condition_random(std::size_t n, std::size_t r, double eps, std::uint64_t seed,
                                   const DegreeConditionOptions& options) {
    if (!(eps > 0.0 && eps < 0.2)) throw std::invalid_argument("degree_condition_random needs 0 < eps < 0.2");
    require_uniformity(n, r);
    double p = std::min(1.0, 4.0 * eps);
    std::optional<Vertex> last_witness;
    for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
        Hypergraph h = binomial(n, r, p, derive_seed(seed, attempt));
        auto verdict = check_theorem_condition(h, eps);
        if (verdict.holds) return h;
        last_witness = verdict.witness;
        p = std::min(1.0, 2.0 * p);
    }
    throw GenerationError("degree_condition_random: no host passed the codegree condition after " +
                          std::to_string(options.max_attempts) + " attempts; last failing vertex " +
                          (last_witness ? std::to_string(*last_witness) : std::string("none")));
}

Hypergraph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::complete: return complete(spec.n, spec.r);
        case Family::two_cliques: return two_cliques(spec.n, spec.r);
        case Family::two_cliques_matching:
            if (spec.r != 3) throw std::invalid_argument("two_cliques_matching is a 3-graph family");
            return two_cliques_matching(spec.n, spec.seed);
        case Family::binomial: return binomial(spec.n, spec.r, spec.p, spec.seed);
        case Family::degree_condition_random: return degree_condition_random(spec.n, spec.r, spec.eps, spec.seed);
    }
    throw std::invalid_argument("unknown host family");
}

}  // namespace bergehit
