#ifndef BERGEHIT_GENERATORS_HPP
#define BERGEHIT_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "bergehit/hypergraph.hpp"

namespace bergehit {

enum class Family { complete, two_cliques, two_cliques_matching, binomial, degree_condition_random };

std::string_view family_name(Family f) noexcept;
Family family_from_name(std::string_view name);

/// Everything needed to rebuild a host. Fields irrelevant to the family are ignored.
struct GenSpec {
    Family family = Family::complete;
    std::size_t n = 0;
    std::size_t r = 3;
    double p = 0.5;
    double eps = 0.1;
    std::uint64_t seed = 0;
};

/// All C(n, r) edges in lexicographic order.
Hypergraph complete(std::size_t n, std::size_t r);

/// Complete r-graphs on {0..n/2-1} and {n/2..n-1}.
Hypergraph two_cliques(std::size_t n, std::size_t r);

/**
 * Two complete 3-graphs on halves V1 = {0..n/2-1}, V2 = {n/2..n-1} plus a
 * perfect matching of n/3 crossing triples. Covering both halves exactly
 * forces n/6 triples of each split type (1 in V1 + 2 in V2, or 2 + 1); which
 * triples get which split is uniform, then vertices are dealt without
 * replacement. Matching edges are appended after the clique edges.
 */
Hypergraph two_cliques_matching(std::size_t n, std::uint64_t seed);

/// Each of the C(n, r) candidate edges independently with probability p.
Hypergraph binomial(std::size_t n, std::size_t r, double p, std::uint64_t seed);

struct DegreeConditionOptions {
    std::size_t max_attempts = 16;
};

/**
 * Binomial host certified by check_theorem_condition(eps). Starts at density
 * min(1, 4 eps) and doubles the density after each failed attempt.
 * Throws GenerationError naming the last failing vertex when attempts run out.
 */
Hypergraph degree_condition_random(std::size_t n, std::size_t r, double eps, std::uint64_t seed,
                                   const DegreeConditionOptions& options = {});

Hypergraph generate(const GenSpec& spec);

}  // namespace bergehit

#endif  // BERGEHIT_GENERATORS_HPP
