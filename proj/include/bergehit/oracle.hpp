#ifndef BERGEHIT_ORACLE_HPP
#define BERGEHIT_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bergehit/berge.hpp"
#include "bergehit/hypergraph.hpp"

namespace bergehit {

/// Size limits for the exhaustive methods. Requests above them throw CapacityError.
struct OracleGuard {
    std::size_t max_n = 10;
    std::size_t max_edges = 400;

    bool admits(const Hypergraph& h) const noexcept { return h.n() <= max_n && h.num_edges() <= max_edges; }
};

/**
 * Exact Berge Hamiltonicity. Cyclic vertex orders are enumerated with v[0] = 0
 * and reflections removed (v[1] < v[n-1]); consecutive pairs are matched to
 * distinct edges incrementally, so a prefix is abandoned as soon as its pairs
 * have no system of distinct representatives.
 */
std::optional<BergeCycle> exact_hamiltonian(const Hypergraph& h, const OracleGuard& guard = {});

/// Maximum-length Berge path, lexicographically smallest vertex sequence among the longest.
BergePath exact_longest_path(const Hypergraph& h, const OracleGuard& guard = {});

/**
 * Whether adding the two r-sets makes the host Berge Hamiltonian or lengthens
 * its longest Berge path. Throws std::invalid_argument when either set is
 * already an edge (or malformed) and std::domain_error when the host is
 * already Hamiltonian.
 */
bool exact_is_booster(const Hypergraph& h, const std::vector<Vertex>& e1, const std::vector<Vertex>& e2,
                      const OracleGuard& guard = {});

}  // namespace bergehit

#endif  // BERGEHIT_ORACLE_HPP
