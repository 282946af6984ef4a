#ifndef BERGEHIT_ABSORPTION_HPP
#define BERGEHIT_ABSORPTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bergehit/engine.hpp"
#include "bergehit/hypergraph.hpp"

namespace bergehit {

/// max(2, ceil(eps^8 ln n)).
std::size_t default_d0(std::size_t n, double eps);

/**
 * Sparse sub-edge-set: a vertex of degree <= d0 keeps all its edges, any other
 * vertex keeps a uniform d0-subset of its incident edges. Returns the union
 * as ascending G edge ids. Throws std::invalid_argument when d0 == 0.
 */
std::vector<EdgeId> extract_expander(const Hypergraph& g, std::size_t d0, std::uint64_t seed);

struct ConnectResult {
    std::vector<EdgeId> edges;         // input ids followed by the patch edges
    std::size_t added = 0;
    bool connected = false;
    std::vector<Vertex> obstruction;   // a component of G with no crossing edge, when patching fails
};

/// Adds the lowest-id G edge that crosses a component of Gamma until Gamma is connected.
ConnectResult connect_components(const Hypergraph& g, const std::vector<EdgeId>& gamma);

struct AbsorptionStep {
    std::size_t step = 0;
    std::size_t gamma_edges = 0;       // |E(Gamma)| before the addition
    std::vector<EdgeId> added;         // G edge ids, one or two
    Vertex s = 0;
    Vertex t = 0;
    std::size_t path_length = 0;       // longest path held before the step
    std::size_t result_length = 0;     // after the step (n when a Hamilton cycle closed)
    bool hamiltonian = false;
};

struct AbsorptionResult {
    DecisionOutcome outcome;           // certificate edge ids refer to G
    std::vector<AbsorptionStep> trace;
    std::size_t gamma0_edges = 0;
    std::size_t patch_edges = 0;
    std::size_t final_gamma_edges = 0;
};

/**
 * Expander extraction, connectivity patching, then at most n absorption
 * steps. Each step grows the longest path of Gamma by rotation-extension and
 * scans the endpoint pairs (s, t) of the two rotation closures for edges of
 * G outside Gamma that extend the path, close it, or close it as a pair
 * e_s = {s, q_j, ..}, e_t = {t, q_(j-1), ..}. A cycle that is not spanning is
 * reopened through a Gamma edge leaving it, so every step lengthens the path
 * or finishes with a Hamilton cycle. budget counts rotation attempts.
 */
AbsorptionResult absorption_run(const Hypergraph& g, std::size_t d0, std::size_t budget, std::uint64_t seed);

}  // namespace bergehit

#endif  // BERGEHIT_ABSORPTION_HPP
