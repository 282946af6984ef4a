#ifndef BERGEHIT_ENGINE_HPP
#define BERGEHIT_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bergehit/berge.hpp"
#include "bergehit/hypergraph.hpp"
#include "bergehit/oracle.hpp"

namespace bergehit {

enum class Verdict { yes, no, unknown };

/// rotation: the engine built a certificate. oracle: exhaustive search decided.
/// structural: an exact necessary condition failed (too few edges, min degree < 2, disconnected).
enum class Provenance { none, rotation, oracle, structural };

std::string_view verdict_name(Verdict v) noexcept;
std::string_view provenance_name(Provenance p) noexcept;

struct EngineEffort {
    std::size_t rotations = 0;
    std::size_t extensions = 0;
    std::size_t reopenings = 0;
    std::size_t restarts = 0;
};

struct DecisionOutcome {
    Verdict verdict = Verdict::unknown;
    std::optional<BergeCycle> certificate;
    Provenance provenance = Provenance::none;
    EngineEffort effort;
    BergePath longest;  // longest path the engine held (empty when it never ran)
    std::string reason;
};

struct DecideOptions {
    std::size_t budget = 200000;  // rotation attempts across all restarts
    std::uint64_t seed = 0;
    bool fallback = false;        // consult the exact oracle when the engine gives up
    OracleGuard guard{};
};

/**
 * One-sided Berge Hamiltonicity decision by rotation-extension.
 *
 * Exact structural checks run first and may answer no. Otherwise the engine
 * grows a path greedily from the vertex of maximum degree, then alternates
 * extension, closing, reopening a closed cycle through an edge that leaves it,
 * and breadth-first rotation searches at one end, the other end, and both
 * ends. The edge assignment of the current vertex order is kept as a
 * bipartite matching and repaired along augmenting paths, so every step that
 * succeeds yields a valid Berge path. Randomised restarts run until the
 * rotation budget is spent. A yes always carries a verified certificate.
 *
 * Requires n >= 3.
 */
DecisionOutcome decide_hamiltonian(const Hypergraph& h, const DecideOptions& options = {});

/// Exact necessary conditions; returns the failure reason when one fails.
std::optional<std::string> structural_obstruction(const Hypergraph& h);

struct GrowResult {
    BergePath longest;
    std::optional<BergeCycle> hamilton_cycle;
    EngineEffort effort;
};

/// Rotation-extension from a given valid path; the result is never shorter than the start.
GrowResult grow_path(const Hypergraph& h, const BergePath& start, std::size_t budget, std::uint64_t seed);

/// Greedy path from the vertex of maximum degree (smallest index on ties), extended at both ends.
BergePath greedy_path(const Hypergraph& h);

}  // namespace bergehit

#endif  // BERGEHIT_ENGINE_HPP
