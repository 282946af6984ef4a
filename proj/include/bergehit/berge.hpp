#ifndef BERGEHIT_BERGE_HPP
#define BERGEHIT_BERGE_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "bergehit/hypergraph.hpp"

namespace bergehit {

/// v[0], e[0], v[1], ..., e[l-2], v[l-1] where edge e[i] joins v[i] and v[i+1].
struct BergePath {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edge_ids;

    std::size_t length() const noexcept { return vertices.size(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    friend bool operator==(const BergePath&, const BergePath&) = default;
};

/// Cyclic sequence; edge e[i] joins v[i] and v[(i+1) mod k].
struct BergeCycle {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edge_ids;

    std::size_t length() const noexcept { return vertices.size(); }
    friend bool operator==(const BergeCycle&, const BergeCycle&) = default;
};

/// Weak mode skips the distinct-edge requirement.
bool verify_path(const Hypergraph& h, const BergePath& p, bool weak = false);
bool verify_cycle(const Hypergraph& h, const BergeCycle& c, bool weak = false);
bool is_berge_hamilton_cycle(const Hypergraph& h, const BergeCycle& c);

BergePath reversed(const BergePath& p);

/**
 * Rotation fixing the first vertex. With pivot index i the result is
 * v[0..i], e, v[l-1], e[l-2], ..., e[i+1], v[i+1]; edge e[i] leaves the path.
 * When e is already on the path as e[j] the pivot is forced to j.
 *
 * Returns nullopt when the pivot is invalid or degenerate (i = l-2 keeps the
 * endpoint). Throws std::invalid_argument when e does not contain v[l-1].
 */
std::optional<BergePath> rotate(const Hypergraph& h, const BergePath& p, EdgeId e, std::size_t pivot);

/// Rotation with the smallest valid pivot.
std::optional<BergePath> rotate(const Hypergraph& h, const BergePath& p, EdgeId e);

struct RotationClosure {
    Vertex fixed = 0;
    std::map<Vertex, BergePath> paths;  // endpoint -> witness path
    std::vector<Vertex> discovery;      // endpoints in BFS discovery order
    std::size_t rotations = 0;
    bool exhausted = true;              // false when the budget cut the search short

    std::size_t endpoint_count() const noexcept { return paths.size(); }
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Breadth-first rotation search from p fixing p.front(), one witness per endpoint.
RotationClosure endpoint_closure(const Hypergraph& h, const BergePath& p, std::size_t budget = kUnlimited);

struct StepResult {
    enum class Kind { extended, closed, stuck };
    Kind kind = Kind::stuck;
    std::optional<BergePath> path;
    std::optional<BergeCycle> cycle;
};

/// Greedy step: extend past p.back() with an unused edge, else close with an unused edge holding both ends.
StepResult extend_or_close(const Hypergraph& h, const BergePath& p);

}  // namespace bergehit

#endif  // BERGEHIT_BERGE_HPP
