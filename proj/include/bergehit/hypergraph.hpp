#ifndef BERGEHIT_HYPERGRAPH_HPP
#define BERGEHIT_HYPERGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bergehit/vertex_set.hpp"

namespace bergehit {

/**
 * Immutable r-uniform hypergraph on vertices 0..n-1.
 *
 * Edges are identified by their index in the edge list; every downstream
 * structure (processes, Berge certificates, subgraphs) refers to edges by id.
 * Each edge is stored sorted, so two edges are equal as sets iff they are
 * equal positionally. incident(v) lists edge ids in ascending order.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates arity, range and distinctness; throws std::invalid_argument.
    Hypergraph(std::size_t n, std::size_t r, const std::vector<std::vector<Vertex>>& edges);

    static Hypergraph empty(std::size_t n, std::size_t r) { return Hypergraph(n, r, {}); }

    std::size_t n() const noexcept { return n_; }
    std::size_t r() const noexcept { return r_; }
    std::size_t num_edges() const noexcept { return r_ == 0 ? 0 : verts_.size() / r_; }

    std::span<const Vertex> edge(EdgeId e) const noexcept {
        return {verts_.data() + static_cast<std::size_t>(e) * r_, r_};
    }
    std::span<const EdgeId> incident(Vertex v) const noexcept {
        return {inc_.data() + inc_off_[v], inc_off_[v + 1] - inc_off_[v]};
    }
    bool edge_contains(EdgeId e, Vertex v) const noexcept;

    /// Id of the edge equal to the given vertex set, if present. Input need not be sorted.
    std::optional<EdgeId> find_edge(std::span<const Vertex> vertices) const;

    /// Spanning subgraph on the listed edge ids, in the given order (ids must be distinct).
    Hypergraph subgraph(std::span<const EdgeId> ids) const;

    /// Same vertex set with extra edges appended after the existing ones.
    Hypergraph with_edges(const std::vector<std::vector<Vertex>>& extra) const;

    std::size_t degree(Vertex v) const;
    std::size_t codegree(Vertex u, Vertex v) const;
    std::size_t min_degree() const noexcept;
    std::size_t max_degree() const noexcept;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    struct Trusted {};
    Hypergraph(Trusted, std::size_t n, std::size_t r, std::vector<Vertex> flat);
    void build_indices();
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t r_ = 0;
    std::vector<Vertex> verts_;          // num_edges * r, each edge sorted
    std::vector<std::size_t> inc_off_;   // n + 1 offsets into inc_
    std::vector<EdgeId> inc_;
    std::vector<EdgeId> lex_order_;      // edge ids sorted lexicographically by vertex tuple
};

/// Vertices outside S that share an edge with some member of S.
VertexSet neighborhood(const Hypergraph& h, const VertexSet& s);

/// Component label per vertex; labels are 0.. in order of smallest member.
std::vector<std::uint32_t> component_labels(const Hypergraph& h);
std::size_t component_count(const Hypergraph& h);

/// One component spanning all vertices. Isolated vertices are their own components.
bool is_connected(const Hypergraph& h);

struct ExpanderOptions {
    std::size_t exhaustive_max_n = 16;
    bool sampled = false;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
};

struct ExpanderResult {
    bool holds = true;   // exhaustive: verified; sampled: no counterexample found
    bool exhaustive = true;
    std::size_t draws = 0;
    std::optional<VertexSet> witness_x;
    std::optional<VertexSet> witness_y;
};

/**
 * (k, alpha)-expansion: for all disjoint X, Y with |X| <= k and |Y| < alpha|X|
 * some edge meets X in exactly one vertex and misses Y.
 *
 * Exhaustive mode enumerates X and solves the bounded hitting-set problem
 * for Y exactly; it throws CapacityError above options.exhaustive_max_n.
 */
ExpanderResult is_expander(const Hypergraph& h, std::size_t k, double alpha, const ExpanderOptions& options = {});

/// Definition check of a single (X, Y) pair: true when (X, Y) is a violating pair.
bool is_expansion_witness(const Hypergraph& h, const VertexSet& x, const VertexSet& y, double alpha);

struct ConditionResult {
    bool holds = true;
    std::optional<Vertex> witness;
};

/// Every v has at least (1/2 + eps) n partners u with codegree(u, v) >= eps n^(r-2).
ConditionResult check_theorem_condition(const Hypergraph& h, double eps);

struct CorollaryReport {
    bool delta1_ok = false;
    bool delta2_ok = false;
    std::size_t min_degree = 0;
    std::size_t min_codegree = 0;
    double delta1_bound = 0;
    double delta2_bound = 0;
};

CorollaryReport check_corollary_conditions(const Hypergraph& h, double eps);

/// Text format: "n r m" header, then m lines of r vertex ids. '#' starts a comment.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);
Hypergraph read_hypergraph_file(const std::string& path);

double binomial_coefficient(std::size_t n, std::size_t k);

}  // namespace bergehit

#endif  // BERGEHIT_HYPERGRAPH_HPP
