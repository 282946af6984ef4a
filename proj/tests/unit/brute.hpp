// Independent brute-force references used only by the tests. Deliberately
// naive: no matching, no pruning, no shared code with the library beyond
// the Hypergraph accessors.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "bergehit/berge.hpp"
#include "bergehit/hypergraph.hpp"

namespace brute {

using bergehit::EdgeId;
using bergehit::Hypergraph;
using bergehit::Vertex;

inline std::vector<std::vector<Vertex>> all_r_sets(std::size_t n, std::size_t r) {
    std::vector<std::vector<Vertex>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
        std::vector<Vertex> e;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) e.push_back(v);
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool contains(const Hypergraph& h, EdgeId e, Vertex v) {
    for (Vertex u : h.edge(e))
        if (u == v) return true;
    return false;
}

// Try every assignment of distinct edges to the consecutive pairs.
inline bool sdr(const Hypergraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs, std::size_t i,
                std::vector<char>& used) {
    if (i == pairs.size()) return true;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (used[e] || !contains(h, e, pairs[i].first) || !contains(h, e, pairs[i].second)) continue;
        used[e] = 1;
        if (sdr(h, pairs, i + 1, used)) return true;
        used[e] = 0;
    }
    return false;
}

inline bool order_is_cycle(const Hypergraph& h, const std::vector<Vertex>& order) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < order.size(); ++i) pairs.push_back({order[i], order[(i + 1) % order.size()]});
    std::vector<char> used(h.num_edges(), 0);
    return sdr(h, pairs, 0, used);
}

inline bool order_is_path(const Hypergraph& h, const std::vector<Vertex>& order) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) pairs.push_back({order[i], order[i + 1]});
    std::vector<char> used(h.num_edges(), 0);
    return sdr(h, pairs, 0, used);
}

inline bool hamiltonian(const Hypergraph& h) {
    if (h.n() < 2) return false;
    std::vector<Vertex> order(h.n());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (order_is_cycle(h, order)) return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

// Length of a longest Berge path, by trying every ordered vertex subset.
inline std::size_t longest_path(const Hypergraph& h) {
    std::size_t best = h.n() > 0 ? 1 : 0;
    for (std::uint32_t mask = 1; mask < (1u << h.n()); ++mask) {
        const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
        if (k <= best) continue;
        std::vector<Vertex> order;
        for (Vertex v = 0; v < h.n(); ++v)
            if (mask >> v & 1) order.push_back(v);
        do {
            if (order_is_path(h, order)) {
                best = k;
                break;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return best;
}

// Expansion by definition: all disjoint X, Y with |X| <= k, |Y| < alpha |X|.
inline bool expander(const Hypergraph& h, std::size_t k, double alpha) {
    const std::size_t n = h.n();
    for (std::uint32_t x = 1; x < (1u << n); ++x) {
        const auto sx = static_cast<std::size_t>(__builtin_popcount(x));
        if (sx > k) continue;
        for (std::uint32_t y = 0; y < (1u << n); ++y) {
            if (x & y) continue;
            if (static_cast<double>(__builtin_popcount(y)) >= alpha * static_cast<double>(sx)) continue;
            bool escape = false;
            for (EdgeId e = 0; e < h.num_edges() && !escape; ++e) {
                int in_x = 0;
                bool in_y = false;
                for (Vertex v : h.edge(e)) {
                    in_x += x >> v & 1;
                    in_y = in_y || (y >> v & 1);
                }
                escape = in_x == 1 && !in_y;
            }
            if (!escape) return false;
        }
    }
    return true;
}

// Endpoints reachable by any sequence of rotations, searching over whole paths.
inline std::set<Vertex> rotation_endpoints(const Hypergraph& h, const bergehit::BergePath& start) {
    std::set<std::vector<Vertex>> seen{start.vertices};
    std::vector<bergehit::BergePath> stack{start};
    std::set<Vertex> ends{start.back()};
    while (!stack.empty()) {
        auto p = stack.back();
        stack.pop_back();
        for (EdgeId e : h.incident(p.back())) {
            for (std::size_t i = 0; i + 2 < p.length(); ++i) {
                auto q = bergehit::rotate(h, p, e, i);
                if (!q || !seen.insert(q->vertices).second) continue;
                ends.insert(q->back());
                stack.push_back(*q);
            }
        }
    }
    return ends;
}

}  // namespace brute
