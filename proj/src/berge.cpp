#include "bergehit/berge.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bergehit {

namespace {

bool distinct_vertices(const Hypergraph& h, const std::vector<Vertex>& vs) {
    std::vector<bool> seen(h.n(), false);
    for (Vertex v : vs) {
        if (v >= h.n() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool distinct_edges(const std::vector<EdgeId>& es) {
    std::unordered_set<EdgeId> seen(es.begin(), es.end());
    return seen.size() == es.size();
}

}  // namespace

bool verify_path(const Hypergraph& h, const BergePath& p, bool weak) {
    const std::size_t l = p.vertices.size();
    if (l == 0 || p.edge_ids.size() != l - 1) return false;
    if (!distinct_vertices(h, p.vertices)) return false;
    for (std::size_t i = 0; i + 1 < l; ++i) {
        EdgeId e = p.edge_ids[i];
        if (e >= h.num_edges()) return false;
        if (!h.edge_contains(e, p.vertices[i]) || !h.edge_contains(e, p.vertices[i + 1])) return false;
    }
    return weak || distinct_edges(p.edge_ids);
}

bool verify_cycle(const Hypergraph& h, const BergeCycle& c, bool weak) {
    const std::size_t k = c.vertices.size();
    if (k < 2 || c.edge_ids.size() != k) return false;
    if (!distinct_vertices(h, c.vertices)) return false;
    for (std::size_t i = 0; i < k; ++i) {
        EdgeId e = c.edge_ids[i];
        if (e >= h.num_edges()) return false;
        if (!h.edge_contains(e, c.vertices[i]) || !h.edge_contains(e, c.vertices[(i + 1) % k])) return false;
    }
    return weak || distinct_edges(c.edge_ids);
}

bool is_berge_hamilton_cycle(const Hypergraph& h, const BergeCycle& c) {
    return c.vertices.size() == h.n() && verify_cycle(h, c, false);
}

BergePath reversed(const BergePath& p) {
    return {std::vector<Vertex>(p.vertices.rbegin(), p.vertices.rend()),
            std::vector<EdgeId>(p.edge_ids.rbegin(), p.edge_ids.rend())};
}

std::optional<BergePath> rotate(const Hypergraph& h, const BergePath& p, EdgeId e, std::size_t pivot) {
    const std::size_t l = p.vertices.size();
    if (l == 0) throw std::invalid_argument("rotation of an empty path");
    if (e >= h.num_edges() || !h.edge_contains(e, p.back()))
        throw std::invalid_argument("rotation edge must contain the path endpoint");
    if (l < 3 || pivot + 2 >= l) return std::nullopt;  // i = l-2 is degenerate, i = l-1 is the endpoint
    auto on_path = std::find(p.edge_ids.begin(), p.edge_ids.end(), e);
    if (on_path != p.edge_ids.end()) {
        if (static_cast<std::size_t>(on_path - p.edge_ids.begin()) != pivot) return std::nullopt;
    } else if (!h.edge_contains(e, p.vertices[pivot])) {
        return std::nullopt;
    }
    BergePath out;
    out.vertices.reserve(l);
    out.edge_ids.reserve(l - 1);
    out.vertices.assign(p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(pivot) + 1);
    out.edge_ids.assign(p.edge_ids.begin(), p.edge_ids.begin() + static_cast<std::ptrdiff_t>(pivot));
    out.edge_ids.push_back(e);
    for (std::size_t j = l - 1; j > pivot; --j) {
        out.vertices.push_back(p.vertices[j]);
        if (j - 1 > pivot) out.edge_ids.push_back(p.edge_ids[j - 1]);
    }
    return out;
}

std::optional<BergePath> rotate(const Hypergraph& h, const BergePath& p, EdgeId e) {
    if (p.vertices.empty()) throw std::invalid_argument("rotation of an empty path");
    if (e >= h.num_edges() || !h.edge_contains(e, p.back()))
        throw std::invalid_argument("rotation edge must contain the path endpoint");
    auto on_path = std::find(p.edge_ids.begin(), p.edge_ids.end(), e);
    if (on_path != p.edge_ids.end())
        return rotate(h, p, e, static_cast<std::size_t>(on_path - p.edge_ids.begin()));
    for (std::size_t i = 0; i + 2 < p.vertices.size(); ++i)
        if (h.edge_contains(e, p.vertices[i])) return rotate(h, p, e, i);
    return std::nullopt;
}

RotationClosure endpoint_closure(const Hypergraph& h, const BergePath& p, std::size_t budget) {
    if (!verify_path(h, p)) throw std::invalid_argument("endpoint_closure needs a valid Berge path");
    RotationClosure out;
    out.fixed = p.front();
    out.paths.emplace(p.back(), p);
    out.discovery.push_back(p.back());

    std::deque<Vertex> queue{p.back()};
    std::vector<int> pos(h.n(), -1);
    std::unordered_map<EdgeId, std::size_t> edge_pos;
    while (!queue.empty()) {
        const BergePath cur = out.paths.at(queue.front());
        queue.pop_front();
        const std::size_t l = cur.length();
        if (l < 3) continue;
        for (std::size_t i = 0; i < l; ++i) pos[cur.vertices[i]] = static_cast<int>(i);
        edge_pos.clear();
        for (std::size_t i = 0; i + 1 < l; ++i) edge_pos.emplace(cur.edge_ids[i], i);

        for (EdgeId e : h.incident(cur.back())) {
            std::vector<std::size_t> pivots;
            if (auto it = edge_pos.find(e); it != edge_pos.end()) {
                if (it->second + 2 < l) pivots.push_back(it->second);
            } else {
                for (Vertex u : h.edge(e))
                    if (pos[u] >= 0 && static_cast<std::size_t>(pos[u]) + 2 < l) pivots.push_back(static_cast<std::size_t>(pos[u]));
                std::sort(pivots.begin(), pivots.end());
            }
            for (std::size_t pivot : pivots) {
                if (out.rotations >= budget) {
                    out.exhausted = false;
                    for (Vertex v : cur.vertices) pos[v] = -1;
                    return out;
                }
                ++out.rotations;
                Vertex next_end = cur.vertices[pivot + 1];
                if (out.paths.count(next_end) != 0) continue;
                auto rotated = rotate(h, cur, e, pivot);
                if (!rotated) continue;
                out.paths.emplace(next_end, std::move(*rotated));
                out.discovery.push_back(next_end);
                queue.push_back(next_end);
            }
        }
        for (Vertex v : cur.vertices) pos[v] = -1;
    }
    return out;
}

StepResult extend_or_close(const Hypergraph& h, const BergePath& p) {
    if (!verify_path(h, p)) throw std::invalid_argument("extend_or_close needs a valid Berge path");
    std::unordered_set<EdgeId> used(p.edge_ids.begin(), p.edge_ids.end());
    std::vector<bool> on_path(h.n(), false);
    for (Vertex v : p.vertices) on_path[v] = true;
    const Vertex x = p.back();
    for (EdgeId e : h.incident(x)) {
        if (used.count(e) != 0) continue;
        for (Vertex w : h.edge(e)) {
            if (on_path[w]) continue;
            StepResult res;
            res.kind = StepResult::Kind::extended;
            res.path = p;
            res.path->edge_ids.push_back(e);
            res.path->vertices.push_back(w);
            return res;
        }
    }
    if (p.length() >= 2) {
        for (EdgeId e : h.incident(x)) {
            if (used.count(e) != 0 || !h.edge_contains(e, p.front())) continue;
            StepResult res;
            res.kind = StepResult::Kind::closed;
            res.cycle = BergeCycle{p.vertices, p.edge_ids};
            res.cycle->edge_ids.push_back(e);
            return res;
        }
    }
    return {};
}

}  // namespace bergehit
