#include "bergehit/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergehit/berge.hpp"
#include "bergehit/rng.hpp"

namespace bergehit {

std::size_t default_d0(std::size_t n, double eps) {
    if (n < 2) return 2;
    double literal = std::ceil(std::pow(eps, 8) * std::log(static_cast<double>(n)));
    return std::max<std::size_t>(2, static_cast<std::size_t>(literal));
}

std::vector<EdgeId> extract_expander(const Hypergraph& g, std::size_t d0, std::uint64_t seed) {
    if (d0 == 0) throw std::invalid_argument("d0 must be at least 1");
    Rng rng(derive_seed(seed, 0x67616d6d61ULL));
    std::vector<char> keep(g.num_edges(), 0);
    std::vector<EdgeId> pool;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto inc = g.incident(v);
        if (inc.size() <= d0) {
            for (EdgeId e : inc) keep[e] = 1;
            continue;
        }
        pool.assign(inc.begin(), inc.end());
        // partial Fisher-Yates: the first d0 slots are a uniform d0-subset
        for (std::size_t i = 0; i < d0; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
            std::swap(pool[i], pool[j]);
            keep[pool[i]] = 1;
        }
    }
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (keep[e]) out.push_back(e);
    return out;
}

ConnectResult connect_components(const Hypergraph& g, const std::vector<EdgeId>& gamma) {
    ConnectResult out;
    out.edges = gamma;
    std::vector<char> in_gamma(g.num_edges(), 0);
    for (EdgeId e : gamma) in_gamma.at(e) = 1;
    while (true) {
        auto labels = component_labels(g.subgraph(out.edges));
        if (g.n() == 0 || *std::max_element(labels.begin(), labels.end()) == 0) {
            out.connected = true;
            return out;
        }
        std::optional<EdgeId> bridge;
        for (EdgeId e = 0; e < g.num_edges() && !bridge; ++e) {
            if (in_gamma[e]) continue;
            auto vs = g.edge(e);
            for (Vertex v : vs)
                if (labels[v] != labels[vs[0]]) {
                    bridge = e;
                    break;
                }
        }
        if (!bridge) break;
        out.edges.push_back(*bridge);
        in_gamma[*bridge] = 1;
        ++out.added;
    }
    auto glabels = component_labels(g);
    for (Vertex v = 0; v < g.n(); ++v)
        if (glabels[v] == 0) out.obstruction.push_back(v);
    return out;
}

namespace {

struct Booster {
    std::vector<EdgeId> added;
    Vertex s = 0;
    Vertex t = 0;
    std::optional<BergePath> path;
    std::optional<BergeCycle> cycle;  // set only for Hamilton cycles
};

bool lex_less(const Hypergraph& g, EdgeId a, EdgeId b) {
    auto x = g.edge(a);
    auto y = g.edge(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

class BoosterSearch {
public:
    BoosterSearch(const Hypergraph& g, const std::vector<char>& in_gamma)
        : g_(g), in_gamma_(in_gamma), pos_(g.n(), -1) {}

    // q lives in G edge ids; s = q.front(), t = q.back().
    std::optional<Booster> try_at(const BergePath& q) {
        const std::size_t l = q.length();
        for (std::size_t i = 0; i < l; ++i) pos_[q.vertices[i]] = static_cast<int>(i);
        auto found = scan(q);
        for (Vertex v : q.vertices) pos_[v] = -1;
        return found;
    }

private:
    std::vector<EdgeId> outside_edges(Vertex v) const {
        std::vector<EdgeId> out;
        for (EdgeId e : g_.incident(v))
            if (!in_gamma_[e]) out.push_back(e);
        std::sort(out.begin(), out.end(), [this](EdgeId a, EdgeId b) { return lex_less(g_, a, b); });
        return out;
    }

    std::optional<Booster> scan(const BergePath& q) {
        const std::size_t l = q.length();
        const Vertex s = q.front();
        const Vertex t = q.back();
        const auto out_s = outside_edges(s);
        const auto out_t = outside_edges(t);
        for (EdgeId e : out_s) {
            for (Vertex w : g_.edge(e)) {
                if (pos_[w] >= 0) continue;
                BergePath p = reversed(q);
                p.vertices.push_back(w);
                p.edge_ids.push_back(e);
                return Booster{{e}, s, t, std::move(p), std::nullopt};
            }
            if (l >= 2 && g_.edge_contains(e, t)) {
                BergeCycle c{q.vertices, q.edge_ids};
                c.edge_ids.push_back(e);
                return finish(std::move(c), {e}, s, t);
            }
            for (Vertex u : g_.edge(e)) {
                const int j = pos_[u];
                if (j < 2 || static_cast<std::size_t>(j) + 2 > l) continue;
                const Vertex before = q.vertices[static_cast<std::size_t>(j) - 1];
                for (EdgeId f : out_t) {
                    if (f == e || !g_.edge_contains(f, before)) continue;
                    return finish(pair_cycle(q, static_cast<std::size_t>(j), e, f), {e, f}, s, t);
                }
            }
        }
        for (EdgeId e : out_t) {
            for (Vertex w : g_.edge(e)) {
                if (pos_[w] >= 0) continue;
                BergePath p = q;
                p.vertices.push_back(w);
                p.edge_ids.push_back(e);
                return Booster{{e}, s, t, std::move(p), std::nullopt};
            }
        }
        return std::nullopt;
    }

    // q_0..q_(j-1), e_t, q_(l-1), ..., q_j, e_s back to q_0; link q_(j-1)q_j leaves.
    static BergeCycle pair_cycle(const BergePath& q, std::size_t j, EdgeId e_s, EdgeId e_t) {
        const std::size_t l = q.length();
        BergeCycle c;
        for (std::size_t i = 0; i < j; ++i) c.vertices.push_back(q.vertices[i]);
        for (std::size_t i = 0; i + 1 < j; ++i) c.edge_ids.push_back(q.edge_ids[i]);
        c.edge_ids.push_back(e_t);
        for (std::size_t i = l; i-- > j;) {
            c.vertices.push_back(q.vertices[i]);
            if (i > j) c.edge_ids.push_back(q.edge_ids[i - 1]);
        }
        c.edge_ids.push_back(e_s);
        return c;
    }

    std::optional<Booster> finish(BergeCycle c, std::vector<EdgeId> added, Vertex s, Vertex t) {
        if (c.length() == g_.n()) return Booster{std::move(added), s, t, std::nullopt, std::move(c)};
        std::vector<char> now(in_gamma_);
        for (EdgeId e : added) now[e] = 1;
        if (auto p = reopen(c, now)) return Booster{std::move(added), s, t, std::move(p), std::nullopt};
        return std::nullopt;
    }

    // Path on V(c) plus one outside vertex w, entering c at c_j through a Gamma edge f.
    std::optional<BergePath> reopen(const BergeCycle& c, const std::vector<char>& gamma) const {
        const std::size_t k = c.length();
        std::vector<char> on_cycle(g_.n(), 0);
        for (Vertex v : c.vertices) on_cycle[v] = 1;
        for (std::size_t j = 0; j < k; ++j) {
            const EdgeId in_link = c.edge_ids[(j + k - 1) % k];
            const EdgeId out_link = c.edge_ids[j];
            for (EdgeId f : g_.incident(c.vertices[j])) {
                if (!gamma[f]) continue;
                const bool on = std::find(c.edge_ids.begin(), c.edge_ids.end(), f) != c.edge_ids.end();
                if (on && f != in_link && f != out_link) continue;
                for (Vertex w : g_.edge(f)) {
                    if (on_cycle[w]) continue;
                    BergePath p{{w}, {f}};
                    const bool forward = f != out_link;
                    for (std::size_t step = 0; step < k; ++step) {
                        const std::size_t idx = forward ? (j + step) % k : (j + k - step) % k;
                        p.vertices.push_back(c.vertices[idx]);
                        if (step + 1 < k) p.edge_ids.push_back(forward ? c.edge_ids[idx] : c.edge_ids[(idx + k - 1) % k]);
                    }
                    return p;
                }
            }
        }
        return std::nullopt;
    }

    const Hypergraph& g_;
    const std::vector<char>& in_gamma_;
    std::vector<int> pos_;
};

BergePath map_ids(const BergePath& p, const std::vector<EdgeId>& ids) {
    BergePath out{p.vertices, {}};
    for (EdgeId e : p.edge_ids) out.edge_ids.push_back(ids[e]);
    return out;
}

BergePath unmap_ids(const BergePath& p, const std::vector<int>& local) {
    BergePath out{p.vertices, {}};
    for (EdgeId e : p.edge_ids) out.edge_ids.push_back(static_cast<EdgeId>(local[e]));
    return out;
}

}  // namespace

AbsorptionResult absorption_run(const Hypergraph& g, std::size_t d0, std::size_t budget, std::uint64_t seed) {
    AbsorptionResult res;
    DecisionOutcome& out = res.outcome;
    const std::size_t n = g.n();
    if (n < 3) {
        out.reason = "needs at least three vertices";
        return res;
    }
    if (auto reason = structural_obstruction(g)) {
        out.verdict = Verdict::no;
        out.provenance = Provenance::structural;
        out.reason = *reason;
        return res;
    }
    if (budget == 0) {
        out.reason = "rotation budget is zero";
        return res;
    }

    std::vector<EdgeId> ids = extract_expander(g, d0, seed);
    res.gamma0_edges = ids.size();
    ConnectResult conn = connect_components(g, ids);
    ids = std::move(conn.edges);
    res.patch_edges = conn.added;

    std::vector<char> in_gamma(g.num_edges(), 0);
    std::vector<int> local(g.num_edges(), -1);
    for (std::size_t k = 0; k < ids.size(); ++k) {
        in_gamma[ids[k]] = 1;
        local[ids[k]] = static_cast<int>(k);
    }

    std::size_t remaining = budget;
    auto spend = [&](std::size_t used) {
        remaining -= std::min(used, remaining);
        out.effort.rotations += used;
    };

    BergePath cur;
    for (std::size_t step = 0;; ++step) {
        const Hypergraph gamma = g.subgraph(ids);
        BergePath start = cur.vertices.empty() ? BergePath{{0}, {}} : unmap_ids(cur, local);
        if (cur.vertices.empty()) {
            for (Vertex v = 1; v < n; ++v)
                if (gamma.degree(v) > gamma.degree(start.vertices[0])) start.vertices[0] = v;
        }
        GrowResult grown = grow_path(gamma, start, remaining, derive_seed(seed, 0x1000 + step));
        spend(grown.effort.rotations);
        out.effort.extensions += grown.effort.extensions;
        out.effort.reopenings += grown.effort.reopenings;
        if (grown.hamilton_cycle) {
            BergeCycle c{grown.hamilton_cycle->vertices, {}};
            for (EdgeId e : grown.hamilton_cycle->edge_ids) c.edge_ids.push_back(ids[e]);
            out.certificate = std::move(c);
            break;
        }
        cur = map_ids(grown.longest, ids);
        if (step >= n) {
            out.reason = "absorption step bound reached";
            break;
        }
        if (remaining == 0) {
            out.reason = "rotation budget exhausted";
            break;
        }

        BoosterSearch search(g, in_gamma);
        std::optional<Booster> booster;
        RotationClosure outer = endpoint_closure(gamma, grown.longest, remaining);
        spend(outer.rotations);
        for (Vertex t : outer.discovery) {
            RotationClosure inner = endpoint_closure(gamma, reversed(outer.paths.at(t)), remaining);
            spend(inner.rotations);
            for (Vertex s : inner.discovery) {
                booster = search.try_at(reversed(map_ids(inner.paths.at(s), ids)));
                if (booster) break;
            }
            if (booster || remaining == 0) break;
        }
        if (!booster) {
            out.reason = remaining == 0 ? "rotation budget exhausted" : "no booster found at any endpoint pair";
            break;
        }

        AbsorptionStep rec;
        rec.step = step;
        rec.gamma_edges = ids.size();
        rec.added = booster->added;
        rec.s = booster->s;
        rec.t = booster->t;
        rec.path_length = cur.length();
        for (EdgeId e : booster->added) {
            in_gamma[e] = 1;
            local[e] = static_cast<int>(ids.size());
            ids.push_back(e);
        }
        if (booster->cycle) {
            rec.result_length = n;
            rec.hamiltonian = true;
            res.trace.push_back(rec);
            out.certificate = std::move(booster->cycle);
            break;
        }
        if (!verify_path(g, *booster->path)) throw std::logic_error("absorption produced an invalid path");
        cur = std::move(*booster->path);
        rec.result_length = cur.length();
        res.trace.push_back(rec);
    }

    res.final_gamma_edges = ids.size();
    out.longest = cur;
    if (out.certificate) {
        if (!is_berge_hamilton_cycle(g, *out.certificate))
            throw std::logic_error("absorption produced an invalid Hamilton certificate");
        out.verdict = Verdict::yes;
        out.provenance = Provenance::rotation;
        out.reason.clear();
        out.longest = BergePath{out.certificate->vertices,
                                std::vector<EdgeId>(out.certificate->edge_ids.begin(), out.certificate->edge_ids.end() - 1)};
    }
    return res;
}

}  // namespace bergehit
