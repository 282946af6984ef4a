#include "bergehit/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bergehit/errors.hpp"

namespace bergehit {

namespace {

void enforce(const Hypergraph& h, const OracleGuard& guard) {
    if (h.n() > guard.max_n)
        throw CapacityError("oracle guard: n = " + std::to_string(h.n()) + " exceeds max_n = " + std::to_string(guard.max_n));
    if (h.num_edges() > guard.max_edges)
        throw CapacityError("oracle guard: " + std::to_string(h.num_edges()) + " edges exceed max_edges = " +
                            std::to_string(guard.max_edges));
}

// Consecutive vertex pairs on one side, host edges on the other. Pairs are
// pushed and popped in stack order; the matching stays perfect on the pairs.
class PairMatcher {
public:
    explicit PairMatcher(const Hypergraph& h) : n_(h.n()), pair_edges_(h.n() * h.n()), owner_(h.num_edges(), -1) {
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
            auto vs = h.edge(e);
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t b = 0; b < vs.size(); ++b)
                    if (a != b) pair_edges_[vs[a] * n_ + vs[b]].push_back(e);
        }
        mark_.assign(h.num_edges(), 0);
    }

    bool adjacent(Vertex a, Vertex b) const { return !pair_edges_[a * n_ + b].empty(); }

    /// Push pair (a, b); false (and nothing pushed) when no SDR exists.
    bool push(Vertex a, Vertex b) {
        pairs_.push_back({a, b});
        assigned_.push_back(-1);
        ++stamp_;
        if (augment(static_cast<int>(pairs_.size()) - 1)) return true;
        pairs_.pop_back();
        assigned_.pop_back();
        return false;
    }

    void pop() {
        owner_[static_cast<std::size_t>(assigned_.back())] = -1;
        pairs_.pop_back();
        assigned_.pop_back();
    }

    std::vector<EdgeId> assignment() const {
        std::vector<EdgeId> out;
        for (int e : assigned_) out.push_back(static_cast<EdgeId>(e));
        return out;
    }

private:
    bool augment(int k) {
        const auto [a, b] = pairs_[static_cast<std::size_t>(k)];
        for (EdgeId e : pair_edges_[a * n_ + b]) {
            if (mark_[e] == stamp_) continue;
            mark_[e] = stamp_;
            int holder = owner_[e];
            if (holder < 0 || augment(holder)) {
                owner_[e] = k;
                assigned_[static_cast<std::size_t>(k)] = static_cast<int>(e);
                return true;
            }
        }
        return false;
    }

    std::size_t n_;
    std::vector<std::vector<EdgeId>> pair_edges_;
    std::vector<int> owner_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::vector<int> assigned_;
    std::vector<unsigned> mark_;
    unsigned stamp_ = 0;
};

class HamiltonSearch {
public:
    explicit HamiltonSearch(const Hypergraph& h) : h_(h), matcher_(h), used_(h.n(), false) {}

    std::optional<BergeCycle> run() {
        const std::size_t n = h_.n();
        if (n < 2 || h_.num_edges() < n) return std::nullopt;
        order_.push_back(0);
        used_[0] = true;
        if (!dfs()) return std::nullopt;
        return BergeCycle{order_, matcher_.assignment()};
    }

private:
    bool dfs() {
        const std::size_t n = h_.n();
        if (order_.size() == n) {
            if (n > 2 && order_[1] > order_.back()) return false;
            if (!matcher_.push(order_.back(), order_.front())) return false;
            return true;
        }
        for (Vertex w = 1; w < n; ++w) {
            if (used_[w] || !matcher_.adjacent(order_.back(), w)) continue;
            if (!matcher_.push(order_.back(), w)) continue;
            order_.push_back(w);
            used_[w] = true;
            if (dfs()) return true;
            used_[w] = false;
            order_.pop_back();
            matcher_.pop();
        }
        return false;
    }

    const Hypergraph& h_;
    PairMatcher matcher_;
    std::vector<bool> used_;
    std::vector<Vertex> order_;
};

class LongestPathSearch {
public:
    explicit LongestPathSearch(const Hypergraph& h) : h_(h), matcher_(h), used_(h.n(), false) {}

    BergePath run() {
        const std::size_t n = h_.n();
        auto labels = component_labels(h_);
        std::vector<std::size_t> comp_size(n, 0);
        for (auto c : labels) ++comp_size[c];
        for (Vertex s = 0; s < n && best_.vertices.size() < n; ++s) {
            if (comp_size[labels[s]] <= best_.vertices.size()) continue;
            order_ = {s};
            used_[s] = true;
            dfs(comp_size[labels[s]]);
            used_[s] = false;
        }
        return best_;
    }

private:
    // Returns true once a path as long as the component bound has been found.
    bool dfs(std::size_t bound) {
        if (order_.size() > best_.vertices.size()) {
            best_.vertices = order_;
            best_.edge_ids = matcher_.assignment();
            if (order_.size() == bound) return true;
        }
        for (Vertex w = 0; w < h_.n(); ++w) {
            if (used_[w] || !matcher_.adjacent(order_.back(), w)) continue;
            if (!matcher_.push(order_.back(), w)) continue;
            order_.push_back(w);
            used_[w] = true;
            bool done = dfs(bound);
            used_[w] = false;
            order_.pop_back();
            matcher_.pop();
            if (done) return true;
        }
        return false;
    }

    const Hypergraph& h_;
    PairMatcher matcher_;
    std::vector<bool> used_;
    std::vector<Vertex> order_;
    BergePath best_;
};

void check_r_set(const Hypergraph& h, const std::vector<Vertex>& e) {
    if (e.size() != h.r()) throw std::invalid_argument("booster candidate must have exactly r vertices");
    std::vector<Vertex> s(e);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("booster candidate repeats a vertex");
    if (s.back() >= h.n()) throw std::invalid_argument("booster candidate has a vertex out of range");
    if (h.find_edge(s)) throw std::invalid_argument("booster candidate is already an edge");
}

}  // namespace

std::optional<BergeCycle> exact_hamiltonian(const Hypergraph& h, const OracleGuard& guard) {
    enforce(h, guard);
    return HamiltonSearch(h).run();
}

BergePath exact_longest_path(const Hypergraph& h, const OracleGuard& guard) {
    enforce(h, guard);
    if (h.n() == 0) return {};
    return LongestPathSearch(h).run();
}

bool exact_is_booster(const Hypergraph& h, const std::vector<Vertex>& e1, const std::vector<Vertex>& e2,
                      const OracleGuard& guard) {
    check_r_set(h, e1);
    check_r_set(h, e2);
    std::vector<Vertex> a(e1), b(e2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) throw std::invalid_argument("booster pair needs two different r-sets");
    enforce(h, guard);
    if (exact_hamiltonian(h, guard)) throw std::domain_error("booster pairs are defined only for non-Hamiltonian hosts");
    Hypergraph boosted = h.with_edges({a, b});
    enforce(boosted, guard);
    if (exact_hamiltonian(boosted, guard)) return true;
    return exact_longest_path(boosted, guard).length() > exact_longest_path(h, guard).length();
}

}  // namespace bergehit
