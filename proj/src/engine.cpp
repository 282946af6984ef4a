#include "bergehit/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bergehit/rng.hpp"

namespace bergehit {

std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

std::string_view provenance_name(Provenance p) noexcept {
    switch (p) {
        case Provenance::none: return "none";
        case Provenance::rotation: return "rotation";
        case Provenance::oracle: return "oracle";
        case Provenance::structural: return "structural";
    }
    return "none";
}

namespace {

constexpr EdgeId kNoEdge = UINT32_MAX;

struct State {
    std::vector<Vertex> seq;
    std::vector<EdgeId> link;  // link[k] joins seq[k] and seq[k+1] (seq[0] for the closing link)
    bool closed = false;
};

// Vertex order plus an edge assignment kept as a bipartite matching
// between links and host edges. Links are re-routed along augmenting paths.
class Workspace {
public:
    explicit Workspace(const Hypergraph& h)
        : h_(h), pos_(h.n(), -1), owner_(h.num_edges(), -1), mark_(h.num_edges(), 0) {}

    void load(const State& s) {
        clear();
        seq_ = s.seq;
        link_ = s.link;
        closed_ = s.closed;
        index();
    }
    State snapshot() const { return {seq_, link_, closed_}; }

    std::size_t length() const noexcept { return seq_.size(); }
    bool closed() const noexcept { return closed_; }
    const std::vector<Vertex>& seq() const noexcept { return seq_; }
    bool on_path(Vertex v) const noexcept { return pos_[v] >= 0; }
    std::size_t pos(Vertex v) const noexcept { return static_cast<std::size_t>(pos_[v]); }

    bool extend_to(Vertex w) {
        seq_.push_back(w);
        pos_[w] = static_cast<int>(seq_.size() - 1);
        link_.push_back(kNoEdge);
        if (relink(link_.size() - 1)) return true;
        link_.pop_back();
        seq_.pop_back();
        pos_[w] = -1;
        return false;
    }

    bool close() {
        if (closed_ || seq_.size() < 2) return false;
        link_.push_back(kNoEdge);
        closed_ = true;
        if (relink(link_.size() - 1)) return true;
        link_.pop_back();
        closed_ = false;
        return false;
    }

    // Rotation fixing seq[0]: new order seq[0..i], seq[l-1], ..., seq[i+1].
    bool rotate_end(std::size_t pivot) {
        const std::size_t l = seq_.size();
        if (closed_ || l < 3 || pivot + 2 >= l) return false;
        State backup = snapshot();
        owner_[link_[pivot]] = -1;
        link_[pivot] = kNoEdge;
        std::reverse(seq_.begin() + static_cast<std::ptrdiff_t>(pivot) + 1, seq_.end());
        std::reverse(link_.begin() + static_cast<std::ptrdiff_t>(pivot) + 1, link_.end());
        for (std::size_t k = pivot + 1; k < l; ++k) pos_[seq_[k]] = static_cast<int>(k);
        for (std::size_t k = pivot + 1; k + 1 < l; ++k) owner_[link_[k]] = static_cast<int>(k);
        if (relink(pivot)) return true;
        load(backup);
        return false;
    }

    // Open a closed cycle at position j and hang w in front of seq[j].
    // forward keeps the cycle direction (drops the link into seq[j]); otherwise it is reversed.
    bool open_cycle(std::size_t j, Vertex w, bool forward) {
        const std::size_t k = seq_.size();
        State backup = snapshot();
        State next;
        next.seq.reserve(k + 1);
        next.link.reserve(k);
        next.seq.push_back(w);
        next.link.push_back(kNoEdge);
        for (std::size_t step = 0; step < k; ++step) {
            std::size_t idx = forward ? (j + step) % k : (j + k - step) % k;
            next.seq.push_back(seq_[idx]);
            if (step + 1 < k) next.link.push_back(forward ? link_[idx] : link_[(idx + k - 1) % k]);
        }
        load(next);
        if (relink(0)) return true;
        load(backup);
        return false;
    }

    void reverse_path() {
        State s = snapshot();
        std::reverse(s.seq.begin(), s.seq.end());
        std::reverse(s.link.begin(), s.link.end());
        load(s);
    }

private:
    void clear() {
        for (Vertex v : seq_) pos_[v] = -1;
        for (EdgeId e : link_)
            if (e != kNoEdge) owner_[e] = -1;
        seq_.clear();
        link_.clear();
        closed_ = false;
    }

    void index() {
        for (std::size_t k = 0; k < seq_.size(); ++k) pos_[seq_[k]] = static_cast<int>(k);
        for (std::size_t k = 0; k < link_.size(); ++k)
            if (link_[k] != kNoEdge) owner_[link_[k]] = static_cast<int>(k);
    }

    std::pair<Vertex, Vertex> ends(std::size_t k) const {
        return {seq_[k], seq_[k + 1 < seq_.size() ? k + 1 : 0]};
    }

    bool relink(std::size_t k) {
        if (++stamp_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
        return augment(k);
    }

    bool augment(std::size_t k) {
        auto [a, b] = ends(k);
        if (h_.incident(b).size() < h_.incident(a).size()) std::swap(a, b);
        for (EdgeId e : h_.incident(a)) {
            if (mark_[e] == stamp_ || !h_.edge_contains(e, b)) continue;
            mark_[e] = stamp_;
            const int holder = owner_[e];
            if (holder < 0 || augment(static_cast<std::size_t>(holder))) {
                owner_[e] = static_cast<int>(k);
                link_[k] = e;
                return true;
            }
        }
        return false;
    }

    const Hypergraph& h_;
    std::vector<Vertex> seq_;
    std::vector<EdgeId> link_;
    bool closed_ = false;
    std::vector<int> pos_;
    std::vector<int> owner_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

struct Found {
    State state;
    bool cycle = false;
};

class Engine {
public:
    Engine(const Hypergraph& h, std::size_t budget, std::uint64_t seed)
        : h_(h), ws_(h), budget_(budget), rng_(derive_seed(seed, 0x726f74617465ULL)) {}

    // Runs from `start` until a Hamilton cycle is found, the search is stuck,
    // or the budget is spent. Returns the cycle when found.
    std::optional<State> run_attempt(State start) {
        ws_.load(start);
        greedy_extend();
        note_best();
        while (true) {
            if (ws_.length() == h_.n()) {
                if (ws_.close()) return ws_.snapshot();
            } else {
                State before = ws_.snapshot();
                if (auto improved = improve_open()) {
                    ws_.load(*improved);
                    ++effort_.reopenings;
                    greedy_extend();
                    note_best();
                    continue;
                }
                ws_.load(before);
            }
            auto found = rotation_search(ws_.snapshot());
            if (!found) return std::nullopt;
            if (found->cycle) return found->state;
            ws_.load(found->state);
            greedy_extend();
            note_best();
        }
    }

    bool out_of_budget() const noexcept { return budget_ == 0; }
    EngineEffort& effort() noexcept { return effort_; }
    const State& best() const noexcept { return best_; }
    Rng& rng() noexcept { return rng_; }
    void set_randomized(bool r) noexcept { randomized_ = r; }

private:
    std::vector<Vertex> off_path_neighbors(Vertex x) {
        std::vector<Vertex> out;
        for (EdgeId e : h_.incident(x))
            for (Vertex u : h_.edge(e))
                if (!ws_.on_path(u)) out.push_back(u);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        order_candidates(out);
        return out;
    }

    // Low-degree vertices first; random tie-breaking after the first attempt.
    void order_candidates(std::vector<Vertex>& vs) {
        if (randomized_) rng_.shuffle(vs);
        std::stable_sort(vs.begin(), vs.end(), [this](Vertex a, Vertex b) { return h_.degree(a) < h_.degree(b); });
    }

    bool extend_end() {
        for (Vertex w : off_path_neighbors(ws_.seq().back())) {
            if (ws_.extend_to(w)) {
                ++effort_.extensions;
                return true;
            }
        }
        return false;
    }

    void greedy_extend() {
        while (ws_.length() < h_.n()) {
            if (extend_end()) continue;
            ws_.reverse_path();
            if (!extend_end()) break;
        }
    }

    void note_best() {
        if (ws_.length() > best_.seq.size()) best_ = ws_.snapshot();
    }

    // Non-spanning goal: extend past the moving end, or close into a cycle on
    // the path's vertices and reopen it through an edge that leaves the cycle.
    std::optional<State> improve_open() {
        if (extend_end()) return ws_.snapshot();
        if (!ws_.close()) return std::nullopt;
        const std::vector<Vertex> cyc = ws_.seq();
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            for (Vertex w : off_path_neighbors(cyc[j])) {
                if (ws_.open_cycle(j, w, true) || ws_.open_cycle(j, w, false)) return ws_.snapshot();
            }
        }
        return std::nullopt;
    }

    std::optional<Found> goal(const State& s) {
        ws_.load(s);
        if (s.seq.size() == h_.n()) {
            if (ws_.close()) return Found{ws_.snapshot(), true};
            return std::nullopt;
        }
        if (auto improved = improve_open()) return Found{std::move(*improved), false};
        return std::nullopt;
    }

    // Breadth-first rotations fixing root.seq[0]; one state per endpoint.
    std::optional<Found> explore(const State& root, std::vector<State>* collect) {
        std::vector<char> seen(h_.n(), 0);
        std::deque<State> queue{root};
        seen[root.seq.back()] = 1;
        bool first = true;
        while (!queue.empty()) {
            State s = std::move(queue.front());
            queue.pop_front();
            if (!first) {
                if (auto f = goal(s)) return f;
            }
            first = false;
            if (collect != nullptr) collect->push_back(s);
            ws_.load(s);
            const std::size_t l = ws_.length();
            if (l < 3) continue;
            std::vector<std::size_t> pivots;
            for (EdgeId e : h_.incident(s.seq.back()))
                for (Vertex u : h_.edge(e))
                    if (ws_.on_path(u) && ws_.pos(u) + 2 < l) pivots.push_back(ws_.pos(u));
            std::sort(pivots.begin(), pivots.end());
            pivots.erase(std::unique(pivots.begin(), pivots.end()), pivots.end());
            if (randomized_) rng_.shuffle(pivots);
            for (std::size_t pivot : pivots) {
                const Vertex next_end = s.seq[pivot + 1];
                if (seen[next_end]) continue;
                if (budget_ == 0) return std::nullopt;
                --budget_;
                ++effort_.rotations;
                if (ws_.rotate_end(pivot)) {
                    seen[next_end] = 1;
                    queue.push_back(ws_.snapshot());
                    ws_.load(s);
                }
            }
        }
        return std::nullopt;
    }

    static State reversed_state(const State& s) {
        State r{std::vector<Vertex>(s.seq.rbegin(), s.seq.rend()), std::vector<EdgeId>(s.link.rbegin(), s.link.rend()),
                false};
        return r;
    }

    // Goal checks at every endpoint reachable by rotating one end, the other
    // end, and then both ends (endpoint pairs (s_ij, t_i)).
    std::optional<Found> rotation_search(const State& cur) {
        if (auto f = goal(cur)) return f;
        std::vector<State> level_a, level_b;
        if (auto f = explore(cur, &level_a)) return f;
        if (budget_ == 0) return std::nullopt;
        State rev = reversed_state(cur);
        if (auto f = explore(rev, &level_b)) return f;
        for (auto* level : {&level_a, &level_b}) {
            for (std::size_t i = 1; i < level->size(); ++i) {
                if (budget_ == 0) return std::nullopt;
                if (auto f = explore(reversed_state((*level)[i]), nullptr)) return f;
            }
        }
        return std::nullopt;
    }

    const Hypergraph& h_;
    Workspace ws_;
    std::size_t budget_;
    Rng rng_;
    bool randomized_ = false;
    EngineEffort effort_;
    State best_;
};

BergePath to_path(const State& s) { return {s.seq, s.link}; }

BergeCycle to_cycle(const State& s) { return {s.seq, s.link}; }

Vertex max_degree_vertex(const Hypergraph& h) {
    Vertex best = 0;
    for (Vertex v = 1; v < h.n(); ++v)
        if (h.degree(v) > h.degree(best)) best = v;
    return best;
}

}  // namespace

std::optional<std::string> structural_obstruction(const Hypergraph& h) {
    if (h.n() < 2) return std::string("fewer than two vertices");
    if (h.min_degree() < 2) return std::string("a vertex has degree below 2");
    if (h.num_edges() < h.n()) return std::string("fewer edges than vertices");
    if (!is_connected(h)) return std::string("host is disconnected");
    return std::nullopt;
}

BergePath greedy_path(const Hypergraph& h) {
    if (h.n() == 0) return {};
    Engine engine(h, 0, 0);
    State start{{max_degree_vertex(h)}, {}, false};
    engine.run_attempt(start);
    return to_path(engine.best());
}

GrowResult grow_path(const Hypergraph& h, const BergePath& start, std::size_t budget, std::uint64_t seed) {
    if (!verify_path(h, start)) throw std::invalid_argument("grow_path needs a valid Berge path");
    Engine engine(h, budget, seed);
    GrowResult out;
    auto cycle = engine.run_attempt(State{start.vertices, start.edge_ids, false});
    out.longest = engine.best().seq.size() >= start.length() ? to_path(engine.best()) : start;
    if (cycle) {
        out.hamilton_cycle = to_cycle(*cycle);
        out.longest = BergePath{cycle->seq, std::vector<EdgeId>(cycle->link.begin(), cycle->link.end() - 1)};
    }
    out.effort = engine.effort();
    return out;
}

DecisionOutcome decide_hamiltonian(const Hypergraph& h, const DecideOptions& options) {
    if (h.n() < 3) throw std::invalid_argument("decide_hamiltonian needs n >= 3");
    DecisionOutcome out;
    if (auto reason = structural_obstruction(h)) {
        out.verdict = Verdict::no;
        out.provenance = Provenance::structural;
        out.reason = *reason;
        return out;
    }

    Engine engine(h, options.budget, options.seed);
    std::optional<State> cycle;
    for (std::size_t attempt = 0; !engine.out_of_budget(); ++attempt) {
        State start;
        if (attempt == 0) {
            start.seq = {max_degree_vertex(h)};
        } else {
            engine.set_randomized(true);
            ++engine.effort().restarts;
            start.seq = {static_cast<Vertex>(engine.rng().below(h.n()))};
        }
        cycle = engine.run_attempt(start);
        if (cycle) break;
    }
    out.effort = engine.effort();
    out.longest = to_path(engine.best());

    if (cycle) {
        BergeCycle c = to_cycle(*cycle);
        if (!is_berge_hamilton_cycle(h, c)) throw std::logic_error("engine produced an invalid Hamilton certificate");
        out.verdict = Verdict::yes;
        out.provenance = Provenance::rotation;
        out.certificate = std::move(c);
        return out;
    }

    out.reason = "rotation budget exhausted";
    if (options.fallback) {
        if (options.guard.admits(h)) {
            auto exact = exact_hamiltonian(h, options.guard);
            out.provenance = Provenance::oracle;
            if (exact) {
                out.verdict = Verdict::yes;
                out.certificate = std::move(exact);
            } else {
                out.verdict = Verdict::no;
            }
            out.reason.clear();
        } else {
            out.reason += "; host exceeds the oracle guard";
        }
    }
    return out;
}

}  // namespace bergehit
