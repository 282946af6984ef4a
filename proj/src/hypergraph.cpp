#include "bergehit/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bergehit/errors.hpp"
#include "bergehit/rng.hpp"

namespace bergehit {

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::size_t r, const std::vector<std::vector<Vertex>>& edges) : n_(n), r_(r) {
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    verts_.reserve(edges.size() * r);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.size() != r)
            throw std::invalid_argument("edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                                        " vertices, expected " + std::to_string(r));
        std::vector<Vertex> sorted(e);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("edge " + std::to_string(i) + " repeats a vertex");
        if (sorted.back() >= n)
            throw std::invalid_argument("edge " + std::to_string(i) + " has a vertex out of range");
        verts_.insert(verts_.end(), sorted.begin(), sorted.end());
    }
    build_indices();
    for (std::size_t i = 1; i < lex_order_.size(); ++i) {
        auto a = edge(lex_order_[i - 1]);
        auto b = edge(lex_order_[i]);
        if (std::equal(a.begin(), a.end(), b.begin()))
            throw std::invalid_argument("duplicate edge (ids " + std::to_string(std::min(lex_order_[i - 1], lex_order_[i])) +
                                        " and " + std::to_string(std::max(lex_order_[i - 1], lex_order_[i])) + ")");
    }
}

Hypergraph::Hypergraph(Trusted, std::size_t n, std::size_t r, std::vector<Vertex> flat)
    : n_(n), r_(r), verts_(std::move(flat)) {
    build_indices();
}

void Hypergraph::build_indices() {
    const std::size_t m = num_edges();
    inc_off_.assign(n_ + 1, 0);
    for (Vertex v : verts_) ++inc_off_[v + 1];
    std::partial_sum(inc_off_.begin(), inc_off_.end(), inc_off_.begin());
    inc_.assign(verts_.size(), 0);
    std::vector<std::size_t> fill(inc_off_.begin(), inc_off_.end() - 1);
    for (EdgeId e = 0; e < m; ++e)
        for (Vertex v : edge(e)) inc_[fill[v]++] = e;
    lex_order_.resize(m);
    std::iota(lex_order_.begin(), lex_order_.end(), EdgeId{0});
    std::sort(lex_order_.begin(), lex_order_.end(), [this](EdgeId a, EdgeId b) {
        auto ea = edge(a);
        auto eb = edge(b);
        if (std::equal(ea.begin(), ea.end(), eb.begin())) return a < b;
        return lex_less(ea, eb);
    });
}

void Hypergraph::check_vertex(Vertex v) const {
    if (v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Hypergraph::edge_contains(EdgeId e, Vertex v) const noexcept {
    auto vs = edge(e);
    return std::binary_search(vs.begin(), vs.end(), v);
}

std::optional<EdgeId> Hypergraph::find_edge(std::span<const Vertex> vertices) const {
    if (vertices.size() != r_) return std::nullopt;
    std::vector<Vertex> key(vertices.begin(), vertices.end());
    std::sort(key.begin(), key.end());
    auto it = std::lower_bound(lex_order_.begin(), lex_order_.end(), key, [this](EdgeId e, const std::vector<Vertex>& k) {
        return lex_less(edge(e), k);
    });
    if (it == lex_order_.end()) return std::nullopt;
    auto found = edge(*it);
    if (!std::equal(found.begin(), found.end(), key.begin())) return std::nullopt;
    return *it;
}

Hypergraph Hypergraph::subgraph(std::span<const EdgeId> ids) const {
    std::vector<Vertex> flat;
    flat.reserve(ids.size() * r_);
    std::vector<bool> seen(num_edges(), false);
    for (EdgeId e : ids) {
        if (e >= num_edges()) throw std::invalid_argument("edge id out of range");
        if (seen[e]) throw std::invalid_argument("repeated edge id in subgraph selection");
        seen[e] = true;
        auto vs = edge(e);
        flat.insert(flat.end(), vs.begin(), vs.end());
    }
    return Hypergraph(Trusted{}, n_, r_, std::move(flat));
}

Hypergraph Hypergraph::with_edges(const std::vector<std::vector<Vertex>>& extra) const {
    std::vector<std::vector<Vertex>> all;
    all.reserve(num_edges() + extra.size());
    for (EdgeId e = 0; e < num_edges(); ++e) {
        auto vs = edge(e);
        all.emplace_back(vs.begin(), vs.end());
    }
    all.insert(all.end(), extra.begin(), extra.end());
    return Hypergraph(n_, r_, all);
}

std::size_t Hypergraph::degree(Vertex v) const {
    check_vertex(v);
    return incident(v).size();
}

std::size_t Hypergraph::codegree(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("codegree needs two distinct vertices");
    auto iu = incident(u);
    auto iv = incident(v);
    std::size_t c = 0;
    std::size_t i = 0, j = 0;
    while (i < iu.size() && j < iv.size()) {
        if (iu[i] < iv[j]) {
            ++i;
        } else if (iv[j] < iu[i]) {
            ++j;
        } else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

std::size_t Hypergraph::min_degree() const noexcept {
    std::size_t best = n_ == 0 ? 0 : inc_off_[1] - inc_off_[0];
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, inc_off_[v + 1] - inc_off_[v]);
    return best;
}

std::size_t Hypergraph::max_degree() const noexcept {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, inc_off_[v + 1] - inc_off_[v]);
    return best;
}

VertexSet neighborhood(const Hypergraph& h, const VertexSet& s) {
    VertexSet out(h.n());
    for (Vertex v : s.members()) {
        if (v >= h.n()) throw std::invalid_argument("vertex set exceeds the host");
        for (EdgeId e : h.incident(v))
            for (Vertex u : h.edge(e))
                if (!s.contains(u)) out.insert(u);
    }
    return out;
}

std::vector<std::uint32_t> component_labels(const Hypergraph& h) {
    std::vector<std::uint32_t> parent(h.n());
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&parent](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        auto vs = h.edge(e);
        for (std::size_t i = 1; i < vs.size(); ++i) {
            auto a = find(vs[0]);
            auto b = find(vs[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::uint32_t> label(h.n());
    std::vector<std::uint32_t> root_label(h.n(), UINT32_MAX);
    std::uint32_t next = 0;
    for (Vertex v = 0; v < h.n(); ++v) {
        auto root = find(v);
        if (root_label[root] == UINT32_MAX) root_label[root] = next++;
        label[v] = root_label[root];
    }
    return label;
}

std::size_t component_count(const Hypergraph& h) {
    auto labels = component_labels(h);
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Hypergraph& h) {
    if (h.n() == 0) throw std::invalid_argument("connectivity needs at least one vertex");
    return component_count(h) == 1;
}

namespace {

std::size_t max_cover_size(std::size_t x_size, double alpha) {
    // largest integer strictly below alpha * |X|
    double bound = alpha * static_cast<double>(x_size);
    double c = std::ceil(bound) - 1.0;
    return c < 0 ? 0 : static_cast<std::size_t>(c);
}

// Exact search for a set of at most `budget` vertices hitting every mask in `family`.
bool find_hitting_set(const std::vector<std::uint64_t>& family, std::uint64_t chosen, std::size_t budget,
                      std::uint64_t& out) {
    for (auto m : family) {
        if ((m & chosen) != 0) continue;
        if (budget == 0) return false;
        std::uint64_t rest = m;
        while (rest != 0) {
            std::uint64_t bit = rest & (~rest + 1);
            rest &= rest - 1;
            if (find_hitting_set(family, chosen | bit, budget - 1, out)) return true;
        }
        return false;
    }
    out = chosen;
    return true;
}

VertexSet mask_to_set(std::size_t n, std::uint64_t mask) {
    VertexSet s(n);
    while (mask != 0) {
        s.insert(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return s;
}

}  // namespace

bool is_expansion_witness(const Hypergraph& h, const VertexSet& x, const VertexSet& y, double alpha) {
    const std::size_t xs = x.size();
    if (xs == 0 || x.intersects(y)) return false;
    if (!(static_cast<double>(y.size()) < alpha * static_cast<double>(xs))) return false;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        std::size_t in_x = 0;
        bool in_y = false;
        for (Vertex v : h.edge(e)) {
            in_x += x.contains(v) ? 1 : 0;
            in_y = in_y || y.contains(v);
        }
        if (in_x == 1 && !in_y) return false;
    }
    return true;
}

ExpanderResult is_expander(const Hypergraph& h, std::size_t k, double alpha, const ExpanderOptions& options) {
    const std::size_t n = h.n();
    if (k > n) throw std::invalid_argument("expander size bound k exceeds n");
    ExpanderResult result;
    if (k == 0) return result;

    if (!options.sampled) {
        if (n > options.exhaustive_max_n || n > 64)
            throw CapacityError("exhaustive expander check limited to n <= " +
                                std::to_string(std::min<std::size_t>(options.exhaustive_max_n, 64)) + ", got n = " +
                                std::to_string(n));
        std::vector<std::uint64_t> masks(h.num_edges(), 0);
        for (EdgeId e = 0; e < h.num_edges(); ++e)
            for (Vertex v : h.edge(e)) masks[e] |= std::uint64_t{1} << v;
        std::vector<std::uint64_t> family;
        for (std::size_t size = 1; size <= k; ++size) {
            const std::size_t budget = max_cover_size(size, alpha);
            // combinations of `size` vertices in increasing lexicographic order
            std::vector<std::size_t> idx(size);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                std::uint64_t xmask = 0;
                for (auto i : idx) xmask |= std::uint64_t{1} << i;
                family.clear();
                for (auto m : masks)
                    if (std::popcount(m & xmask) == 1) family.push_back(m & ~xmask);
                std::uint64_t ymask = 0;
                if (find_hitting_set(family, 0, std::min(budget, n - size), ymask)) {
                    result.holds = false;
                    result.witness_x = mask_to_set(n, xmask);
                    result.witness_y = mask_to_set(n, ymask);
                    return result;
                }
                std::size_t pos = size;
                while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
                if (pos == 0) break;
                ++idx[pos - 1];
                for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        return result;
    }

    result.exhaustive = false;
    Rng rng(derive_seed(options.seed, 0x657870616e64ULL));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t draw = 0; draw < options.samples; ++draw) {
        ++result.draws;
        const std::size_t size = 1 + static_cast<std::size_t>(rng.below(k));
        rng.shuffle(order);
        VertexSet x(n);
        for (std::size_t i = 0; i < size; ++i) x.insert(order[i]);
        // random greedy cover of the edges meeting X exactly once
        std::vector<EdgeId> family;
        for (Vertex v : x.members())
            for (EdgeId e : h.incident(v)) {
                std::size_t in_x = 0;
                for (Vertex u : h.edge(e)) in_x += x.contains(u) ? 1 : 0;
                if (in_x == 1) family.push_back(e);
            }
        const std::size_t budget = max_cover_size(size, alpha);
        VertexSet y(n);
        std::size_t used = 0;
        bool covered = false;
        while (true) {
            std::vector<EdgeId> open;
            for (EdgeId e : family) {
                bool hit = false;
                for (Vertex u : h.edge(e)) hit = hit || y.contains(u);
                if (!hit) open.push_back(e);
            }
            if (open.empty()) {
                covered = true;
                break;
            }
            if (used == budget) break;
            EdgeId pick = open[rng.below(open.size())];
            std::vector<Vertex> outside;
            for (Vertex u : h.edge(pick))
                if (!x.contains(u)) outside.push_back(u);
            y.insert(outside[rng.below(outside.size())]);
            ++used;
        }
        if (covered && is_expansion_witness(h, x, y, alpha)) {
            result.holds = false;
            result.witness_x = std::move(x);
            result.witness_y = std::move(y);
            return result;
        }
    }
    return result;
}

ConditionResult check_theorem_condition(const Hypergraph& h, double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
    const std::size_t n = h.n();
    const double codeg_bound = eps * std::pow(static_cast<double>(n), static_cast<double>(h.r()) - 2.0);
    const double partner_bound = (0.5 + eps) * static_cast<double>(n);
    std::vector<std::size_t> count(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::fill(count.begin(), count.end(), 0);
        for (EdgeId e : h.incident(v))
            for (Vertex u : h.edge(e)) ++count[u];
        std::size_t partners = 0;
        for (Vertex u = 0; u < n; ++u)
            if (u != v && static_cast<double>(count[u]) >= codeg_bound) ++partners;
        if (static_cast<double>(partners) < partner_bound) return {false, v};
    }
    return {true, std::nullopt};
}

double binomial_coefficient(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(c);
}

CorollaryReport check_corollary_conditions(const Hypergraph& h, double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
    const std::size_t n = h.n();
    const double r = static_cast<double>(h.r());
    CorollaryReport rep;
    rep.min_degree = h.min_degree();
    rep.delta1_bound = (1.0 / std::pow(2.0, r - 1.0) + eps) * binomial_coefficient(n - 1, h.r() - 1);
    rep.delta2_bound = eps * std::pow(static_cast<double>(n), r - 2.0);
    rep.delta1_ok = static_cast<double>(rep.min_degree) >= rep.delta1_bound;
    std::size_t min_co = n >= 2 ? SIZE_MAX : 0;
    std::vector<std::size_t> count(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::fill(count.begin(), count.end(), 0);
        for (EdgeId e : h.incident(v))
            for (Vertex u : h.edge(e)) ++count[u];
        for (Vertex u = v + 1; u < n; ++u) min_co = std::min(min_co, count[u]);
    }
    rep.min_codegree = min_co;
    rep.delta2_ok = n < 2 || static_cast<double>(min_co) >= rep.delta2_bound;
    return rep;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    std::size_t n = 0, r = 0, m = 0;
    std::vector<std::vector<Vertex>> edges;
    std::map<std::vector<Vertex>, std::size_t> seen;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = tokens(line);
        if (toks.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (!have_header) {
            if (toks.size() != 3) throw ParseError(line_no, "header must be 'n r m'");
            n = parse_uint(toks[0], line_no);
            r = parse_uint(toks[1], line_no);
            m = parse_uint(toks[2], line_no);
            if (r < 2) throw ParseError(line_no, "uniformity r must be at least 2");
            have_header = true;
        } else {
            if (edges.size() == m) throw ParseError(line_no, "more edge lines than the declared m = " + std::to_string(m));
            if (toks.size() != r)
                throw ParseError(line_no, "wrong arity: expected " + std::to_string(r) + " vertices, got " +
                                              std::to_string(toks.size()));
            std::vector<Vertex> e;
            e.reserve(r);
            for (auto t : toks) {
                auto v = parse_uint(t, line_no);
                if (v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
                e.push_back(static_cast<Vertex>(v));
            }
            std::vector<Vertex> key(e);
            std::sort(key.begin(), key.end());
            if (std::adjacent_find(key.begin(), key.end()) != key.end()) throw ParseError(line_no, "edge repeats a vertex");
            auto [it, inserted] = seen.emplace(key, line_no);
            if (!inserted) throw ParseError(line_no, "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
            edges.push_back(std::move(e));
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no, "missing 'n r m' header");
    if (edges.size() != m)
        throw ParseError(line_no, "declared m = " + std::to_string(m) + " edges but found " + std::to_string(edges.size()));
    return Hypergraph(n, r, edges);
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.n() << ' ' << h.r() << ' ' << h.num_edges() << '\n';
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        auto vs = h.edge(e);
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
        out << '\n';
    }
    return out.str();
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read host file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

}  // namespace bergehit
