#include <doctest.h>

#include <set>

#include "bergehit/berge.hpp"
#include "bergehit/engine.hpp"
#include "bergehit/generators.hpp"
#include "bergehit/rng.hpp"
#include "brute.hpp"

using namespace bergehit;

namespace {

// vertices 1..5 used; edge 0 = {1,2,5}, edge 1 = {2,3,5}, edge 2 = {1,3,4}
Hypergraph small_host() { return Hypergraph(6, 3, {{1, 2, 5}, {2, 3, 5}, {1, 3, 4}}); }

}  // namespace

TEST_CASE("verify_path") {
    const auto h = small_host();
    CHECK(verify_path(h, {{1, 2, 3}, {0, 1}}));
    CHECK_FALSE(verify_path(h, {{2, 5, 3}, {0, 0}}));
    CHECK(verify_path(h, {{2, 5, 3}, {1, 1}}, true));
    CHECK_FALSE(verify_path(h, {{1, 2, 1}, {0, 0}}, true));
    CHECK_FALSE(verify_path(h, {{1, 2, 3}, {0}}));
    CHECK_FALSE(verify_path(h, {{}, {}}));
    CHECK(verify_path(h, {{4}, {}}));
    CHECK(verify_cycle(h, {{2, 5}, {0, 1}}));
    CHECK_FALSE(verify_cycle(h, {{2}, {0}}));
}

TEST_CASE("rotate: worked example") {
    const auto h = small_host();
    BergePath p{{1, 2, 3}, {0, 1}};
    auto q = rotate(h, p, 2, 0);
    REQUIRE(q);
    CHECK(q->vertices == std::vector<Vertex>{1, 3, 2});
    CHECK(q->edge_ids == std::vector<EdgeId>{2, 1});
    CHECK(verify_path(h, *q));
    CHECK(rotate(h, p, 2) == q);
}

TEST_CASE("rotate: degenerate and invalid pivots") {
    const auto h = complete(5, 3);
    BergePath p = greedy_path(h);
    REQUIRE(verify_path(h, p));
    const EdgeId last = p.edge_ids.back();
    CHECK_FALSE(rotate(h, p, last, p.length() - 2));
    CHECK_FALSE(rotate(h, p, last));  // e_(l-1) forces the degenerate pivot
    Hypergraph one(4, 3, {{0, 1, 2}, {1, 2, 3}});
    BergePath q{{0, 1, 3}, {0, 1}};
    CHECK_THROWS_AS(rotate(one, q, 0, 0), std::invalid_argument);  // edge 0 misses the endpoint 3
    // the edge is on the path at position 1, so pivot 0 is mismatched
    BergePath r{{0, 2, 1, 3}, {0, 0, 1}};
    CHECK_FALSE(rotate(one, r, 1, 0));
}

TEST_CASE("rotate preserves vertex set, length and first vertex") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto h = binomial(9, 3, 0.35, s);
        BergePath p = greedy_path(h);
        for (EdgeId e : h.incident(p.back())) {
            for (std::size_t i = 0; i + 2 < p.length(); ++i) {
                auto q = rotate(h, p, e, i);
                if (!q) continue;
                CHECK(verify_path(h, *q));
                CHECK(q->length() == p.length());
                CHECK(q->front() == p.front());
                CHECK(q->back() == p.vertices[i + 1]);
                CHECK(std::set<Vertex>(q->vertices.begin(), q->vertices.end()) ==
                      std::set<Vertex>(p.vertices.begin(), p.vertices.end()));
            }
        }
    }
}

TEST_CASE("endpoint closure") {
    const auto k6 = complete(6, 3);
    BergePath p = greedy_path(k6);
    REQUIRE(p.length() == 6);
    auto c = endpoint_closure(k6, p);
    CHECK(c.endpoint_count() == 5);
    CHECK(c.paths.count(p.front()) == 0);
    CHECK(brute::rotation_endpoints(k6, p).size() == 5);
    for (const auto& [end, path] : c.paths) {
        CHECK(path.back() == end);
        CHECK(path.front() == p.front());
        CHECK(path.length() == p.length());
        CHECK(verify_path(k6, path));
    }
    CHECK(c.discovery.front() == p.back());

    auto single = endpoint_closure(Hypergraph::empty(3, 3), {{1}, {}});
    CHECK(single.endpoint_count() == 1);
    CHECK(single.paths.count(1) == 1);

    auto none = endpoint_closure(k6, p, 0);
    CHECK(none.endpoint_count() == 1);
    CHECK_FALSE(none.exhausted);
    CHECK_THROWS(endpoint_closure(k6, {{0, 1}, {}}));
}

TEST_CASE("endpoint closure matches whole-path rotation search on complete hosts") {
    for (std::size_t n = 4; n <= 7; ++n) {
        const auto h = complete(n, 3);
        BergePath p = greedy_path(h);
        auto c = endpoint_closure(h, p);
        auto ends = brute::rotation_endpoints(h, p);
        CHECK(c.endpoint_count() == ends.size());
    }
}

TEST_CASE("extend_or_close") {
    Hypergraph one(3, 3, {{0, 1, 2}});
    auto s = extend_or_close(one, {{0}, {}});
    REQUIRE(s.kind == StepResult::Kind::extended);
    CHECK(s.path->vertices == std::vector<Vertex>{0, 1});
    CHECK(s.path->edge_ids == std::vector<EdgeId>{0});

    const auto k4 = complete(4, 3);
    // (0,1,2,3) via {0,1,2}, {1,2,3}, {0,2,3}; {0,1,3} closes
    auto c = extend_or_close(k4, {{0, 1, 2, 3}, {0, 3, 2}});
    REQUIRE(c.kind == StepResult::Kind::closed);
    CHECK(c.cycle->edge_ids.back() == 1);
    CHECK(is_berge_hamilton_cycle(k4, *c.cycle));

    auto stuck = extend_or_close(one, {{0, 1}, {0}});
    CHECK(stuck.kind == StepResult::Kind::stuck);
}
