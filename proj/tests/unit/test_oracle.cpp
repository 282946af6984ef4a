#include <doctest.h>

#include <numeric>

#include "bergehit/errors.hpp"
#include "bergehit/generators.hpp"
#include "bergehit/oracle.hpp"
#include "brute.hpp"

using namespace bergehit;

TEST_CASE("exact_hamiltonian examples") {
    auto k4 = exact_hamiltonian(complete(4, 3));
    REQUIRE(k4);
    CHECK(is_berge_hamilton_cycle(complete(4, 3), *k4));
    CHECK_FALSE(exact_hamiltonian(two_cliques(8, 3)));
    Hypergraph ring(5, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
    auto c = exact_hamiltonian(ring);
    REQUIRE(c);
    CHECK(is_berge_hamilton_cycle(ring, *c));
    CHECK(c->vertices.front() == 0);
    CHECK(c->vertices[1] < c->vertices.back());
}

TEST_CASE("exact_longest_path examples") {
    CHECK(exact_longest_path(Hypergraph(3, 3, {{0, 1, 2}})).length() == 2);
    CHECK(exact_longest_path(complete(5, 3)).length() == 5);
    CHECK(exact_longest_path(Hypergraph::empty(4, 3)).length() == 1);
    auto p = exact_longest_path(Hypergraph(4, 3, {{1, 2, 3}}));
    CHECK(p.vertices == std::vector<Vertex>{1, 2});  // lexicographically smallest of the longest
}

TEST_CASE("oracle agrees with brute force on random small hosts") {
    for (std::uint64_t s = 0; s < 120; ++s) {
        const std::size_t n = 4 + s % 3;
        const double p = 0.2 + 0.1 * static_cast<double>(s % 5);
        const auto h = binomial(n, 3, p, s);
        auto cyc = exact_hamiltonian(h);
        CHECK(cyc.has_value() == brute::hamiltonian(h));
        if (cyc) CHECK(is_berge_hamilton_cycle(h, *cyc));
        auto path = exact_longest_path(h);
        CHECK(verify_path(h, path));
        CHECK(path.length() == brute::longest_path(h));
    }
}

TEST_CASE("adding an edge never shortens the longest path nor breaks Hamiltonicity") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const auto h = binomial(6, 3, 0.3, s);
        const auto base_len = exact_longest_path(h).length();
        const bool base_ham = exact_hamiltonian(h).has_value();
        for (const auto& e : brute::all_r_sets(6, 3)) {
            if (h.find_edge(e)) continue;
            auto bigger = h.with_edges({e});
            CHECK(exact_longest_path(bigger).length() >= base_len);
            if (base_ham) CHECK(exact_hamiltonian(bigger).has_value());
            break;
        }
    }
}

TEST_CASE("booster pairs") {
    Hypergraph path5(5, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {1, 3, 4}});
    REQUIRE_FALSE(exact_hamiltonian(path5));
    REQUIRE(exact_longest_path(path5).length() == 5);
    CHECK(exact_is_booster(path5, {0, 2, 4}, {0, 1, 3}));
    CHECK_THROWS_AS(exact_is_booster(path5, {0, 1, 2}, {0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(exact_is_booster(path5, {0, 1, 3}, {3, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(exact_is_booster(complete(5, 3).subgraph(std::vector<EdgeId>{0, 1, 2, 3, 4, 5, 6, 7, 8}),
                                     {2, 3, 4}, {0, 1, 5}),
                    std::invalid_argument);
    std::vector<EdgeId> most(18);
    std::iota(most.begin(), most.end(), 0);
    auto ham = complete(6, 3).subgraph(most);
    REQUIRE(exact_hamiltonian(ham));
    CHECK_THROWS_AS(exact_is_booster(ham, {2, 4, 5}, {3, 4, 5}), std::domain_error);
    // a path component that is already spanned; both new edges stay inside it
    Hypergraph graph_path(6, 2, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(exact_is_booster(graph_path, {0, 2}, {1, 3}));
}

TEST_CASE("oracle guard") {
    CHECK_THROWS_AS(exact_hamiltonian(complete(11, 3)), CapacityError);
    OracleGuard g;
    g.max_edges = 10;
    CHECK_THROWS_AS(exact_longest_path(complete(6, 3), g), CapacityError);
    CHECK(g.admits(complete(5, 3)));
}
