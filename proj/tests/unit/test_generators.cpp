#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "bergehit/errors.hpp"
#include "bergehit/generators.hpp"
#include "brute.hpp"

using namespace bergehit;

TEST_CASE("complete") {
    CHECK(complete(4, 3).num_edges() == 4);
    CHECK(complete(3, 3).num_edges() == 1);
    const auto k6 = complete(6, 3);
    CHECK(k6.num_edges() == 20);
    const auto sets = brute::all_r_sets(6, 3);
    for (EdgeId e = 0; e < k6.num_edges(); ++e)
        CHECK(std::vector<Vertex>(k6.edge(e).begin(), k6.edge(e).end()) == sets[e]);
    for (Vertex v = 0; v < 6; ++v) CHECK(k6.degree(v) == 10);
}

TEST_CASE("two cliques") {
    const auto h = two_cliques(8, 3);
    CHECK(h.num_edges() == 8);
    CHECK_FALSE(is_connected(h));
    CHECK(two_cliques(12, 3).min_degree() == 10);
    CHECK(two_cliques(6, 3).num_edges() == 2);
    CHECK_THROWS(two_cliques(7, 3));
}

TEST_CASE("two cliques plus matching") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto h = two_cliques_matching(12, s);
        CHECK(h.num_edges() == 44);
        std::set<Vertex> covered;
        for (EdgeId e = 40; e < 44; ++e) {
            bool left = false, right = false;
            for (Vertex v : h.edge(e)) {
                CHECK(covered.insert(v).second);
                (v < 6 ? left : right) = true;
            }
            CHECK(left);
            CHECK(right);
        }
        CHECK(covered.size() == 12);
        std::vector<EdgeId> cliques(40);
        std::iota(cliques.begin(), cliques.end(), 0);
        CHECK_FALSE(is_connected(h.subgraph(cliques)));
    }
    CHECK(two_cliques_matching(6, 1).num_edges() == 4);
    CHECK_THROWS(two_cliques_matching(8, 1));
    CHECK(two_cliques_matching(18, 4) == two_cliques_matching(18, 4));
}

TEST_CASE("binomial") {
    CHECK(binomial(8, 3, 0, 1).num_edges() == 0);
    CHECK(binomial(8, 3, 1, 1) == complete(8, 3));
    CHECK(binomial(10, 3, 0.3, 9) == binomial(10, 3, 0.3, 9));
    const double total = 4060, mean = total / 2, sd = std::sqrt(total / 4);
    for (std::uint64_t s = 0; s < 100; ++s) CHECK(std::abs(static_cast<double>(binomial(30, 3, 0.5, s).num_edges()) - mean) <= 4 * sd);
    CHECK_THROWS(binomial(5, 3, 1.5, 0));
}

TEST_CASE("degree condition random") {
    const auto h = degree_condition_random(30, 3, 0.1, 3);
    CHECK(check_theorem_condition(h, 0.1).holds);
    CHECK(h == degree_condition_random(30, 3, 0.1, 3));
    CHECK_THROWS(degree_condition_random(30, 3, 0.5, 3));
    // on three vertices each v has only two partners, fewer than (1/2 + eps) n
    CHECK_THROWS_AS(degree_condition_random(3, 3, 0.1, 3, {2}), GenerationError);
}

TEST_CASE("generate dispatches on the family") {
    GenSpec spec;
    spec.family = family_from_name("two_cliques");
    spec.n = 8;
    CHECK(generate(spec) == two_cliques(8, 3));
    CHECK(family_name(Family::binomial) == "binomial");
    CHECK_THROWS(family_from_name("petersen"));
}
