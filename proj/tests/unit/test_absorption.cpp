#include <doctest.h>

#include <numeric>

#include "bergehit/absorption.hpp"
#include "bergehit/generators.hpp"

using namespace bergehit;

TEST_CASE("extract_expander") {
    const auto k8 = complete(8, 3);
    auto all = extract_expander(k8, 100, 1);
    CHECK(all.size() == k8.num_edges());

    const auto k30 = complete(30, 3);
    auto ids = extract_expander(k30, 5, 7);
    CHECK(ids.size() <= 150);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    auto gamma = k30.subgraph(ids);
    CHECK(gamma.min_degree() >= 5);
    CHECK(extract_expander(k30, 5, 7) == ids);
    CHECK(extract_expander(k30, 5, 8) != ids);

    // star: every edge holds vertex 0; d0 = 1 keeps at most one edge per vertex
    Hypergraph star(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 1, 3}});
    auto s = extract_expander(star, 1, 3);
    CHECK(s.size() <= 7);
    CHECK_THROWS(extract_expander(star, 0, 3));
}

TEST_CASE("connect_components") {
    const auto k9 = complete(9, 3);
    auto ids = extract_expander(k9, 100, 0);
    auto same = connect_components(k9, ids);
    CHECK(same.connected);
    CHECK(same.added == 0);

    // {0,1,2}, {3,4,5}, {6,7,8}: three components inside complete(9,3)
    std::vector<EdgeId> parts;
    for (auto e : std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}) parts.push_back(*k9.find_edge(e));
    auto joined = connect_components(k9, {parts[0], parts[1]});
    // 6, 7 and 8 are isolated in Gamma: {0,1,3}, {0,1,6}, {0,1,7}, {0,1,8} are the lowest crossing ids in turn
    CHECK(joined.connected);
    CHECK(joined.added == 4);
    CHECK(joined.edges.size() == 6);
    CHECK(joined.edges[2] == *k9.find_edge(std::vector<Vertex>{0, 1, 3}));
    auto two = connect_components(k9, parts);
    CHECK(two.connected);
    CHECK(two.added == 2);
    CHECK(is_connected(k9.subgraph(two.edges)));

    const auto tc = two_cliques(8, 3);
    std::vector<EdgeId> every(tc.num_edges());
    std::iota(every.begin(), every.end(), 0);
    auto fail = connect_components(tc, every);
    CHECK_FALSE(fail.connected);
    CHECK(fail.obstruction == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("absorption_run") {
    const auto k20 = complete(20, 3);
    auto res = absorption_run(k20, 8, 200000, 1);
    REQUIRE(res.outcome.verdict == Verdict::yes);
    CHECK(is_berge_hamilton_cycle(k20, *res.outcome.certificate));
    CHECK(res.trace.size() <= 20);
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        const auto& st = res.trace[i];
        CHECK(st.added.size() >= 1);
        CHECK(st.added.size() <= 2);
        CHECK(st.result_length > st.path_length);
        if (i + 1 < res.trace.size()) CHECK(res.trace[i + 1].gamma_edges == st.gamma_edges + st.added.size());
    }

    CHECK(absorption_run(two_cliques(8, 3), 3, 1000, 0).outcome.verdict == Verdict::no);
    auto zero = absorption_run(k20, 8, 0, 0);
    CHECK(zero.outcome.verdict == Verdict::unknown);
    CHECK(zero.trace.empty());
}

TEST_CASE("absorption boosters come from outside the current sparse graph") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const auto g = binomial(16, 3, 0.2, s);
        auto res = absorption_run(g, 2, 100000, s);
        if (res.outcome.verdict == Verdict::no) CHECK((!is_connected(g) || g.min_degree() < 2 || g.num_edges() < g.n()));
        std::vector<char> seen(g.num_edges(), 0);
        if (res.outcome.verdict == Verdict::yes) CHECK(is_berge_hamilton_cycle(g, *res.outcome.certificate));
        for (const auto& st : res.trace) {
            for (EdgeId e : st.added) {
                CHECK(e < g.num_edges());
                CHECK_FALSE(seen[e]);
                seen[e] = 1;
            }
        }
        CHECK(res.trace.size() <= g.n());
    }
}

TEST_CASE("default d0") {
    CHECK(default_d0(40, 0.1) == 2);
    CHECK(default_d0(40, 0.9) == 2);
    CHECK(default_d0(1000000, 0.99) == 13);
}
