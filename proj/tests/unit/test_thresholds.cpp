#include <doctest.h>

#include <cmath>

#include "bergehit/errors.hpp"
#include "bergehit/generators.hpp"
#include "bergehit/thresholds.hpp"

using namespace bergehit;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const PropertyVerdict& find(const std::vector<PropertyVerdict>& vs, const std::string& name) {
    for (const auto& v : vs)
        if (v.name == name) return v;
    throw std::logic_error("missing " + name);
}

bool in(std::span<const Vertex> e, Vertex v) { return std::find(e.begin(), e.end(), v) != e.end(); }

// P3 by a plain double loop over (edge, SMALL pair) and (vertex, incident edge pair)
bool brute_p3(const Hypergraph& g, double d0) {
    const std::size_t n = g.n();
    std::vector<bool> small(n), closed(n);
    for (Vertex v = 0; v < n; ++v) small[v] = static_cast<double>(g.degree(v)) <= d0;
    for (Vertex v = 0; v < n; ++v) {
        if (!small[v]) continue;
        closed[v] = true;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (in(g.edge(e), v))
                for (Vertex u : g.edge(e)) closed[u] = true;
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = s + 1; t < n; ++t)
                if (small[s] && small[t] && in(g.edge(e), s) && in(g.edge(e), t)) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (small[v]) continue;
        for (EdgeId a = 0; a < g.num_edges(); ++a)
            for (EdgeId b = a + 1; b < g.num_edges(); ++b) {
                if (!in(g.edge(a), v) || !in(g.edge(b), v)) continue;
                auto touches = [&](EdgeId e) {
                    for (Vertex u : g.edge(e))
                        if (u != v && closed[u]) return true;
                    return false;
                };
                if (touches(a) && touches(b)) return false;
            }
    }
    return true;
}

// P4 by subset enumeration over bit patterns
bool brute_p4(const Hypergraph& g) {
    const std::size_t n = g.n();
    const double ln_n = std::log(static_cast<double>(n));
    const auto cap = static_cast<std::size_t>(std::floor(n / std::sqrt(ln_n)));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::size_t size = 0;
        for (Vertex v = 0; v < n; ++v) size += (mask >> v) & 1;
        if (size > cap) continue;
        std::size_t heavy = 0;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            std::size_t c = 0;
            for (Vertex v : g.edge(e)) c += (mask >> v) & 1;
            heavy += c >= 2;
        }
        if (static_cast<double>(heavy) > static_cast<double>(size) * std::pow(ln_n, 0.75)) return false;
    }
    return true;
}

// P7 by enumerating bipartitions
bool brute_p7(const Hypergraph& g, double eps) {
    const std::size_t n = g.n();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::size_t su = 0;
        for (Vertex v = 0; v < n; ++v) su += (mask >> v) & 1;
        const std::size_t sw = n - su;
        if (static_cast<double>(su) < eps * n / 6 || su > sw) continue;
        bool crossing = false;
        for (EdgeId e = 0; e < g.num_edges() && !crossing; ++e) {
            bool a = false, b = false;
            for (Vertex v : g.edge(e)) ((mask >> v) & 1 ? a : b) = true;
            crossing = a && b;
        }
        if (!crossing) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("basic thresholds on complete(60,3)") {
    const auto k60 = complete(60, 3);
    auto b = basic_thresholds(k60, 0.3);
    const double ln60 = std::log(60.0);
    CHECK(rel(b.p1, ln60 / 3600) < 1e-12);
    CHECK(rel(b.p1, 1.1373e-3) < 1e-4);
    CHECK(rel(b.m1, 34220 * ln60 / 3600) < 1e-12);
    CHECK(b.m1_floor == 38);
    CHECK(b.m2_ceil == static_cast<std::size_t>(std::ceil(34220 * 2 * ln60 / (0.3 * 3600))));
    CHECK(rel(b.p2 / b.p1, 2 / 0.3) < 1e-12);
    auto near_one = basic_thresholds(k60, 1 - 1e-12);
    CHECK(rel(near_one.m2, 2 * near_one.m1) < 1e-9);
    CHECK_THROWS(basic_thresholds(k60, 0));
    CHECK_THROWS(basic_thresholds(k60, 1));
}

TEST_CASE("p0 solver") {
    for (std::size_t n : {30, 60, 100}) {
        const auto h = complete(n, 3);
        const std::size_t d = (n - 1) * (n - 2) / 2;
        auto sol = solve_p0(h);
        const double closed = 1 - std::pow(n * std::log(static_cast<double>(n)), -1.0 / static_cast<double>(d));
        CHECK(rel(sol.p0, closed) <= 1e-10);
        CHECK(rel(regular_p0(n, d), closed) <= 1e-12);
        CHECK(std::abs(sol.residual) <= 1e-9);
    }
    // irregular host: check the defining equation directly
    const auto g = degree_condition_random(20, 3, 0.1, 4);
    auto sol = solve_p0(g, 1e-12);
    double lhs = 0;
    for (Vertex v = 0; v < g.n(); ++v) lhs += std::pow(1 - sol.p0, static_cast<double>(g.degree(v)));
    CHECK(std::abs(lhs - 1 / std::log(20.0)) <= 1e-11);

    CHECK_THROWS_AS(solve_p0(Hypergraph(5, 3, {{0, 1, 2}, {1, 2, 3}})), NoRootError);
}

TEST_CASE("gamma and shifted thresholds") {
    const auto k60 = complete(60, 3);
    const double lll = std::log(std::log(std::log(60.0)));
    CHECK(gamma_value(60, 1) == doctest::Approx(lll).epsilon(1e-12));
    CHECK(gamma_value(60, 1) == doctest::Approx(0.3433).epsilon(1e-3));
    CHECK(gamma_value(10, 5) == 0);  // ln ln 10 < 1
    CHECK(gamma_value(60, 0) == 0);

    const double p0 = solve_p0(k60).p0;
    auto same = shifted_thresholds(k60, 0.3, 0, p0);
    CHECK(same.p3 == p0);
    CHECK(same.p4 == p0);
    auto s = shifted_thresholds(k60, 0.3, 1, p0);
    CHECK(s.p3 <= p0);
    CHECK(p0 <= s.p4);
    CHECK(rel(s.p4 - s.p3, 2 * lll / 3600) < 1e-9);
    CHECK(rel(s.m3, 34220 * s.p3) < 1e-12);
    CHECK(s.m3_floor == static_cast<std::size_t>(std::floor(s.m3)));
    CHECK(s.m4_ceil == static_cast<std::size_t>(std::ceil(s.m4)));
    CHECK(rel(s.p3_floor_bound, 6 * std::log(60.0) / (2 * 3600)) < 1e-12);
    CHECK(s.p3_floor_ok == (s.p3 >= s.p3_floor_bound));
}

TEST_CASE("survival sum inequality report") {
    const auto k60 = complete(60, 3);
    const double p0 = regular_p0(60, 1711);
    auto tight = lemma24_report(k60, 0.3, p0, p0, 0);
    CHECK(tight.s3 == doctest::Approx(1).epsilon(1e-10));
    CHECK(tight.l1_ok);
    CHECK(tight.l2_ok);
    CHECK(tight.l3_ok);

    auto big = lemma24_report(k60, 0.3, p0, p0, 5);
    CHECK_FALSE(big.l3_ok);
    CHECK(big.l3_bound == doctest::Approx(std::exp(-5.0)));
    CHECK(scaled_survival(k60, p0) == doctest::Approx(1).epsilon(1e-10));

    auto rep = threshold_report(k60, 0.3, 1);
    CHECK(rep.N == 34220);
    CHECK(rep.shifted.p3 <= rep.p0.p0);
}

TEST_CASE("property report examples") {
    auto empty = property_report(Hypergraph::empty(8, 3), 0.5);
    REQUIRE(empty.size() == 7);
    CHECK(find(empty, "P1").status == PropertyStatus::verified);
    CHECK(find(empty, "P2").status == PropertyStatus::violated);

    auto k8 = property_report(complete(8, 3), 0.5);
    CHECK(find(k8, "P7").status == PropertyStatus::verified);
    CHECK(brute_p7(complete(8, 3), 0.5));

    auto tc = property_report(two_cliques(8, 3), 0.5);
    const auto& p7 = find(tc, "P7");
    REQUIRE(p7.status == PropertyStatus::violated);
    CHECK(p7.u.size() == 4);
    CHECK(p7.w.size() == 4);

    PropertyOptions sampled;
    sampled.sampled = true;
    sampled.trials = 200;
    for (const auto& v : property_report(complete(8, 3), 0.5, sampled))
        if (v.name > "P3") CHECK(v.status != PropertyStatus::verified);
    CHECK(find(property_report(two_cliques(8, 3), 0.5, sampled), "P7").status != PropertyStatus::verified);
    CHECK(property_status_name(PropertyStatus::no_counterexample) == "no_counterexample");
}

TEST_CASE("P3 matches a brute-force double loop") {
    for (std::uint64_t s = 0; s < 120; ++s) {
        const std::size_t n = 6 + s % 7;
        const auto g = binomial(n, 3, 0.03 + 0.02 * static_cast<double>(s % 5), s);
        PropertyOptions opt;
        opt.d0 = static_cast<double>(s % 3);
        opt.exact_max_n = 12;
        const bool ok = find(property_report(g, 0.5, opt), "P3").status == PropertyStatus::verified;
        CHECK(ok == brute_p3(g, *opt.d0));
    }
}

TEST_CASE("P4 and P7 match subset enumeration") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const std::size_t n = 6 + s % 4;
        const auto g = binomial(n, 3, 0.15 + 0.1 * static_cast<double>(s % 4), s);
        auto rep = property_report(g, 0.5);
        CHECK((find(rep, "P4").status == PropertyStatus::verified) == brute_p4(g));
        CHECK((find(rep, "P7").status == PropertyStatus::verified) == brute_p7(g, 0.5));
    }
}

TEST_CASE("exact property checks respect the guard") {
    const auto g = complete(14, 3);
    try {
        property_report(g, 0.5);
        FAIL("expected a capacity error");
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("P4") != std::string::npos);
    }
    PropertyOptions big;
    big.exact_max_n = 14;
    CHECK(property_report(g, 0.5, big).size() == 7);
    CHECK(small_vertices(Hypergraph(4, 3, {{0, 1, 2}}), 0.5) == std::vector<Vertex>{3});
}
