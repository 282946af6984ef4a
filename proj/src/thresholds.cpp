#include "bergehit/thresholds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "bergehit/errors.hpp"
#include "bergehit/rng.hpp"

namespace bergehit {

namespace {

constexpr double kSlack = 1e-12;

void require_host(const Hypergraph& h) {
    if (h.n() < 3) throw std::invalid_argument("threshold quantities need n >= 3");
}

void require_eps(double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0,1)");
}

double n_pow_r1(const Hypergraph& h) {
    return std::pow(static_cast<double>(h.n()), static_cast<double>(h.r()) - 1);
}

std::map<std::size_t, std::size_t> degree_multiset(const Hypergraph& h) {
    std::map<std::size_t, std::size_t> out;
    for (Vertex v = 0; v < h.n(); ++v) ++out[h.degree(v)];
    return out;
}

double survival_sum(const std::map<std::size_t, std::size_t>& degrees, double p) {
    const double lg = std::log1p(-p);
    double sum = 0;
    for (auto [d, mult] : degrees) sum += static_cast<double>(mult) * std::exp(static_cast<double>(d) * lg);
    return sum;
}

double clamp_open(double p) {
    return std::clamp(p, std::numeric_limits<double>::min(), std::nextafter(1.0, 0.0));
}

}  // namespace

BasicThresholds basic_thresholds(const Hypergraph& h, double eps) {
    require_host(h);
    require_eps(eps);
    const double ln_n = std::log(static_cast<double>(h.n()));
    const double big_n = static_cast<double>(h.num_edges());
    BasicThresholds out;
    out.p1 = ln_n / n_pow_r1(h);
    out.p2 = 2 * ln_n / (eps * n_pow_r1(h));
    out.m1 = big_n * out.p1;
    out.m2 = big_n * out.p2;
    out.m1_floor = static_cast<std::size_t>(std::floor(out.m1));
    out.m2_ceil = static_cast<std::size_t>(std::ceil(out.m2));
    return out;
}

P0Solution solve_p0(const Hypergraph& h, double tol) {
    require_host(h);
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (h.min_degree() == 0) throw NoRootError("a vertex of degree 0 keeps the left side at least 1 for every p");
    const auto degrees = degree_multiset(h);
    const double target = 1 / std::log(static_cast<double>(h.n()));
    auto f = [&](double p) { return survival_sum(degrees, p) - target; };

    double lo = 0, hi = 1;  // f(lo) > 0 > f(hi)
    P0Solution out;
    while (true) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        ++out.iterations;
        if (f(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    out.p0 = std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
    out.residual = f(out.p0);
    if (std::abs(out.residual) > tol)
        throw NoRootError("bisection residual " + std::to_string(out.residual) + " exceeds tolerance");
    return out;
}

double regular_p0(std::size_t n, std::size_t degree) {
    const double nn = static_cast<double>(n);
    return -std::expm1(-std::log(nn * std::log(nn)) / static_cast<double>(degree));
}

double gamma_value(std::size_t n, double c_gamma) {
    if (n < 3) return 0;
    const double lln = std::log(std::log(static_cast<double>(n)));
    if (lln <= 1) return 0;
    return std::max(0.0, c_gamma * std::log(lln));
}

ShiftedThresholds shifted_thresholds(const Hypergraph& h, double eps, double c_gamma, double p0) {
    require_host(h);
    require_eps(eps);
    const double scale = n_pow_r1(h);
    const double ln_n = std::log(static_cast<double>(h.n()));
    const double big_n = static_cast<double>(h.num_edges());
    ShiftedThresholds out;
    out.gamma = gamma_value(h.n(), c_gamma);
    out.p3 = clamp_open(p0 - out.gamma / scale);
    out.p4 = clamp_open(p0 + out.gamma / scale);
    out.m3 = big_n * out.p3;
    out.m4 = big_n * out.p4;
    out.m3_floor = static_cast<std::size_t>(std::floor(out.m3));
    out.m4_ceil = static_cast<std::size_t>(std::ceil(out.m4));
    out.p3_floor_bound = std::tgamma(static_cast<double>(h.r()) + 1) * ln_n / (2 * scale);
    out.p4_ceiling_bound = 2 * ln_n / (eps * scale);
    out.p3_floor_ok = out.p3 >= out.p3_floor_bound;
    out.p4_ceiling_ok = out.p4 <= out.p4_ceiling_bound;
    return out;
}

double scaled_survival(const Hypergraph& h, double p) {
    return std::log(static_cast<double>(h.n())) * survival_sum(degree_multiset(h), p);
}

Lemma24Report lemma24_report(const Hypergraph& h, double eps, double p3, double p4, double gamma) {
    require_host(h);
    require_eps(eps);
    if (!(p3 > 0 && p3 < 1 && p4 > 0 && p4 < 1)) throw std::invalid_argument("p3 and p4 must lie in (0,1)");
    Lemma24Report out;
    out.s3 = scaled_survival(h, p3);
    out.s4 = scaled_survival(h, p4);
    out.l1_bound = std::exp(eps * gamma / 4);
    out.l2_bound = std::exp(gamma);
    out.l3_bound = std::exp(-gamma);
    out.l1_ok = out.s3 >= out.l1_bound * (1 - kSlack);
    out.l2_ok = out.s3 <= out.l2_bound * (1 + kSlack);
    out.l3_ok = out.s4 <= out.l3_bound * (1 + kSlack);
    return out;
}

ThresholdReport threshold_report(const Hypergraph& h, double eps, double c_gamma, double tol) {
    ThresholdReport rep;
    rep.n = h.n();
    rep.r = h.r();
    rep.N = h.num_edges();
    rep.eps = eps;
    rep.c_gamma = c_gamma;
    rep.basic = basic_thresholds(h, eps);
    rep.p0 = solve_p0(h, tol);
    rep.shifted = shifted_thresholds(h, eps, c_gamma, rep.p0.p0);
    rep.lemma24 = lemma24_report(h, eps, rep.shifted.p3, rep.shifted.p4, rep.shifted.gamma);
    return rep;
}

std::string_view property_status_name(PropertyStatus s) noexcept {
    switch (s) {
        case PropertyStatus::verified: return "verified";
        case PropertyStatus::violated: return "violated";
        case PropertyStatus::no_counterexample: return "no_counterexample";
    }
    return "verified";
}

std::vector<Vertex> small_vertices(const Hypergraph& g, double d0) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (static_cast<double>(g.degree(v)) <= d0) out.push_back(v);
    return out;
}

namespace {

using Mask = std::uint64_t;

std::vector<Vertex> members(Mask m) {
    std::vector<Vertex> out;
    for (Vertex v = 0; m != 0; ++v, m >>= 1)
        if (m & 1) out.push_back(v);
    return out;
}

int pc(Mask m) { return std::popcount(m); }

// Subset-quantified checks. Sets are passed as membership flags so the same
// counting code serves enumeration (bitmask) and sampling (arbitrary n).
class SetChecks {
public:
    SetChecks(const Hypergraph& g, double eps, const PropertyOptions& opt)
        : g_(g), eps_(eps), opt_(opt), ln_n_(std::log(static_cast<double>(g.n()))),
          k_small_(static_cast<std::size_t>(std::floor(static_cast<double>(g.n()) / std::sqrt(ln_n_)))),
          rng_(derive_seed(opt.seed, 0x70726f7073ULL)) {
        if (!opt.sampled) {
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                Mask m = 0;
                for (Vertex v : g.edge(e)) m |= Mask{1} << v;
                masks_.push_back(m);
            }
        }
    }

    void guard(const char* name) const {
        if (!opt_.sampled && (g_.n() > opt_.exact_max_n || g_.n() > 63))
            throw CapacityError(std::string(name) + " exact mode: n = " + std::to_string(g_.n()) +
                                " exceeds the guard of " + std::to_string(std::min<std::size_t>(opt_.exact_max_n, 63)));
    }

    PropertyVerdict p4() {
        guard("P4");
        PropertyVerdict v = start("P4", std::pow(ln_n_, 0.75));
        const std::size_t n = g_.n();
        auto check = [&](const std::vector<Vertex>& u, std::size_t count) {
            const double ratio = static_cast<double>(count) / static_cast<double>(u.size());
            v.observed = std::max(v.observed, ratio);
            if (static_cast<double>(count) > static_cast<double>(u.size()) * v.bound) return fail(v, u, {}), true;
            return false;
        };
        if (k_small_ == 0) return vacuous(v);
        if (!opt_.sampled) {
            for (Mask u = 1; u < (Mask{1} << n); ++u) {
                if (static_cast<std::size_t>(pc(u)) > k_small_) continue;
                std::size_t count = 0;
                for (Mask e : masks_) count += pc(e & u) >= 2;
                if (check(members(u), count)) return v;
            }
            return v;
        }
        for (std::size_t t = 0; t < opt_.trials; ++t) {
            auto u = draw(1 + rng_.below(std::min(k_small_, n)), {});
            if (check(u, count_edges(u, {}, [](std::size_t cu, std::size_t) { return cu >= 2; }))) return v;
        }
        return sampled(v);
    }

    PropertyVerdict p5() {
        guard("P5");
        PropertyVerdict v = start("P5", 0.5 * eps_ * ln_n_);
        const std::size_t n = g_.n();
        auto check = [&](const std::vector<Vertex>& u, const std::vector<Vertex>& w, std::size_t count) {
            v.observed = std::max(v.observed, static_cast<double>(count) / static_cast<double>(u.size()));
            if (static_cast<double>(count) > v.bound * static_cast<double>(u.size())) return fail(v, u, w), true;
            return false;
        };
        if (k_small_ == 0) return vacuous(v);
        if (!opt_.sampled) {
            // the count only grows with W, so the largest admissible W suffices
            const Mask all = (Mask{1} << n) - 1;
            for (Mask u = 1; u <= all; ++u) {
                const std::size_t su = static_cast<std::size_t>(pc(u));
                if (su > k_small_) continue;
                std::vector<Mask> once;
                for (Mask e : masks_)
                    if (pc(e & u) == 1) once.push_back(e);
                const Mask comp = all & ~u;
                const int target = static_cast<int>(std::min(3 * su, n - su));
                for (Mask w = comp;; w = (w - 1) & comp) {
                    if (pc(w) == target) {
                        std::size_t count = 0;
                        for (Mask e : once) count += (e & w) != 0;
                        if (check(members(u), members(w), count)) return v;
                    }
                    if (w == 0) break;
                }
            }
            return v;
        }
        for (std::size_t t = 0; t < opt_.trials; ++t) {
            const std::size_t su = 1 + rng_.below(std::min(k_small_, n - 1));
            auto u = draw(su, {});
            auto w = draw(rng_.below(std::min(3 * su, n - su) + 1), u);
            if (check(u, w, count_edges(u, w, [](std::size_t cu, std::size_t cw) { return cu == 1 && cw > 0; }))) return v;
        }
        return sampled(v);
    }

    PropertyVerdict p6() {
        guard("P6");
        const std::size_t n = g_.n();
        PropertyVerdict v = start("P6", static_cast<double>(n) * std::cbrt(ln_n_));
        v.observed = std::numeric_limits<double>::infinity();
        const std::size_t a = k_small_;
        const auto b = static_cast<std::size_t>(std::floor((1 - eps_ / 2) * static_cast<double>(n)));
        if (a == 0 || a + b > n) return vacuous(v);
        const std::size_t r1 = g_.r() - 1;
        auto check = [&](const std::vector<Vertex>& u, const std::vector<Vertex>& w, std::size_t count) {
            v.observed = std::min(v.observed, static_cast<double>(count));
            if (static_cast<double>(count) < v.bound) return fail(v, u, w), true;
            return false;
        };
        if (!opt_.sampled) {
            const Mask all = (Mask{1} << n) - 1;
            for (Mask u = 1; u <= all; ++u) {
                if (static_cast<std::size_t>(pc(u)) != a) continue;
                std::vector<Mask> once;
                for (Mask e : masks_)
                    if (pc(e & u) == 1) once.push_back(e);
                const Mask comp = all & ~u;
                for (Mask w = comp;; w = (w - 1) & comp) {
                    if (static_cast<std::size_t>(pc(w)) == b) {
                        std::size_t count = 0;
                        for (Mask e : once) count += static_cast<std::size_t>(pc(e & w)) == r1;
                        if (check(members(u), members(w), count)) return v;
                    }
                    if (w == 0) break;
                }
            }
            return v;
        }
        for (std::size_t t = 0; t < opt_.trials; ++t) {
            auto u = draw(a, {});
            auto w = draw(b, u);
            if (check(u, w, count_edges(u, w, [r1](std::size_t cu, std::size_t cw) { return cu == 1 && cw == r1; })))
                return v;
        }
        return sampled(v);
    }

    PropertyVerdict p7() {
        guard("P7");
        const std::size_t n = g_.n();
        PropertyVerdict v = start("P7", 1);
        v.observed = std::numeric_limits<double>::infinity();
        const double floor_size = eps_ * static_cast<double>(n) / 6;
        const auto lo = static_cast<std::size_t>(std::ceil(floor_size));
        const std::size_t hi = n / 2;
        if (lo > hi) return vacuous(v);
        auto check = [&](const std::vector<Vertex>& u, const std::vector<Vertex>& w, std::size_t count) {
            v.observed = std::min(v.observed, static_cast<double>(count));
            if (count == 0) return fail(v, u, w), true;
            return false;
        };
        if (!opt_.sampled) {
            const Mask all = (Mask{1} << n) - 1;
            for (Mask u = 1; u < all; ++u) {
                const auto su = static_cast<std::size_t>(pc(u));
                if (su < lo || su > hi) continue;
                const Mask w = all & ~u;
                std::size_t count = 0;
                for (Mask e : masks_) count += (e & u) != 0 && (e & w) != 0;
                if (check(members(u), members(w), count)) return v;
            }
            return v;
        }
        for (std::size_t t = 0; t < opt_.trials; ++t) {
            auto u = draw(lo + rng_.below(hi - lo + 1), {});
            std::vector<char> in_u(n, 0);
            for (Vertex x : u) in_u[x] = 1;
            std::vector<Vertex> w;
            for (Vertex x = 0; x < n; ++x)
                if (!in_u[x]) w.push_back(x);
            if (check(u, w, count_edges(u, w, [](std::size_t cu, std::size_t cw) { return cu > 0 && cw > 0; }))) return v;
        }
        return sampled(v);
    }

private:
    PropertyVerdict start(const char* name, double bound) const {
        PropertyVerdict v;
        v.name = name;
        v.bound = bound;
        v.status = PropertyStatus::verified;
        return v;
    }

    PropertyVerdict vacuous(PropertyVerdict v) const {
        v.observed = 0;
        v.detail = "no admissible sets";
        if (opt_.sampled) v.status = PropertyStatus::no_counterexample;
        return v;
    }

    PropertyVerdict sampled(PropertyVerdict v) const {
        v.status = PropertyStatus::no_counterexample;
        v.trials = opt_.trials;
        return v;
    }

    static void fail(PropertyVerdict& v, std::vector<Vertex> u, std::vector<Vertex> w) {
        v.status = PropertyStatus::violated;
        v.u = std::move(u);
        v.w = std::move(w);
    }

    // Uniform `size`-subset of the vertices outside `exclude`, ascending.
    std::vector<Vertex> draw(std::size_t size, const std::vector<Vertex>& exclude) {
        std::vector<char> out_of(g_.n(), 0);
        for (Vertex x : exclude) out_of[x] = 1;
        std::vector<Vertex> pool;
        for (Vertex x = 0; x < g_.n(); ++x)
            if (!out_of[x]) pool.push_back(x);
        size = std::min(size, pool.size());
        for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng_.below(pool.size() - i)]);
        pool.resize(size);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    template <typename Pred>
    std::size_t count_edges(const std::vector<Vertex>& u, const std::vector<Vertex>& w, Pred pred) const {
        std::vector<char> side(g_.n(), 0);
        for (Vertex x : u) side[x] = 1;
        for (Vertex x : w) side[x] = 2;
        std::size_t count = 0;
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            std::size_t cu = 0, cw = 0;
            for (Vertex x : g_.edge(e)) {
                cu += side[x] == 1;
                cw += side[x] == 2;
            }
            count += pred(cu, cw);
        }
        return count;
    }

    const Hypergraph& g_;
    double eps_;
    const PropertyOptions& opt_;
    double ln_n_;
    std::size_t k_small_;
    Rng rng_;
    std::vector<Mask> masks_;
};

}  // namespace

std::vector<PropertyVerdict> property_report(const Hypergraph& g, double eps, const PropertyOptions& options) {
    require_host(g);
    require_eps(eps);
    const std::size_t n = g.n();
    const double ln_n = std::log(static_cast<double>(n));
    const double d0 = options.d0.value_or(std::pow(eps, 8) * ln_n);
    std::vector<PropertyVerdict> out;

    PropertyVerdict p1;
    p1.name = "P1";
    p1.bound = 10 / eps * ln_n;
    Vertex top = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(top)) top = v;
    p1.observed = static_cast<double>(g.degree(top));
    if (p1.observed > p1.bound) {
        p1.status = PropertyStatus::violated;
        p1.vertex = top;
    }
    out.push_back(p1);

    const auto small = small_vertices(g, d0);
    PropertyVerdict p2;
    p2.name = "P2";
    p2.bound = std::pow(static_cast<double>(n), 0.1);
    p2.observed = static_cast<double>(small.size());
    if (p2.observed > p2.bound) {
        p2.status = PropertyStatus::violated;
        p2.u = small;
    }
    out.push_back(p2);

    PropertyVerdict p3;
    p3.name = "P3";
    p3.bound = 1;
    {
        std::vector<char> in_small(n, 0);
        for (Vertex v : small) in_small[v] = 1;
        for (EdgeId e = 0; e < g.num_edges() && p3.status == PropertyStatus::verified; ++e) {
            std::size_t hits = 0;
            for (Vertex v : g.edge(e)) hits += in_small[v];
            p3.observed = std::max(p3.observed, static_cast<double>(hits));
            if (hits > 1) {
                p3.status = PropertyStatus::violated;
                p3.edge = e;
                p3.detail = "edge meets SMALL more than once";
            }
        }
        VertexSet closed(n);
        for (Vertex v : small) closed.insert(v);
        closed |= neighborhood(g, closed);
        for (Vertex v = 0; v < n && p3.status == PropertyStatus::verified; ++v) {
            if (in_small[v]) continue;
            std::size_t touching = 0;
            for (EdgeId e : g.incident(v)) {
                bool hit = false;
                for (Vertex u : g.edge(e)) hit = hit || (u != v && closed.contains(u));
                touching += hit;
            }
            p3.observed = std::max(p3.observed, static_cast<double>(touching));
            if (touching > 1) {
                p3.status = PropertyStatus::violated;
                p3.vertex = v;
                p3.detail = "vertex outside SMALL lies in several edges meeting N[SMALL]";
            }
        }
    }
    out.push_back(p3);

    SetChecks checks(g, eps, options);
    out.push_back(checks.p4());
    out.push_back(checks.p5());
    out.push_back(checks.p6());
    out.push_back(checks.p7());
    return out;
}

}  // namespace bergehit
