#ifndef BERGEHIT_THRESHOLDS_HPP
#define BERGEHIT_THRESHOLDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bergehit/hypergraph.hpp"

namespace bergehit {

// Natural logarithms throughout.

struct BasicThresholds {
    double p1 = 0, p2 = 0;
    double m1 = 0, m2 = 0;
    std::size_t m1_floor = 0, m2_ceil = 0;
};

/// p1 = ln n / n^(r-1), p2 = 2 ln n / (eps n^(r-1)), m_i = N p_i. Requires n >= 3, 0 < eps < 1.
BasicThresholds basic_thresholds(const Hypergraph& h, double eps);

struct P0Solution {
    double p0 = 0;
    double residual = 0;  // sum (1-p0)^d_v - 1/ln n
    std::size_t iterations = 0;
};

/**
 * Root of sum_v (1-p)^d_v = 1/ln n on (0,1) by bisection. The degree
 * multiset is compressed to (degree, multiplicity) pairs. Bisection runs to
 * floating-point resolution; throws NoRootError for a vertex of degree 0 and
 * when the final residual exceeds tol.
 */
P0Solution solve_p0(const Hypergraph& h, double tol = 1e-9);

/// Closed form for a D-regular host: 1 - (n ln n)^(-1/D).
double regular_p0(std::size_t n, std::size_t degree);

/// gamma = max(0, c_gamma ln ln ln n); zero whenever ln ln n <= 1.
double gamma_value(std::size_t n, double c_gamma);

struct ShiftedThresholds {
    double gamma = 0;
    double p3 = 0, p4 = 0;
    double m3 = 0, m4 = 0;
    std::size_t m3_floor = 0, m4_ceil = 0;
    bool p3_floor_ok = false;  // p3 >= r! ln n / (2 n^(r-1))
    bool p4_ceiling_ok = false;  // p4 <= 2 ln n / (eps n^(r-1))
    double p3_floor_bound = 0, p4_ceiling_bound = 0;
};

/// p3, p4 = p0 -/+ gamma / n^(r-1), clamped into (0,1).
ShiftedThresholds shifted_thresholds(const Hypergraph& h, double eps, double c_gamma, double p0);

struct Lemma24Report {
    double s3 = 0;  // ln n * sum (1-p3)^d_v
    double s4 = 0;  // ln n * sum (1-p4)^d_v
    double l1_bound = 0, l2_bound = 0, l3_bound = 0;
    bool l1_ok = false;  // s3 >= e^(eps gamma / 4)
    bool l2_ok = false;  // s3 <= e^gamma
    bool l3_ok = false;  // s4 <= e^-gamma
};

/// Comparisons allow a 1e-12 relative slack so exact equalities are not lost to rounding.
Lemma24Report lemma24_report(const Hypergraph& h, double eps, double p3, double p4, double gamma);

struct ThresholdReport {
    std::size_t n = 0, r = 0, N = 0;
    double eps = 0, c_gamma = 0;
    BasicThresholds basic;
    P0Solution p0;
    ShiftedThresholds shifted;
    Lemma24Report lemma24;
};

ThresholdReport threshold_report(const Hypergraph& h, double eps, double c_gamma, double tol = 1e-9);

/// ln n * sum_v (1-p)^d_v, evaluated as exp(d log1p(-p)).
double scaled_survival(const Hypergraph& h, double p);

enum class PropertyStatus { verified, violated, no_counterexample };

std::string_view property_status_name(PropertyStatus s) noexcept;

struct PropertyVerdict {
    std::string name;  // "P1" .. "P7"
    PropertyStatus status = PropertyStatus::verified;
    double bound = 0;      // the threshold the property compares against
    double observed = 0;   // worst value seen (max for upper bounds, min for lower bounds)
    std::size_t trials = 0;
    std::optional<Vertex> vertex;
    std::optional<EdgeId> edge;
    std::vector<Vertex> u, w;
    std::string detail;
};

struct PropertyOptions {
    bool sampled = false;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::size_t exact_max_n = 12;
    std::optional<double> d0;  // defaults to eps^8 ln n
};

/**
 * P1..P7 on G. P1-P3 are always exact. P4-P7 quantify over vertex subsets:
 * exact mode enumerates them (CapacityError above exact_max_n), sampled mode
 * draws random admissible sets and never reports verified. Size thresholds
 * n/sqrt(ln n) and (1-eps/2) n are rounded down.
 */
std::vector<PropertyVerdict> property_report(const Hypergraph& g, double eps, const PropertyOptions& options = {});

/// SMALL(G) for threshold d0: vertices of degree at most d0.
std::vector<Vertex> small_vertices(const Hypergraph& g, double d0);

}  // namespace bergehit

#endif  // BERGEHIT_THRESHOLDS_HPP
