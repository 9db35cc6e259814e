#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbk/hyperbolic.hpp"
#include "bbk/interp.hpp"
#include "bbk/kernel.hpp"
#include "bbk/nodes.hpp"

namespace bbk {

/// Sampled curve (x, value) for export; see io.hpp for the CSV form.
struct ProfileTable {
    std::vector<double> abscissae;
    std::vector<double> values;
    std::string label;

    void validate() const {
        if (abscissae.size() != values.size())
            throw std::invalid_argument("ProfileTable: length mismatch");
        for (std::size_t i = 1; i < abscissae.size(); ++i)
            if (!(abscissae[i - 1] < abscissae[i]))
                throw std::invalid_argument("ProfileTable: abscissae must be strictly increasing");
    }
};

/// Fill distance h_X = (1/2) max_i h_i, boundary points included.
inline double fill_distance(const NodeSet& nodes) {
    double hmax = 0.0;
    for (std::size_t i = 0; i <= nodes.size(); ++i) hmax = std::max(hmax, nodes.gap(i));
    return 0.5 * hmax;
}

/// Lebesgue function for eps > 0, evaluated from its piecewise closed form:
///
///   sinh(eps*x)/sinh(eps*h_0)                        on (0, x_1]
///   2 sinh(eps*h_i/2)/sinh(eps*h_i)
///       * cosh(eps*(x - (x_i+x_{i+1})/2))            on [x_i, x_{i+1}]
///   sinh(eps*(1-x))/sinh(eps*h_N)                    on [x_N, 1)
///
/// The middle case is computed as cosh(eps*(x-mid))/cosh(eps*h_i/2), the same
/// expression folded once through sinh(2u) = 2 sinh(u) cosh(u), which is
/// overflow-free for large eps.  Equals sum_i |l_i(x)|; in particular 1 at
/// the nodes and < 1 elsewhere.
inline double lebesgue_eval(const KernelParams& params, const NodeSet& nodes, double x) {
    detail::require_order_one(params);
    if (params.eps == 0.0)
        throw std::invalid_argument("lebesgue_eval: eps must be > 0 (use lebesgue_eval_flat)");
    detail::check_unit_interval(x, "x");
    const double e = params.eps;
    const std::size_t n = nodes.size();
    if (x <= nodes.point(1)) return sinh_ratio(e * x, e * nodes.gap(0));
    if (x >= nodes.point(n)) return sinh_ratio(e * (1.0 - x), e * nodes.gap(n));
    const std::size_t i = nodes.locate(x);
    const double mid = 0.5 * (nodes.point(i) + nodes.point(i + 1));
    return cosh_ratio(e * (x - mid), 0.5 * e * nodes.gap(i));
}

/// Lebesgue function in the flat limit eps = 0: the tents sum to 1 on
/// [x_1, x_N] and decay linearly across the two boundary gaps.
inline double lebesgue_eval_flat(const NodeSet& nodes, double x) {
    detail::check_unit_interval(x, "x");
    if (x <= nodes.point(1)) return x / nodes.gap(0);
    if (x >= nodes.point(nodes.size())) return (1.0 - x) / nodes.gap(nodes.size());
    return 1.0;
}

/// Power function at x, from the closed form over the bracketing augmented
/// nodes x- <= x <= x+:
///
///   eps > 0:  sqrt( sinh(eps*(x-x-)) sinh(eps*(x+-x))
///                   / (eps * sinh(eps*(x+-x-))) )
///   eps = 0:  sqrt( (x-x-)(x+-x) / (x+-x-) )
///
/// Zero at every node (boundary included).
inline double power_eval(const KernelParams& params, const NodeSet& nodes, double x) {
    detail::require_order_one(params);
    detail::check_unit_interval(x, "x");
    const std::size_t i = nodes.locate(x);
    const double lo = nodes.point(i);
    const double hi = nodes.point(i + 1);
    if (x == lo || x == hi) return 0.0;
    if (params.eps == 0.0) return std::sqrt((x - lo) * (hi - x) / (hi - lo));
    const double e = params.eps;
    return std::sqrt(sinh_prod_ratio(e * (x - lo), e * (hi - x), e * (hi - lo)) / e);
}

/// Sup norm of the power function: sqrt(tanh(eps*h_X)/(2*eps)) for eps > 0,
/// sqrt(h_X/2) in the flat limit.  Attained at the midpoints of the widest
/// gaps.
inline double power_sup(const KernelParams& params, const NodeSet& nodes) {
    detail::require_order_one(params);
    const double hx = fill_distance(nodes);
    if (params.eps == 0.0) return std::sqrt(0.5 * hx);
    return std::sqrt(std::tanh(params.eps * hx) / (2.0 * params.eps));
}

/// Midpoints of every gap of maximal length (ties within one part in 1e12
/// count as maximal), i.e. the argmax set of the power function.
inline std::vector<double> argmax_power(const KernelParams& params, const NodeSet& nodes) {
    detail::require_order_one(params);
    double hmax = 0.0;
    for (std::size_t i = 0; i <= nodes.size(); ++i) hmax = std::max(hmax, nodes.gap(i));
    std::vector<double> mids;
    for (std::size_t i = 0; i <= nodes.size(); ++i)
        if (nodes.gap(i) >= hmax * (1.0 - 1e-12))
            mids.push_back(0.5 * (nodes.point(i) + nodes.point(i + 1)));
    return mids;
}

/// The error-optimal configuration: N equally spaced points i/(N+1).
inline NodeSet optimal_nodes(std::size_t n) {
    if (n < 1) throw std::invalid_argument("optimal_nodes: N must be >= 1");
    std::vector<double> xs(n);
    for (std::size_t i = 1; i <= n; ++i)
        xs[i - 1] = static_cast<double>(i) / static_cast<double>(n + 1);
    return NodeSet(std::move(xs));
}

/// Factor (8/3) eps^2 h_X^2 bounding the sup distance between the eps- and
/// flat-limit interpolants of data bounded by 1.
inline double flat_limit_bound(double eps, const NodeSet& nodes) {
    if (!(std::isfinite(eps) && eps > 0.0))
        throw std::invalid_argument("flat_limit_bound: eps must be finite and > 0");
    const double hx = fill_distance(nodes);
    return (8.0 / 3.0) * eps * eps * hx * hx;
}

/// Grid sup of |I_eps f - I_0 f| for the given sample data.
inline double flat_limit_observed(double eps, const SampleData& data, std::span<const double> grid) {
    if (!(std::isfinite(eps) && eps > 0.0))
        throw std::invalid_argument("flat_limit_observed: eps must be finite and > 0");
    const CardinalBasis with_eps(KernelParams(1, eps), data.nodes);
    const CardinalBasis flat(KernelParams(1, 0.0), data.nodes);
    double sup = 0.0;
    for (double x : grid)
        sup = std::max(sup, std::abs(interpolate(with_eps, data.values, x) -
                                     interpolate(flat, data.values, x)));
    return sup;
}

/// Evaluation grid: `uniform` equispaced points in (0,1), every interior
/// node, and every gap midpoint (the exact extrema of the power function),
/// sorted and deduplicated.
inline std::vector<double> make_profile_grid(const NodeSet& nodes, std::size_t uniform) {
    if (uniform < 2) throw std::invalid_argument("make_profile_grid: need at least 2 grid points");
    std::vector<double> g;
    g.reserve(uniform + 2 * nodes.size() + 1);
    for (std::size_t k = 1; k <= uniform; ++k)
        g.push_back(static_cast<double>(k) / static_cast<double>(uniform + 1));
    for (double x : nodes.interior()) g.push_back(x);
    for (std::size_t i = 0; i <= nodes.size(); ++i)
        g.push_back(0.5 * (nodes.point(i) + nodes.point(i + 1)));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

}  // namespace bbk
