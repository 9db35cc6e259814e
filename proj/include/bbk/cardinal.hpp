#pragma once

#include <cstddef>
#include <stdexcept>

#include "bbk/hyperbolic.hpp"
#include "bbk/kernel.hpp"
#include "bbk/nodes.hpp"

namespace bbk {

/// Values of the at most two cardinal functions that are nonzero at a point:
/// x lies in [x_interval, x_interval+1), left = l_interval(x) and
/// right = l_{interval+1}(x).  Slots referring to the boundary indices 0 and
/// N+1 carry no basis function and hold 0.
struct LocalValues {
    std::size_t interval = 0;
    double left = 0.0;
    double right = 0.0;
};

/// Lagrange (cardinal) basis l_i for order-one kernel interpolation at a
/// NodeSet: l_i(x_j) = delta_ij, supported on [x_{i-1}, x_{i+1}].
///
/// For eps > 0 each l_i is a ratio of sinh values on its two intervals,
///
///   l_i(x) = sinh(eps*(x - x_{i-1})) / sinh(eps*h_{i-1})   on [x_{i-1}, x_i)
///   l_i(x) = sinh(eps*(x_{i+1} - x)) / sinh(eps*h_i)       on [x_i, x_{i+1})
///
/// and for eps = 0 the linear tent with the same support.  Ratios are
/// recomputed on demand from the interval endpoints; nothing eps-dependent is
/// precomputed, so evaluation stays finite for eps up to ~700.
class CardinalBasis {
  public:
    CardinalBasis(const KernelParams& params, NodeSet nodes)
        : params_(params), nodes_(std::move(nodes)) {
        detail::require_order_one(params_);
    }

    const NodeSet& nodes() const { return nodes_; }
    const KernelParams& params() const { return params_; }
    std::size_t size() const { return nodes_.size(); }

    /// l_i(x) for i in [1, N].  x is accepted on the closed interval [0,1];
    /// the value is 0 outside [x_{i-1}, x_{i+1}].
    double eval(std::size_t i, double x) const {
        if (i < 1 || i > nodes_.size()) throw std::out_of_range("CardinalBasis: index out of range");
        detail::check_unit_interval(x, "x");
        const double left = nodes_.point(i - 1);
        const double center = nodes_.point(i);
        const double right = nodes_.point(i + 1);
        if (x < left || x > right) return 0.0;
        if (x < center) return piece(x - left, center - left);
        return piece(right - x, right - center);
    }

    /// Locates the interval containing x and returns the nonzero basis
    /// values there.  O(log N).
    LocalValues eval_all_nonzero(double x) const {
        detail::check_unit_interval(x, "x");
        const std::size_t n = nodes_.size();
        std::size_t i = nodes_.locate(x);
        LocalValues out;
        out.interval = i;
        const double lo = nodes_.point(i);
        const double hi = nodes_.point(i + 1);
        if (i >= 1) out.left = piece(hi - x, hi - lo);
        if (i + 1 <= n) out.right = piece(x - lo, hi - lo);
        return out;
    }

  private:
    // One piece of l_i: sinh(eps*a)/sinh(eps*h) or the linear limit a/h.
    // a and h are computed by the callers as differences of the same stored
    // node values, so a == h gives exactly 1 and a == 0 exactly 0.
    double piece(double a, double h) const {
        if (params_.eps == 0.0) return a / h;
        return sinh_ratio(params_.eps * a, params_.eps * h);
    }

    KernelParams params_;
    NodeSet nodes_;
};

/// Constructs the cardinal basis; rejects orders other than beta = 1.
inline CardinalBasis build_cardinal(const KernelParams& params, NodeSet nodes) {
    return CardinalBasis(params, std::move(nodes));
}

inline double eval_cardinal(const CardinalBasis& basis, std::size_t i, double x) {
    return basis.eval(i, x);
}

inline LocalValues eval_all_nonzero(const CardinalBasis& basis, double x) {
    return basis.eval_all_nonzero(x);
}

}  // namespace bbk
