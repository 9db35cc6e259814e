#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "bbk/errors.hpp"
#include "bbk/hyperbolic.hpp"
#include "bbk/matrix.hpp"
#include "bbk/nodes.hpp"

namespace bbk {

/// Kernel family parameters: smoothness order beta and shape parameter eps.
/// Closed-form evaluation is implemented for beta = 1; higher orders are
/// rejected with unsupported_order.
struct KernelParams {
    int beta = 1;
    double eps = 0.0;

    KernelParams(int beta_, double eps_) : beta(beta_), eps(eps_) {
        if (beta < 1) throw std::invalid_argument("KernelParams: beta must be a positive integer");
        if (!std::isfinite(eps) || eps < 0.0)
            throw std::invalid_argument("KernelParams: eps must be finite and >= 0");
    }
};

namespace detail {

inline void check_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

inline void require_order_one(const KernelParams& params) {
    if (params.beta != 1)
        throw unsupported_order("unsupported order: no closed form implemented for beta = " +
                                std::to_string(params.beta));
}

}  // namespace detail

/// Brownian Bridge kernel of order one on (0,1), extended by continuity to
/// the closed interval (it vanishes whenever x or y hits the boundary):
///
///   k(x,y) = min(x,y) - x*y                                        eps = 0
///   k(x,y) = sinh(eps*min) * sinh(eps*(1-max)) / (eps*sinh(eps))   eps > 0
///
/// Arguments are canonicalized to (min, max) first, so symmetry in (x,y) is
/// exact in floating point.  The eps > 0 branch is evaluated through
/// sinh_prod_ratio and stays finite for eps up to ~700.
inline double kernel_eval(const KernelParams& params, double x, double y) {
    detail::require_order_one(params);
    detail::check_unit_interval(x, "x");
    detail::check_unit_interval(y, "y");
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    if (params.eps == 0.0) return lo * (1.0 - hi);
    const double e = params.eps;
    return sinh_prod_ratio(e * lo, e * (1.0 - hi), e) / e;
}

/// Gram matrix K with K(i,j) = k(x_i, x_j) over the interior nodes.
/// Symmetric by construction; strictly positive definite in exact arithmetic.
inline Matrix gram_matrix(const KernelParams& params, const NodeSet& nodes) {
    detail::require_order_one(params);
    const std::size_t n = nodes.size();
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = kernel_eval(params, nodes.interior()[i], nodes.interior()[j]);
            k(i, j) = v;
            k(j, i) = v;
        }
    }
    return k;
}

}  // namespace bbk
