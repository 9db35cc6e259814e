#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bbk/errors.hpp"
#include "bbk/matrix.hpp"

namespace bbk {

namespace detail {

// Derivative of x^p * exp(s*x) of the given order, with the exponential
// factor stripped: returns q such that d^order/dx^order [x^p e^{sx}] =
// q(x) * e^{sx}.  Closed form via the product rule,
//   q(x) = sum_{r=0}^{min(order,p)} C(order,r) * p!/(p-r)! * x^{p-r} * s^{order-r}.
inline double exp_poly_derivative(int p, double s, int order, double x) {
    double sum = 0.0;
    double binom = 1.0;    // C(order, r)
    double falling = 1.0;  // p! / (p-r)!
    for (int r = 0; r <= order && r <= p; ++r) {
        sum += binom * falling * std::pow(x, p - r) * std::pow(s, order - r);
        binom *= static_cast<double>(order - r) / static_cast<double>(r + 1);
        falling *= static_cast<double>(p - r);
    }
    return sum;
}

}  // namespace detail

/// Basis of the null space of the order-beta operator for eps > 0: the 2*beta
/// functions u_j(x) = x^{j-1} e^{eps*x} (j = 1..beta) and
/// u_{beta+j}(x) = x^{j-1} e^{-eps*x} (j = 1..beta), with closed-form
/// derivative evaluators of arbitrary order.
class NullSpaceBasis {
  public:
    NullSpaceBasis(int beta, double eps) : beta_(beta), eps_(eps) {
        if (beta < 1) throw std::invalid_argument("NullSpaceBasis: beta must be >= 1");
        if (!(std::isfinite(eps) && eps > 0.0))
            throw std::invalid_argument("NullSpaceBasis: eps must be finite and > 0");
    }

    int beta() const { return beta_; }
    double eps() const { return eps_; }
    int size() const { return 2 * beta_; }

    /// u_j(x), j in [1, 2*beta].
    double value(int j, double x) const { return derivative(j, 0, x); }

    /// d^order/dx^order u_j(x).
    double derivative(int j, int order, double x) const {
        check_index(j, order);
        const int p = power(j);
        const double s = sign(j) * eps_;
        return detail::exp_poly_derivative(p, s, order, x) * std::exp(s * x);
    }

    /// Same with the exponential factor e^{+-eps*t} stripped; these are the
    /// entries of the column-rescaled Wronskian and stay bounded for any eps*t.
    double scaled_derivative(int j, int order, double x) const {
        check_index(j, order);
        return detail::exp_poly_derivative(power(j), sign(j) * eps_, order, x);
    }

    int power(int j) const { return j <= beta_ ? j - 1 : j - beta_ - 1; }
    double sign(int j) const { return j <= beta_ ? 1.0 : -1.0; }

  private:
    void check_index(int j, int order) const {
        if (j < 1 || j > 2 * beta_) throw std::out_of_range("NullSpaceBasis: index out of range");
        if (order < 0) throw std::invalid_argument("NullSpaceBasis: derivative order must be >= 0");
    }

    int beta_;
    double eps_;
};

/// Wronskian matrix W(t) with entry (i,j) = d^i u_j / dx^i at t, derivative
/// orders i = 0..2*beta-1 down the rows.  Defined for any finite t; entries
/// overflow only when eps*t exceeds ~700 (the solver below never forms them).
inline Matrix wronskian_matrix(const NullSpaceBasis& basis, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("wronskian_matrix: t must be finite");
    const int m = basis.size();
    Matrix w(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 1; j <= m; ++j) w(i, j - 1) = basis.derivative(j, i, t);
    return w;
}

/// Fundamental function g(t,x) = sum_j b_j(t) u_j(x), where b(t) solves the
/// Wronskian system W(t) b(t) = e with e = (0,...,0,(-1)^beta)^T.  The system
/// is solved per t by partial-pivoting Gaussian elimination on the
/// column-rescaled matrix (columns j <= beta divided by e^{eps t}, the rest
/// multiplied), which keeps every intermediate bounded; only the public
/// coefficients() maps back to the original coordinates.
class FundamentalSolution {
  public:
    FundamentalSolution(int beta, double eps) : basis_(beta, eps) {}

    const NullSpaceBasis& basis() const { return basis_; }
    int beta() const { return basis_.beta(); }
    double eps() const { return basis_.eps(); }

    /// b(t) in original coordinates.  Components grow like e^{eps*t} and
    /// overflow once eps*t exceeds ~700; use g() for evaluation at large eps.
    std::vector<double> coefficients(double t) const {
        check_open_unit(t, "t");
        std::vector<double> b = scaled_coefficients(t);
        const int m = basis_.size();
        const double et = basis_.eps() * t;
        for (int j = 1; j <= m; ++j) b[j - 1] *= std::exp(-basis_.sign(j) * et);
        return b;
    }

    /// g(t,x); evaluated from the rescaled coefficients so that only
    /// e^{+-eps*(x-t)} appears.
    double g(double t, double x) const {
        check_open_unit(t, "t");
        check_open_unit(x, "x");
        const std::vector<double> y = scaled_coefficients(t);
        return g_from_scaled(y, t, x);
    }

    /// One-sided splines: g_plus(t,x) = g(t,x) for t > x, else 0;
    /// g_minus(t,x) = g(x,t) for t < x, else 0 (arguments swapped).
    double g_plus(double t, double x) const {
        check_open_unit(t, "t");
        check_open_unit(x, "x");
        if (!(t > x)) return 0.0;
        return g_from_scaled(scaled_coefficients(t), t, x);
    }

    double g_minus(double t, double x) const {
        check_open_unit(t, "t");
        check_open_unit(x, "x");
        if (!(t < x)) return 0.0;
        return g_from_scaled(scaled_coefficients(x), x, t);
    }

    /// Solution y of the rescaled system; b_j = y_j * e^{sign_j * eps * t}.
    std::vector<double> scaled_coefficients(double t) const {
        const int m = basis_.size();
        Matrix a(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 1; j <= m; ++j) a(i, j - 1) = basis_.scaled_derivative(j, i, t);
        std::vector<double> rhs(m, 0.0);
        rhs[m - 1] = (basis_.beta() % 2 == 0) ? 1.0 : -1.0;
        return solve_partial_pivot(a, rhs);
    }

  private:
    static void check_open_unit(double v, const char* name) {
        if (!(v > 0.0 && v < 1.0))
            throw std::invalid_argument(std::string(name) + " must lie in (0,1)");
    }

    double g_from_scaled(const std::vector<double>& y, double t, double x) const {
        const int m = basis_.size();
        const double d = basis_.eps() * (x - t);
        double sum = 0.0;
        for (int j = 1; j <= m; ++j)
            sum += y[j - 1] * std::pow(x, basis_.power(j)) * std::exp(basis_.sign(j) * d);
        return sum;
    }

    static std::vector<double> solve_partial_pivot(Matrix a, std::vector<double> rhs) {
        const std::size_t n = a.rows();
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
            if (a(pivot, k) == 0.0)
                throw numerical_error("fundamental solution: singular Wronskian system");
            if (pivot != k) {
                for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
                std::swap(rhs[k], rhs[pivot]);
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                const double f = a(i, k) / a(k, k);
                if (f == 0.0) continue;
                for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
                rhs[i] -= f * rhs[k];
            }
        }
        std::vector<double> x(n, 0.0);
        for (std::size_t i = n; i-- > 0;) {
            double s = rhs[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
            x[i] = s / a(i, i);
        }
        return x;
    }

    NullSpaceBasis basis_;
};

/// b(t) for the system W(t) b(t) = e.
inline std::vector<double> solve_b(const FundamentalSolution& fund, double t) {
    return fund.coefficients(t);
}

inline double g_eval(const FundamentalSolution& fund, double t, double x) { return fund.g(t, x); }
inline double g_plus(const FundamentalSolution& fund, double t, double x) { return fund.g_plus(t, x); }
inline double g_minus(const FundamentalSolution& fund, double t, double x) { return fund.g_minus(t, x); }

}  // namespace bbk
