#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <utility>

#include "bbk/errors.hpp"
#include "bbk/interp.hpp"
#include "bbk/kernel.hpp"
#include "bbk/nodes.hpp"

// Dense Gram-matrix route to the same quantities that the cardinal basis
// yields in closed form.  This path is deliberately independent of
// cardinal.hpp: it factors the N x N Gram matrix and serves as the
// verification oracle for the solve-free formulas.

namespace bbk {

/// Cholesky factorization of the Gram matrix of a node set, with a pivoted-LU
/// fallback.  Solves are residual-checked; breakdown raises numerical_error.
class GramSolver {
  public:
    GramSolver(const KernelParams& params, const NodeSet& nodes)
        : params_(params), nodes_(nodes), k_(nodes.size(), nodes.size()) {
        const Matrix k = gram_matrix(params, nodes);
        const auto n = static_cast<Eigen::Index>(nodes.size());
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                k_(i, j) = k(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        llt_.compute(k_);
        if (llt_.info() != Eigen::Success) {
            lu_.compute(k_);
            use_lu_ = true;
        }
    }

    const KernelParams& params() const { return params_; }
    const NodeSet& nodes() const { return nodes_; }

    /// Solves K a = rhs; throws numerical_error when the residual exceeds
    /// 1e-8 * ||rhs||_inf.
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
        Eigen::VectorXd a = use_lu_ ? lu_.solve(rhs) : llt_.solve(rhs);
        const double resid = (k_ * a - rhs).lpNorm<Eigen::Infinity>();
        if (!(resid <= 1e-8 * rhs.lpNorm<Eigen::Infinity>()))
            throw numerical_error("Gram solve ill-conditioned: residual " + std::to_string(resid));
        return a;
    }

    /// Kernel column (k(x, x_1), ..., k(x, x_N)).
    Eigen::VectorXd kernel_column(double x) const {
        Eigen::VectorXd col(k_.rows());
        for (Eigen::Index j = 0; j < col.size(); ++j)
            col(j) = kernel_eval(params_, x, nodes_.interior()[static_cast<std::size_t>(j)]);
        return col;
    }

    /// Squared power function k(x,x) - k_x^T K^{-1} k_x via the factorization.
    double power_sq(double x) const {
        const Eigen::VectorXd col = kernel_column(x);
        const Eigen::VectorXd w = use_lu_ ? lu_.solve(col) : llt_.solve(col);
        return kernel_eval(params_, x, x) - col.dot(w);
    }

  private:
    KernelParams params_;
    NodeSet nodes_;
    Eigen::MatrixXd k_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    bool use_lu_ = false;
};

/// Interpolant represented in the kernel basis, I f(x) = sum_j a_j k(x, x_j)
/// with K a = f.  The factorization is computed once at construction.
class GramInterpolant {
  public:
    GramInterpolant(const KernelParams& params, const SampleData& data)
        : solver_(params, data.nodes) {
        Eigen::VectorXd f(static_cast<Eigen::Index>(data.values.size()));
        for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = data.values[static_cast<std::size_t>(i)];
        alpha_ = solver_.solve(f);
    }

    double operator()(double x) const { return solver_.kernel_column(x).dot(alpha_); }

    const Eigen::VectorXd& coefficients() const { return alpha_; }

  private:
    GramSolver solver_;
    Eigen::VectorXd alpha_;
};

/// One-shot oracle interpolation; mathematically identical to interpolate().
inline double gram_interpolate(const KernelParams& params, const SampleData& data, double x) {
    return GramInterpolant(params, data)(x);
}

}  // namespace bbk
