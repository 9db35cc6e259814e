#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbk {

/// Strictly increasing interior nodes x_1 < ... < x_N inside (0,1), with the
/// implicit boundary nodes x_0 = 0 and x_{N+1} = 1.  point(i) addresses the
/// augmented list for i = 0..N+1; gap(i) = point(i+1) - point(i).
class NodeSet {
  public:
    explicit NodeSet(std::vector<double> interior) : interior_(std::move(interior)) {
        if (interior_.empty()) throw std::invalid_argument("NodeSet: at least one interior node required");
        double prev = 0.0;
        for (std::size_t i = 0; i < interior_.size(); ++i) {
            const double x = interior_[i];
            if (!std::isfinite(x))
                throw std::invalid_argument("NodeSet: node " + std::to_string(i + 1) + " is not finite");
            if (!(x > prev))
                throw std::invalid_argument("NodeSet: nodes must be strictly increasing inside (0,1)");
            prev = x;
        }
        if (!(interior_.back() < 1.0))
            throw std::invalid_argument("NodeSet: nodes must be strictly increasing inside (0,1)");
    }

    std::size_t size() const { return interior_.size(); }
    const std::vector<double>& interior() const { return interior_; }

    /// Augmented node, i in [0, size()+1]; 0 and size()+1 are the boundary.
    double point(std::size_t i) const {
        if (i == 0) return 0.0;
        if (i == interior_.size() + 1) return 1.0;
        return interior_[i - 1];
    }

    /// Gap length h_i = x_{i+1} - x_i, i in [0, size()].
    double gap(std::size_t i) const { return point(i + 1) - point(i); }

    /// Index i in [0, size()] of the interval [x_i, x_{i+1}) containing x.
    /// x = 1 maps to the last interval.  O(log N).
    std::size_t locate(double x) const {
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("locate: x must lie in [0,1]");
        auto it = std::upper_bound(interior_.begin(), interior_.end(), x);
        return static_cast<std::size_t>(it - interior_.begin());
    }

  private:
    std::vector<double> interior_;
};

}  // namespace bbk
