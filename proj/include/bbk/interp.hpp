#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bbk/cardinal.hpp"
#include "bbk/kernel.hpp"
#include "bbk/nodes.hpp"

namespace bbk {

/// Interpolation data: nodes plus the sampled values f(x_1), ..., f(x_N).
/// The interpolant vanishes at the boundary, so no values are carried there.
struct SampleData {
    NodeSet nodes;
    std::vector<double> values;

    SampleData(NodeSet nodes_, std::vector<double> values_)
        : nodes(std::move(nodes_)), values(std::move(values_)) {
        if (values.size() != nodes.size())
            throw std::invalid_argument("SampleData: values length must match node count");
        for (double v : values)
            if (!std::isfinite(v)) throw std::invalid_argument("SampleData: values must be finite");
    }
};

/// Interpolant in cardinal form, sum_i f(x_i) l_i(x): no linear solve, and
/// only the two basis functions supported at x contribute.  Reproduces the
/// data exactly at the nodes.
inline double interpolate(const CardinalBasis& basis, const std::vector<double>& values, double x) {
    if (values.size() != basis.size())
        throw std::invalid_argument("interpolate: values length must match node count");
    const LocalValues lv = basis.eval_all_nonzero(x);
    double sum = 0.0;
    if (lv.interval >= 1) sum += values[lv.interval - 1] * lv.left;
    if (lv.interval < basis.size()) sum += values[lv.interval] * lv.right;
    return sum;
}

inline double interpolate(const KernelParams& params, const SampleData& data, double x) {
    return interpolate(CardinalBasis(params, data.nodes), data.values, x);
}

}  // namespace bbk
