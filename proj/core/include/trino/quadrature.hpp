#ifndef TRINO_QUADRATURE_HPP
#define TRINO_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace trino {

struct QuadConfig {
    double abs_tolerance = 1e-10;
    std::size_t max_evaluations = 1'000'000;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    std::size_t panels = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [lo, hi].
/// `breakpoints` (inside the interval) become panel endpoints, which is where
/// integrable singularities such as log|x - x0| must be placed: nodes never
/// touch panel ends. `initial_panels` splits every piece uniformly first.
/// The panel sum is reduced in left-endpoint order, so the result does not
/// depend on refinement history. Throws QuadratureBudgetExceeded.
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadConfig& cfg = {}, std::span<const double> breakpoints = {},
                     int initial_panels = 1);

} // namespace trino

#endif
