#pragma once

// Double-exponential (tanh-sinh) quadrature on the unit interval.
//
// Integrands receive both the abscissa u and its complement 1 - u, each
// computed without cancellation, so logarithmic endpoint singularities such
// as ln(u) - ln(1 - u) can be evaluated accurately arbitrarily close to
// either end.

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace qpoly {

struct QuadratureResult {
    double value = 0.0;
    /// Difference between the last two refinement levels.
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TanhSinhOptions {
    double abs_tolerance = 1e-12;
    double rel_tolerance = 1e-13;
    int max_levels = 12;
    /// Nodes are generated for |t| ≤ t_max in the tanh-sinh variable.
    double t_max = 6.0;
};

using UnitIntegrand = std::function<double(double u, double one_minus_u)>;

/// ∫_0^1 f(u) du. Refines by halving the step until two successive levels
/// agree to max(abs_tolerance, rel_tolerance·|I|). Throws QuadratureError on
/// non-convergence or a non-finite integrand value.
QuadratureResult integrate_unit(const UnitIntegrand& f, const TanhSinhOptions& opts = {});

/// ∫_a^b f(x) dx for finite a < b.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    const TanhSinhOptions& opts = {});

/// ∫_0^∞ f(t) dt, split at t = 1 with the tail folded by t → 1/t.
QuadratureResult integrate_half_line(const std::function<double(double)>& f, const TanhSinhOptions& opts = {});

}  // namespace qpoly
