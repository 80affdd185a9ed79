#include "qpoly/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qpoly {

namespace {

constexpr int kMinLevels = 3;

/// Contribution of the symmetric node pair at t > 0 (or the midpoint at t = 0),
/// unscaled by the step.
double node_pair(const UnitIntegrand& f, double t, std::size_t& evals) {
    const double q = std::exp(-std::numbers::pi * std::sinh(t));
    const double near = q / (1.0 + q);  // distance to the closer endpoint
    const double far = 1.0 / (1.0 + q);
    const double w = std::numbers::pi * std::cosh(t) * q / ((1.0 + q) * (1.0 + q));
    if (w == 0.0 || near == 0.0) return 0.0;
    if (t == 0.0) {
        ++evals;
        const double mid = f(0.5, 0.5);
        if (!std::isfinite(mid)) throw QuadratureError("tanh-sinh: non-finite integrand value at u = 0.5");
        return w * mid;
    }
    evals += 2;
    const double left = f(near, far);
    const double right = f(far, near);
    if (!std::isfinite(left) || !std::isfinite(right))
        throw QuadratureError("tanh-sinh: non-finite integrand value near u = " + std::to_string(near));
    return w * (left + right);
}

}  // namespace

QuadratureResult integrate_unit(const UnitIntegrand& f, const TanhSinhOptions& opts) {
    QuadratureResult res;
    double h = 1.0;
    double sum = node_pair(f, 0.0, res.evaluations);
    for (double t = h; t <= opts.t_max; t += h) sum += node_pair(f, t, res.evaluations);
    double estimate = h * sum;

    for (int level = 1; level <= opts.max_levels; ++level) {
        h *= 0.5;
        const auto count = static_cast<long>(opts.t_max / h);
        for (long k = 1; k <= count; k += 2) sum += node_pair(f, static_cast<double>(k) * h, res.evaluations);
        const double next = h * sum;
        const double diff = std::abs(next - estimate);
        estimate = next;
        if (level >= kMinLevels && diff <= std::max(opts.abs_tolerance, opts.rel_tolerance * std::abs(next))) {
            res.value = next;
            res.error_estimate = diff;
            return res;
        }
    }
    throw QuadratureError("tanh-sinh: no convergence after " + std::to_string(opts.max_levels) + " levels");
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    const TanhSinhOptions& opts) {
    const double len = b - a;
    auto res = integrate_unit(
        [&](double u, double uc) { return u <= 0.5 ? f(a + len * u) : f(b - len * uc); }, opts);
    res.value *= len;
    res.error_estimate *= std::abs(len);
    return res;
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f, const TanhSinhOptions& opts) {
    return integrate_unit(
        [&](double u, double) {
            double tail = 0.0;
            const double inv = 1.0 / u;
            if (std::isfinite(inv)) {
                const double ft = f(inv);
                tail = ft == 0.0 ? 0.0 : ft / u / u;
            }
            return f(u) + tail;
        },
        opts);
}

}  // namespace qpoly
