#pragma once

// Floating-point checks of the integral forms and of the transform
//   T: f ↦ ∫_0^1 (f(t) - f(x)) / (t - x) dt
// on (0, 1), together with φ_0(x) = ln(x / (1 - x)).

#include "qpoly/quadrature.hpp"
#include "qpoly/report.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qpoly {

/// Gauss-Legendre rule in a variable s, mapped to (0, 1) by the grading
///   x = s^p / (s^p + (1 - s)^p),
/// which clusters nodes at both endpoints so ln-type endpoint behaviour is
/// integrated to near machine precision. p = 1 is plain Gauss-Legendre.
class Grid {
public:
    static std::shared_ptr<const Grid> graded(std::size_t size, int grading = 3);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<double>& nodes() const { return nodes_; }
    /// 1 - node, computed without cancellation.
    const std::vector<double>& complements() const { return complements_; }
    const std::vector<double>& weights() const { return weights_; }
    int grading() const { return grading_; }

    /// nodes[j] - nodes[i], from whichever representation is exact near the ends.
    double difference(std::size_t i, std::size_t j) const;
    /// min(x, 1 - x) ≥ margin.
    bool interior(std::size_t i, double margin) const;

private:
    std::vector<double> nodes_;
    std::vector<double> complements_;
    std::vector<double> weights_;
    int grading_ = 1;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

struct GridFunction {
    std::shared_ptr<const Grid> grid;
    std::vector<double> values;
};

/// Samples f(x, 1 - x) at the grid nodes.
GridFunction sample(const std::shared_ptr<const Grid>& grid, const std::function<double(double, double)>& f);

/// Σ w_i f_i.
double integrate(const GridFunction& f);

/// Three-point nonuniform finite differences (one-sided at the two ends).
std::vector<double> finite_difference_derivative(const GridFunction& f);

/// Nyström application of T. The diagonal t = x term uses fprime when given,
/// otherwise finite differences on the grid.
GridFunction apply_T(const GridFunction& f, std::optional<std::span<const double>> fprime = std::nullopt);

/// φ_0 = ln x - ln(1 - x), from x and its complement.
double phi0(double x, double one_minus_x);

/// (ln t - ln c) / (t - c), with the limit 1/c when |t - c| < 1e-8.
double log_difference_quotient(double t, double c);

/// (e^z + 1) ∫_0^∞ (ln^n t - z^n) / ((1+t)(t - e^z)) dt.
QuadratureResult integral_c_form(unsigned n, double z, const TanhSinhOptions& opts = {});
/// (1 - e^z) ∫_0^∞ ln^n t / ((t+1)(t+e^z)) dt. Throws std::invalid_argument unless z < 0.
QuadratureResult integral_a_form(unsigned n, double z, const TanhSinhOptions& opts = {});
/// 4 ∫_0^1 ln^{2n-1}(x) / (x^2 - 1) dx via x = e^{-s}. Throws for n = 0.
QuadratureResult classical_log_integral(unsigned n, const TanhSinhOptions& opts = {});
/// ∫_0^1 φ_0^n(x) / (x + a) dx. Throws unless a > 0.
QuadratureResult eigen_moment_integral(unsigned n, double a, const TanhSinhOptions& opts = {});

/// Exact-side targets, evaluated from exact tables through the float bridge.
double c_form_target(unsigned n, double z);
double a_form_target(unsigned n, double z);
double classical_log_target(unsigned n);

struct LabOptions {
    /// Quadrature-vs-exact relative tolerance.
    double tolerance = 1e-8;
    /// Grid-based eigenfunction and moment checks.
    double grid_tolerance = 1e-7;
    /// Two stacked grid applications of T.
    double compound_tolerance = 1e-4;
    /// Nodes closer than this to 0 or 1 are excluded from pointwise grid checks.
    double interior_margin = 1e-3;
    std::size_t grid_size = 200;
};

VerificationReport suite_c_form(const LabOptions& opts = {});
VerificationReport suite_a_form(const LabOptions& opts = {});
VerificationReport suite_classical(const LabOptions& opts = {});
/// Eigenfunctions 1/(x+a), the T(φ_0) closed form, and the quadratic operator identity.
VerificationReport suite_eigen(const LabOptions& opts = {});
/// ∫ T^{n-1}(φ_0) = λ_n^1 π^n for n = 1, 2, and the exact λ_{2m}^1 = (-1)^{m+1} 4^m β_{2m}.
VerificationReport suite_moments(const LabOptions& opts = {});
/// ∫_0^1 φ_0^n/(x+a) = -π^{n+1} A_n(γ_a/π) and its α-sum form.
VerificationReport suite_transform(const LabOptions& opts = {});

/// Single moment check, n ∈ {1, 2}.
VerificationReport moment_check(unsigned n, const LabOptions& opts = {});
/// ∫ φ_0^n/(x+a) against the A_n closed form for one (a, n).
VerificationReport transform_moment_identity(double a, unsigned n, const LabOptions& opts = {});

/// cform|aform|classical|moments|eigen|transform|all. Throws std::invalid_argument otherwise.
VerificationReport verify_integrals(const std::string& suite, const LabOptions& opts = {});

}  // namespace qpoly
