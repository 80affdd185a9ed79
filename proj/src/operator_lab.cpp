#include "qpoly/operator_lab.hpp"

#include "qpoly/ac_families.hpp"
#include "qpoly/special_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qpoly {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

/// Σ_{j<n} p^{n-1-j} q^j, so that p^n - q^n = (p - q)·power_sum.
double power_sum(unsigned n, double p, double q) {
    double acc = 0.0;
    double qj = 1.0;
    for (unsigned j = 0; j < n; ++j) {
        acc += std::pow(p, static_cast<int>(n - 1 - j)) * qj;
        qj *= q;
    }
    return acc;
}

/// Exact family shared by the float targets.
const ACFamily& reference_family() {
    static const ACFamily fam = build_by_recurrence(8);
    return fam;
}

void add_quadrature_check(VerificationReport& rep, const std::string& id, const std::string& desc,
                          const std::function<QuadratureResult()>& lhs, double rhs, double tol) {
    try {
        const QuadratureResult r = lhs();
        rep.add_numeric(id, desc, r.value, rhs, tol);
    } catch (const QuadratureError& e) {
        rep.add_error(id, desc, e.what());
    }
}

}  // namespace

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Root i counted from the right end, refined by Newton on P_n.
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            if (n == 1) p0 = 1.0;
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
            p0 = p1;
            p1 = pk;
        }
        if (n == 1) p0 = 1.0;
        dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

std::shared_ptr<const Grid> Grid::graded(std::size_t size, int grading) {
    if (size < 3) throw std::invalid_argument("Grid: need at least 3 nodes");
    if (grading < 1) throw std::invalid_argument("Grid: grading exponent must be ≥ 1");
    std::vector<double> xi, wi;
    gauss_legendre(size, xi, wi);

    auto g = std::make_shared<Grid>();
    g->grading_ = grading;
    g->nodes_.resize(size);
    g->complements_.resize(size);
    g->weights_.resize(size);
    const double p = grading;
    for (std::size_t i = 0; i < (size + 1) / 2; ++i) {
        // Lower half: s is small and 1 - s is computed from the mirrored node.
        const double s = 0.5 * (1.0 + xi[i]);
        const double sc = 0.5 * (1.0 - xi[i]);
        const double ws = 0.5 * wi[i];
        const double A = std::pow(s, p);
        const double B = std::pow(sc, p);
        const double x = A / (A + B);
        const double xc = B / (A + B);
        const double dpsi = p * std::pow(s, p - 1) * std::pow(sc, p - 1) / ((A + B) * (A + B));
        const std::size_t j = size - 1 - i;
        g->nodes_[i] = x;
        g->complements_[i] = xc;
        g->nodes_[j] = xc;
        g->complements_[j] = x;
        g->weights_[i] = ws * dpsi;
        g->weights_[j] = ws * dpsi;
    }
    return g;
}

double Grid::difference(std::size_t i, std::size_t j) const {
    if (nodes_[i] >= 0.5 && nodes_[j] >= 0.5) return complements_[i] - complements_[j];
    return nodes_[j] - nodes_[i];
}

bool Grid::interior(std::size_t i, double margin) const {
    return std::min(nodes_[i], complements_[i]) >= margin;
}

GridFunction sample(const std::shared_ptr<const Grid>& grid, const std::function<double(double, double)>& f) {
    GridFunction out{grid, std::vector<double>(grid->size())};
    for (std::size_t i = 0; i < grid->size(); ++i) out.values[i] = f(grid->nodes()[i], grid->complements()[i]);
    return out;
}

double integrate(const GridFunction& f) {
    double acc = 0.0;
    const auto& w = f.grid->weights();
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * f.values[i];
    return acc;
}

std::vector<double> finite_difference_derivative(const GridFunction& f) {
    const Grid& g = *f.grid;
    const std::size_t n = g.size();
    const auto& v = f.values;
    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = g.difference(i - 1, i);
        const double h2 = g.difference(i, i + 1);
        d[i] = -h2 / (h1 * (h1 + h2)) * v[i - 1] + (h2 - h1) / (h1 * h2) * v[i] + h1 / (h2 * (h1 + h2)) * v[i + 1];
    }
    {
        const double h1 = g.difference(0, 1);
        const double h2 = g.difference(1, 2);
        d[0] = -(2 * h1 + h2) / (h1 * (h1 + h2)) * v[0] + (h1 + h2) / (h1 * h2) * v[1] - h1 / (h2 * (h1 + h2)) * v[2];
    }
    {
        const double h1 = g.difference(n - 2, n - 1);
        const double h2 = g.difference(n - 3, n - 2);
        d[n - 1] = (2 * h1 + h2) / (h1 * (h1 + h2)) * v[n - 1] - (h1 + h2) / (h1 * h2) * v[n - 2] +
                   h1 / (h2 * (h1 + h2)) * v[n - 3];
    }
    return d;
}

GridFunction apply_T(const GridFunction& f, std::optional<std::span<const double>> fprime) {
    const Grid& g = *f.grid;
    const std::size_t n = g.size();
    std::vector<double> fd;
    std::span<const double> deriv;
    if (fprime) {
        if (fprime->size() != n) throw std::invalid_argument("apply_T: derivative size mismatch");
        deriv = *fprime;
    } else {
        fd = finite_difference_derivative(f);
        deriv = fd;
    }
    GridFunction out{f.grid, std::vector<double>(n)};
    const auto& w = g.weights();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = w[i] * deriv[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            acc += w[j] * (f.values[j] - f.values[i]) / g.difference(i, j);
        }
        out.values[i] = acc;
    }
    return out;
}

double phi0(double x, double one_minus_x) { return std::log(x) - std::log(one_minus_x); }

double log_difference_quotient(double t, double c) {
    const double d = t - c;
    if (std::abs(d) < 1e-8) return 1.0 / c;
    const double r = d / c;
    if (std::abs(r) < 0.5) return std::log1p(r) / d;
    return (std::log(t) - std::log(c)) / d;
}

QuadratureResult integral_c_form(unsigned n, double z, const TanhSinhOptions& opts) {
    const double c = std::exp(z);
    // (ln^n t - z^n)/(t - e^z) = LDQ(t, e^z) · Σ ln^{n-1-j}(t) z^j, which has no 0/0 at t = e^z.
    auto res = integrate_half_line(
        [&](double t) {
            if (n == 0) return 0.0;
            const double lt = std::log(t);
            return log_difference_quotient(t, c) * power_sum(n, lt, z) / (1.0 + t);
        },
        opts);
    res.value *= (c + 1.0);
    res.error_estimate *= (c + 1.0);
    return res;
}

QuadratureResult integral_a_form(unsigned n, double z, const TanhSinhOptions& opts) {
    if (!(z < 0.0)) throw std::invalid_argument("integral_a_form: z must be negative");
    const double c = std::exp(z);
    auto res = integrate_half_line(
        [&](double t) { return std::pow(std::log(t), static_cast<int>(n)) / ((t + 1.0) * (t + c)); }, opts);
    const double scale = -std::expm1(z);
    res.value *= scale;
    res.error_estimate *= scale;
    return res;
}

QuadratureResult classical_log_integral(unsigned n, const TanhSinhOptions& opts) {
    if (n == 0) throw std::invalid_argument("classical_log_integral: n must be positive");
    const int power = static_cast<int>(2 * n - 1);
    auto res = integrate_half_line(
        [&](double s) {
            // ln^{2n-1}(x)/(x^2 - 1) dx with x = e^{-s}: s^{2n-1} e^{-s} / (1 - e^{-2s}) ds
            const double e = std::exp(-s);
            if (e == 0.0) return 0.0;
            return std::pow(s, power) * e / -std::expm1(-2.0 * s);
        },
        opts);
    res.value *= 4.0;
    res.error_estimate *= 4.0;
    return res;
}

QuadratureResult eigen_moment_integral(unsigned n, double a, const TanhSinhOptions& opts) {
    if (!(a > 0.0)) throw std::invalid_argument("eigen_moment_integral: a must be positive");
    return integrate_unit(
        [&](double x, double xc) { return std::pow(phi0(x, xc), static_cast<int>(n)) / (x + a); }, opts);
}

double c_form_target(unsigned n, double z) {
    return std::pow(kPi, n + 1) * evaluate_double(reference_family().c(n), z / kPi);
}

double a_form_target(unsigned n, double z) {
    return -std::pow(kPi, n + 1) * evaluate_double(reference_family().a(n), z / kPi);
}

double classical_log_target(unsigned n) {
    const BernoulliTable beta = bernoulli_numbers(2 * n);
    const BigRational coeff = (pow(BigRational(4), n) - BigRational(1)) * (n % 2 == 1 ? BigRational(1) : BigRational(-1)) *
                              beta[2 * n] / BigRational(static_cast<long>(n));
    return coeff.to_double() * std::pow(kPi, 2 * n);
}

VerificationReport suite_c_form(const LabOptions& opts) {
    VerificationReport rep("cform");
    const std::vector<std::pair<unsigned, double>> points{{0, 0.5}, {1, 0.0}, {2, 1.0}, {3, -0.7}};
    for (const auto& [n, z] : points) {
        add_quadrature_check(rep, "cform/n=" + std::to_string(n) + ",z=" + fmt(z),
                             "(e^z+1) int_0^inf (ln^n t - z^n)/((1+t)(t-e^z)) dt = pi^{n+1} C_n(z/pi)",
                             [&] { return integral_c_form(n, z); }, c_form_target(n, z), opts.tolerance);
    }
    return rep;
}

VerificationReport suite_a_form(const LabOptions& opts) {
    VerificationReport rep("aform");
    const std::vector<std::pair<unsigned, double>> points{
        {0, -std::log(2.0)}, {1, -std::log(2.0)}, {2, std::log(2.0 / 3.0)}, {3, -1.0}};
    for (const auto& [n, z] : points) {
        add_quadrature_check(rep, "aform/n=" + std::to_string(n) + ",z=" + fmt(z),
                             "(1-e^z) int_0^inf ln^n t/((t+1)(t+e^z)) dt = -pi^{n+1} A_n(z/pi)",
                             [&] { return integral_a_form(n, z); }, a_form_target(n, z), opts.tolerance);
    }
    return rep;
}

VerificationReport suite_classical(const LabOptions& opts) {
    VerificationReport rep("classical");
    for (unsigned n = 1; n <= 3; ++n) {
        add_quadrature_check(rep, "classical/n=" + std::to_string(n),
                             "4 int_0^1 ln^{2n-1}(x)/(x^2-1) dx = (4^n-1)(-1)^{n-1} beta_{2n} pi^{2n}/n",
                             [&] { return classical_log_integral(n); }, classical_log_target(n), opts.tolerance);
    }
    return rep;
}

VerificationReport suite_eigen(const LabOptions& opts) {
    VerificationReport rep("eigen");
    const auto grid = Grid::graded(opts.grid_size);
    const std::size_t n = grid->size();

    const auto max_interior_error = [&](const std::vector<double>& got, const std::vector<double>& want) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (grid->interior(i, opts.interior_margin)) worst = std::max(worst, relative_error(got[i], want[i]));
        return worst;
    };
    const auto add_pointwise = [&](const std::string& id, const std::string& desc, const std::vector<double>& got,
                                   const std::vector<double>& want, double tol) {
        Check c;
        c.id = id;
        c.description = desc;
        c.error_metric = max_interior_error(got, want);
        c.tolerance = tol;
        c.lhs = std::string("max interior relative error");
        c.rhs = tol;
        c.status = *c.error_metric <= tol ? CheckStatus::pass : CheckStatus::fail;
        rep.add(std::move(c));
    };

    for (double a : {0.5, 1.0, 2.0, 5.0}) {
        const auto f = sample(grid, [a](double x, double) { return 1.0 / (x + a); });
        const auto fp = sample(grid, [a](double x, double) { return -1.0 / ((x + a) * (x + a)); });
        const auto tf = apply_T(f, fp.values);
        const double gamma = std::log(a / (1.0 + a));
        std::vector<double> want(n);
        for (std::size_t i = 0; i < n; ++i) want[i] = gamma * f.values[i];
        add_pointwise("eigen/a=" + fmt(a), "T(1/(x+a)) = ln(a/(1+a)) / (x+a)", tf.values, want, opts.grid_tolerance);
    }

    {
        const auto phi = sample(grid, phi0);
        const auto dphi = sample(grid, [](double x, double xc) { return 1.0 / (x * xc); });
        const auto tphi = apply_T(phi, dphi.values);
        std::vector<double> want(n);
        for (std::size_t i = 0; i < n; ++i) want[i] = 0.5 * (phi.values[i] * phi.values[i] + kPi * kPi);
        add_pointwise("T_phi0", "T(phi_0) = (phi_0^2 + pi^2)/2 = pi^2 C_1(phi_0/pi)", tphi.values, want,
                      opts.grid_tolerance);
    }

    {
        // T(2 φ_0 f - T f) = (φ_0^2 + π^2) f for f = 1/(x+1); the outer diagonal uses finite differences.
        const auto f = sample(grid, [](double x, double) { return 1.0 / (x + 1.0); });
        const auto fp = sample(grid, [](double x, double) { return -1.0 / ((x + 1.0) * (x + 1.0)); });
        const auto phi = sample(grid, phi0);
        const auto tf = apply_T(f, fp.values);
        GridFunction h{grid, std::vector<double>(n)};
        for (std::size_t i = 0; i < n; ++i) h.values[i] = 2.0 * phi.values[i] * f.values[i] - tf.values[i];
        const auto th = apply_T(h);
        std::vector<double> want(n);
        for (std::size_t i = 0; i < n; ++i) want[i] = (phi.values[i] * phi.values[i] + kPi * kPi) * f.values[i];
        add_pointwise("quadratic_operator_identity", "T(2 phi_0 f - T f) = (phi_0^2 + pi^2) f, f = 1/(x+1)",
                      th.values, want, opts.compound_tolerance);
    }
    return rep;
}

VerificationReport moment_check(unsigned n, const LabOptions& opts) {
    if (n < 1 || n > 2) throw std::invalid_argument("moment_check: n must be 1 or 2");
    VerificationReport rep("moments");
    const auto grid = Grid::graded(opts.grid_size);
    GridFunction g = sample(grid, phi0);
    if (n == 2) {
        const auto dphi = sample(grid, [](double x, double xc) { return 1.0 / (x * xc); });
        g = apply_T(g, dphi.values);
    }
    const double lambda1 = reference_family().c(n).coeff(1).to_double();
    const double target = lambda1 * std::pow(kPi, n);
    rep.add_numeric("moment/n=" + std::to_string(n), "int_0^1 T^{n-1}(phi_0) dx = lambda_n^1 pi^n", integrate(g),
                    target, opts.grid_tolerance);
    return rep;
}

VerificationReport suite_moments(const LabOptions& opts) {
    VerificationReport rep("moments");
    rep.append(moment_check(1, opts));
    rep.append(moment_check(2, opts));

    const auto grid = Grid::graded(opts.grid_size);
    const auto one = sample(grid, [](double, double) { return 1.0; });
    rep.add_numeric("grid_weights", "sum of grid weights = 1", integrate(one), 1.0, 1e-14);

    // Exact side: λ_{2m}^1 = (-1)^{m+1} 4^m β_{2m}.
    constexpr std::size_t m_max = 12;
    const ACFamily fam = build_by_recurrence(2 * m_max);
    const BernoulliTable beta = bernoulli_numbers(2 * m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
        const BigRational lhs = fam.c(2 * m).coeff(1);
        const BigRational rhs = (m % 2 == 1 ? BigRational(1) : BigRational(-1)) *
                                pow(BigRational(4), static_cast<unsigned>(m)) * beta[2 * m];
        rep.add_exact("lambda_2m_1/m=" + std::to_string(m), "lambda_{2m}^1 = (-1)^{m+1} 4^m beta_{2m}", lhs == rhs,
                      lhs.to_string(), rhs.to_string());
    }
    return rep;
}

VerificationReport transform_moment_identity(double a, unsigned n, const LabOptions& opts) {
    VerificationReport rep("transform");
    const std::string tag = "n=" + std::to_string(n) + ",a=" + fmt(a);
    const double gamma = std::log(a / (1.0 + a));
    const double closed = -std::pow(kPi, n + 1) * evaluate_double(reference_family().a(n), gamma / kPi);

    QuadratureResult lhs;
    try {
        lhs = eigen_moment_integral(n, a);
    } catch (const QuadratureError& e) {
        rep.add_error("transform/" + tag, "int_0^1 phi_0^n/(x+a) dx", e.what());
        return rep;
    }
    rep.add_numeric("transform/" + tag, "int_0^1 phi_0^n/(x+a) dx = -pi^{n+1} A_n(gamma_a/pi)", lhs.value, closed,
                    opts.tolerance);

    // α-sum form with ∫ T^{k-1}(f) dx = -γ^k for the eigenfunction f = 1/(x+a).
    const PolyQ& an = reference_family().a(n);
    double alpha_sum = 0.0;
    for (unsigned k = 1; k <= n + 1; ++k)
        alpha_sum += an.coeff(k).to_double() * std::pow(kPi, n + 1 - k) * -std::pow(gamma, k);
    rep.add_numeric("transform_alpha_sum/" + tag,
                    "int_0^1 phi_0^n f dx = sum_k alpha_n^k pi^{n+1-k} int_0^1 T^{k-1}(f) dx", lhs.value,
                    alpha_sum, opts.tolerance);

    // Grid side of ∫ T^{k-1}(f) dx = -γ^k for k = 1, 2.
    const auto grid = Grid::graded(opts.grid_size);
    const auto f = sample(grid, [a](double x, double) { return 1.0 / (x + a); });
    const auto fp = sample(grid, [a](double x, double) { return -1.0 / ((x + a) * (x + a)); });
    rep.add_numeric("eigen_moment_k=1/" + tag, "int_0^1 f dx = -gamma_a", integrate(f), -gamma,
                    opts.grid_tolerance);
    rep.add_numeric("eigen_moment_k=2/" + tag, "int_0^1 T(f) dx = -gamma_a^2", integrate(apply_T(f, fp.values)),
                    -gamma * gamma, opts.grid_tolerance);
    return rep;
}

VerificationReport suite_transform(const LabOptions& opts) {
    VerificationReport rep("transform");
    for (const auto& [n, a] : std::vector<std::pair<unsigned, double>>{{0, 1.0}, {1, 1.0}, {2, 2.0}})
        rep.append(transform_moment_identity(a, n, opts));
    return rep;
}

VerificationReport verify_integrals(const std::string& suite, const LabOptions& opts) {
    if (suite == "cform") return suite_c_form(opts);
    if (suite == "aform") return suite_a_form(opts);
    if (suite == "classical") return suite_classical(opts);
    if (suite == "moments") return suite_moments(opts);
    if (suite == "eigen") return suite_eigen(opts);
    if (suite == "transform") return suite_transform(opts);
    if (suite == "all") {
        VerificationReport rep("integrals");
        rep.append(suite_c_form(opts));
        rep.append(suite_a_form(opts));
        rep.append(suite_classical(opts));
        rep.append(suite_eigen(opts));
        rep.append(suite_moments(opts));
        rep.append(suite_transform(opts));
        return rep;
    }
    throw std::invalid_argument("unknown integral suite '" + suite + "'");
}

}  // namespace qpoly
