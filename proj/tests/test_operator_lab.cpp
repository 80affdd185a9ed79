#include <doctest.h>

#include "qpoly/operator_lab.hpp"

#include "golden.hpp"

#include <cmath>
#include <numbers>

using namespace qpoly;

namespace {

constexpr double pi = std::numbers::pi;

// Trapezoid rule on (lo, hi) with nodes shifted off any lattice point;
// spectrally accurate for the analytic, exponentially decaying integrands below.
template <typename F>
double shifted_trapezoid(F f, double lo, double hi, double h) {
    double acc = 0.0;
    for (double u = lo + 0.381966 * h; u < hi; u += h) acc += f(u);
    return acc * h;
}

double sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }

// (e^z+1) ∫ (ln^n t - z^n)/((1+t)(t - e^z)) dt with t = e^u
double c_form_oracle(unsigned n, double z) {
    const double ez = std::exp(z);
    const int p = static_cast<int>(n);
    return (ez + 1.0) * shifted_trapezoid(
                            [&](double u) {
                                const double eu = std::exp(u);
                                return (std::pow(u, p) - std::pow(z, p)) * eu / ((1.0 + eu) * (eu - ez));
                            },
                            -70.0, 70.0, 1.0 / 64);
}

double a_form_oracle(unsigned n, double z) {
    const double ez = std::exp(z);
    const int p = static_cast<int>(n);
    return (1.0 - ez) * shifted_trapezoid(
                            [&](double u) {
                                const double eu = std::exp(u);
                                return std::pow(u, p) * eu / ((1.0 + eu) * (eu + ez));
                            },
                            -70.0, 70.0, 1.0 / 64);
}

// ∫ φ_0^n/(x+a) with x = σ(u)
double eigen_moment_oracle(unsigned n, double a) {
    return shifted_trapezoid(
        [&](double u) {
            const double s = sigmoid(u);
            return std::pow(u, static_cast<int>(n)) * s * sigmoid(-u) / (s + a);
        },
        -80.0, 80.0, 1.0 / 64);
}

// 4 (2n-1)! Σ_k (2k+1)^{-2n}, Euler-Maclaurin tail after K terms
double classical_series_oracle(unsigned n) {
    const double p = 2.0 * n;
    const long K = 2000;
    double s = 0.0;
    for (long k = K - 1; k >= 0; --k) s += std::pow(2.0 * k + 1.0, -p);
    const double m = 2.0 * K + 1.0;
    s += std::pow(m, 1.0 - p) / (2.0 * (p - 1.0)) + 0.5 * std::pow(m, -p) + p * std::pow(m, -p - 1.0) / 6.0;
    return 4.0 * std::tgamma(p) * s;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gauss-legendre") {
    std::vector<double> x, w;
    gauss_legendre(20, x, w);
    for (std::size_t i = 1; i < x.size(); ++i) CHECK(x[i] > x[i - 1]);
    for (int k = 0; k <= 39; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], k);
        CHECK(s == doctest::Approx(k % 2 ? 0.0 : 2.0 / (k + 1)).epsilon(1e-13));
    }
}

TEST_CASE("graded grid invariants") {
    for (std::size_t size : {3u, 50u, 199u, 200u}) {
        const auto g = Grid::graded(size);
        REQUIRE(g->size() == size);
        double sum = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            CHECK(g->nodes()[i] > 0.0);
            CHECK(g->nodes()[i] < 1.0);
            CHECK(g->weights()[i] > 0.0);
            CHECK(std::abs(g->nodes()[i] + g->complements()[i] - 1.0) <= 1e-15);
            if (i > 0) CHECK(g->difference(i - 1, i) > 0.0);
            sum += g->weights()[i];
        }
        if (size >= 50) CHECK(std::abs(sum - 1.0) <= 1e-14);
    }
    CHECK_THROWS_AS(Grid::graded(2), std::invalid_argument);
    CHECK(Grid::graded(200)->grading() == 3);
    CHECK(Grid::graded(200, 1)->grading() == 1);
}

TEST_CASE("transform of simple functions") {
    const auto g = Grid::graded(200);
    const auto one = sample(g, [](double, double) { return 1.0; });
    for (double v : apply_T(one).values) CHECK(std::abs(v) <= 1e-12);

    // T(x) = 1
    const auto xs = sample(g, [](double x, double) { return x; });
    const std::vector<double> d1(g->size(), 1.0);
    for (double v : apply_T(xs, d1).values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    // finite differences of a smooth function: second order at interior nodes, so doubling the grid
    // cuts the error ~4x (the end nodes are spaced below 1e-12 and are roundoff-limited)
    const auto fd_error = [](std::size_t size) {
        const auto grid = Grid::graded(size);
        const auto s = sample(grid, [](double x, double) { return std::sin(3.0 * x); });
        const auto ds = finite_difference_derivative(s);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid->size(); ++i)
            if (grid->interior(i, 1e-3)) worst = std::max(worst, std::abs(ds[i] - 3.0 * std::cos(3.0 * grid->nodes()[i])));
        return worst;
    };
    const double e200 = fd_error(200), e400 = fd_error(400);
    CHECK(e200 < 5e-3);
    CHECK(e200 / e400 > 3.0);
}

TEST_CASE("eigenfunctions on the grid") {
    const auto g = Grid::graded(200);
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
        const auto f = sample(g, [a](double x, double) { return 1.0 / (x + a); });
        const auto fp = sample(g, [a](double x, double) { return -1.0 / ((x + a) * (x + a)); });
        const auto tf = apply_T(f, fp.values);
        const double gamma = std::log(a / (1.0 + a));
        for (std::size_t i = 0; i < g->size(); ++i)
            if (g->interior(i, 1e-3)) CHECK(rel(tf.values[i], gamma * f.values[i]) <= 1e-7);
        CHECK(rel(integrate(f), -gamma) <= 1e-12);
    }
}

TEST_CASE("phi_0 helpers") {
    CHECK(phi0(0.5, 0.5) == 0.0);
    CHECK(phi0(1e-300, 1.0) == doctest::Approx(-300 * std::log(10.0)));
    CHECK(log_difference_quotient(2.0, 2.0) == 0.5);
    CHECK(log_difference_quotient(2.0 + 1e-10, 2.0) == 0.5);
    CHECK(log_difference_quotient(3.0, 1.0) == doctest::Approx(std::log(3.0) / 2.0).epsilon(1e-15));
    CHECK(log_difference_quotient(1.0 + 1e-6, 1.0) == doctest::Approx(1.0 - 0.5e-6).epsilon(1e-12));
}

TEST_CASE("integral forms against trapezoid oracles") {
    for (const auto& [n, z] : std::vector<std::pair<unsigned, double>>{{0, 0.5}, {1, 0.0}, {2, 1.0}, {3, -0.7}}) {
        CAPTURE(n);
        const double oracle = c_form_oracle(n, z);
        const double quad = integral_c_form(n, z).value;
        const double exact = std::pow(pi, n + 1) * evaluate_double(golden::c_table()[n], z / pi);
        if (n == 0) {
            CHECK(quad == 0.0);
            CHECK(exact == 0.0);
        } else {
            CHECK(rel(quad, oracle) <= 1e-10);
            CHECK(rel(quad, exact) <= 1e-10);
            CHECK(rel(c_form_target(n, z), exact) <= 1e-14);
        }
    }
    CHECK(rel(integral_c_form(1, 0.0).value, pi * pi / 2) <= 1e-12);
    CHECK(rel(integral_c_form(2, 1.0).value, (2.0 + 2.0 * pi * pi) / 3.0) <= 1e-12);

    for (const auto& [n, z] : std::vector<std::pair<unsigned, double>>{
             {0, -std::log(2.0)}, {1, -std::log(2.0)}, {2, std::log(2.0 / 3.0)}, {3, -1.0}}) {
        CAPTURE(n);
        const double quad = integral_a_form(n, z).value;
        const double exact = -std::pow(pi, n + 1) * evaluate_double(golden::a_table()[n], z / pi);
        CHECK(rel(quad, a_form_oracle(n, z)) <= 1e-10);
        CHECK(rel(quad, exact) <= 1e-10);
    }
    CHECK(rel(integral_a_form(0, -std::log(2.0)).value, std::log(2.0)) <= 1e-12);
    CHECK_THROWS_AS(integral_a_form(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integral_a_form(1, 0.3), std::invalid_argument);
}

TEST_CASE("classical log integral") {
    const double closed[] = {0.0, pi * pi / 2, std::pow(pi, 4) / 4, std::pow(pi, 6) / 2};
    for (unsigned n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(rel(classical_series_oracle(n), closed[n]) <= 1e-12);
        CHECK(rel(classical_log_target(n), closed[n]) <= 1e-15);
        CHECK(rel(classical_log_integral(n).value, closed[n]) <= 1e-12);
    }
    CHECK_THROWS_AS(classical_log_integral(0), std::invalid_argument);
}

TEST_CASE("eigen moments") {
    const auto a_tab = golden::a_table();
    for (const auto& [n, a] : std::vector<std::pair<unsigned, double>>{{0, 1.0}, {1, 1.0}, {2, 2.0}, {3, 0.5}}) {
        CAPTURE(n);
        const double gamma = std::log(a / (1.0 + a));
        const double closed = -std::pow(pi, n + 1) * evaluate_double(a_tab[n], gamma / pi);
        const double quad = eigen_moment_integral(n, a).value;
        CHECK(rel(quad, eigen_moment_oracle(n, a)) <= 1e-10);
        CHECK(rel(quad, closed) <= 1e-10);
    }
    CHECK_THROWS_AS(eigen_moment_integral(1, 0.0), std::invalid_argument);
}

TEST_CASE("moments") {
    // ∫ φ_0^2 = π^2/3 by the trapezoid oracle, hence ∫ T(φ_0) = (π^2/3 + π^2)/2
    const double phi_sq = shifted_trapezoid([](double u) { return u * u * sigmoid(u) * sigmoid(-u); }, -80, 80, 1.0 / 64);
    CHECK(rel(phi_sq, pi * pi / 3) <= 1e-12);
    const auto m2 = moment_check(2);
    REQUIRE(m2.checks().size() == 1);
    CHECK(m2.all_passed());
    CHECK(std::get<double>(m2.checks()[0].rhs) == doctest::Approx((phi_sq + pi * pi) / 2).epsilon(1e-12));
    const auto m1 = moment_check(1);
    CHECK(m1.all_passed());
    CHECK(std::get<double>(m1.checks()[0].rhs) == 0.0);
    CHECK_THROWS_AS(moment_check(3), std::invalid_argument);
}

TEST_CASE("suites") {
    for (const char* s : {"cform", "aform", "classical", "moments", "eigen", "transform"}) {
        CAPTURE(s);
        const auto rep = verify_integrals(s);
        CHECK(rep.all_passed());
        CHECK(rep.summary().total() > 0);
    }
    CHECK(verify_integrals("all").summary().total() == 44);
    CHECK_THROWS_AS(verify_integrals("nope"), std::invalid_argument);

    LabOptions strict;
    strict.tolerance = 1e-30;
    const auto rep = verify_integrals("cform", strict);
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.exit_code() == 1);
}
