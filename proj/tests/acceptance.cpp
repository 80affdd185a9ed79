// Acceptance run: one line per criterion, nonzero exit if any fails.

#include "qpoly/ac_families.hpp"
#include "qpoly/operator_lab.hpp"
#include "qpoly/special_numbers.hpp"
#include "qpoly/uv_tables.hpp"

#include "golden.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qpoly;

namespace {

// pinned tolerances and time budgets
constexpr std::size_t kMaxN = 24;
constexpr std::size_t kSeriesMaxN = 40;
constexpr double kQuadratureTol = 1e-8;
constexpr double kGridTol = 1e-7;
constexpr double kCompoundTol = 1e-4;

struct Outcome {
    bool ok;
    std::string detail;
};

std::string counts(const VerificationReport& r) {
    const auto s = r.summary();
    return std::to_string(s.passed) + "/" + std::to_string(s.total()) + " checks";
}

std::string worst(const VerificationReport& r) {
    double w = 0.0;
    for (const auto& c : r.checks())
        if (c.error_metric && c.tolerance) w = std::max(w, *c.error_metric / *c.tolerance);
    char buf[64];
    std::snprintf(buf, sizeof buf, ", worst error/tolerance %.3g", w);
    return buf;
}

Outcome golden_tables() {
    const ACFamily fam = build_by_recurrence(8);
    const auto a = golden::a_table();
    const auto c = golden::c_table();
    int good = 0;
    for (std::size_t n = 0; n <= 8; ++n) good += fam.a(n) == a[n];
    for (std::size_t n = 0; n <= 7; ++n) good += fam.c(n) == c[n];
    return {good == 17, std::to_string(good) + "/17 polynomials equal"};
}

Outcome route_equivalence() {
    const auto r = check_route_equivalence(kMaxN);
    return {r.all_passed() && r.summary().total() > 0, counts(r)};
}

Outcome identity_suite() {
    const ACFamily fam = build_by_recurrence(kMaxN);
    VerificationReport r("identities");
    r.append(check_difference_identities(fam));
    r.append(check_closed_form_identities(fam));
    r.append(check_euler_identity(fam));
    r.append(check_tangent_expansion(fam));
    return {r.all_passed() && r.summary().total() == 8 * (kMaxN + 1), counts(r)};
}

Outcome uv_consistency() {
    const auto r = check_uv_consistency(build_uv(kMaxN), build_by_recurrence(kMaxN));
    bool conventions = true;
    const UVTables uv = build_uv(kMaxN);
    for (std::size_t n = 1; n <= kMaxN; ++n)
        conventions = conventions && uv.u(n, 0) == 1 && uv.v(n, 0) == static_cast<long>(n);
    return {r.all_passed() && conventions && r.summary().total() > 0, counts(r)};
}

Outcome special_numbers() {
    const BernoulliTable beta = bernoulli_numbers(kSeriesMaxN + 1);
    const auto cs = cosecant_numbers_by_series(kSeriesMaxN);
    const auto d = tangent_half_by_series(kSeriesMaxN);
    std::size_t good = 0;
    for (std::size_t n = 0; n <= kSeriesMaxN; ++n) {
        good += cosecant_number(n, beta) == cs.at(n);
        good += tangent_half_coeff(n, beta) == d.at(n);
    }
    const std::size_t total = 2 * (kSeriesMaxN + 1);
    return {good == total, std::to_string(good) + "/" + std::to_string(total) + " coefficients equal"};
}

Outcome quadrature_suite() {
    LabOptions opts;
    opts.tolerance = kQuadratureTol;
    opts.grid_tolerance = kGridTol;
    opts.compound_tolerance = kCompoundTol;
    const auto r = verify_integrals("all", opts);
    return {r.all_passed(), counts(r) + worst(r)};
}

struct Criterion {
    const char* id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"AC1", "golden A_0..A_8, C_0..C_7", 1.0, golden_tables},
        {"AC2", "route equivalence n <= 24", 10.0, route_equivalence},
        {"AC3", "exact identity suite n <= 24", 10.0, identity_suite},
        {"AC4", "u/v consistency n <= 24", 5.0, uv_consistency},
        {"AC5", "cs(n), d_n closed form vs series n <= 40", 2.0, special_numbers},
        {"AC6", "quadrature and grid suite", 60.0, quadrature_suite},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("[%s] %s %s: %s (%.3fs, budget %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", over budget");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
