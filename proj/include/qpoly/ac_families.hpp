#pragma once

// The dual families A_n, C_n attached to the relation 2ab = a^2 + b^2 + 1,
// for which ab^n = A_n(a) + C_n(b) and a^n b = C_n(a) + A_n(b).
//
// Each builder is an independent construction route; the route-equivalence
// and identity checks below compare them exactly.

#include "qpoly/polynomial.hpp"
#include "qpoly/report.hpp"
#include "qpoly/special_numbers.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace qpoly {

enum class Route { recurrence, closed_form, coefficient_formula, generating_function, residue_recurrence };

const char* to_string(Route r);
/// Accepts the CLI spellings recurrence|closed|coeff|gf|residue.
std::optional<Route> parse_route(std::string_view name);

struct ACFamily {
    std::vector<PolyQ> a_polys;
    /// Empty for the residue route, which constructs A only.
    std::vector<PolyQ> c_polys;
    std::size_t max_n = 0;
    Route route = Route::recurrence;

    const PolyQ& a(std::size_t n) const { return a_polys.at(n); }
    const PolyQ& c(std::size_t n) const { return c_polys.at(n); }
    bool has_c() const { return !c_polys.empty(); }
};

/// A_{n+1} = (n+1)/(n+2) (X A_n + Σ_{k≤n} λ_n^k A_k),
/// C_{n+1} = (n+1)/(n+2) ((X^2+1) X^n + Σ_{k≤n} λ_n^k C_k),
/// with λ_n^k read off the just-built C_n.
ACFamily build_by_recurrence(std::size_t n_max);

/// Bernoulli closed forms evaluated over Q(i); throws NonRealError if a
/// result has an imaginary residue.
ACFamily build_by_closed_form(std::size_t n_max);

/// Assembles A_n, C_n from the explicit α_n^k and λ_n^k formulas.
ACFamily build_by_coefficient_formula(std::size_t n_max);

/// Expands (e^{tx} - 1)/sin t and x e^{tx} + (1 - e^{tx} cos t)/sin t.
ACFamily build_by_generating_function(std::size_t n_max);

/// A_{n+1} = [(X+i)^{n+2} - i^{n+2} - Σ_{k≤n} C(n+2,k) (2i)^{n+1-k} A_k] / (n+2).
/// Throws NonRealError on an imaginary residue.
std::vector<PolyQ> build_a_by_residue_recurrence(std::size_t n_max);
ACFamily build_family(Route route, std::size_t n_max);

/// α_n^k = C(n+1,k) cs(n+1-k) / (n+1), k = 1..n+1 (zero for k = 0).
BigRational alpha_coefficient(std::size_t n, std::size_t k, const BernoulliTable& beta);
/// λ_n^k from the four-case formula; zero outside 0..n+1.
BigRational lambda_coefficient(std::size_t n, std::size_t k, const BernoulliTable& beta);

/// Triangular coefficient tables: alpha[n][k] is the X^k coefficient of A_n,
/// lambda[n][k] that of C_n, for k = 0..n+1.
struct CoeffTables {
    std::vector<std::vector<BigRational>> alpha;
    std::vector<std::vector<BigRational>> lambda;
    std::size_t max_n = 0;
    Route source = Route::recurrence;

    const BigRational& alpha_at(std::size_t n, std::size_t k) const { return alpha.at(n).at(k); }
    const BigRational& lambda_at(std::size_t n, std::size_t k) const { return lambda.at(n).at(k); }
};

/// Reads α and λ off a family that carries C. Throws std::invalid_argument
/// for an A-only family.
CoeffTables lambda_alpha_tables(const ACFamily& family);

/// A_n(X±i) + C_n(X) = (X±i) X^n, A_n(X+i) - A_n(X-i) = 2i X^n,
/// C_n(X+i) - C_n(X-i) = X[(X+i)^n - (X-i)^n].
VerificationReport check_difference_identities(const ACFamily& family);

/// A_n and C_n against the Bernoulli closed forms, evaluated independently of
/// the family's route.
VerificationReport check_closed_form_identities(const ACFamily& family);

/// E_n(X) = X^n - X^{n+1} + (-i)^{n+1} [A_n(iX) + C_n(iX)].
VerificationReport check_euler_identity(const ACFamily& family);

/// A_n + C_n = X^{n+1} + Σ_{k<n} C(n,k) d_{n-k} X^k.
VerificationReport check_tangent_expansion(const ACFamily& family);

/// A_n(0) = 0, C_n(i) = 0, leading coefficient and degree rules, parity of A_n.
VerificationReport check_structure(const ACFamily& family);

/// Pairwise exact equality of all routes for n ≤ n_max.
VerificationReport check_route_equivalence(std::size_t n_max);

/// Every exact identity suite on one family plus route equivalence.
VerificationReport verify_identities(std::size_t n_max);

}  // namespace qpoly
