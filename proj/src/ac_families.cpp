#include "qpoly/ac_families.hpp"

#include "qpoly/series.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qpoly {

namespace {

using G = GaussianRational;

const G kI = G::i();

BigRational ratio(std::size_t p, std::size_t q) { return BigRational(static_cast<long>(p), static_cast<long>(q)); }

BigRational sign_pow(std::size_t e) { return e % 2 == 0 ? BigRational(1) : BigRational(-1); }

std::string nstr(std::size_t n) { return std::to_string(n); }

/// (2i)^{n+1} / (n+1)
G closed_form_prefactor(std::size_t n) {
    return pow(G(BigRational(0), BigRational(2)), static_cast<unsigned>(n + 1)) / G(ratio(n + 1, 1));
}

/// Gaussian-rational closed form for A_n, before the reality check.
PolyQi closed_form_a(std::size_t n, const BernoulliTable& beta) {
    const PolyQi b = to_gaussian(bernoulli_poly(n + 1, beta));
    const G inv_2i(BigRational(0), BigRational(-1, 2));
    const G half(BigRational(1, 2));
    const PolyQi shifted = b.compose_affine(inv_2i, half) - PolyQi::constant(b(half));
    return shifted * closed_form_prefactor(n);
}

PolyQi closed_form_c(std::size_t n, const BernoulliTable& beta) {
    const PolyQi b = to_gaussian(bernoulli_poly(n + 1, beta));
    const G inv_2i(BigRational(0), BigRational(-1, 2));
    const G half(BigRational(1, 2));
    const PolyQi bracket = PolyQi::constant(b(half)) - b.compose_affine(inv_2i, G(0));
    const PolyQi tail = PolyQi::monomial(n + 1, G(1)) - PolyQi::monomial(n, kI);
    return bracket * closed_form_prefactor(n) + tail;
}

/// (X + shift)^n over Q(i).
PolyQi shifted_power(std::size_t n, const G& shift) {
    return PolyQi::monomial(n, G(1)).compose_affine(G(1), shift);
}

}  // namespace

const char* to_string(Route r) {
    switch (r) {
        case Route::recurrence: return "recurrence";
        case Route::closed_form: return "closed";
        case Route::coefficient_formula: return "coeff";
        case Route::generating_function: return "gf";
        case Route::residue_recurrence: return "residue";
    }
    return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
    for (Route r : {Route::recurrence, Route::closed_form, Route::coefficient_formula, Route::generating_function,
                    Route::residue_recurrence})
        if (name == to_string(r)) return r;
    return std::nullopt;
}

ACFamily build_by_recurrence(std::size_t n_max) {
    ACFamily fam;
    fam.max_n = n_max;
    fam.route = Route::recurrence;
    fam.a_polys.reserve(n_max + 1);
    fam.c_polys.reserve(n_max + 1);
    fam.a_polys.push_back(PolyQ::x());
    fam.c_polys.emplace_back();

    const PolyQ x = PolyQ::x();
    const PolyQ x2p1{BigRational(1), BigRational(0), BigRational(1)};
    for (std::size_t n = 0; n < n_max; ++n) {
        // λ_n^k for k ≤ n; the leading λ_n^{n+1} = n/(n+1) is the b^{n+1} term
        // already moved to the left side of the induction.
        const PolyQ& cn = fam.c_polys[n];
        PolyQ a_next = x * fam.a_polys[n];
        PolyQ c_next = x2p1 * PolyQ::monomial(n, BigRational(1));
        for (std::size_t k = 0; k <= n; ++k) {
            const BigRational lam = cn.coeff(k);
            if (lam.is_zero()) continue;
            a_next += fam.a_polys[k] * lam;
            c_next += fam.c_polys[k] * lam;
        }
        const BigRational scale = ratio(n + 1, n + 2);
        fam.a_polys.push_back(a_next * scale);
        fam.c_polys.push_back(c_next * scale);
    }
    return fam;
}

ACFamily build_by_closed_form(std::size_t n_max) {
    const BernoulliTable beta = bernoulli_numbers(n_max + 1);
    ACFamily fam;
    fam.max_n = n_max;
    fam.route = Route::closed_form;
    for (std::size_t n = 0; n <= n_max; ++n) {
        try {
            fam.a_polys.push_back(real_part_exact(closed_form_a(n, beta)));
            fam.c_polys.push_back(real_part_exact(closed_form_c(n, beta)));
        } catch (const NonRealError& e) {
            throw NonRealError("closed form at n=" + nstr(n) + ": " + e.what());
        }
    }
    return fam;
}

BigRational alpha_coefficient(std::size_t n, std::size_t k, const BernoulliTable& beta) {
    if (k == 0 || k > n + 1) return BigRational(0);
    return binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)) * cosecant_number(n + 1 - k, beta) /
           ratio(n + 1, 1);
}

BigRational lambda_coefficient(std::size_t n, std::size_t k, const BernoulliTable& beta) {
    if (k > n + 1) return BigRational(0);
    if (k == n + 1) return ratio(n, n + 1);
    if (k == n) return BigRational(0);
    if (k == 0) {
        // Non-integral sign exponent for even n: the coefficient vanishes.
        if (n % 2 == 0) return BigRational(0);
        return BigRational(2) * (pow(BigRational(2), static_cast<unsigned>(n + 1)) - BigRational(1)) *
               sign_pow((n - 1) / 2) * beta[n + 1] / ratio(n + 1, 1);
    }
    const std::size_t gap = n - k;
    if (gap % 2 == 0) return BigRational(0);
    return sign_pow((gap - 1) / 2) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
           pow(BigRational(2), static_cast<unsigned>(gap + 1)) * beta[gap + 1] / ratio(gap + 1, 1);
}

ACFamily build_by_coefficient_formula(std::size_t n_max) {
    const BernoulliTable beta = bernoulli_numbers(n_max + 1);
    ACFamily fam;
    fam.max_n = n_max;
    fam.route = Route::coefficient_formula;
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<BigRational> a(n + 2), c(n + 2);
        for (std::size_t k = 0; k <= n + 1; ++k) {
            a[k] = alpha_coefficient(n, k, beta);
            c[k] = lambda_coefficient(n, k, beta);
        }
        fam.a_polys.emplace_back(std::move(a));
        fam.c_polys.emplace_back(std::move(c));
    }
    return fam;
}

ACFamily build_by_generating_function(std::size_t n_max) {
    // Numerators and sin t all have valuation 1; one extra order survives the cancellation.
    const std::size_t order = n_max + 1;
    const SeriesQ one = series::monomial_t(order, 0);
    const SeriesQ e = series::exp_xt(order);
    const SeriesQ s = series::sin_t(order);
    const SeriesQ c = series::cos_t(order);

    const SeriesQ f = series_div(e - one, s);
    const SeriesQ g = (e * PolyQ::x()).truncate(order - 1) + series_div(one - e * c, s);

    ACFamily fam;
    fam.max_n = n_max;
    fam.route = Route::generating_function;
    fam.a_polys = series::exponential_coefficients(f);
    fam.c_polys = series::exponential_coefficients(g);
    return fam;
}

std::vector<PolyQ> build_a_by_residue_recurrence(std::size_t n_max) {
    std::vector<PolyQi> a;
    a.reserve(n_max + 1);
    a.push_back(PolyQi::x());
    std::vector<PolyQ> out{PolyQ::x()};
    const G two_i(BigRational(0), BigRational(2));
    for (std::size_t n = 0; n < n_max; ++n) {
        PolyQi acc = shifted_power(n + 2, kI) - PolyQi::constant(pow(kI, static_cast<unsigned>(n + 2)));
        for (std::size_t k = 0; k <= n; ++k) {
            const G w = G(binomial(static_cast<unsigned>(n + 2), static_cast<unsigned>(k))) *
                        pow(two_i, static_cast<unsigned>(n + 1 - k));
            acc -= a[k] * w;
        }
        acc *= G(ratio(1, n + 2));
        PolyQ real;
        try {
            real = real_part_exact(acc);
        } catch (const NonRealError& e) {
            throw NonRealError("residue recurrence at n=" + nstr(n + 1) + ": " + e.what());
        }
        if (real.degree() != static_cast<int>(n + 2))
            throw std::logic_error("residue recurrence: A_" + nstr(n + 1) + " has degree " +
                                   std::to_string(real.degree()));
        a.push_back(to_gaussian(real));
        out.push_back(std::move(real));
    }
    return out;
}

ACFamily build_family(Route route, std::size_t n_max) {
    switch (route) {
        case Route::recurrence: return build_by_recurrence(n_max);
        case Route::closed_form: return build_by_closed_form(n_max);
        case Route::coefficient_formula: return build_by_coefficient_formula(n_max);
        case Route::generating_function: return build_by_generating_function(n_max);
        case Route::residue_recurrence: {
            ACFamily fam;
            fam.max_n = n_max;
            fam.route = route;
            fam.a_polys = build_a_by_residue_recurrence(n_max);
            return fam;
        }
    }
    throw std::invalid_argument("unknown route");
}

CoeffTables lambda_alpha_tables(const ACFamily& family) {
    if (!family.has_c()) throw std::invalid_argument("lambda_alpha_tables: family has no C polynomials");
    CoeffTables t;
    t.max_n = family.max_n;
    t.source = family.route;
    for (std::size_t n = 0; n <= family.max_n; ++n) {
        std::vector<BigRational> a(n + 2), c(n + 2);
        for (std::size_t k = 0; k <= n + 1; ++k) {
            a[k] = family.a(n).coeff(k);
            c[k] = family.c(n).coeff(k);
        }
        t.alpha.push_back(std::move(a));
        t.lambda.push_back(std::move(c));
    }
    return t;
}

VerificationReport check_difference_identities(const ACFamily& family) {
    VerificationReport rep("difference_identities");
    const G one(1);
    for (std::size_t n = 0; n <= family.max_n; ++n) {
        const PolyQi a = to_gaussian(family.a(n));
        const PolyQi a_plus = a.compose_affine(one, kI);
        const PolyQi a_minus = a.compose_affine(one, -kI);
        const PolyQi xn = PolyQi::monomial(n, one);

        const PolyQi lhs3 = a_plus - a_minus;
        const PolyQi rhs3 = xn * G(BigRational(0), BigRational(2));
        rep.add_exact("A_diff/n=" + nstr(n), "A_n(X+i) - A_n(X-i) = 2i X^n", lhs3 == rhs3, format_poly(lhs3),
                      format_poly(rhs3));

        if (!family.has_c()) continue;
        const PolyQi c = to_gaussian(family.c(n));
        const PolyQi x = PolyQi::x();

        const PolyQi lhs1 = a_minus + c;
        const PolyQi rhs1 = (x - PolyQi::constant(kI)) * xn;
        rep.add_exact("A_minus_plus_C/n=" + nstr(n), "A_n(X-i) + C_n(X) = (X-i) X^n", lhs1 == rhs1,
                      format_poly(lhs1), format_poly(rhs1));

        const PolyQi lhs2 = a_plus + c;
        const PolyQi rhs2 = (x + PolyQi::constant(kI)) * xn;
        rep.add_exact("A_plus_plus_C/n=" + nstr(n), "A_n(X+i) + C_n(X) = (X+i) X^n", lhs2 == rhs2,
                      format_poly(lhs2), format_poly(rhs2));

        const PolyQi lhs4 = c.compose_affine(one, kI) - c.compose_affine(one, -kI);
        const PolyQi rhs4 = x * (shifted_power(n, kI) - shifted_power(n, -kI));
        rep.add_exact("C_diff/n=" + nstr(n), "C_n(X+i) - C_n(X-i) = X[(X+i)^n - (X-i)^n]", lhs4 == rhs4,
                      format_poly(lhs4), format_poly(rhs4));
    }
    return rep;
}

VerificationReport check_closed_form_identities(const ACFamily& family) {
    VerificationReport rep("closed_form_identities");
    const BernoulliTable beta = bernoulli_numbers(family.max_n + 1);
    for (std::size_t n = 0; n <= family.max_n; ++n) {
        const PolyQi a_cf = closed_form_a(n, beta);
        const PolyQi a = to_gaussian(family.a(n));
        rep.add_exact("A_closed_form/n=" + nstr(n),
                      "A_n(X) = (2i)^{n+1}/(n+1) [B_{n+1}((X+i)/(2i)) - B_{n+1}(1/2)]", a == a_cf,
                      format_poly(a), format_poly(a_cf));
        if (!family.has_c()) continue;
        const PolyQi c_cf = closed_form_c(n, beta);
        const PolyQi c = to_gaussian(family.c(n));
        rep.add_exact("C_closed_form/n=" + nstr(n),
                      "C_n(X) = (2i)^{n+1}/(n+1) [B_{n+1}(1/2) - B_{n+1}(X/(2i))] + X^n (X-i)", c == c_cf,
                      format_poly(c), format_poly(c_cf));
    }
    return rep;
}

VerificationReport check_euler_identity(const ACFamily& family) {
    VerificationReport rep("euler_identity");
    if (!family.has_c()) return rep;
    const BernoulliTable beta = bernoulli_numbers(family.max_n + 1);
    for (std::size_t n = 0; n <= family.max_n; ++n) {
        const PolyQi sum = to_gaussian(family.a(n) + family.c(n)).compose_affine(kI, G(0));
        const PolyQi rhs = PolyQi::monomial(n, G(1)) - PolyQi::monomial(n + 1, G(1)) +
                           sum * pow(-kI, static_cast<unsigned>(n + 1));
        const PolyQi euler = to_gaussian(euler_poly(n, beta));
        rep.add_exact("euler/n=" + nstr(n), "E_n(X) = X^n - X^{n+1} + (-i)^{n+1} [A_n(iX) + C_n(iX)]",
                      euler == rhs, format_poly(euler), format_poly(rhs));
    }
    return rep;
}

VerificationReport check_tangent_expansion(const ACFamily& family) {
    VerificationReport rep("tangent_expansion");
    if (!family.has_c()) return rep;
    const BernoulliTable beta = bernoulli_numbers(family.max_n + 1);
    for (std::size_t n = 0; n <= family.max_n; ++n) {
        const PolyQ lhs = family.a(n) + family.c(n);
        std::vector<BigRational> r(n + 2);
        r[n + 1] = BigRational(1);
        for (std::size_t k = 0; k < n; ++k)
            r[k] = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * tangent_half_coeff(n - k, beta);
        const PolyQ rhs(std::move(r));
        rep.add_exact("tangent/n=" + nstr(n), "A_n + C_n = X^{n+1} + sum_k C(n,k) d_{n-k} X^k", lhs == rhs,
                      format_poly(lhs), format_poly(rhs));
    }
    return rep;
}

VerificationReport check_structure(const ACFamily& family) {
    VerificationReport rep("structure");
    for (std::size_t n = 0; n <= family.max_n; ++n) {
        const PolyQ& a = family.a(n);
        rep.add_exact("A_at_zero/n=" + nstr(n), "A_n(0) = 0", a(BigRational(0)).is_zero(),
                      a(BigRational(0)).to_string(), "0");
        rep.add_exact("A_degree/n=" + nstr(n), "deg A_n = n+1", a.degree() == static_cast<int>(n + 1),
                      std::to_string(a.degree()), nstr(n + 1));
        bool parity_ok = true;
        for (std::size_t k = 0; k < a.size(); ++k)
            if ((k + n + 1) % 2 != 0 && !a.coeff(k).is_zero()) parity_ok = false;
        rep.add_exact("A_parity/n=" + nstr(n), "A_n has only powers of parity n+1", parity_ok, format_poly(a), "");

        if (!family.has_c()) continue;
        const PolyQ& c = family.c(n);
        const G ci = to_gaussian(c)(kI);
        rep.add_exact("C_at_i/n=" + nstr(n), "C_n(i) = 0", ci.is_zero(),
                      "(" + ci.re().to_string() + "," + ci.im().to_string() + ")", "0");
        const BigRational lead = c.coeff(n + 1);
        rep.add_exact("C_leading/n=" + nstr(n), "coefficient of X^{n+1} in C_n is n/(n+1)", lead == ratio(n, n + 1),
                      lead.to_string(), ratio(n, n + 1).to_string());
        const int want_deg = n == 0 ? -1 : static_cast<int>(n + 1);
        rep.add_exact("C_degree/n=" + nstr(n), "deg C_n = n+1 (C_0 = 0)", c.degree() == want_deg,
                      std::to_string(c.degree()), std::to_string(want_deg));
        rep.add_exact("C_lambda_nn/n=" + nstr(n), "lambda_n^n = 0", c.coeff(n).is_zero(), c.coeff(n).to_string(), "0");
        parity_ok = true;
        for (std::size_t k = 0; k < c.size(); ++k)
            if ((k + n + 1) % 2 != 0 && !c.coeff(k).is_zero()) parity_ok = false;
        rep.add_exact("C_parity/n=" + nstr(n), "C_n has only powers of parity n+1", parity_ok, format_poly(c), "");
    }
    return rep;
}

VerificationReport check_route_equivalence(std::size_t n_max) {
    VerificationReport rep("route_equivalence");
    std::vector<ACFamily> fams;
    for (Route r : {Route::recurrence, Route::closed_form, Route::coefficient_formula, Route::generating_function,
                    Route::residue_recurrence}) {
        try {
            fams.push_back(build_family(r, n_max));
        } catch (const std::exception& e) {
            rep.add_error(std::string("build/") + to_string(r), "route construction", e.what());
        }
    }
    for (std::size_t i = 0; i < fams.size(); ++i) {
        for (std::size_t j = i + 1; j < fams.size(); ++j) {
            const std::string pair = std::string(to_string(fams[i].route)) + "~" + to_string(fams[j].route);
            for (std::size_t n = 0; n <= n_max; ++n) {
                const PolyQ& x = fams[i].a(n);
                const PolyQ& y = fams[j].a(n);
                rep.add_exact("A/" + pair + "/n=" + nstr(n), "A_n agrees across routes", x == y, format_poly(x),
                              format_poly(y));
                if (!fams[i].has_c() || !fams[j].has_c()) continue;
                const PolyQ& u = fams[i].c(n);
                const PolyQ& v = fams[j].c(n);
                rep.add_exact("C/" + pair + "/n=" + nstr(n), "C_n agrees across routes", u == v, format_poly(u),
                              format_poly(v));
            }
        }
    }
    return rep;
}

VerificationReport verify_identities(std::size_t n_max) {
    VerificationReport rep("identities");
    const ACFamily fam = build_by_recurrence(n_max);
    rep.append(check_difference_identities(fam));
    rep.append(check_closed_form_identities(fam));
    rep.append(check_euler_identity(fam));
    rep.append(check_tangent_expansion(fam));
    rep.append(check_structure(fam));
    rep.append(check_route_equivalence(n_max));
    return rep;
}

}  // namespace qpoly
