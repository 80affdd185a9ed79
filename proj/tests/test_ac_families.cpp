#include <doctest.h>

#include "qpoly/ac_families.hpp"

#include "golden.hpp"

using namespace qpoly;

namespace {

BigRational q(const char* s) { return BigRational::parse(s); }

const std::vector<Route> all_routes{Route::recurrence, Route::closed_form, Route::coefficient_formula,
                                    Route::generating_function};

}  // namespace

TEST_CASE("every route reproduces the reference tables") {
    const auto a = golden::a_table();
    const auto c = golden::c_table();
    for (Route r : all_routes) {
        CAPTURE(to_string(r));
        const ACFamily fam = build_family(r, 8);
        REQUIRE(fam.has_c());
        for (std::size_t n = 0; n <= 8; ++n) CHECK(fam.a(n) == a[n]);
        for (std::size_t n = 0; n <= 7; ++n) CHECK(fam.c(n) == c[n]);
    }
    const auto res = build_a_by_residue_recurrence(8);
    REQUIRE(res.size() == 9);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(res[n] == a[n]);
    CHECK_FALSE(build_family(Route::residue_recurrence, 3).has_c());
}

TEST_CASE("small cases") {
    const ACFamily fam = build_by_recurrence(2);
    CHECK(fam.a(0) == PolyQ{0, 1});
    CHECK(fam.c(0).is_zero());
    CHECK(fam.a(1) == PolyQ{0, 0, q("1/2")});
    CHECK(fam.c(1) == PolyQ{q("1/2"), 0, q("1/2")});
    CHECK(build_by_closed_form(0).a(0) == PolyQ{0, 1});
    CHECK(build_a_by_residue_recurrence(0).size() == 1);
    CHECK(build_a_by_residue_recurrence(2)[2] == PolyQ{0, q("1/3"), 0, q("1/3")});
    CHECK(build_a_by_residue_recurrence(5)[5] == golden::a_table()[5]);
}

TEST_CASE("route names") {
    for (Route r : {Route::recurrence, Route::closed_form, Route::coefficient_formula, Route::generating_function,
                    Route::residue_recurrence})
        CHECK(parse_route(to_string(r)) == r);
    CHECK(std::string(to_string(Route::generating_function)) == "gf");
    CHECK_FALSE(parse_route("bogus").has_value());
}

TEST_CASE("coefficient formulas") {
    const BernoulliTable b = bernoulli_numbers(30);
    CHECK(alpha_coefficient(4, 1, b) == q("7/15"));
    CHECK(alpha_coefficient(4, 5, b) == q("1/5"));
    CHECK(alpha_coefficient(4, 0, b) == 0);
    CHECK(alpha_coefficient(3, 1, b) == 0);
    CHECK(lambda_coefficient(5, 0, b) == q("1/2"));
    CHECK(lambda_coefficient(4, 0, b) == 0);
    CHECK(lambda_coefficient(3, 2, b) == 1);
    CHECK(lambda_coefficient(2, 1, b) == q("2/3"));
    CHECK(lambda_coefficient(7, 0, b) == q("17/8"));
    CHECK(lambda_coefficient(6, 1, b) == q("32/21"));
    CHECK(lambda_coefficient(6, 6, b) == 0);
    CHECK(lambda_coefficient(6, 7, b) == q("6/7"));
    CHECK(lambda_coefficient(6, 9, b) == 0);

    const CoeffTables t = lambda_alpha_tables(build_by_recurrence(8));
    const auto a = golden::a_table();
    const auto c = golden::c_table();
    for (std::size_t n = 0; n <= 7; ++n)
        for (std::size_t k = 0; k <= n + 1; ++k) {
            CHECK(t.alpha_at(n, k) == a[n].coeff(k));
            CHECK(t.lambda_at(n, k) == c[n].coeff(k));
            CHECK(t.alpha_at(n, k) == alpha_coefficient(n, k, b));
            CHECK(t.lambda_at(n, k) == lambda_coefficient(n, k, b));
        }
    CHECK_THROWS_AS(lambda_alpha_tables(build_family(Route::residue_recurrence, 4)), std::invalid_argument);
}

TEST_CASE("identity suites pass") {
    const ACFamily fam = build_by_recurrence(24);
    for (const auto& rep : {check_difference_identities(fam), check_closed_form_identities(fam),
                            check_euler_identity(fam), check_tangent_expansion(fam), check_structure(fam)}) {
        CAPTURE(rep.suite());
        CHECK(rep.all_passed());
        CHECK(rep.summary().total() > 0);
        CHECK(rep.exit_code() == 0);
    }
    const VerificationReport eq = check_route_equivalence(24);
    CHECK(eq.all_passed());
}

TEST_CASE("hand-checked identity instances") {
    const auto a = golden::a_table();
    const auto c = golden::c_table();
    const GaussianRational i = GaussianRational::i();
    const PolyQi x = PolyQi::x();
    for (std::size_t n = 0; n <= 3; ++n) {
        const PolyQi an = to_gaussian(a[n]), cn = to_gaussian(c[n]);
        PolyQi xn = PolyQi::monomial(n, GaussianRational(1));
        CHECK(an.compose_affine(1, i) + cn == (x + PolyQi::constant(i)) * xn);
        CHECK(an.compose_affine(1, i) - an.compose_affine(1, -i) == xn * PolyQi::constant(GaussianRational(0, 2)));
    }
    CHECK(a[2] + c[2] == PolyQ{0, 1, 0, 1});
}

TEST_CASE("euler identity by hand for n = 0, 1") {
    // E_n(X) = X^n - X^{n+1} + (-i)^{n+1} [A_n(iX) + C_n(iX)]
    const GaussianRational i = GaussianRational::i();
    const auto a = golden::a_table();
    const auto c = golden::c_table();
    // n = 0: 1 - X + (-i)(iX) = 1
    const PolyQi rhs0 = PolyQi{1, -1} + PolyQi::constant(-i) * to_gaussian(a[0] + c[0]).compose_affine(i, 0);
    CHECK(rhs0 == PolyQi{1});
    // n = 1: X - X^2 + (-1)[(iX)^2/2 + ((iX)^2 + 1)/2] = X - 1/2
    const PolyQi rhs1 = PolyQi{0, 1, -1} + PolyQi::constant(-1) * to_gaussian(a[1] + c[1]).compose_affine(i, 0);
    CHECK(rhs1 == PolyQi{GaussianRational(q("-1/2")), 1});
    CHECK(real_part_exact(rhs0) == euler_poly(0));
    CHECK(real_part_exact(rhs1) == euler_poly(1));
}

TEST_CASE("corrupted family is reported, not thrown") {
    ACFamily fam = build_by_recurrence(6);
    fam.a_polys[4] = fam.a_polys[4] + PolyQ::monomial(2, BigRational(1, 1000));  // breaks parity too
    const VerificationReport rep = check_difference_identities(fam);
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.summary().failed >= 1);
    CHECK(rep.exit_code() == 1);
    CHECK_FALSE(check_structure(fam).all_passed());
}
