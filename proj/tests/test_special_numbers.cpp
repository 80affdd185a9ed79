#include <doctest.h>

#include "qpoly/special_numbers.hpp"

using namespace qpoly;

namespace {

BigRational q(const char* s) { return BigRational::parse(s); }

// Akiyama-Tanigawa; gives B_1 = +1/2, flipped below.
std::vector<BigRational> akiyama_tanigawa(std::size_t n_max) {
    std::vector<BigRational> out, a(n_max + 1);
    for (std::size_t m = 0; m <= n_max; ++m) {
        a[m] = BigRational(1, static_cast<long>(m + 1));
        for (std::size_t j = m; j >= 1; --j) a[j - 1] = BigRational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    if (n_max >= 1) out[1] = -out[1];
    return out;
}

// E_n with E_n(X+1) + E_n(X) = 2X^n, solved degree by degree from the top.
PolyQ euler_by_functional_equation(std::size_t n) {
    // write E = Σ e_k X^k; coefficient of X^j in E(X+1)+E(X): 2 e_j + Σ_{k>j} C(k,j) e_k
    std::vector<BigRational> e(n + 1);
    for (std::size_t j = n + 1; j-- > 0;) {
        BigRational rhs = j == n ? BigRational(2) : BigRational(0);
        for (std::size_t k = j + 1; k <= n; ++k) rhs -= binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * e[k];
        e[j] = rhs / 2;
    }
    return PolyQ(std::move(e));
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    const BernoulliTable b = bernoulli_numbers(40);
    CHECK(b[0] == 1);
    CHECK(b[1] == q("-1/2"));
    CHECK(b[2] == q("1/6"));
    CHECK(b[4] == q("-1/30"));
    CHECK(b[12] == q("-691/2730"));
    for (std::size_t n = 3; n <= 40; n += 2) CHECK(b[n].is_zero());
    CHECK(bernoulli_numbers(0).max_n() == 0);

    const auto oracle = akiyama_tanigawa(40);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(b[n] == oracle[n]);
    const auto by_series = bernoulli_numbers_by_series(40);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(b[n] == by_series[n]);
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(0) == PolyQ{1});
    CHECK(bernoulli_poly(1) == PolyQ{q("-1/2"), 1});
    CHECK(bernoulli_poly(2) == PolyQ{q("1/6"), -1, 1});
    const BernoulliTable b = bernoulli_numbers(40);
    for (std::size_t n = 0; n <= 40; ++n) {
        const PolyQ bn = bernoulli_poly(n, b);
        CHECK(bn.coeff(0) == b[n]);
        CHECK(bn.degree() == static_cast<int>(n));
        // B_n(X+1) - B_n(X) = n X^{n-1}
        const PolyQ diff = bn.compose_affine(1, 1) - bn;
        CHECK(diff == (n == 0 ? PolyQ{} : PolyQ::monomial(n - 1, BigRational(static_cast<long>(n)))));
    }
}

TEST_CASE("euler polynomials") {
    CHECK(euler_poly(0) == PolyQ{1});
    CHECK(euler_poly(1) == PolyQ{q("-1/2"), 1});
    CHECK(euler_poly(2) == PolyQ{0, -1, 1});
    CHECK(euler_poly(3) == PolyQ{q("1/4"), 0, q("-3/2"), 1});
    const BernoulliTable b = bernoulli_numbers(41);
    for (std::size_t n = 0; n <= 30; ++n) {
        const PolyQ en = euler_poly(n, b);
        CHECK(en == euler_by_functional_equation(n));
        CHECK(en(BigRational(0)) + en(BigRational(1)) == (n == 0 ? 2 : 0));
    }
}

TEST_CASE("cosecant numbers") {
    CHECK(cosecant_number(0) == 1);
    CHECK(cosecant_number(1) == 0);
    CHECK(cosecant_number(2) == q("1/3"));
    CHECK(cosecant_number(4) == q("7/15"));
    CHECK(cosecant_number(6) == q("31/21"));
    const BernoulliTable b = bernoulli_numbers(41);
    const auto s = cosecant_numbers_by_series(40);
    REQUIRE(s.size() == 41);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(cosecant_number(n, b) == s[n]);
}

TEST_CASE("tan(x/2) coefficients") {
    CHECK(tangent_half_coeff(0) == 0);
    CHECK(tangent_half_coeff(1) == q("1/2"));
    CHECK(tangent_half_coeff(2) == 0);
    CHECK(tangent_half_coeff(3) == q("1/4"));
    CHECK(tangent_half_coeff(5) == q("1/2"));
    const BernoulliTable b = bernoulli_numbers(41);
    const auto s = tangent_half_by_series(40);
    REQUIRE(s.size() == 41);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(tangent_half_coeff(n, b) == s[n]);
}
