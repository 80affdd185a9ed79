#include "qpoly/special_numbers.hpp"

#include "qpoly/series.hpp"

namespace qpoly {

namespace {

BigRational minus_one_pow(std::size_t e) { return e % 2 == 0 ? BigRational(1) : BigRational(-1); }

BigRational two_pow(std::size_t e) { return pow(BigRational(2), static_cast<unsigned>(e)); }

std::vector<BigRational> scalar_coefficients(const SeriesQ& s) {
    std::vector<BigRational> out;
    out.reserve(s.order() + 1);
    for (std::size_t j = 0; j <= s.order(); ++j) out.push_back(s[j].coeff(0) * factorial(static_cast<unsigned>(j)));
    return out;
}

}  // namespace

BernoulliTable bernoulli_numbers(std::size_t n_max) {
    std::vector<BigRational> beta;
    beta.reserve(n_max + 1);
    beta.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto m = static_cast<unsigned>(n + 1);
        BigRational acc;
        for (std::size_t k = 0; k < n; ++k) acc += binomial(m, static_cast<unsigned>(k)) * beta[k];
        beta.push_back(-acc / BigRational(static_cast<long>(m)));
    }
    return BernoulliTable(std::move(beta));
}

PolyQ bernoulli_poly(std::size_t n) { return bernoulli_poly(n, bernoulli_numbers(n)); }

PolyQ bernoulli_poly(std::size_t n, const BernoulliTable& beta) {
    std::vector<BigRational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * beta[n - k];
    return PolyQ(std::move(c));
}

PolyQ euler_poly(std::size_t n) { return euler_poly(n, bernoulli_numbers(n + 1)); }

PolyQ euler_poly(std::size_t n, const BernoulliTable& beta) {
    const PolyQ b = bernoulli_poly(n + 1, beta);
    const BigRational half(1, 2);
    const PolyQ diff = b.compose_affine(half, half) - b.compose_affine(half, BigRational(0));
    return diff * (two_pow(n + 1) / BigRational(static_cast<long>(n + 1)));
}

BigRational cosecant_number(std::size_t n) { return cosecant_number(n, bernoulli_numbers(n)); }

BigRational cosecant_number(std::size_t n, const BernoulliTable& beta) {
    if (n % 2 != 0) return BigRational(0);
    return minus_one_pow(n / 2 + 1) * (two_pow(n) - BigRational(2)) * beta[n];
}

BigRational tangent_half_coeff(std::size_t n) { return tangent_half_coeff(n, bernoulli_numbers(n + 1)); }

BigRational tangent_half_coeff(std::size_t n, const BernoulliTable& beta) {
    if (n % 2 == 0) return BigRational(0);
    return BigRational(2) * minus_one_pow((n - 1) / 2) * (two_pow(n + 1) - BigRational(1)) * beta[n + 1] /
           BigRational(static_cast<long>(n + 1));
}

std::vector<BigRational> cosecant_numbers_by_series(std::size_t n_max) {
    // Both operands carry one extra order so the quotient reaches t^{n_max}.
    const std::size_t order = n_max + 1;
    const auto q = series_div(series::monomial_t(order, 1), series::sin_t(order));
    return scalar_coefficients(q);
}

std::vector<BigRational> tangent_half_by_series(std::size_t n_max) {
    const BigRational half(1, 2);
    const auto q = series_div(series::sin_t(n_max, half), series::cos_t(n_max, half));
    return scalar_coefficients(q);
}

std::vector<BigRational> bernoulli_numbers_by_series(std::size_t n_max) {
    const std::size_t order = n_max + 1;
    std::vector<BigRational> em1(order + 1);
    for (std::size_t j = 1; j <= order; ++j) em1[j] = BigRational(1) / factorial(static_cast<unsigned>(j));
    const auto q = series_div(series::monomial_t(order, 1), SeriesQ::from_scalars(order, em1));
    return scalar_coefficients(q);
}

}  // namespace qpoly
