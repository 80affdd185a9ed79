#pragma once

// Bernoulli numbers and polynomials, Euler polynomials, cosecant numbers and
// the tan(x/2) coefficients. Convention: β_1 = B_1(0) = -1/2.

#include "qpoly/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace qpoly {

/// β_0..β_{max_n}, β_n = B_n(0).
class BernoulliTable {
public:
    explicit BernoulliTable(std::vector<BigRational> values) : values_(std::move(values)) {}

    std::size_t max_n() const { return values_.size() - 1; }
    const BigRational& operator[](std::size_t n) const { return values_.at(n); }
    const std::vector<BigRational>& values() const { return values_; }

private:
    std::vector<BigRational> values_;
};

/// Solves Σ_{k=0}^{n} C(n+1,k) β_k = 0 for n = 1..n_max.
BernoulliTable bernoulli_numbers(std::size_t n_max);

/// B_n(X) = Σ_k C(n,k) β_{n-k} X^k.
PolyQ bernoulli_poly(std::size_t n);
PolyQ bernoulli_poly(std::size_t n, const BernoulliTable& beta);

/// E_n(X) = 2^{n+1}/(n+1) [B_{n+1}(X/2 + 1/2) - B_{n+1}(X/2)].
PolyQ euler_poly(std::size_t n);
PolyQ euler_poly(std::size_t n, const BernoulliTable& beta);

/// cs(n): x/sin(x) = Σ cs(n) x^n / n!. Zero for odd n; even n uses
/// cs(n) = (-1)^{n/2+1} (2^n - 2) β_n.
BigRational cosecant_number(std::size_t n);
BigRational cosecant_number(std::size_t n, const BernoulliTable& beta);

/// d_n: tan(x/2) = Σ d_n x^n / n!. Zero for even n; odd n uses
/// d_n = 2 (-1)^{(n-1)/2} (2^{n+1} - 1) β_{n+1} / (n+1).
BigRational tangent_half_coeff(std::size_t n);
BigRational tangent_half_coeff(std::size_t n, const BernoulliTable& beta);

/// cs(0..n_max) read off the exact series quotient t / sin(t).
std::vector<BigRational> cosecant_numbers_by_series(std::size_t n_max);
/// d_0..d_{n_max} read off sin(t/2) / cos(t/2).
std::vector<BigRational> tangent_half_by_series(std::size_t n_max);
/// β_0..β_{n_max} read off t / (e^t - 1).
std::vector<BigRational> bernoulli_numbers_by_series(std::size_t n_max);

}  // namespace qpoly
