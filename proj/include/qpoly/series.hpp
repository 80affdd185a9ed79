#pragma once

// Truncated power series in t whose coefficients are polynomials in x.

#include "qpoly/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpoly {

/// Thrown for mixed-order arithmetic and for quotients that are not power series.
class SeriesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Σ_{j=0}^{order} c_j(x) t^j, exact modulo t^{order+1}.
template <typename Scalar>
class TruncatedSeries {
public:
    using poly_type = Polynomial<Scalar>;

    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    TruncatedSeries(std::size_t order, std::vector<poly_type> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    /// Series whose t^j coefficient is the constant c_j (entries beyond order dropped).
    static TruncatedSeries from_scalars(std::size_t order, const std::vector<Scalar>& c) {
        TruncatedSeries s(order);
        for (std::size_t j = 0; j < c.size() && j <= order; ++j) s.coeffs_[j] = poly_type::constant(c[j]);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const poly_type& operator[](std::size_t j) const { return coeffs_.at(j); }
    const std::vector<poly_type>& coeffs() const { return coeffs_; }

    /// Index of the first nonzero coefficient; nullopt for the zero series.
    std::optional<std::size_t> valuation() const {
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            if (!coeffs_[j].is_zero()) return j;
        return std::nullopt;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_order(o);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_order(o);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        const std::size_t n = a.coeffs_.size();
        TruncatedSeries out(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const poly_type& p) {
        for (auto& c : a.coeffs_) c *= p;
        return a;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Drops the first k coefficients (division by t^k); the order drops by k.
    TruncatedSeries shift_down(std::size_t k) const {
        if (k > order()) throw SeriesError("shift_down past truncation order");
        return TruncatedSeries(order() - k, std::vector<poly_type>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
    }

    TruncatedSeries truncate(std::size_t new_order) const {
        if (new_order > order()) throw SeriesError("truncate cannot raise the order");
        return TruncatedSeries(new_order, std::vector<poly_type>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(new_order + 1)));
    }

    void require_same_order(const TruncatedSeries& o) const {
        if (o.coeffs_.size() != coeffs_.size())
            throw SeriesError("mixed truncation orders " + std::to_string(order()) + " and " + std::to_string(o.order()));
    }

private:
    std::vector<poly_type> coeffs_;
};

using SeriesQ = TruncatedSeries<BigRational>;

template <typename S>
TruncatedSeries<S> series_mul(const TruncatedSeries<S>& s, const TruncatedSeries<S>& u) { return s * u; }

/// s / u. Cancels t^{valuation(u)} from both operands, then inverts the
/// denominator, whose leading coefficient must then be a nonzero constant.
/// The quotient is exact modulo t^{N+1-valuation(u)}.
template <typename S>
TruncatedSeries<S> series_div(const TruncatedSeries<S>& s, const TruncatedSeries<S>& u) {
    s.require_same_order(u);
    const auto vu = u.valuation();
    if (!vu) throw SeriesError("series_div: zero denominator");
    const auto vs = s.valuation();
    if (vs && *vs < *vu) throw SeriesError("series_div: quotient is not a power series (valuation(u) > valuation(s))");

    const auto num = s.shift_down(*vu);
    const auto den = u.shift_down(*vu);
    if (den[0].degree() != 0)
        throw SeriesError("series_div: leading denominator coefficient is not an invertible constant");
    const S inv0 = S(1) / den[0].coeff(0);

    // q_j = (num_j - Σ_{k=1}^{j} den_k q_{j-k}) / den_0
    const std::size_t n = num.order() + 1;
    std::vector<Polynomial<S>> q(n);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial<S> acc = num[j];
        for (std::size_t k = 1; k <= j; ++k)
            if (!den[k].is_zero()) acc -= den[k] * q[j - k];
        q[j] = acc * inv0;
    }
    return TruncatedSeries<S>(num.order(), std::move(q));
}

namespace series {

/// exp(scale·x·t): coefficients (scale·x)^j / j!.
SeriesQ exp_xt(std::size_t order, const BigRational& scale = BigRational(1));
/// sin(scale·t), with rational coefficients from factorials.
SeriesQ sin_t(std::size_t order, const BigRational& scale = BigRational(1));
/// cos(scale·t).
SeriesQ cos_t(std::size_t order, const BigRational& scale = BigRational(1));
/// The monomial c·t^power.
SeriesQ monomial_t(std::size_t order, std::size_t power, const PolyQ& c = PolyQ::constant(BigRational(1)));
/// Σ_j W_j(x) t^j / j! → W_j = j! · coefficient(j).
std::vector<PolyQ> exponential_coefficients(const SeriesQ& s);

}  // namespace series

}  // namespace qpoly
