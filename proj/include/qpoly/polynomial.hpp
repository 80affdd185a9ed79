#pragma once

#include "qpoly/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpoly {

/// Dense univariate polynomial over an exact field, coefficients stored low
/// degree first. The highest stored coefficient is never zero; the zero
/// polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
public:
    using scalar_type = Scalar;

    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
    static Polynomial x() { return monomial(1, Scalar(1)); }
    static Polynomial monomial(std::size_t power, Scalar c) {
        std::vector<Scalar> v(power + 1);
        v[power] = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of X^k; zero beyond the degree.
    Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
    Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

    Polynomial operator-() const {
        std::vector<Scalar> v = coeffs_;
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        normalize();
        return *this;
    }
    Polynomial& operator*=(const Scalar& s) {
        for (auto& c : coeffs_) c *= s;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (qpoly::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Exact Horner evaluation.
    Scalar operator()(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(a X + b), by Horner's scheme over polynomials.
    Polynomial compose_affine(const Scalar& a, const Scalar& b) const {
        const Polynomial inner{b, a};
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && qpoly::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using PolyQ = Polynomial<BigRational>;
using PolyQi = Polynomial<GaussianRational>;

template <typename S>
Polynomial<S> poly_add(const Polynomial<S>& p, const Polynomial<S>& q) { return p + q; }
template <typename S>
Polynomial<S> poly_mul(const Polynomial<S>& p, const Polynomial<S>& q) { return p * q; }
template <typename S>
Polynomial<S> poly_compose_affine(const Polynomial<S>& p, const S& a, const S& b) { return p.compose_affine(a, b); }
template <typename S>
S poly_eval(const Polynomial<S>& p, const S& x) { return p(x); }

/// Embeds a rational polynomial into Q(i)[X].
PolyQi to_gaussian(const PolyQ& p);

/// Thrown when a Q(i) polynomial expected to be real has an imaginary residue.
class NonRealError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Returns the real part, throwing NonRealError if any coefficient has a
/// nonzero imaginary part.
PolyQ real_part_exact(const PolyQi& p);

/// Compact display form: ["c0","c1",...], Gaussian entries as "re+im*i".
std::string format_poly(const PolyQ& p);
std::string format_poly(const PolyQi& p);

/// Floating-point evaluation of an exact polynomial; the only bridge from
/// exact coefficients to doubles.
double evaluate_double(const PolyQ& p, double x);

}  // namespace qpoly
