#pragma once

// Exact scalar fields: arbitrary-precision rationals Q and Gaussian rationals Q(i).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qpoly {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}                   // NOLINT(google-explicit-constructor)
    BigRational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    BigRational(long numerator, long denominator);
    explicit BigRational(const mpz_class& integer) : value_(integer) {}
    explicit BigRational(mpq_class value);

    /// Parses "p" or "p/q" (optional leading sign on p). Throws
    /// std::invalid_argument on malformed input or a zero denominator.
    static BigRational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const { return value_.get_str(); }
    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    BigRational operator-() const { return BigRational(mpq_class(-value_)); }
    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

BigRational pow(const BigRational& base, unsigned exponent);
/// Binomial coefficient C(n, k); zero when k > n.
BigRational binomial(unsigned n, unsigned k);
BigRational factorial(unsigned n);

/// Element of Q(i). No floating point is involved anywhere.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(re) {}                    // NOLINT(google-explicit-constructor)
    GaussianRational(int re) : re_(re) {}                     // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    BigRational re_;
    BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

GaussianRational pow(const GaussianRational& base, unsigned exponent);

inline bool is_zero(const BigRational& r) { return r.is_zero(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

}  // namespace qpoly
