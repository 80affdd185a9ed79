#include "qpoly/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qpoly {

BigRational::BigRational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    const auto bad = [&] { return std::invalid_argument("BigRational: cannot parse '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw bad();
    mpq_class q(n, d);
    q.canonicalize();
    return BigRational(std::move(q));
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigRational pow(const BigRational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return BigRational(mpq_class(num, den));
}

BigRational binomial(unsigned n, unsigned k) {
    if (k > n) return BigRational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return BigRational(out);
}

BigRational factorial(unsigned n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return BigRational(out);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    BigRational re = re_ * o.re_ - im_ * o.im_;
    BigRational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const BigRational n = o.norm();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << '(' << z.re() << ',' << z.im() << ')';
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
    GaussianRational result(1);
    GaussianRational b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

}  // namespace qpoly
