#include "qpoly/polynomial.hpp"

namespace qpoly {

PolyQi to_gaussian(const PolyQ& p) {
    std::vector<GaussianRational> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return PolyQi(std::move(v));
}

PolyQ real_part_exact(const PolyQi& p) {
    std::vector<BigRational> v;
    v.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const auto& c = p.coeffs()[k];
        if (!c.is_real())
            throw NonRealError("coefficient of X^" + std::to_string(k) + " has imaginary part " + c.im().to_string());
        v.push_back(c.re());
    }
    return PolyQ(std::move(v));
}

double evaluate_double(const PolyQ& p, double x) {
    double acc = 0.0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

}  // namespace qpoly

namespace qpoly {

namespace {

std::string scalar_text(const BigRational& r) { return r.to_string(); }

std::string scalar_text(const GaussianRational& z) {
    if (z.is_real()) return z.re().to_string();
    std::string im = z.im().to_string() + "*i";
    if (z.re().is_zero()) return im;
    return z.re().to_string() + (z.im().sign() > 0 ? "+" : "") + im;
}

template <typename S>
std::string format_impl(const Polynomial<S>& p) {
    std::string out = "[";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) out += ',';
        out += '"' + scalar_text(p.coeffs()[k]) + '"';
    }
    return out + "]";
}

}  // namespace

std::string format_poly(const PolyQ& p) { return format_impl(p); }
std::string format_poly(const PolyQi& p) { return format_impl(p); }

}  // namespace qpoly
