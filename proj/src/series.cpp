#include "qpoly/series.hpp"

namespace qpoly::series {

SeriesQ exp_xt(std::size_t order, const BigRational& scale) {
    std::vector<PolyQ> c(order + 1);
    for (std::size_t j = 0; j <= order; ++j)
        c[j] = PolyQ::monomial(j, pow(scale, static_cast<unsigned>(j)) / factorial(static_cast<unsigned>(j)));
    return SeriesQ(order, std::move(c));
}

SeriesQ sin_t(std::size_t order, const BigRational& scale) {
    std::vector<BigRational> c(order + 1);
    for (std::size_t j = 1; j <= order; j += 2) {
        const auto u = static_cast<unsigned>(j);
        BigRational term = pow(scale, u) / factorial(u);
        c[j] = (j / 2) % 2 == 0 ? term : -term;
    }
    return SeriesQ::from_scalars(order, c);
}

SeriesQ cos_t(std::size_t order, const BigRational& scale) {
    std::vector<BigRational> c(order + 1);
    for (std::size_t j = 0; j <= order; j += 2) {
        const auto u = static_cast<unsigned>(j);
        BigRational term = pow(scale, u) / factorial(u);
        c[j] = (j / 2) % 2 == 0 ? term : -term;
    }
    return SeriesQ::from_scalars(order, c);
}

SeriesQ monomial_t(std::size_t order, std::size_t power, const PolyQ& c) {
    std::vector<PolyQ> v(order + 1);
    if (power <= order) v[power] = c;
    return SeriesQ(order, std::move(v));
}

std::vector<PolyQ> exponential_coefficients(const SeriesQ& s) {
    std::vector<PolyQ> out;
    out.reserve(s.order() + 1);
    for (std::size_t j = 0; j <= s.order(); ++j) out.push_back(s[j] * factorial(static_cast<unsigned>(j)));
    return out;
}

}  // namespace qpoly::series
