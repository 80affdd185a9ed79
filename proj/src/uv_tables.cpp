#include "qpoly/uv_tables.hpp"

#include <stdexcept>
#include <string>

namespace qpoly {

namespace {

BigRational ratio(std::size_t p, std::size_t q) { return BigRational(static_cast<long>(p), static_cast<long>(q)); }

}  // namespace

const BigRational& UVTables::stored(const std::vector<std::vector<BigRational>>& t, std::size_t n,
                                    std::size_t k) const {
    if (n == 0 || n >= t.size() || k == 0 || k > top_index(n))
        throw std::out_of_range("UVTables: index (" + std::to_string(n) + "," + std::to_string(k) + ") out of range");
    return t[n][k - 1];
}

BigRational UVTables::u(std::size_t n, std::size_t k) const {
    if (k == 0 && n >= 1 && n < u_.size()) return BigRational(1);
    return stored(u_, n, k);
}

BigRational UVTables::v(std::size_t n, std::size_t k) const {
    if (k == 0 && n >= 1 && n < v_.size()) return ratio(n, 1);
    return stored(v_, n, k);
}

UVTables build_uv(std::size_t n_max) {
    if (n_max == 0) throw std::invalid_argument("build_uv: rows start at n = 1");
    UVTables t;
    t.u_.resize(n_max + 1);
    t.v_.resize(n_max + 1);
    t.u_[1] = {BigRational(0)};
    t.v_[1] = {BigRational(1)};

    // Entries of row m at index j, 1-based.
    const auto U = [&t](std::size_t m, std::size_t j) -> const BigRational& { return t.u_[m][j - 1]; };
    const auto V = [&t](std::size_t m, std::size_t j) -> const BigRational& { return t.v_[m][j - 1]; };

    for (std::size_t n = 1; n < n_max; ++n) {
        const std::size_t top = UVTables::top_index(n + 1);
        std::vector<BigRational> u_next(top), v_next(top);

        v_next[0] = ratio(n + 1, 1) + ratio(n - 1, n) * V(n, 1);
        u_next[0] = U(n, 1) + V(n, 1) / ratio(n, 1);

        for (std::size_t q = 2; q <= UVTables::top_index(n); ++q) {
            BigRational su, sv;
            for (std::size_t k = 1; k <= q - 1; ++k) {
                const BigRational w = V(n, k) / ratio(n + 2 - 2 * k, 1);
                su += w * U(n + 1 - 2 * k, q - k);
                sv += w * V(n + 1 - 2 * k, q - k);
            }
            v_next[q - 1] = sv + ratio(n + 1 - 2 * q, n + 2 - 2 * q) * V(n, q);
            u_next[q - 1] = su + V(n, q) / ratio(n + 2 - 2 * q, 1) + U(n, q);
        }

        if (n % 2 == 0) {
            const std::size_t q = (n + 2) / 2;
            BigRational su, sv;
            for (std::size_t k = 1; k <= UVTables::top_index(n); ++k) {
                const BigRational w = V(n, k) / ratio(n + 2 - 2 * k, 1);
                su += w * U(n + 1 - 2 * k, q - k);
                sv += w * V(n + 1 - 2 * k, q - k);
            }
            u_next[q - 1] = std::move(su);
            v_next[q - 1] = std::move(sv);
        }

        t.u_[n + 1] = std::move(u_next);
        t.v_[n + 1] = std::move(v_next);
    }
    return t;
}

VerificationReport check_uv_consistency(const UVTables& uv, const ACFamily& family) {
    if (uv.max_n() > family.max_n)
        throw std::invalid_argument("check_uv_consistency: family shorter than the uv tables");
    if (!family.has_c()) throw std::invalid_argument("check_uv_consistency: family has no C polynomials");
    VerificationReport rep("uv_consistency");
    for (std::size_t n = 1; n <= uv.max_n(); ++n) {
        const BigRational scale = ratio(n + 1, 1);
        for (std::size_t k = 0; k <= UVTables::top_index(n); ++k) {
            const std::size_t power = n + 1 - 2 * k;
            const std::string idx = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
            const BigRational u = uv.u(n, k);
            const BigRational ua = scale * family.a(n).coeff(power);
            rep.add_exact("u/" + idx, "u_n^k = (n+1) alpha_n^{n+1-2k}", u == ua, u.to_string(), ua.to_string());
            const BigRational v = uv.v(n, k);
            const BigRational vl = scale * family.c(n).coeff(power);
            rep.add_exact("v/" + idx, "v_n^k = (n+1) lambda_n^{n+1-2k}", v == vl, v.to_string(), vl.to_string());
        }
    }
    return rep;
}

}  // namespace qpoly
