#pragma once

// Universal coefficients of the expansion
//   (n+1) a b^n = a^{n+1} + n b^{n+1}
//               + Σ_{k=1}^{⌊(n+1)/2⌋} (u_n^k a^{n+1-2k} + v_n^k b^{n+1-2k}) c^{2k}
// under 2ab = a^2 + b^2 + c^2 with b, c commuting.

#include "qpoly/ac_families.hpp"
#include "qpoly/rational.hpp"
#include "qpoly/report.hpp"

#include <cstddef>
#include <vector>

namespace qpoly {

class UVTables {
public:
    std::size_t max_n() const { return u_.empty() ? 0 : u_.size() - 1; }

    /// Largest k stored for row n: ⌊(n+1)/2⌋.
    static std::size_t top_index(std::size_t n) { return (n + 1) / 2; }

    /// u_n^k for 0 ≤ k ≤ ⌊(n+1)/2⌋; k = 0 gives the convention u_n^0 = 1.
    /// Throws std::out_of_range outside the index domain.
    BigRational u(std::size_t n, std::size_t k) const;
    /// v_n^k; k = 0 gives the convention v_n^0 = n.
    BigRational v(std::size_t n, std::size_t k) const;

    friend UVTables build_uv(std::size_t n_max);

private:
    const BigRational& stored(const std::vector<std::vector<BigRational>>& t, std::size_t n, std::size_t k) const;

    // Row n holds entries k = 1..⌊(n+1)/2⌋ at index k-1; row 0 is unused.
    std::vector<std::vector<BigRational>> u_;
    std::vector<std::vector<BigRational>> v_;
};

/// Fills rows 1..n_max by the double recursion seeded with u_1^1 = 0, v_1^1 = 1.
/// Throws std::invalid_argument for n_max = 0.
UVTables build_uv(std::size_t n_max);

/// u_n^k = (n+1) α_n^{n+1-2k} and v_n^k = (n+1) λ_n^{n+1-2k}, including k = 0.
/// Requires uv.max_n() ≤ family.max_n.
VerificationReport check_uv_consistency(const UVTables& uv, const ACFamily& family);

}  // namespace qpoly
