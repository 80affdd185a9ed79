#pragma once

// Exact-value wire formats. Rationals are "p/q" strings (integers as "p"),
// Gaussian rationals {"re": "p/q", "im": "p/q"}, polynomials arrays of
// coefficients low degree first. Floats appear only in numeric check reports.

#include "qpoly/polynomial.hpp"
#include "qpoly/report.hpp"

#include <json.hpp>

#include <string>

namespace qpoly {

using json = nlohmann::ordered_json;

json to_json(const BigRational& r);
json to_json(const GaussianRational& z);
json to_json(const PolyQ& p);
json to_json(const PolyQi& p);
json to_json(const VerificationReport& report);

/// Throws std::invalid_argument on anything but a string of the form "p" or "p/q".
BigRational rational_from_json(const json& j);
GaussianRational gaussian_from_json(const json& j);
PolyQ poly_from_json(const json& j);
PolyQi gaussian_poly_from_json(const json& j);

/// One polynomial of a family as emitted by `poly --format json`.
struct PolyDocument {
    std::string family;  // "a" or "c"
    std::size_t n = 0;
    std::string route;
    PolyQ poly;

    friend bool operator==(const PolyDocument&, const PolyDocument&) = default;
};

std::string emit_poly_document(const PolyDocument& doc);
/// Throws std::invalid_argument (or nlohmann parse errors) on malformed input.
PolyDocument parse_poly_document(const std::string& text);

/// Single fraction over the common denominator when the lcm of all
/// denominators is ≤ 10^6, otherwise one fraction per term. Highest degree first.
std::string to_latex(const PolyQ& p);

/// "degree,coefficient" header, then one row per stored coefficient.
std::string to_csv(const PolyQ& p);

}  // namespace qpoly
