#include "qpoly/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace qpoly {

namespace {

json check_value(const CheckValue& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* d = std::get_if<double>(&v)) return *d;
    return nullptr;
}

std::string power_text(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "X";
    const std::string e = std::to_string(k);
    return "X^" + (e.size() > 1 ? "{" + e + "}" : e);
}

/// Appends one term, given its sign and the text of |coefficient| (empty for a unit coefficient).
void append_term(std::string& out, bool negative, const std::string& magnitude, std::size_t k) {
    if (negative) out += '-';
    else if (!out.empty()) out += '+';
    if (k == 0) {
        out += magnitude.empty() ? "1" : magnitude;
        return;
    }
    out += magnitude + power_text(k);
}

}  // namespace

json to_json(const BigRational& r) { return r.to_string(); }

json to_json(const GaussianRational& z) {
    json j;
    j["re"] = z.re().to_string();
    j["im"] = z.im().to_string();
    return j;
}

json to_json(const PolyQ& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

json to_json(const PolyQi& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

json to_json(const VerificationReport& report) {
    json j;
    j["suite"] = report.suite();
    const auto s = report.summary();
    j["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"errors", s.errors}, {"total", s.total()}};
    json checks = json::array();
    for (const auto& c : report.checks()) {
        json e;
        e["id"] = c.id;
        e["name"] = c.id;
        e["description"] = c.description;
        e["status"] = to_string(c.status);
        e["pass"] = c.status == CheckStatus::pass;
        e["lhs"] = check_value(c.lhs);
        e["rhs"] = check_value(c.rhs);
        if (c.error_metric) {
            e["error_metric"] = *c.error_metric;
            e["rel_err"] = *c.error_metric;
        }
        if (c.tolerance) e["tolerance"] = *c.tolerance;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

BigRational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a \"p/q\" string, got " + j.dump());
    return BigRational::parse(j.get<std::string>());
}

GaussianRational gaussian_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("expected {\"re\", \"im\"}, got " + j.dump());
    return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

PolyQ poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
    std::vector<BigRational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return PolyQ(std::move(c));
}

PolyQi gaussian_poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
    std::vector<GaussianRational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(gaussian_from_json(e));
    return PolyQi(std::move(c));
}

std::string emit_poly_document(const PolyDocument& doc) {
    json j;
    j["family"] = doc.family;
    j["n"] = doc.n;
    j["route"] = doc.route;
    j["degree"] = doc.poly.degree();
    j["coeffs"] = to_json(doc.poly);
    return j.dump(2) + "\n";
}

PolyDocument parse_poly_document(const std::string& text) {
    const json j = json::parse(text);
    PolyDocument doc;
    doc.family = j.at("family").get<std::string>();
    if (doc.family != "a" && doc.family != "c") throw std::invalid_argument("family must be \"a\" or \"c\"");
    doc.n = j.at("n").get<std::size_t>();
    doc.route = j.at("route").get<std::string>();
    doc.poly = poly_from_json(j.at("coeffs"));
    if (j.contains("degree") && j.at("degree").get<int>() != doc.poly.degree())
        throw std::invalid_argument("degree field does not match the coefficients");
    return doc;
}

std::string to_latex(const PolyQ& p) {
    if (p.is_zero()) return "0";
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());

    std::string body;
    if (l <= 1000000) {
        for (std::size_t k = p.size(); k-- > 0;) {
            const BigRational& c = p.coeffs()[k];
            if (c.is_zero()) continue;
            mpz_class m = c.numerator() * (l / c.denominator());
            const bool neg = m < 0;
            if (neg) m = -m;
            append_term(body, neg, (m == 1 && k > 0) ? std::string() : m.get_str(), k);
        }
        if (l == 1) return body;
        return "\\frac{" + body + "}{" + l.get_str() + "}";
    }
    for (std::size_t k = p.size(); k-- > 0;) {
        const BigRational& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        mpz_class num = c.numerator();
        const bool neg = num < 0;
        if (neg) num = -num;
        std::string mag;
        if (c.is_integer()) mag = (num == 1 && k > 0) ? std::string() : num.get_str();
        else mag = "\\frac{" + num.get_str() + "}{" + c.denominator().get_str() + "}";
        append_term(body, neg, mag, k);
    }
    return body;
}

std::string to_csv(const PolyQ& p) {
    std::ostringstream os;
    os << "degree,coefficient\n";
    for (std::size_t k = 0; k < p.size(); ++k) os << k << ',' << p.coeffs()[k].to_string() << '\n';
    return os.str();
}

}  // namespace qpoly
