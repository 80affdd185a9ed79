#include "qpoly/report.hpp"

#include <algorithm>
#include <cmath>

namespace qpoly {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::error: return "error";
    }
    return "error";
}

void VerificationReport::add_exact(std::string id, std::string description, bool ok, std::string lhs,
                                   std::string rhs) {
    Check c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    checks_.push_back(std::move(c));
}

void VerificationReport::add_numeric(std::string id, std::string description, double lhs, double rhs,
                                     double tolerance) {
    Check c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.lhs = lhs;
    c.rhs = rhs;
    c.error_metric = relative_error(lhs, rhs);
    c.tolerance = tolerance;
    c.status = std::isfinite(*c.error_metric) && *c.error_metric <= tolerance ? CheckStatus::pass : CheckStatus::fail;
    checks_.push_back(std::move(c));
}

void VerificationReport::add_error(std::string id, std::string description, std::string message) {
    Check c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.status = CheckStatus::error;
    c.lhs = std::move(message);
    checks_.push_back(std::move(c));
}

void VerificationReport::append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    for (const auto& c : checks_) {
        switch (c.status) {
            case CheckStatus::pass: ++s.passed; break;
            case CheckStatus::fail: ++s.failed; break;
            case CheckStatus::error: ++s.errors; break;
        }
    }
    return s;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == CheckStatus::pass; });
}

bool VerificationReport::has_errors() const {
    return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == CheckStatus::error; });
}

int VerificationReport::exit_code() const {
    if (has_errors()) return 3;
    return all_passed() ? 0 : 1;
}

double relative_error(double lhs, double rhs) {
    const double diff = std::abs(lhs - rhs);
    return rhs == 0.0 ? diff : diff / std::abs(rhs);
}

}  // namespace qpoly
