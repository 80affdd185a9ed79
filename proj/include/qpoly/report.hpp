#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qpoly {

enum class CheckStatus { pass, fail, error };

const char* to_string(CheckStatus s);

/// Exact sides are carried as serialized strings, numeric sides as doubles.
using CheckValue = std::variant<std::monostate, std::string, double>;

struct Check {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::pass;
    CheckValue lhs;
    CheckValue rhs;
    std::optional<double> error_metric;
    std::optional<double> tolerance;
};

struct ReportSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;
    std::size_t total() const { return passed + failed + errors; }
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<Check>& checks() const { return checks_; }

    void add(Check c) { checks_.push_back(std::move(c)); }
    /// Exact check: passes iff lhs == rhs as strings of exact values.
    void add_exact(std::string id, std::string description, bool ok, std::string lhs, std::string rhs);
    /// Numeric check against a relative tolerance (see relative_error).
    void add_numeric(std::string id, std::string description, double lhs, double rhs, double tolerance);
    void add_error(std::string id, std::string description, std::string message);
    void append(const VerificationReport& other);

    ReportSummary summary() const;
    bool all_passed() const;
    bool has_errors() const;
    /// 0 when every check passed, 3 if any check errored, otherwise 1.
    int exit_code() const;

private:
    std::string suite_;
    std::vector<Check> checks_;
};

/// |lhs - rhs| / |rhs|, or |lhs| when the target is exactly zero.
double relative_error(double lhs, double rhs);

}  // namespace qpoly
