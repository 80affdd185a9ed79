#include "qpoly/cli.hpp"

#include "qpoly/ac_families.hpp"
#include "qpoly/operator_lab.hpp"
#include "qpoly/serialize.hpp"
#include "qpoly/special_numbers.hpp"
#include "qpoly/uv_tables.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qpoly::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int emit_report(const VerificationReport& rep, std::ostream& out) {
    out << to_json(rep).dump(2) << '\n';
    return rep.exit_code();
}

int cmd_poly(const std::string& family, std::size_t n, const std::string& route_name, const std::string& format,
             std::ostream& out) {
    const auto route = parse_route(route_name);
    if (!route) throw UsageError("unknown route '" + route_name + "'");
    if (family == "c" && *route == Route::residue_recurrence)
        throw UsageError("the residue route constructs A only");
    const ACFamily fam = build_family(*route, n);
    const PolyQ& p = family == "a" ? fam.a(n) : fam.c(n);
    if (format == "json") out << emit_poly_document({family, n, route_name, p});
    else if (format == "latex") out << to_latex(p) << '\n';
    else out << to_csv(p);
    return ok;
}

int cmd_numbers(const std::string& kind, std::size_t max, const std::string& format, std::ostream& out) {
    std::vector<BigRational> values;
    if (kind == "bernoulli") {
        values = bernoulli_numbers(max).values();
    } else {
        const BernoulliTable beta = bernoulli_numbers(max + 1);
        for (std::size_t n = 0; n <= max; ++n)
            values.push_back(kind == "cosecant" ? cosecant_number(n, beta) : tangent_half_coeff(n, beta));
    }
    if (format == "json") {
        json j;
        j["kind"] = kind;
        j["max"] = max;
        json arr = json::array();
        for (const auto& v : values) arr.push_back(to_json(v));
        j["values"] = std::move(arr);
        out << j.dump(2) << '\n';
    } else {
        out << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n].to_string() << '\n';
    }
    return ok;
}

int cmd_coeffs(const std::string& kind, std::size_t max_n, const std::string& format, std::ostream& out) {
    if (kind == "uv") {
        if (max_n == 0) throw UsageError("coeffs uv needs --max-n ≥ 1");
        const UVTables uv = build_uv(max_n);
        if (format == "json") {
            json j;
            j["kind"] = "uv";
            j["max_n"] = max_n;
            json rows = json::array();
            for (std::size_t n = 1; n <= max_n; ++n)
                for (std::size_t k = 1; k <= UVTables::top_index(n); ++k)
                    rows.push_back({{"n", n}, {"k", k}, {"u", to_json(uv.u(n, k))}, {"v", to_json(uv.v(n, k))}});
            j["entries"] = std::move(rows);
            out << j.dump(2) << '\n';
        } else {
            out << "n,k,u,v\n";
            for (std::size_t n = 1; n <= max_n; ++n)
                for (std::size_t k = 1; k <= UVTables::top_index(n); ++k)
                    out << n << ',' << k << ',' << uv.u(n, k) << ',' << uv.v(n, k) << '\n';
        }
        return ok;
    }
    const CoeffTables t = lambda_alpha_tables(build_by_recurrence(max_n));
    const auto& rows = kind == "alpha" ? t.alpha : t.lambda;
    if (format == "json") {
        json j;
        j["kind"] = kind;
        j["max_n"] = max_n;
        json arr = json::array();
        for (const auto& row : rows) {
            json r = json::array();
            for (const auto& v : row) r.push_back(to_json(v));
            arr.push_back(std::move(r));
        }
        j["rows"] = std::move(arr);
        out << j.dump(2) << '\n';
    } else {
        out << "n,k,value\n";
        for (std::size_t n = 0; n < rows.size(); ++n)
            for (std::size_t k = 0; k < rows[n].size(); ++k) out << n << ',' << k << ',' << rows[n][k] << '\n';
    }
    return ok;
}

VerificationReport uv_report(std::size_t max_n) {
    if (max_n == 0) throw UsageError("verify uv needs --max-n ≥ 1");
    return check_uv_consistency(build_uv(max_n), build_by_recurrence(max_n));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of the A_n / C_n polynomial families", "qpoly"};
    app.require_subcommand(1);

    std::string format = "json";
    std::size_t max_n = 24;
    double tolerance = 1e-8;
    std::size_t grid_size = 200;

    auto* poly = app.add_subcommand("poly", "Emit A_n or C_n built by one route");
    std::string family, route = "recurrence";
    std::size_t n = 0;
    poly->add_option("--family", family, "a or c")->required()->check(CLI::IsMember({"a", "c"}));
    poly->add_option("--n", n, "Index n")->required();
    poly->add_option("--route", route, "recurrence|closed|coeff|gf|residue")
        ->check(CLI::IsMember({"recurrence", "closed", "coeff", "gf", "residue"}));
    poly->add_option("--format", format, "json|latex|csv")->check(CLI::IsMember({"json", "latex", "csv"}));

    auto* numbers = app.add_subcommand("numbers", "Bernoulli, cosecant or tan(x/2) coefficient tables");
    std::string kind;
    std::size_t max = 24;
    numbers->add_option("--kind", kind, "bernoulli|cosecant|tangent")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "cosecant", "tangent"}));
    numbers->add_option("--max", max, "Largest index");
    numbers->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* coeffs = app.add_subcommand("coeffs", "alpha / lambda triangles or the u / v tables");
    std::string table;
    coeffs->add_option("table", table, "alpha|lambda|uv")->required()->check(CLI::IsMember({"alpha", "lambda", "uv"}));
    coeffs->add_option("--max-n", max_n, "Largest n");
    coeffs->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    auto* v_ident = verify->add_subcommand("identities", "Exact identities and route equivalence");
    v_ident->add_option("--max-n", max_n, "Largest n");
    auto* v_uv = verify->add_subcommand("uv", "u/v tables against the alpha/lambda coefficients");
    v_uv->add_option("--max-n", max_n, "Largest n");
    auto* v_int = verify->add_subcommand("integrals", "Quadrature and grid checks");
    std::string suite = "all";
    v_int->add_option("--suite", suite, "cform|aform|classical|moments|eigen|transform|all")
        ->check(CLI::IsMember({"cform", "aform", "classical", "moments", "eigen", "transform", "all"}));
    v_int->add_option("--tolerance", tolerance, "Relative tolerance for quadrature checks");
    v_int->add_option("--grid-size", grid_size, "Grid nodes for the transform")->check(CLI::Range(3, 5000));
    for (auto* sub : {v_ident, v_uv, v_int})
        sub->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

    auto* selftest = app.add_subcommand("selftest", "All exact suites at --max-n plus all integral suites");
    selftest->add_option("--max-n", max_n, "Largest n");
    selftest->add_option("--tolerance", tolerance, "Relative tolerance for quadrature checks");
    selftest->add_option("--grid-size", grid_size, "Grid nodes for the transform")->check(CLI::Range(3, 5000));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "qpoly: " << e.what() << "\n\n" << app.help();
        return usage;
    }

    try {
        LabOptions lab;
        lab.tolerance = tolerance;
        lab.grid_size = grid_size;
        if (poly->parsed()) return cmd_poly(family, n, route, format, out);
        if (numbers->parsed()) return cmd_numbers(kind, max, format, out);
        if (coeffs->parsed()) return cmd_coeffs(table, max_n, format, out);
        if (v_ident->parsed()) return emit_report(verify_identities(max_n), out);
        if (v_uv->parsed()) return emit_report(uv_report(max_n), out);
        if (v_int->parsed()) return emit_report(verify_integrals(suite, lab), out);
        if (selftest->parsed()) {
            const std::vector<VerificationReport> reports{verify_identities(max_n), uv_report(std::max<std::size_t>(max_n, 1)),
                                                          verify_integrals("all", lab)};
            json j;
            j["suite"] = "selftest";
            json arr = json::array();
            int code = ok;
            ReportSummary total;
            for (const auto& r : reports) {
                arr.push_back(to_json(r));
                const auto s = r.summary();
                total.passed += s.passed;
                total.failed += s.failed;
                total.errors += s.errors;
                code = std::max(code, r.exit_code() == no_convergence ? 3 : r.exit_code());
            }
            j["summary"] = {{"passed", total.passed}, {"failed", total.failed}, {"errors", total.errors},
                            {"total", total.total()}};
            j["suites"] = std::move(arr);
            out << j.dump(2) << '\n';
            return code;
        }
    } catch (const UsageError& e) {
        err << "qpoly: " << e.what() << '\n';
        return usage;
    } catch (const QuadratureError& e) {
        err << "qpoly: " << e.what() << '\n';
        return no_convergence;
    }
    err << app.help();
    return usage;
}

}  // namespace qpoly::cli
