#include "gendawson/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gendawson/bspec.hpp"
#include "gendawson/errors.hpp"
#include "gendawson/eval.hpp"
#include "gendawson/grid.hpp"
#include "gendawson/ode.hpp"
#include "gendawson/series.hpp"
#include "gendawson/triangular.hpp"
#include "gendawson/verify.hpp"
#include "parallel_map.hpp"

namespace gendawson::cli {

namespace {

using json = nlohmann::json;

/// Usage problem detected after CLI11 parsing (bad combination of flags).
struct UsageError : Error {
    using Error::Error;
    const char* kind() const noexcept override { return "usage"; }
};

std::string fixed17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json opt_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
std::string opt_csv(const std::optional<double>& v) { return v ? fixed17(*v) : std::string(); }

FamilyParams parse_family(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 4) throw ParseError("--family expects L,P,M,S");
    auto as_int = [](const std::string& s) {
        const Rational r = parse_rational(s);
        if (denominator(r) != 1 || r < 1 || r > 4096) throw ParseError("family powers must be positive integers");
        return numerator(r).convert_to<int>();
    };
    FamilyParams fp{parse_rational(parts[0]).convert_to<double>(), as_int(parts[1]),
                    parse_rational(parts[2]).convert_to<double>(), as_int(parts[3])};
    try {
        fp.validate();
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return fp;
}

/// Where the function to evaluate comes from: a b-spec or family parameters.
struct Source {
    std::optional<BSpec> b;
    std::optional<FamilyParams> family;
    std::string label;
};

Source make_source(const std::string& b_text, const std::string& family_text) {
    Source src;
    if (!b_text.empty()) {
        src.b = BSpec::parse(b_text);
        src.label = b_text;
    } else if (!family_text.empty()) {
        src.family = parse_family(family_text);
        src.label = "family:" + family_text;
    } else {
        throw UsageError("one of --b or --family is required");
    }
    return src;
}

struct EvalSettings {
    std::string method = "quad";
    double tol = kDefaultTol;
    int order = kDefaultSeriesOrder;
    double step = kDefaultOdeStep;
};

void check_settings(const Source& src, const EvalSettings& s) {
    if (!(s.tol > 0 && s.tol < 1)) throw UsageError("--tol must lie in (0, 1)");
    if (s.order < 1) throw UsageError("--order must be at least 1");
    if (!(s.step > 0)) throw UsageError("--step must be positive");
    if (s.method == "series" && src.family) throw UsageError("--method series needs --b");
}

EvalReport evaluate(const Source& src, const EvalSettings& s, double x) {
    if (s.method == "series") return eval_Db_series(*src.b, x, s.order);
    if (s.method == "ode") {
        const HLIIODECoeffs c = src.b ? dawson_coeffs(*src.b) : family_coeffs(*src.family);
        const double fine = integrate_cauchy(c, x, s.step).back().y;
        const double coarse = integrate_cauchy(c, x, 2 * s.step).back().y;
        EvalReport r;
        r.value = fine;
        r.method = Method::ode;
        r.est_error = std::abs(fine - coarse) / 15.0;
        r.detail = static_cast<long>(std::ceil(std::abs(x) / s.step - 1e-9));
        r.beyond_radius = src.b && std::abs(x) >= src.b->radius_hint();
        return r;
    }
    return src.b ? eval_Db(*src.b, x, s.tol) : eval_F_family(*src.family, x, s.tol);
}

json report_json(const EvalReport& r, double x) {
    return {{"x", x},
            {"value", r.value},
            {"est_error", r.est_error},
            {"method", std::string(to_string(r.method))},
            {"detail", r.detail},
            {"beyond_radius", r.beyond_radius}};
}

void warn_radius(const EvalReport& r, double x, std::ostream& err) {
    if (r.beyond_radius)
        err << "warning: |x| = " << format_shortest(std::abs(x))
            << " reaches the radius hint of the b-spec; value is best effort\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read matrix file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_error(const Error& e, bool json_mode, std::ostream& out, std::ostream& err) {
    err << "error: " << e.what() << '\n';
    if (!json_mode) return;
    json j = {{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* o = dynamic_cast<const OverflowError*>(&e)) {
        if (o->x()) j["x"] = *o->x();
        if (o->order()) j["order"] = *o->order();
    }
    if (const auto* c = dynamic_cast<const ConvergenceError*>(&e)) {
        j["best_estimate"] = c->best_estimate();
        j["est_error"] = c->est_error();
    }
    out << json{{"error", j}}.dump() << '\n';
}

int cmd_eval(const Source& src, const EvalSettings& s, double x, const std::string& format, std::ostream& out,
             std::ostream& err) {
    const EvalReport r = evaluate(src, s, x);
    warn_radius(r, x, err);
    if (format == "json") {
        json j = report_json(r, x);
        j["source"] = src.label;
        out << j.dump() << '\n';
    } else {
        out << "value: " << fixed17(r.value) << '\n'
            << "est_error: " << fixed17(r.est_error) << '\n'
            << "method: " << to_string(r.method) << '\n';
    }
    return kOk;
}

int cmd_table(const Source& src, const EvalSettings& s, const std::vector<double>& grid, const std::string& format,
              std::ostream& out, std::ostream& err) {
    std::vector<EvalReport> rows;
    std::vector<std::exception_ptr> errors;
    detail::parallel_map(grid.size(), [&](std::size_t i) { return evaluate(src, s, grid[i]); }, rows, errors);
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    bool warned = false;
    for (std::size_t i = 0; i < rows.size() && !warned; ++i)
        if (rows[i].beyond_radius) {
            warn_radius(rows[i], grid[i], err);
            warned = true;
        }

    if (format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) arr.push_back(report_json(rows[i], grid[i]));
        out << json{{"source", src.label}, {"method", s.method}, {"rows", arr}}.dump(2) << '\n';
    } else {
        out << "x,value,est_error,method\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            out << fixed17(grid[i]) << ',' << fixed17(rows[i].value) << ',' << fixed17(rows[i].est_error) << ','
                << to_string(rows[i].method) << '\n';
    }
    return kOk;
}

template <class T>
json series_dump(const std::string& label, int order, const DerivativeSeq<T>& b_derivs) {
    const DerivativeSeq<T> d = dawson_derivatives(b_derivs, order);
    const TaylorPoly<T> t = derivs_to_taylor(d);
    json derivs = json::array(), coeffs = json::array();
    for (const auto& v : d.values()) derivs.push_back(format_scalar(v));
    for (const auto& v : t.coeffs) coeffs.push_back(format_scalar(v));
    return {{"b_spec", label}, {"order", order}, {"derivatives", derivs}, {"taylor_coefficients", coeffs}};
}

int cmd_series(const std::string& b_text, int order, bool rational, std::ostream& out) {
    if (order < 1) throw UsageError("--order must be at least 1");
    const BSpec b = BSpec::parse(b_text);
    const int needed = std::max(order - 1, 1);
    const json j = rational ? series_dump(b_text, order, b.derivatives(needed))
                            : series_dump(b_text, order, b.derivatives_floating(needed));
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_cofactor(const std::string& path, int i, int n, bool oracle, std::ostream& out) {
    const UniTriangular<Rational> m = unitriangular_from_text(read_file(path));
    if (i < 1 || i > m.order() - 1 || n < 1 || n > m.order() - i)
        throw UsageError("need 1 <= i <= order-1 and 1 <= n <= order-i for a matrix of order " +
                         std::to_string(m.order()));
    const Rational closed = cofactor_closed_form(m, i, n);
    out << "closed_form: " << format_rational(closed) << '\n';
    if (oracle) {
        const Rational brute = cofactor_oracle(m, i, i + n);
        out << "oracle: " << format_rational(brute) << '\n';
        out << "verdict: " << (closed == brute ? "EQUAL" : "DIFFERENT") << '\n';
    }
    return kOk;
}

int cmd_verify(const BSpec& b, const std::string& label, const std::vector<double>& grid, const VerifyOptions& opts,
               const std::string& format, std::ostream& out, std::ostream& err) {
    const auto rows = residual_report(b, grid, opts);
    for (const auto& r : rows)
        if (!r.error.empty()) err << "x = " << format_shortest(r.x) << ": " << r.error << '\n';

    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"x", r.x},
                           {"quad", opt_number(r.quad)},
                           {"ode", opt_number(r.ode)},
                           {"series", opt_number(r.series)},
                           {"series_bound", opt_number(r.series_bound)},
                           {"resid_ode", opt_number(r.resid_ode)},
                           {"resid_series", opt_number(r.resid_series)},
                           {"resid_identity", opt_number(r.resid_identity)},
                           {"flag", r.flag},
                           {"error", r.error.empty() ? json(nullptr) : json(r.error)}});
        }
        out << json{{"b_spec", label}, {"rows", arr}}.dump(2) << '\n';
    } else {
        out << "x,quad,ode,series,resid_ode,resid_series,resid_identity,flag\n";
        for (const auto& r : rows)
            out << fixed17(r.x) << ',' << opt_csv(r.quad) << ',' << opt_csv(r.ode) << ',' << opt_csv(r.series)
                << ',' << opt_csv(r.resid_ode) << ',' << opt_csv(r.resid_series) << ','
                << opt_csv(r.resid_identity) << ',' << (r.flag ? 1 : 0) << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Dawson integral: evaluation, series, cofactors and verification", "gendawson"};
    app.require_subcommand(1);

    std::string b_text, family_text, format = "text", grid_text, matrix_path;
    EvalSettings settings;
    double x = 0, from = 0, to = 0, step = 0;
    int order = kDefaultSeriesOrder, ci = 0, cn = 0;
    bool rational = false, oracle = false;
    const std::vector<std::string> methods{"series", "quad", "ode"};

    auto add_source = [&](CLI::App* sub, bool with_family) {
        auto* ob = sub->add_option("--b", b_text, "b-spec: poly:c0,c1,... | mono:LAMBDA,P | series:d0,d1,...[@R]");
        if (with_family) {
            auto* of = sub->add_option("--family", family_text, "two-parameter family L,P,M,S");
            ob->excludes(of);
        } else {
            ob->required();
        }
    };
    auto add_eval_settings = [&](CLI::App* sub) {
        sub->add_option("--method", settings.method, "series | quad | ode")->check(CLI::IsMember(methods));
        sub->add_option("--tol", settings.tol, "quadrature tolerance");
        sub->add_option("--order", settings.order, "series truncation order");
        sub->add_option("--step", settings.step, "RK4 step size");
    };

    auto* eval = app.add_subcommand("eval", "evaluate at one point");
    add_source(eval, true);
    eval->add_option("--x", x, "abscissa")->required();
    add_eval_settings(eval);
    eval->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "tabulate over an evenly spaced grid");
    add_source(table, true);
    table->add_option("--from", from)->required();
    table->add_option("--to", to)->required();
    table->add_option("--step", step, "grid spacing")->required();
    table->add_option("--method", settings.method, "series | quad | ode")->check(CLI::IsMember(methods));
    table->add_option("--tol", settings.tol, "quadrature tolerance");
    table->add_option("--order", settings.order, "series truncation order");
    table->add_option("--ode-step", settings.step, "RK4 step size");
    table->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* series = app.add_subcommand("series", "MacLaurin derivatives of D_b as JSON");
    add_source(series, false);
    series->add_option("--order", order, "highest derivative order")->required();
    series->add_flag("--rational", rational, "exact rational arithmetic");

    auto* cof = app.add_subcommand("cofactor", "closed-form cofactor of a unitriangular matrix");
    cof->add_option("--matrix", matrix_path, "matrix file")->required();
    cof->add_option("--i", ci)->required();
    cof->add_option("--n", cn)->required();
    cof->add_flag("--oracle", oracle, "also compute the cofactor by dense elimination");

    auto* verify = app.add_subcommand("verify", "cross-method residual report");
    add_source(verify, false);
    verify->add_option("--grid", grid_text, "A:B:H")->required();
    add_eval_settings(verify);
    verify->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    std::vector<const char*> argv{"gendawson"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsageError;
    }

    const bool json_mode = format == "json";
    try {
        if (*eval) {
            const Source src = make_source(b_text, family_text);
            check_settings(src, settings);
            return cmd_eval(src, settings, x, format, out, err);
        }
        if (*table) {
            const Source src = make_source(b_text, family_text);
            check_settings(src, settings);
            return cmd_table(src, settings, make_grid(from, to, step), format == "text" ? "csv" : format, out,
                             err);
        }
        if (*series) return cmd_series(b_text, order, rational, out);
        if (*cof) return cmd_cofactor(matrix_path, ci, cn, oracle, out);
        if (*verify) {
            const Source src = make_source(b_text, "");
            check_settings(src, settings);
            VerifyOptions opts;
            opts.tol = settings.tol;
            opts.series_order = settings.order;
            opts.ode_step = settings.step;
            return cmd_verify(*src.b, b_text, parse_grid(grid_text), opts, format == "text" ? "csv" : format,
                              out, err);
        }
    } catch (const UsageError& e) {
        emit_error(e, json_mode, out, err);
        return kUsageError;
    } catch (const ParseError& e) {
        emit_error(e, json_mode, out, err);
        return kUsageError;
    } catch (const DomainError& e) {
        emit_error(e, json_mode, out, err);
        return kUsageError;
    } catch (const Error& e) {
        emit_error(e, json_mode, out, err);
        return kNumericalError;
    }
    return kUsageError;
}

}  // namespace gendawson::cli
