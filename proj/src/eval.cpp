#include "gendawson/eval.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gendawson/errors.hpp"
#include "gendawson/quadrature.hpp"
#include "gendawson/series.hpp"

namespace gendawson {

namespace {

// log(DBL_MAX) with a little headroom
constexpr double kMaxExponent = 709.0;

void check_args(double x, double tol) {
    if (!std::isfinite(x)) throw DomainError("x is not finite");
    if (!(tol > 0 && tol < 1)) throw DomainError("tolerance must lie in (0, 1)");
}

std::string at_x(double x) { return " at x = " + format_shortest(x); }

EvalReport from_quadrature(const QuadratureResult& q) {
    EvalReport r;
    r.value = q.value;
    r.method = Method::quadrature;
    r.est_error = q.est_error;
    r.detail = q.panels;
    return r;
}

}  // namespace

void FamilyParams::validate() const {
    if (!(std::isfinite(lambda) && lambda != 0)) throw DomainError("family: lambda must be finite and nonzero");
    if (!(std::isfinite(mu) && mu != 0)) throw DomainError("family: mu must be finite and nonzero");
    if (p < 1 || s < 1) throw DomainError("family: p and s must be positive integers");
}

double big_B(const BSpec& b, double x) { return b.big_b(x); }

EvalReport eval_Db(const BSpec& b, double x, double tol) {
    check_args(x, tol);
    const double bx = b.big_b(x);
    if (!std::isfinite(bx)) throw OverflowError("B(x) overflows" + at_x(x), std::nullopt, x);
    EvalReport r;
    try {
        r = from_quadrature(integrate_adaptive([&](double t) { return std::exp(b.big_b(t) - bx); }, 0.0, x,
                                               {.tol = tol}));
    } catch (const OverflowError&) {
        throw OverflowError("exp(B(t) - B(x)) overflows" + at_x(x), std::nullopt, x);
    }
    r.beyond_radius = std::abs(x) >= b.radius_hint();
    return r;
}

EvalReport eval_F_classical(int p, double x, double tol) {
    if (p < 1) throw DomainError("F(p, x) requires p >= 1");
    check_args(x, tol);
    const double xp = std::pow(x, p);
    if (!std::isfinite(xp)) throw OverflowError("x^p overflows" + at_x(x), std::nullopt, x);
    try {
        return from_quadrature(
            integrate_adaptive([&](double t) { return std::exp(std::pow(t, p) - xp); }, 0.0, x, {.tol = tol}));
    } catch (const OverflowError&) {
        throw OverflowError("exp(t^p - x^p) overflows" + at_x(x), std::nullopt, x);
    }
}

EvalReport eval_F_family(const FamilyParams& fp, double x, double tol) {
    fp.validate();
    check_args(x, tol);
    const double lead = fp.lambda * std::pow(x, fp.p);
    const double inner_end = fp.mu * std::pow(x, fp.s);
    if (!std::isfinite(lead) || !std::isfinite(inner_end))
        throw OverflowError("family exponent overflows" + at_x(x), std::nullopt, x);

    if (fp.diagonal()) {
        try {
            return from_quadrature(integrate_adaptive(
                [&](double t) { return std::exp(fp.mu * std::pow(t, fp.s) - lead); }, 0.0, x, {.tol = tol}));
        } catch (const OverflowError&) {
            throw OverflowError("family integrand overflows" + at_x(x), std::nullopt, x);
        }
    }

    // mu t^s is monotone in |t| between 0 and x, so its maximum there is at an endpoint.
    const double shift = std::max(0.0, inner_end);
    const double log_prefactor = shift - lead;
    if (log_prefactor > kMaxExponent)
        throw OverflowError("family value overflows" + at_x(x), std::nullopt, x);
    const double prefactor = std::exp(log_prefactor);
    const double inner_tol = prefactor > 1 ? tol / prefactor : tol;
    if (!(inner_tol > 0)) throw OverflowError("family value overflows" + at_x(x), std::nullopt, x);

    const QuadratureResult q = integrate_adaptive(
        [&](double t) { return std::exp(fp.mu * std::pow(t, fp.s) - shift); }, 0.0, x, {.tol = inner_tol});
    EvalReport r = from_quadrature(q);
    r.value = prefactor * q.value;
    r.est_error = prefactor * q.est_error;
    if (!std::isfinite(r.value)) throw OverflowError("family value overflows" + at_x(x), std::nullopt, x);
    return r;
}

EvalReport eval_Db_series(const BSpec& b, double x, int order) {
    if (!std::isfinite(x)) throw DomainError("x is not finite");
    const int needed = std::max(order - 1, 1);
    const auto d = dawson_derivatives(b.derivatives(needed), order);
    EvalReport r = series_eval(d, x);
    r.beyond_radius = std::abs(x) >= b.radius_hint();
    return r;
}

}  // namespace gendawson
