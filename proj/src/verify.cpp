#include "gendawson/verify.hpp"

#include <cmath>
#include <limits>

#include "gendawson/errors.hpp"

namespace gendawson {

double first_difference_step(double x) {
    return std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(x));
}

double second_difference_step(double x) {
    return std::sqrt(std::sqrt(std::numeric_limits<double>::epsilon())) * std::max(1.0, std::abs(x));
}

double identity_residual(const BSpec& b, double x, double tol) {
    // Quadrature noise e turns into a derivative error of about e / h.
    const double fd_tol = std::min(tol, 1e-14);
    const double h = first_difference_step(x);
    const double plus = eval_Db(b, x + h, fd_tol).value;
    const double minus = eval_Db(b, x - h, fd_tol).value;
    const double d = eval_Db(b, x, fd_tol).value;
    const double slope = (plus - minus) / (2 * h);
    return std::abs(slope - 1.0 + b.b(x) * d);
}

std::vector<ResidualRow> residual_report(const BSpec& b, std::span<const double> grid,
                                         const VerifyOptions& opts) {
    const HLIIODECoeffs coeffs = dawson_coeffs(b);
    std::vector<ResidualRow> rows;
    rows.reserve(grid.size());
    for (double x : grid) {
        ResidualRow row;
        row.x = x;
        try {
            row.quad = eval_Db(b, x, opts.tol).value;

            const Trajectory traj = integrate_cauchy(coeffs, x, opts.ode_step);
            row.ode = traj.back().y;
            row.resid_ode = std::abs(*row.quad - *row.ode);
            if (*row.resid_ode > opts.ode_threshold) row.flag = true;

            if (std::abs(x) < b.radius_hint()) {
                const EvalReport s = eval_Db_series(b, x, opts.series_order);
                row.series = s.value;
                row.series_bound = s.est_error;
                row.resid_series = std::abs(*row.quad - s.value);
                if (*row.resid_series > s.est_error + opts.series_slack) row.flag = true;
            }

            row.resid_identity = identity_residual(b, x, opts.tol);
            if (*row.resid_identity > opts.identity_threshold) row.flag = true;
        } catch (const Error& e) {
            row.flag = true;
            row.error = std::string(e.kind()) + ": " + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gendawson
