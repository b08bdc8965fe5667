#include "gendawson/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "gendawson/errors.hpp"

namespace gendawson {

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

struct Panel {
    double lo;
    double hi;
    double whole;
    int depth;
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration bounds must be finite");
    if (!(opts.tol > 0)) throw DomainError("quadrature tolerance must be positive");
    if (a == b) return {};
    if (b < a) {
        QuadratureResult r = integrate_adaptive(f, b, a, opts);
        r.value = -r.value;
        return r;
    }

    auto checked = [&](double t) {
        const double v = f(t);
        if (!std::isfinite(v))
            throw OverflowError("integrand is not finite at t = " + std::to_string(t), std::nullopt, t);
        return v;
    };
    auto rule = [&](double lo, double hi) { return Rule::integrate(checked, lo, hi); };

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double width = b - a;
    QuadratureResult out;
    bool converged = true;

    std::vector<Panel> stack{{a, b, rule(a, b), 0}};
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.lo + p.hi);
        const double left = rule(p.lo, mid);
        const double right = rule(mid, p.hi);
        const double refined = left + right;
        const double diff = std::abs(refined - p.whole);
        // share of the tolerance proportional to panel width, floored at rounding level
        const double local_tol =
            std::max(opts.tol * (p.hi - p.lo) / width, 64 * eps * std::abs(refined));
        if (diff <= local_tol || p.depth >= opts.max_depth || mid <= p.lo || mid >= p.hi) {
            if (diff > local_tol) converged = false;
            out.value += refined;
            out.est_error += diff;
            ++out.panels;
            continue;
        }
        stack.push_back({mid, p.hi, right, p.depth + 1});
        stack.push_back({p.lo, mid, left, p.depth + 1});
    }

    if (!converged)
        throw ConvergenceError("quadrature did not reach tolerance " + std::to_string(opts.tol) +
                                   " within depth " + std::to_string(opts.max_depth),
                               out.value, out.est_error);
    return out;
}

}  // namespace gendawson
