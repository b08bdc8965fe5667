#include "gendawson/ode.hpp"

#include <cmath>
#include <limits>

#include "gendawson/errors.hpp"
#include "gendawson/quadrature.hpp"

namespace gendawson {

namespace {

// x^n for n >= 0 with 0^0 = 1.
double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

HLIIODECoeffs dawson_coeffs(const BSpec& b) {
    return {[b](double x) { return b.b(x); }, [b](double x) { return b.b_prime(x); },
            "y'' + (b y)' = 0, b = " + b.text()};
}

HLIIODECoeffs family_coeffs(const FamilyParams& fp) {
    fp.validate();
    const double l = fp.lambda, m = fp.mu;
    const int p = fp.p, s = fp.s;
    auto b1 = [=](double x) { return 2 * l * p * ipow(x, p - 1) - m * s * ipow(x, s - 1); };
    auto b2 = [=](double x) {
        double v = l * l * p * p * ipow(x, 2 * p - 2) - l * m * p * s * ipow(x, p + s - 2);
        if (p >= 2) v += l * p * (p - 1) * ipow(x, p - 2);
        return v;
    };
    return {b1, b2,
            "family (" + format_shortest(l) + "," + std::to_string(p) + "),(" + format_shortest(m) + "," +
                std::to_string(s) + ")"};
}

RiccatiWitness dawson_witness(const BSpec& b) {
    return {[b](double x) { return -b.b(x); }, [b](double x) { return -b.b_prime(x); }, dawson_coeffs(b)};
}

RiccatiWitness family_witness(const FamilyParams& fp) {
    fp.validate();
    const double l = fp.lambda;
    const int p = fp.p;
    auto z = [=](double x) { return -l * p * ipow(x, p - 1); };
    auto dz = [=](double x) { return p >= 2 ? -l * p * (p - 1) * ipow(x, p - 2) : 0.0; };
    return {z, dz, family_coeffs(fp)};
}

Trajectory integrate_cauchy(const HLIIODECoeffs& c, double x_end, double h, double y0, double dy0) {
    if (!(h > 0) || !std::isfinite(h)) throw DomainError("step size must be positive");
    if (!std::isfinite(x_end)) throw DomainError("x_end is not finite");

    const long steps = static_cast<long>(std::ceil(std::abs(x_end) / h - 1e-9));
    Trajectory out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.push_back({0.0, y0, dy0});
    if (steps == 0) return out;

    const double step = x_end / static_cast<double>(steps);
    auto rhs = [&](double x, double y, double dy, double& fy, double& fdy) {
        fy = dy;
        fdy = -c.b1(x) * dy - c.b2(x) * y;
    };

    double y = y0, dy = dy0;
    for (long n = 0; n < steps; ++n) {
        const double x = step * static_cast<double>(n);
        double k1y, k1d, k2y, k2d, k3y, k3d, k4y, k4d;
        rhs(x, y, dy, k1y, k1d);
        rhs(x + step / 2, y + step / 2 * k1y, dy + step / 2 * k1d, k2y, k2d);
        rhs(x + step / 2, y + step / 2 * k2y, dy + step / 2 * k2d, k3y, k3d);
        rhs(x + step, y + step * k3y, dy + step * k3d, k4y, k4d);
        y += step / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
        dy += step / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
        if (!std::isfinite(y) || !std::isfinite(dy))
            throw DivergenceError("ODE state diverged after x = " + format_shortest(x), x);
        const double xn = n + 1 == steps ? x_end : step * static_cast<double>(n + 1);
        out.push_back({xn, y, dy});
    }
    return out;
}

double riccati_residual(const RiccatiWitness& w, double x) {
    double dz;
    if (w.zbar_prime) {
        dz = w.zbar_prime(x);
    } else {
        const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(x));
        dz = (w.zbar(x + h) - w.zbar(x - h)) / (2 * h);
    }
    const double z = w.zbar(x);
    return dz + z * z + w.coeffs.b1(x) * z + w.coeffs.b2(x);
}

void validate_witness(const RiccatiWitness& w, double x) {
    for (int i = 0; i < kWitnessSamples; ++i) {
        const double t = x * i / (kWitnessSamples - 1);
        const double r = riccati_residual(w, t);
        if (!(std::abs(r) <= kWitnessTolerance))
            throw WitnessError("Riccati residual " + format_shortest(r) + " at x = " + format_shortest(t) +
                               " exceeds " + format_shortest(kWitnessTolerance));
    }
}

double general_solution(const RiccatiWitness& w, double c1, double c2, double x, double tol) {
    if (!std::isfinite(x)) throw DomainError("x is not finite");
    if (!(tol > 0 && tol < 1)) throw DomainError("tolerance must lie in (0, 1)");
    if (x == 0.0) return c1;
    validate_witness(w, x);

    const QuadratureOptions inner{.tol = tol * 1e-2};
    const double zx = integrate_adaptive(w.zbar, 0.0, x, inner).value;
    auto a = [&](double t) {
        return integrate_adaptive([&](double u) { return 2 * w.zbar(u) + w.coeffs.b1(u); }, 0.0, t, inner).value;
    };

    double y = 0.0;
    if (c1 != 0.0) {
        if (zx > 709.0) throw OverflowError("exp(Z(x)) overflows", std::nullopt, x);
        y += c1 * std::exp(zx);
    }
    if (c2 != 0.0) {
        const double integral =
            integrate_adaptive([&](double t) { return std::exp(zx - a(t)); }, 0.0, x, {.tol = tol}).value;
        y += c2 * integral;
    }
    if (!std::isfinite(y)) throw OverflowError("general solution overflows", std::nullopt, x);
    return y;
}

Table2x2 wronskian_at_zero(const RiccatiWitness& w) {
    return {{{1.0, 0.0}, {w.zbar(0.0), 1.0}}};
}

}  // namespace gendawson
