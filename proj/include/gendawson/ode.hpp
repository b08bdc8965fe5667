#pragma once

// Cross-verification layer: second-order linear equations
//   y'' + b1(x) y' + b2(x) y = 0
// integrated with classical fixed-step RK4, and the Riccati-based general
// solution built from a particular solution zbar of
//   z' + z^2 + b1 z + b2 = 0.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gendawson/bspec.hpp"
#include "gendawson/eval.hpp"

namespace gendawson {

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultOdeStep = 1e-3;

struct HLIIODECoeffs {
    RealFunction b1;
    RealFunction b2;
    std::string description;
};

/// A particular Riccati solution together with the equation it belongs to.
/// zbar_prime is optional; without it the residual uses a central difference.
struct RiccatiWitness {
    RealFunction zbar;
    RealFunction zbar_prime;
    HLIIODECoeffs coeffs;
};

struct TrajectoryPoint {
    double x;
    double y;
    double dy;
};

using Trajectory = std::vector<TrajectoryPoint>;

/// b1 = b, b2 = b', the equation y'' + (b y)' = 0 solved by D_b.
HLIIODECoeffs dawson_coeffs(const BSpec& b);

/// b1 = 2 lambda p x^{p-1} - mu s x^{s-1},
/// b2 = lambda^2 p^2 x^{2p-2} - lambda mu p s x^{p+s-2} + lambda p (p-1) x^{p-2}.
/// The x^{p-2} term is dropped when p = 1, where its prefactor vanishes.
HLIIODECoeffs family_coeffs(const FamilyParams& fp);

/// zbar = -b for the equation of dawson_coeffs.
RiccatiWitness dawson_witness(const BSpec& b);

/// zbar = -lambda p x^{p-1} for the equation of family_coeffs.
RiccatiWitness family_witness(const FamilyParams& fp);

/// RK4 on (y, y')' = (y', -b1 y' - b2 y) from x = 0 to x_end (either sign).
/// The step count is ceil(|x_end| / h) with the step shrunk uniformly so the
/// last sample lands exactly on x_end. Both endpoints are included.
Trajectory integrate_cauchy(const HLIIODECoeffs& c, double x_end, double h = kDefaultOdeStep,
                            double y0 = 0.0, double dy0 = 1.0);

/// zbar' + zbar^2 + b1 zbar + b2 at x.
double riccati_residual(const RiccatiWitness& w, double x);

inline constexpr double kWitnessTolerance = 1e-8;
inline constexpr int kWitnessSamples = 33;

/// Checks the Riccati residual at 33 equally spaced points of [0, x]
/// (or [x, 0]); throws WitnessError when any exceeds 1e-8.
void validate_witness(const RiccatiWitness& w, double x);

/// y(x) = exp(Z(x)) * (C1 + C2 * integral_0^x exp(-A(t)) dt), where
/// Z = integral of zbar and A = integral of (2 zbar + b1). Computed as
/// C1 exp(Z(x)) + C2 integral_0^x exp(Z(x) - A(t)) dt with nested quadrature.
double general_solution(const RiccatiWitness& w, double c1, double c2, double x,
                        double tol = kDefaultTol);

using Table2x2 = std::array<std::array<double, 2>, 2>;

/// ((y1(0), y2(0)), (y1'(0), y2'(0))) = ((1, 0), (zbar(0), 1)).
Table2x2 wronskian_at_zero(const RiccatiWitness& w);

}  // namespace gendawson
