#pragma once

#include "gendawson/bspec.hpp"
#include "gendawson/report.hpp"

namespace gendawson {

inline constexpr double kDefaultTol = 1e-10;

/// Parameters of F[(lambda,p),(mu,s);x] = exp(-lambda x^p) * integral_0^x exp(mu t^s) dt.
struct FamilyParams {
    double lambda = 1.0;
    int p = 2;
    double mu = 1.0;
    int s = 2;

    /// Throws DomainError unless lambda, mu are nonzero and finite and p, s >= 1.
    void validate() const;
    bool diagonal() const noexcept { return lambda == mu && p == s; }
};

/// B(x) for the given spec.
double big_B(const BSpec& b, double x);

/// D_b(x) = exp(-B(x)) * integral_0^x exp(B(t)) dt, evaluated as the single
/// integral of exp(B(t) - B(x)) so that exp(B) is never formed on its own.
/// The integral is oriented: negative x integrates from 0 down to x.
EvalReport eval_Db(const BSpec& b, double x, double tol = kDefaultTol);

/// F(p, x) = exp(-x^p) * integral_0^x exp(t^p) dt.
EvalReport eval_F_classical(int p, double x, double tol = kDefaultTol);

/// Two-parameter family. The diagonal case (lambda = mu, p = s) uses the
/// shifted integrand; otherwise the integrand is scaled by its maximum on the
/// interval and the prefactor is applied afterwards with an overflow check.
EvalReport eval_F_family(const FamilyParams& fp, double x, double tol = kDefaultTol);

/// Truncated MacLaurin series of D_b of the given order at x, from exact
/// recursion data. Flags beyond_radius when |x| >= the spec's radius hint.
EvalReport eval_Db_series(const BSpec& b, double x, int order = kDefaultSeriesOrder);

}  // namespace gendawson
