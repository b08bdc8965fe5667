#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gendawson/scalar.hpp"
#include "gendawson/series.hpp"

namespace gendawson {

/// The coefficient function b(x) of D_b.
///
/// Three sources are supported, all of which reduce to a polynomial held with
/// exact rational coefficients:
///   poly:c0,c1,...     b(x) = sum c_j x^j
///   mono:LAMBDA,P      b(x) = LAMBDA * P * x^(P-1), so B(x) = LAMBDA * x^P
///   series:d0,d1,...   b^{(n)}(0) = d_n, truncated; optional "@R" radius hint
/// Scalars are decimals or fractions "p/q".
class BSpec {
public:
    enum class Kind { polynomial, monomial_family, truncated_series };

    static BSpec polynomial(std::vector<Rational> coeffs);
    static BSpec monomial(Rational lambda, int p);
    static BSpec truncated_series(const DerivativeSeq<Rational>& derivs,
                                  double radius_hint = std::numeric_limits<double>::infinity());
    static BSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    /// Canonical text form, accepted by parse().
    std::string text() const;
    double radius_hint() const noexcept { return radius_hint_; }

    double b(double x) const;
    double b_prime(double x) const;
    /// B(x) = integral of b from 0 to x.
    double big_b(double x) const;

    /// b^{(0..count-1)}(0), exact. Entries past the polynomial degree are 0.
    DerivativeSeq<Rational> derivatives(int count) const;
    DerivativeSeq<double> derivatives_floating(int count) const;

    /// True when every coefficient vanishes.
    bool is_zero() const;

    /// Exact Taylor coefficients of b.
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

private:
    BSpec(Kind kind, std::vector<Rational> coeffs);

    Kind kind_;
    std::vector<Rational> coeffs_;
    std::vector<double> fcoeffs_;
    // monomial-family payload, kept for B(x) = lambda x^p and text()
    Rational lambda_{0};
    int power_ = 0;
    double radius_hint_ = std::numeric_limits<double>::infinity();
};

}  // namespace gendawson
