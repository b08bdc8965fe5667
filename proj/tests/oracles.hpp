#pragma once

// Test-only oracles. None of these go through the library's quadrature,
// recursion or elimination code paths.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "gendawson/bspec.hpp"
#include "gendawson/scalar.hpp"
#include "gendawson/triangular.hpp"

namespace oracle {

using gendawson::BigInt;
using gendawson::Rational;

/// Classical Dawson F(2, x), frozen from 40-digit mpmath evaluations of
/// sqrt(pi)/2 exp(-x^2) erfi(x).
inline constexpr double kDawson0_2 = 0.1947510333680280496545971;
inline constexpr double kDawson0_25 = 0.2398391635628982123649799;
inline constexpr double kDawson0_3 = 0.282631665021311928676509;
inline constexpr double kDawson0_5 = 0.4244363835020222959340424;
inline constexpr double kDawson0_7 = 0.5105040575592317787184591;
inline constexpr double kDawson1 = 0.5380795069127684191363874;
inline constexpr double kDawson1_2 = 0.5072734964077396141754749;
inline constexpr double kDawson6 = 0.08454268897454385223907093;
inline constexpr double kDawson26 = 0.01924502485184063408362868;
/// F(3, 1) and F(3, 0.5), mpmath quadrature.
inline constexpr double kF3_1 = 0.4936590473910227338104243;
inline constexpr double kF3_0_5 = 0.455544646157147274235739;
/// D_b(1) for b = 2x + x^3.
inline constexpr double kPoly2x_x3_at1 = 0.4513784103148036843859919;
/// F[(2,3),(-1,2); 0.8].
inline constexpr double kFamily2_3_m1_2_at0_8 = 0.236205707498671027333355;

/// Exact polynomial antiderivative of b, evaluated in long double.
inline long double big_b_ld(const gendawson::BSpec& b, long double x) {
    long double v = 0;
    const auto& c = b.coefficients();
    for (std::size_t j = c.size(); j-- > 0;) v = v * x + c[j].convert_to<long double>() / (j + 1);
    return v * x;
}

/// D_b(x) by double-exponential quadrature of the shifted integrand.
inline double dawson_tanh_sinh(const gendawson::BSpec& b, double x) {
    if (x == 0) return 0;
    const long double bx = big_b_ld(b, x);
    boost::math::quadrature::tanh_sinh<long double> integrator;
    auto f = [&](long double t) { return std::exp(big_b_ld(b, t) - bx); };
    const long double lo = std::min<long double>(0, x), hi = std::max<long double>(0, x);
    const long double v = integrator.integrate(f, lo, hi, 1e-15L);
    return static_cast<double>(x < 0 ? -v : v);
}

/// Naive exp(-B(x)) * integral exp(B(t)) dt, for inputs where it does not overflow.
inline double dawson_naive(const gendawson::BSpec& b, double x) {
    if (x == 0) return 0;
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto f = [&](double t) { return std::exp(b.big_b(t)); };
    const double lo = std::min(0.0, x), hi = std::max(0.0, x);
    const double v = integrator.integrate(f, lo, hi, 1e-14);
    return std::exp(-b.big_b(x)) * (x < 0 ? -v : v);
}

inline BigInt binomial(int n, int k) {
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

/// D_b^{(0..order)}(0) from the first-order relation D' = 1 - D b differentiated
/// m times with the general Leibniz rule:
///   D^{(m+1)}(0) = [m == 0] - sum_{j=0}^{m} C(m, j) D^{(j)}(0) b^{(m-j)}(0).
inline std::vector<Rational> leibniz_derivatives(const std::vector<Rational>& b, int order) {
    std::vector<Rational> d(order + 1, Rational(0));
    for (int m = 0; m + 1 <= order; ++m) {
        Rational v = m == 0 ? Rational(1) : Rational(0);
        for (int j = 0; j <= m; ++j) {
            const Rational bj = m - j < static_cast<int>(b.size()) ? b[m - j] : Rational(0);
            v -= Rational(binomial(m, j)) * d[j] * bj;
        }
        d[m + 1] = v;
    }
    return d;
}

/// Determinant by permutation expansion (Leibniz formula). Order <= 8.
inline Rational permutation_determinant(const gendawson::DenseMatrix<Rational>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = 1;
        for (int i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
        if (inversions % 2) total -= term;
        else total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Hand-rolled generators for property tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int num_range = 9, int den_max = 7) {
        return Rational(integer(-num_range, num_range), integer(1, den_max));
    }

    std::vector<Rational> rationals(int n) {
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) v.push_back(rational());
        return v;
    }

    gendawson::UniTriangular<Rational> integer_unitriangular(int order, int range = 5) {
        return gendawson::UniTriangular<Rational>(
            order, [&](int, int) -> Rational { return Rational(integer(-range, range)); });
    }

    gendawson::UniTriangular<Rational> rational_unitriangular(int order) {
        return gendawson::UniTriangular<Rational>(order, [&](int, int) -> Rational { return rational(); });
    }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937 rng_;
};

}  // namespace oracle
