#pragma once

// MacLaurin data of the generalized Dawson function D_b.
//
// Sequences hold raw derivative values at the origin (entry n is the n-th
// derivative), not Taylor coefficients; conversion is explicit. Everything is
// templated on the scalar type so the same recursion runs exactly over
// Rational and approximately over double.

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gendawson/errors.hpp"
#include "gendawson/report.hpp"
#include "gendawson/scalar.hpp"

namespace gendawson {

/// Derivatives at 0: entry n holds f^{(n)}(0). Never empty, every entry finite.
template <class T>
class DerivativeSeq {
public:
    explicit DerivativeSeq(std::vector<T> values) : values_(std::move(values)) {
        if (values_.empty()) throw DomainError("derivative sequence must not be empty");
        for (std::size_t n = 0; n < values_.size(); ++n) {
            if (!ScalarTraits<T>::is_finite(values_[n]))
                throw DomainError("derivative sequence entry " + std::to_string(n) +
                                  " is not finite");
        }
    }

    static constexpr ScalarKind scalar_kind = ScalarTraits<T>::kind;

    std::size_t size() const noexcept { return values_.size(); }
    /// Highest derivative order held.
    int order() const noexcept { return static_cast<int>(values_.size()) - 1; }
    const T& operator[](std::size_t n) const { return values_[n]; }
    std::span<const T> values() const noexcept { return values_; }

    friend bool operator==(const DerivativeSeq&, const DerivativeSeq&) = default;

private:
    std::vector<T> values_;
};

/// Truncated power series: coeffs[n] = derivative(n) / n!.
template <class T>
struct TaylorPoly {
    std::vector<T> coeffs;
    double radius_hint = std::numeric_limits<double>::infinity();
};

/// Highest order for which n! is representable as a double.
inline constexpr int kMaxFloatingFactorialOrder = 170;

/// Default truncation order of the series path.
inline constexpr int kDefaultSeriesOrder = 16;

/// Pascal triangle of exact binomials C(n, k) for 0 <= k <= n <= rows.
class BinomialTable {
public:
    explicit BinomialTable(int rows) : rows_(rows) {
        table_.reserve(static_cast<std::size_t>(rows + 1));
        for (int n = 0; n <= rows; ++n) {
            std::vector<BigInt> row(static_cast<std::size_t>(n + 1), BigInt(1));
            for (int k = 1; k < n; ++k)
                row[k] = table_[n - 1][k - 1] + table_[n - 1][k];
            table_.push_back(std::move(row));
        }
    }

    int rows() const noexcept { return rows_; }

    const BigInt& operator()(int n, int k) const {
        if (n < 0 || n > rows_ || k < 0 || k > n)
            throw DomainError("binomial index out of table range");
        return table_[n][k];
    }

    template <class T>
    T as(int n, int k) const { return ScalarTraits<T>::from_int((*this)(n, k)); }

private:
    int rows_;
    std::vector<std::vector<BigInt>> table_;
};

namespace detail {

template <class T>
void check_finite_at(const T& v, int order) {
    if (!ScalarTraits<T>::is_finite(v))
        throw OverflowError("derivative of order " + std::to_string(order) +
                                " overflowed the floating range",
                            order);
}

}  // namespace detail

/// D_b^{(0..order)}(0) from b^{(0..order-2)}(0) by the forward recursion
///   D^{(k+1)}(0) = -k b^{(k-1)}(0) - sum_{n=2}^{k} C(k,n) D^{(n)}(0) b^{(k-n)}(0),
/// seeded with D(0) = 0, D'(0) = 1. The sum is empty for k = 1.
template <class T>
DerivativeSeq<T> dawson_derivatives(const DerivativeSeq<T>& b_derivs, int order) {
    if (order < 1) throw DomainError("series order must be at least 1");
    if (static_cast<int>(b_derivs.size()) < order - 1)
        throw InputLengthError("order " + std::to_string(order) + " needs " +
                               std::to_string(order - 1) + " derivatives of b, got " +
                               std::to_string(b_derivs.size()));

    const BinomialTable binom(order);
    std::vector<T> d(static_cast<std::size_t>(order + 1), T(0));
    d[1] = T(1);
    for (int k = 1; k + 1 <= order; ++k) {
        T next = -T(k) * b_derivs[k - 1];
        for (int n = 2; n <= k; ++n) {
            if (ScalarTraits<T>::is_zero(d[n]) || ScalarTraits<T>::is_zero(b_derivs[k - n]))
                continue;
            next -= binom.as<T>(k, n) * d[n] * b_derivs[k - n];
        }
        detail::check_finite_at(next, k + 1);
        d[k + 1] = std::move(next);
    }
    return DerivativeSeq<T>(std::move(d));
}

namespace detail {

template <class T>
T factorial_as(int n) {
    if constexpr (ScalarTraits<T>::kind == ScalarKind::floating) {
        if (n > kMaxFloatingFactorialOrder)
            throw OverflowError("factorial of order " + std::to_string(n) +
                                    " overflows the floating range",
                                n);
    }
    BigInt f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return ScalarTraits<T>::from_int(f);
}

}  // namespace detail

template <class T>
TaylorPoly<T> derivs_to_taylor(const DerivativeSeq<T>& d,
                               double radius_hint = std::numeric_limits<double>::infinity()) {
    TaylorPoly<T> t;
    t.radius_hint = radius_hint;
    t.coeffs.reserve(d.size());
    for (std::size_t n = 0; n < d.size(); ++n)
        t.coeffs.push_back(d[n] / detail::factorial_as<T>(static_cast<int>(n)));
    return t;
}

template <class T>
DerivativeSeq<T> taylor_to_derivs(const TaylorPoly<T>& t) {
    std::vector<T> d;
    d.reserve(t.coeffs.size());
    for (std::size_t n = 0; n < t.coeffs.size(); ++n) {
        T v = t.coeffs[n] * detail::factorial_as<T>(static_cast<int>(n));
        detail::check_finite_at(v, static_cast<int>(n));
        d.push_back(std::move(v));
    }
    return DerivativeSeq<T>(std::move(d));
}

/// Horner evaluation of the truncated MacLaurin polynomial.
///
/// The error estimate is the larger magnitude of the last two retained terms.
/// A single trailing term reads zero whenever the series has a parity gap at
/// the truncation order (odd D_b for odd b), so one term alone is not usable.
template <class T>
EvalReport series_eval(const DerivativeSeq<T>& d, double x) {
    if (!std::isfinite(x)) throw DomainError("series_eval: x is not finite");
    const TaylorPoly<T> t = derivs_to_taylor(d);
    std::vector<double> c;
    c.reserve(t.coeffs.size());
    for (const T& v : t.coeffs) c.push_back(ScalarTraits<T>::to_double(v));

    double value = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * x + *it;

    const std::size_t n = c.size() - 1;
    double est = std::abs(c[n] * std::pow(x, static_cast<double>(n)));
    if (n >= 1) est = std::max(est, std::abs(c[n - 1] * std::pow(x, static_cast<double>(n - 1))));
    // sparse sequences (b = x^m) leave periodic zero gaps: fall back to the last nonzero term,
    // unless the zero run is long enough to look like an exact termination
    std::size_t last = n;
    while (last > 0 && c[last] == 0.0) --last;
    if (2 * (n - last) <= n) est = std::max(est, std::abs(c[last] * std::pow(x, static_cast<double>(last))));
    if (!std::isfinite(value)) throw OverflowError("series value overflowed", std::nullopt, x);

    EvalReport r;
    r.value = value;
    r.method = Method::series;
    r.est_error = est;
    r.detail = static_cast<long>(n);
    return r;
}

}  // namespace gendawson
