#include "gendawson/bspec.hpp"

#include <cmath>
#include <utility>

#include "gendawson/errors.hpp"

namespace gendawson {

namespace {

void require_finite(double x, const char* where) {
    if (!std::isfinite(x)) throw DomainError(std::string(where) + ": x is not finite");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<Rational> parse_list(std::string_view body, std::string_view what) {
    if (body.empty()) throw ParseError(std::string(what) + ": empty value list");
    std::vector<Rational> values;
    for (auto item : split(body, ',')) values.push_back(parse_rational(item));
    return values;
}

std::string join(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_rational(values[i]);
    }
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

}  // namespace

BSpec::BSpec(Kind kind, std::vector<Rational> coeffs) : kind_(kind), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
    fcoeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        const double v = c.convert_to<double>();
        if (!std::isfinite(v)) throw DomainError("b coefficient is outside the floating range");
        fcoeffs_.push_back(v);
    }
}

BSpec BSpec::polynomial(std::vector<Rational> coeffs) {
    return BSpec(Kind::polynomial, std::move(coeffs));
}

BSpec BSpec::monomial(Rational lambda, int p) {
    if (lambda == 0) throw DomainError("monomial family requires lambda != 0");
    if (p < 1) throw DomainError("monomial family requires p >= 1");
    std::vector<Rational> coeffs(static_cast<std::size_t>(p), Rational(0));
    coeffs[p - 1] = lambda * p;
    BSpec spec(Kind::monomial_family, std::move(coeffs));
    spec.lambda_ = std::move(lambda);
    spec.power_ = p;
    return spec;
}

BSpec BSpec::truncated_series(const DerivativeSeq<Rational>& derivs, double radius_hint) {
    if (!(radius_hint > 0)) throw DomainError("radius hint must be positive");
    std::vector<Rational> coeffs;
    coeffs.reserve(derivs.size());
    for (std::size_t n = 0; n < derivs.size(); ++n)
        coeffs.push_back(derivs[n] / Rational(factorial(static_cast<int>(n))));
    BSpec spec(Kind::truncated_series, std::move(coeffs));
    spec.radius_hint_ = radius_hint;
    return spec;
}

BSpec BSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("b-spec '" + std::string(text) + "' lacks a kind prefix (poly:, mono:, series:)");
    const std::string_view kind = text.substr(0, colon);
    std::string_view body = text.substr(colon + 1);

    if (kind == "poly") return polynomial(parse_list(body, "poly"));

    if (kind == "mono") {
        const auto parts = split(body, ',');
        if (parts.size() != 2) throw ParseError("mono: expected LAMBDA,P");
        const Rational lambda = parse_rational(parts[0]);
        const Rational p = parse_rational(parts[1]);
        if (denominator(p) != 1 || p < 1 || p > 4096)
            throw ParseError("mono: P must be a positive integer");
        if (lambda == 0) throw ParseError("mono: LAMBDA must be nonzero");
        return monomial(lambda, numerator(p).convert_to<int>());
    }

    if (kind == "series") {
        double radius = std::numeric_limits<double>::infinity();
        if (const auto at = body.find('@'); at != std::string_view::npos) {
            const Rational r = parse_rational(body.substr(at + 1));
            if (r <= 0) throw ParseError("series: radius hint must be positive");
            radius = r.convert_to<double>();
            body = body.substr(0, at);
        }
        return truncated_series(DerivativeSeq<Rational>(parse_list(body, "series")), radius);
    }

    throw ParseError("unknown b-spec kind '" + std::string(kind) + "'");
}

std::string BSpec::text() const {
    switch (kind_) {
        case Kind::polynomial: return "poly:" + join(coeffs_);
        case Kind::monomial_family:
            return "mono:" + format_rational(lambda_) + "," + std::to_string(power_);
        case Kind::truncated_series: {
            const auto d = derivatives(static_cast<int>(coeffs_.size()));
            std::string out = "series:" + join({d.values().begin(), d.values().end()});
            if (std::isfinite(radius_hint_)) out += "@" + format_shortest(radius_hint_);
            return out;
        }
    }
    return {};
}

double BSpec::b(double x) const {
    require_finite(x, "b");
    double v = 0.0;
    for (auto it = fcoeffs_.rbegin(); it != fcoeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

double BSpec::b_prime(double x) const {
    require_finite(x, "b'");
    double v = 0.0;
    for (std::size_t j = fcoeffs_.size(); j-- > 1;) v = v * x + static_cast<double>(j) * fcoeffs_[j];
    return v;
}

double BSpec::big_b(double x) const {
    require_finite(x, "B");
    if (kind_ == Kind::monomial_family)
        return lambda_.convert_to<double>() * std::pow(x, power_);
    // sum c_j x^{j+1} / (j+1), Horner in x with a trailing factor x
    double v = 0.0;
    for (std::size_t j = fcoeffs_.size(); j-- > 0;) v = v * x + fcoeffs_[j] / static_cast<double>(j + 1);
    return v * x;
}

DerivativeSeq<Rational> BSpec::derivatives(int count) const {
    if (count < 1) throw DomainError("derivative count must be at least 1");
    std::vector<Rational> d(static_cast<std::size_t>(count), Rational(0));
    BigInt fact = 1;
    for (int n = 0; n < count && n < static_cast<int>(coeffs_.size()); ++n) {
        if (n > 1) fact *= n;
        d[n] = coeffs_[n] * Rational(fact);
    }
    return DerivativeSeq<Rational>(std::move(d));
}

DerivativeSeq<double> BSpec::derivatives_floating(int count) const {
    const auto exact = derivatives(count);
    std::vector<double> d;
    d.reserve(exact.size());
    for (std::size_t n = 0; n < exact.size(); ++n) {
        const double v = exact[n].convert_to<double>();
        if (!std::isfinite(v))
            throw OverflowError("b derivative of order " + std::to_string(n) + " overflows",
                                static_cast<int>(n));
        d.push_back(v);
    }
    return DerivativeSeq<double>(std::move(d));
}

bool BSpec::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

}  // namespace gendawson
