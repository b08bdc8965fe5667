#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "gendawson/errors.hpp"
#include "gendawson/grid.hpp"
#include "gendawson/scalar.hpp"
#include "gendawson/triangular.hpp"

namespace gendawson {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// cpp_int reads a leading 0 as an octal prefix
BigInt decimal(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return BigInt{std::string(digits.substr(first))};
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(whole) + "'");
    const BigInt v = decimal(s);
    return neg ? BigInt(-v) : v;
}

BigInt pow10(long n) {
    BigInt r = 1;
    for (long i = 0; i < n; ++i) r *= 10;
    return r;
}

double parse_double(std::string_view s) {
    s = trim(s);
    const std::string str(s);
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(str, &used);
    } catch (const std::exception&) {
        throw ParseError("malformed number '" + str + "'");
    }
    if (used != str.size() || !std::isfinite(v)) throw ParseError("malformed number '" + str + "'");
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty number");

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt p = parse_integer(trim(s.substr(0, slash)), s);
        const BigInt q = parse_integer(trim(s.substr(slash + 1)), s);
        if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        return q < 0 ? Rational(BigInt(-p), BigInt(-q)) : Rational(p, q);
    }

    // [sign] digits [. digits] [(e|E) [sign] digits]
    std::string_view mant = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        const BigInt ev = parse_integer(s.substr(e + 1), s);
        if (ev > 4000 || ev < -4000) throw ParseError("exponent out of range in '" + std::string(s) + "'");
        exponent = ev.convert_to<long>();
    }
    bool neg = false;
    if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
        neg = mant.front() == '-';
        mant.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (const auto dot = mant.find('.'); dot != std::string_view::npos) {
        const auto ip = mant.substr(0, dot);
        const auto fp = mant.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw ParseError("malformed number '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mant)) throw ParseError("malformed number '" + std::string(s) + "'");
        digits = std::string(mant);
    }
    BigInt num = decimal(digits);
    if (neg) num = -num;
    const long shift = exponent - frac_len;
    if (shift >= 0) return Rational(num * pow10(shift));
    return Rational(num, pow10(-shift));
}

std::string format_rational(const Rational& v) {
    const BigInt p = numerator(v);
    const BigInt q = denominator(v);
    if (q == 1) return p.str();
    return p.str() + "/" + q.str();
}

std::string to_text(const UniTriangular<Rational>& m) {
    std::ostringstream out;
    out << m.order() << '\n';
    for (int r = 1; r <= m.order(); ++r) {
        for (int s = 1; s <= m.order(); ++s) {
            if (s > 1) out << ' ';
            out << format_rational(m.at(r, s));
        }
        out << '\n';
    }
    return out.str();
}

UniTriangular<Rational> unitriangular_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string token;
    if (!(in >> token)) throw ParseError("matrix text: missing order line");
    const Rational order_r = parse_rational(token);
    if (denominator(order_r) != 1 || order_r < 1 || order_r > 64)
        throw ParseError("matrix text: order must be an integer in [1, 64]");
    const int k = numerator(order_r).convert_to<int>();
    DenseMatrix<Rational> m(k, std::vector<Rational>(k));
    for (int r = 0; r < k; ++r) {
        for (int s = 0; s < k; ++s) {
            if (!(in >> token))
                throw ParseError("matrix text: expected " + std::to_string(k * k) + " entries");
            m[r][s] = parse_rational(token);
        }
    }
    if (in >> token) throw ParseError("matrix text: trailing content '" + token + "'");
    try {
        return UniTriangular<Rational>::from_dense(m);
    } catch (const DomainError& e) {
        throw ParseError(std::string("matrix text: ") + e.what());
    }
}

std::vector<double> make_grid(double a, double b, double h) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(h))
        throw DomainError("grid bounds and step must be finite");
    if (!(h > 0)) throw DomainError("grid step must be positive");
    if (b < a) throw DomainError("grid end lies before its start");
    const double count = (b - a) / h;
    if (count > 1e7) throw DomainError("grid has too many points");
    const double nearest = std::round(count);
    const bool inclusive = std::abs(count - nearest) <= 1e-12 * std::max(1.0, std::abs(count));
    const long n = inclusive ? static_cast<long>(nearest) : static_cast<long>(std::floor(count));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) grid.push_back(a + static_cast<double>(i) * h);
    if (inclusive) grid.back() = b;
    return grid;
}

std::vector<double> parse_grid(std::string_view spec) {
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
        throw ParseError("grid '" + std::string(spec) + "' is not of the form A:B:H");
    return make_grid(parse_double(spec.substr(0, c1)), parse_double(spec.substr(c1 + 1, c2 - c1 - 1)),
                     parse_double(spec.substr(c2 + 1)));
}

}  // namespace gendawson
