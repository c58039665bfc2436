#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace talg {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Kept in lowest terms with positive denominator
/// by the backend; all arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den, normalizing the sign into the numerator.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// r^n for n >= 0.
inline Rational rational_pow(const Rational& r, std::uint64_t n) {
    if (n == 0) return Rational(1);
    Int num = boost::multiprecision::pow(numerator(r), static_cast<unsigned>(n));
    Int den = boost::multiprecision::pow(denominator(r), static_cast<unsigned>(n));
    return Rational(std::move(num), std::move(den));
}

/// "num/den" with "/den" omitted when the denominator is 1.
inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Accepts "int" or "int/positive-int".
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (den <= 0) throw std::invalid_argument("rational: denominator must be positive");
        return Rational(std::move(num), std::move(den));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational: malformed literal '" + std::string(text) + "'");
    }
}

}  // namespace talg
