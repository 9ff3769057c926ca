#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>

#include "errors.hpp"

namespace dpg {

// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

template <class S>
inline constexpr bool is_exact_scalar_v = false;
template <>
inline constexpr bool is_exact_scalar_v<Rational> = true;

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; } // backend requires positive denominator
    return Rational(num, den);
}

// Accepts "p" or "p/q" with optional sign on either integer.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&](const char* why) -> void {
        throw ParseError("bad rational '" + text + "': " + why);
    };
    auto check_int = [&](const std::string& s) {
        if (s.empty()) fail("missing integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) fail("sign without digits");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail("non-digit character");
    };
    // BigInt's own parser rejects an explicit '+', so strip it after validation.
    auto strip_plus = [](const std::string& s) {
        return s[0] == '+' ? s.substr(1) : s;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(BigInt(strip_plus(text)));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (den.find('/') != std::string::npos) fail("more than one '/'");
    check_int(num);
    check_int(den);
    BigInt d(strip_plus(den));
    if (d == 0) fail("zero denominator");
    return make_rational(BigInt(strip_plus(num)), std::move(d));
}

// "p" when the value is integral, else "p/q".
inline std::string rational_to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline BigInt pow_int(BigInt base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

template <class S>
inline int sgn(const S& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

} // namespace dpg
