#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subdiff/common.hpp"

namespace subdiff {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RatVec = std::vector<Rat>;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Every finite double is a dyadic rational; this conversion is exact.
inline Rat rat_from_double(double x) {
    require(std::isfinite(x), errc::invalid_argument, "rat_from_double: non-finite input");
    if (x == 0.0) return Rat(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rat r(mant);
    if (exp >= 0) {
        r *= Rat(BigInt(1) << exp);
    } else {
        r /= Rat(BigInt(1) << (-exp));
    }
    return r;
}

// Dyadic level of r in (0,1): the smallest L with r = k / 2^L, or nullopt if
// none exists below `max_level`. Level 0 means an integer.
inline std::optional<int> dyadic_level(const Rat& r, int max_level) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    int level = 0;
    while (den > 1) {
        if (den % 2 != 0) return std::nullopt;
        den >>= 1;
        ++level;
        if (level > max_level) return std::nullopt;
    }
    (void)num;
    return level;
}

inline Rat rat_pow2(int e) {
    return e >= 0 ? Rat(BigInt(1) << e) : Rat(1) / Rat(BigInt(1) << (-e));
}

// Decimal string when the denominator is of the form 2^a 5^b (exact), else "p/q".
inline std::string rat_to_string(const Rat& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) {
        return (neg ? "-" : "") + num.str() + "/" + den.str();
    }
    int digits = std::max(twos, fives);
    // Scale numerator so denominator becomes 10^digits.
    for (int i = twos; i < digits; ++i) num *= 2;
    for (int i = fives; i < digits; ++i) num *= 5;
    std::string s = num.str();
    if (digits == 0) return (neg ? "-" : "") + s;
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return (neg ? "-" : "") + s;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }
    auto point = s.find('.');
    if (point == std::string::npos) return Rat(BigInt(s));
    std::string digits = s.substr(0, point) + s.substr(point + 1);
    int frac = static_cast<int>(s.size() - point - 1);
    Rat num(BigInt(digits));
    BigInt den = 1;
    for (int i = 0; i < frac; ++i) den *= 10;
    return num / Rat(den);
}

}  // namespace subdiff
