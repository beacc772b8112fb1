#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "cutkit/errors.hpp"

namespace cutkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw SchemaError("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw SchemaError("bad rational '" + text + "'");
    }
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw DomainError("0 to a negative power");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat acc(1), b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

// n = a^2 * b with b squarefree, n > 0.  Trial division; fine at desk scale.
inline std::pair<Int, Int> square_part(Int n) {
    if (n <= 0) throw DomainError("square_part of nonpositive integer");
    Int a = 1, b = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int mult = 0;
        while (n % p == 0) {
            n /= p;
            ++mult;
        }
        for (int i = 0; i + 1 < mult; i += 2) a *= p;
        if (mult % 2 == 1) b *= p;
    }
    b *= n;  // residual prime
    return {a, b};
}

}  // namespace cutkit
