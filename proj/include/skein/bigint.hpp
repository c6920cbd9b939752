#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace skein {

using Int = boost::multiprecision::cpp_int;

inline Int pow_int(Int base, std::uint64_t exponent) {
    Int result = 1;
    while (exponent != 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline std::string to_decimal(const Int& v) { return v.str(); }

} // namespace skein
