#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fuzzytop {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& base, std::uint64_t exp)
{
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1U) {
            result *= b;
        }
        exp >>= 1U;
        if (exp != 0) {
            b *= b;
        }
    }
    return result;
}

/// Exact C(n, k); zero when k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline std::string to_string(const BigInt& v)
{
    return v.str();
}

/// Value as uint64 if it fits.
inline std::optional<std::uint64_t> to_u64(const BigInt& v)
{
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
        return std::nullopt;
    }
    return v.convert_to<std::uint64_t>();
}

} // namespace fuzzytop
