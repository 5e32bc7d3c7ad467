#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace k4dio {

// Arbitrary-precision integer used everywhere values can exceed 64 bits
// (3^m and 2^m blow past machine width well inside the default bounds).
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline unsigned bit_length(const BigInt& v) {
    if (v <= 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
}

inline bool fits_u64(const BigInt& v) {
    return v >= 0 && v <= BigInt(UINT64_MAX);
}

inline std::uint64_t to_u64(const BigInt& v) {
    return v.convert_to<std::uint64_t>();
}

// Strict decimal parse: optional leading '-', digits only. Empty on garbage.
inline std::optional<BigInt> parse_bigint(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return std::nullopt;
    return BigInt(std::string(s));
}

inline BigInt pow_big(const BigInt& base, std::uint32_t exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace k4dio
