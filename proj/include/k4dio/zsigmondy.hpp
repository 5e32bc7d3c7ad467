#pragma once

#include "k4dio/arith.hpp"
#include "k4dio/bigint.hpp"
#include "k4dio/bounds.hpp"

#include <cstdint>
#include <optional>

namespace k4dio::zsig {

enum class Sign { plus, minus };

// The three families of a^n +- b^n that lack a primitive prime divisor.
enum class ExceptionTag { cube_plus, mersenne_six, power_of_two_square };

const char* exception_name(ExceptionTag t);

struct Query {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint32_t n = 0;
    Sign sign = Sign::minus;

    void validate() const;  // a > b > 0, gcd(a,b) = 1, n >= 2
    BigInt term(std::uint32_t k) const;  // a^k +- b^k
};

struct Result {
    std::optional<BigInt> primitive_divisor;   // smallest, when several exist
    std::optional<ExceptionTag> exception;
};

// Pattern-matches the query against the exception list without computing
// a^n +- b^n.
std::optional<ExceptionTag> classify_exception(const Query& q);

// Computes N = a^n +- b^n, factorizes it, and certifies the smallest prime
// factor dividing no earlier term. Throws UncertainFactorization when the
// factor budget leaves a cofactor that could hide the divisor.
Result primitive_prime_divisor(const Query& q, const SearchBounds& bounds = {});

}  // namespace k4dio::zsig
