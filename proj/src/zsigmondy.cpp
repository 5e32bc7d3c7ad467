#include "k4dio/zsigmondy.hpp"

#include <numeric>
#include <stdexcept>

namespace k4dio::zsig {

const char* exception_name(ExceptionTag t) {
    switch (t) {
        case ExceptionTag::cube_plus: return "cube_plus";
        case ExceptionTag::mersenne_six: return "mersenne_six";
        case ExceptionTag::power_of_two_square: return "power_of_two_square";
    }
    return "?";
}

void Query::validate() const {
    if (!(a > b && b > 0)) throw std::invalid_argument("zsigmondy: requires a > b > 0");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("zsigmondy: requires gcd(a, b) = 1");
    if (n < 2) throw std::invalid_argument("zsigmondy: requires n > 1");
}

BigInt Query::term(std::uint32_t k) const {
    BigInt ak = pow_big(BigInt(a), k);
    BigInt bk = pow_big(BigInt(b), k);
    return sign == Sign::plus ? ak + bk : ak - bk;
}

std::optional<ExceptionTag> classify_exception(const Query& q) {
    q.validate();
    if (q.sign == Sign::plus) {
        if (q.a == 2 && q.b == 1 && q.n == 3) return ExceptionTag::cube_plus;
        return std::nullopt;
    }
    if (q.a == 2 && q.b == 1 && q.n == 6) return ExceptionTag::mersenne_six;
    if (q.n == 2) {
        std::uint64_t s = q.a + q.b;
        if ((s & (s - 1)) == 0) return ExceptionTag::power_of_two_square;
    }
    return std::nullopt;
}

namespace {

bool divides_term(const BigInt& p, const Query& q, std::uint32_t k) {
    using boost::multiprecision::powm;
    BigInt ak = powm(BigInt(q.a), BigInt(k), p);
    BigInt bk = powm(BigInt(q.b), BigInt(k), p);
    BigInt v = q.sign == Sign::plus ? ak + bk : ak - bk;
    return v % p == 0;
}

}  // namespace

Result primitive_prime_divisor(const Query& q, const SearchBounds& bounds) {
    if (auto tag = classify_exception(q)) return {std::nullopt, tag};

    BigInt value = q.term(q.n);
    arith::Factorization fz = arith::factorize(value, bounds);
    for (const auto& [p, e] : fz.factors) {
        bool primitive = true;
        for (std::uint32_t k = 1; k < q.n; ++k) {
            if (divides_term(p, q, k)) { primitive = false; break; }
        }
        if (primitive) return {p, std::nullopt};
    }
    if (!fz.complete())
        throw UncertainFactorization(
            "primitive divisor of " + to_string(value) +
            " may hide in unfactored cofactor " + to_string(fz.cofactor));
    // Non-exception queries always carry one; reaching here means the
    // exception classifier and the search disagree.
    throw std::logic_error("no primitive divisor found for a fully factored non-exception query");
}

}  // namespace k4dio::zsig
