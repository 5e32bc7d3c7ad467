#pragma once

#include "k4dio/bigint.hpp"
#include "k4dio/bounds.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace k4dio {

// Thrown when a computation would need a factorization the budget could not
// certify. Callers surface it as a warning, never as a silent pass.
struct UncertainFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace arith {

// Deterministic for all 64-bit inputs (fixed witness set).
bool is_prime_u64(std::uint64_t n);

// Deterministic below 2^64, Miller-Rabin with `mr_rounds` prime bases above.
bool is_prime(const BigInt& n, std::uint32_t mr_rounds = 64);

// n = 2^two_exp * 3^three_exp * rest with gcd(rest, 6) = 1.
struct TwoThreeSplit {
    std::uint32_t two_exp = 0;
    std::uint32_t three_exp = 0;
    BigInt rest = 1;
};
TwoThreeSplit factor_out_2_3(const BigInt& n);

// Maximal-exponent representation: base is never itself a perfect power.
struct PowerRep {
    BigInt base;
    std::uint32_t exp = 0;
};
std::optional<PowerRep> perfect_power(const BigInt& n);

// n = p^k with p prime (k = 1 allowed). Uniqueness comes from unique
// factorization, so the representation is canonical.
std::optional<PowerRep> prime_power(const BigInt& n, std::uint32_t mr_rounds = 64);

struct RootResult {
    BigInt root;
    bool exact = false;
};
// floor(n^(1/k)); exact iff root^k == n. Requires k >= 1.
RootResult integer_nth_root(const BigInt& n, std::uint32_t k);

struct Factorization {
    BigInt value = 1;
    std::vector<std::pair<BigInt, std::uint32_t>> factors;  // ascending primes
    BigInt cofactor = 1;                                    // 1 when fully factored
    std::uint64_t trial_bound_used = 0;

    bool complete() const { return cofactor == 1; }
    std::size_t distinct_primes() const { return factors.size(); }
    BigInt recompose() const;
    bool divides(const BigInt& prime) const;  // listed-prime membership
    std::string str() const;                  // "2^2 * 3 * 5 * 11 [* C]"
};

// Trial division up to bounds.trial_division_bound, then Brent's rho.
// Anything the rho budget cannot split stays in `cofactor` (never asserted
// prime). `rho_retry_budget` exists so tests can exercise that path.
Factorization factorize(const BigInt& n, const SearchBounds& bounds = {});
Factorization factorize_budgeted(const BigInt& n, const SearchBounds& bounds,
                                 std::uint32_t rho_retry_budget);

// The four square roots of 1 mod 2^a for a >= 3, ascending. Rejects a < 3,
// where the root count is not four.
std::vector<BigInt> sqrt_one_residues_mod_pow2(std::uint32_t a);

// Segmented odd-only sieve; visits primes in [lo, hi] ascending.
void for_primes(std::uint64_t lo, std::uint64_t hi,
                const std::function<void(std::uint64_t)>& fn);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace arith
}  // namespace k4dio
