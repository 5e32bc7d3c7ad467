#pragma once

#include <cstdint>
#include <stdexcept>

namespace k4dio {

// Explicit caps on every searched variable. Echoed into all outputs so a
// result set is reproducible from its report alone. Which caps apply to
// which search is documented per operation; unused caps are ignored, never
// silently applied.
struct SearchBounds {
    std::uint64_t max_p = 1'000'000;              // prime unknowns searched directly (p in p^2-1 families)
    std::uint64_t max_q = 1'000'000;              // prime-power enumeration cap (K4 candidate scan)
    std::uint32_t max_m = 64;                     // exponents of 2^m / 3^m families
    std::uint32_t max_exp = 40;                   // other exponents (b, c, n, q-as-exponent)
    std::uint64_t max_base = 1'000'000;           // base unknowns of the lemma equations (x, y)
    std::uint64_t trial_division_bound = 1'000'000;
    std::uint32_t mr_rounds = 64;                 // Miller-Rabin rounds above the deterministic 64-bit range

    void validate() const {
        if (max_p < 1 || max_q < 1 || max_m < 1 || max_exp < 1 || max_base < 1 ||
            trial_division_bound < 1 || mr_rounds < 1)
            throw std::invalid_argument("SearchBounds: all fields must be >= 1");
    }
};

}  // namespace k4dio
