#pragma once

#include "k4dio/bounds.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k4dio::dickson {

// Desk-scale guard: requests outside the supported box sizes are refused
// outright rather than silently truncated.
struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LinearForm {
    std::vector<long long> coeffs;  // never all zero
    long long constant = 0;

    long long eval(const std::vector<long long>& point) const;
    std::string str() const;  // "3x-2", "x1+2x2-1"
};

struct LinearSystem {
    std::string name;  // "(26)", "twin", or the canonical spec when unnamed
    std::vector<LinearForm> forms;

    std::size_t arity() const { return forms.empty() ? 0 : forms.front().coeffs.size(); }
    std::string spec() const;  // canonical "a1,...,an,b;..." round-trip form
    std::string str() const;   // "{x, 3x-2}"
    void validate() const;
};

// Accepts the named aliases "(26)".."(32)" / "(30a)" / "(30b)" / "twin" /
// "sophie" and the raw grammar "c1,...,cn,const;..." (last element of each
// comma list is the constant).
LinearSystem parse_system_spec(const std::string& spec);

// The seven catalogued prime-pair systems plus the twin and Sophie Germain
// pairs. "(30)" carries both of its exponent instances as (30a)/(30b).
const std::vector<LinearSystem>& builtin_systems();

struct Admissibility {
    bool admissible = false;
    std::uint64_t tested_prime_bound = 0;
    std::optional<std::uint64_t> blocking_prime;  // certificate when inadmissible
    // one witness point per tested prime: r divides no form value there
    std::vector<std::pair<std::uint64_t, std::vector<long long>>> witnesses;
    std::optional<std::vector<long long>> positivity_witness;  // all forms > 1
};

// Residue-cycle search per prime r <= max(prime_bound, #forms), plus exact
// content checks that catch blocking primes of any size.
Admissibility is_admissible(const LinearSystem& system, std::uint64_t prime_bound = 100);

// Exact count of points where every form value is prime (values <= 1 are
// never prime). Univariate systems scan x in [1, h]; bivariate systems scan
// the box [-h, h]^2 and require h <= 1000.
std::uint64_t count_simultaneous_primes(const LinearSystem& system, std::uint64_t h,
                                        unsigned threads = 1);

struct EulerProduct {
    bool admissible = false;
    std::optional<std::uint64_t> blocking_prime;
    double cf = 0.0;                // truncated product; structurally 0 when inadmissible
    double last_factor_delta = 0.0; // |final factor - 1|, convergence indicator
    std::uint64_t prime_bound = 0;
};

// Truncated product over p <= bound of (1 - w(p)/p) / (1 - 1/p)^m with w(p)
// the number of residues mod p killing some form. Exact root counting per
// prime; univariate systems with positive leading coefficients only.
EulerProduct bateman_horn_constant(const LinearSystem& system, std::uint64_t euler_prime_bound);

struct Prediction {
    double closed_form = 0.0;     // CF * h^n / log^m h
    double integral_form = 0.0;   // CF * Integral[2, h] dt / log^m t (univariate)
    bool integral_available = false;
    const char* primary = "";     // which estimate downstream consumers use
    double value() const { return integral_available ? integral_form : closed_form; }
};

Prediction predicted_count(const LinearSystem& system, std::uint64_t h, double cf);

// Pairs (x1, x2), x2 >= 1, whose length_m-term progression stays prime and
// <= h.
std::uint64_t count_prime_aps(std::uint32_t length_m, std::uint64_t h);

// For each even gap 2k <= max_gap: primes p with p + 2k <= N and both ends
// prime.
std::vector<std::pair<std::uint64_t, std::uint64_t>> gap_pair_counts(std::uint64_t max_gap,
                                                                     std::uint64_t n);

struct SieveReport {
    LinearSystem system;
    std::uint64_t range_h = 0;
    std::uint64_t empirical_count = 0;
    EulerProduct constant;
    Prediction prediction;
    double ratio = 0.0;  // empirical / predicted, when predicted > 0
    std::string note;
};

SieveReport sieve_report(const LinearSystem& system, std::uint64_t h,
                         std::uint64_t euler_prime_bound, unsigned threads = 1);

}  // namespace k4dio::dickson
