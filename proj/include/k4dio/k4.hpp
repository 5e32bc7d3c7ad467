#pragma once

#include "k4dio/arith.hpp"
#include "k4dio/bigint.hpp"
#include "k4dio/bounds.hpp"
#include "k4dio/equations.hpp"

#include <cstdint>
#include <vector>

namespace k4dio::k4 {

enum class Verdict { accepted, rejected_prime_count, rejected_shape, unresolved };
const char* verdict_name(Verdict v);

// One prime power q with its group-order arithmetic: q(q^2-1)/gcd(2, q-1)
// accepted when the order splits into exactly four distinct primes, two of
// which are 2 and 3.
struct Candidate {
    std::uint64_t q = 0;
    std::uint64_t base = 0;   // q = base^exp, base prime
    std::uint32_t exp = 0;
    BigInt order;
    arith::Factorization factorization;
    std::vector<BigInt> distinct_primes;
    Verdict verdict = Verdict::unresolved;
};

// Rejects q < 4 and q not a prime power. unresolved only when the
// factorization budget leaves a cofactor.
Candidate order_check(std::uint64_t q, const SearchBounds& bounds = {});

// All prime powers 4 <= q <= max_q ascending; accepted only, unless
// include_rejected is set.
std::vector<Candidate> enumerate_candidates(std::uint64_t max_q, const SearchBounds& bounds = {},
                                            bool include_rejected = false);

// The base equation families the candidate's parameters satisfy outright
// (exact equation match, most specific exponent form). Often empty.
std::vector<eqn::FamilyId> link_families(const Candidate& candidate,
                                         const SearchBounds& bounds = {});

}  // namespace k4dio::k4
