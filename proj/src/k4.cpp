#include "k4dio/k4.hpp"

#include <algorithm>
#include <stdexcept>

namespace k4dio::k4 {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::accepted: return "accepted";
        case Verdict::rejected_prime_count: return "rejected_prime_count";
        case Verdict::rejected_shape: return "rejected_shape";
        case Verdict::unresolved: return "unresolved";
    }
    return "?";
}

Candidate order_check(std::uint64_t q, const SearchBounds& bounds) {
    if (q < 4) throw std::invalid_argument("order_check: q = 2, 3 cannot yield four primes");
    auto pp = arith::prime_power(BigInt(q), bounds.mr_rounds);
    if (!pp) throw std::invalid_argument("order_check: q must be a prime power");

    Candidate cand;
    cand.q = q;
    cand.base = to_u64(pp->base);
    cand.exp = pp->exp;
    BigInt bq = q;
    cand.order = bq * (bq * bq - 1);
    if (q % 2 == 1) cand.order /= 2;  // gcd(2, q-1)

    cand.factorization = arith::factorize(cand.order, bounds);
    for (const auto& [prime, e] : cand.factorization.factors)
        cand.distinct_primes.push_back(prime);

    if (!cand.factorization.complete()) {
        cand.verdict = Verdict::unresolved;
        return cand;
    }
    if (cand.distinct_primes.size() != 4) {
        cand.verdict = Verdict::rejected_prime_count;
        return cand;
    }
    bool has2 = cand.factorization.divides(2);
    bool has3 = cand.factorization.divides(3);
    cand.verdict = (has2 && has3) ? Verdict::accepted : Verdict::rejected_shape;
    return cand;
}

std::vector<Candidate> enumerate_candidates(std::uint64_t max_q, const SearchBounds& bounds,
                                            bool include_rejected) {
    if (max_q < 4) return {};
    std::vector<std::uint64_t> qs;
    arith::for_primes(2, max_q, [&](std::uint64_t p) {
        if (p >= 4) qs.push_back(p);
        __uint128_t v = static_cast<__uint128_t>(p) * p;
        while (v <= max_q) {
            qs.push_back(static_cast<std::uint64_t>(v));
            v *= p;
        }
    });
    std::sort(qs.begin(), qs.end());

    std::vector<Candidate> out;
    for (std::uint64_t q : qs) {
        Candidate cand = order_check(q, bounds);
        if (cand.verdict == Verdict::accepted || include_rejected)
            out.push_back(std::move(cand));
    }
    return out;
}

std::vector<eqn::FamilyId> link_families(const Candidate& cand, const SearchBounds& bounds) {
    std::vector<eqn::FamilyId> out;
    if (cand.verdict != Verdict::accepted) return out;

    if (cand.exp == 1) {
        // odd prime q: order shape comes from q^2 - 1 = 2^a 3^b r^c
        auto split = arith::factor_out_2_3(BigInt(cand.q) * cand.q - 1);
        if (split.three_exp >= 1 && split.rest > 1) {
            if (auto pp = arith::prime_power(split.rest, bounds.mr_rounds)) {
                if (pp->base > 3)
                    out.push_back(pp->exp == 1 ? eqn::FamilyId::F5 : eqn::FamilyId::F1);
            }
        }
        return out;
    }
    if (cand.base == 2) {
        std::uint32_t m = cand.exp;
        BigInt low = (BigInt(1) << m) - 1;
        BigInt high = (BigInt(1) << m) + 1;
        if (low > 3 && arith::is_prime(low, bounds.mr_rounds) && high % 3 == 0) {
            if (auto pp = arith::prime_power(high / 3, bounds.mr_rounds)) {
                if (pp->base > 3)
                    out.push_back(pp->exp == 1 ? eqn::FamilyId::F6 : eqn::FamilyId::F2);
            }
        }
        return out;
    }
    if (cand.base == 3) {
        std::uint32_t m = cand.exp;
        BigInt low = pow_big(BigInt(3), m) - 1;
        BigInt high = pow_big(BigInt(3), m) + 1;
        if (low % 2 != 0 || high % 4 != 0) return out;
        auto low_pp = arith::prime_power(low / 2, bounds.mr_rounds);
        auto high_pp = arith::prime_power(high / 4, bounds.mr_rounds);
        if (!low_pp || !high_pp || low_pp->base <= 3 || high_pp->base <= 3) return out;
        if (low_pp->exp == 1 && high_pp->exp == 1) out.push_back(eqn::FamilyId::F7);
        else if (low_pp->exp >= 2 && high_pp->exp == 1) out.push_back(eqn::FamilyId::F3);
        else if (low_pp->exp == 1 && high_pp->exp >= 2) out.push_back(eqn::FamilyId::F4);
        return out;
    }
    return out;
}

}  // namespace k4dio::k4
