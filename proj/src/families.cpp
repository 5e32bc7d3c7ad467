#include "k4dio/equations.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>

namespace k4dio::eqn {

namespace {

using arith::is_prime;
using arith::is_prime_u64;

Solution sol(FamilyId f) { return Solution{.family = f}; }

// q^c with q prime > 3, or nothing.
std::optional<arith::PowerRep> prime_power_gt3(const BigInt& v, std::uint32_t mr_rounds) {
    auto pp = arith::prime_power(v, mr_rounds);
    if (pp && pp->base > 3) return pp;
    return std::nullopt;
}

// v = 3^b exactly; returns b (>= 0).
std::optional<std::uint32_t> power_of_3(BigInt v) {
    if (v < 1) return std::nullopt;
    std::uint32_t b = 0;
    while (v % 3 == 0) { v /= 3; ++b; }
    return v == 1 ? std::optional<std::uint32_t>(b) : std::nullopt;
}

void finish(std::vector<Solution>& out) {
    std::sort(out.begin(), out.end());
    for (const Solution& s : out) validate_solution(s);
}

// Scan odd primes p in (3, max_p], handing over the split
// p^2 - 1 = 2^a 3^b rest with gcd(rest, 6) = 1. Chunks the range when asked.
void scan_p2(std::uint64_t max_p, unsigned threads,
             const std::function<void(std::uint64_t p, std::uint32_t a, std::uint32_t b,
                                      std::uint64_t rest)>& fn) {
    if (max_p > 4'000'000'000ull)
        throw std::invalid_argument("p^2 - 1 scan supports max_p up to 4e9");
    auto scan_range = [&fn](std::uint64_t lo, std::uint64_t hi, auto&& sink) {
        arith::for_primes(lo, hi, [&](std::uint64_t p) {
            if (p < 5) return;
            std::uint64_t v = p * p - 1;
            std::uint32_t a = std::countr_zero(v);
            v >>= a;
            std::uint32_t b = 0;
            while (v % 3 == 0) { v /= 3; ++b; }
            sink(p, a, b, v);
        });
    };
    if (threads <= 1 || max_p < 10000) {
        scan_range(5, max_p, fn);
        return;
    }
    struct Hit { std::uint64_t p; std::uint32_t a, b; std::uint64_t rest; };
    std::uint64_t chunk = (max_p - 4) / threads + 1;
    std::vector<std::future<std::vector<Hit>>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = 5 + t * chunk;
        std::uint64_t hi = std::min<std::uint64_t>(max_p, lo + chunk - 1);
        if (lo > max_p) break;
        jobs.push_back(std::async(std::launch::async, [=]() {
            std::vector<Hit> hits;
            scan_range(lo, hi, [&](std::uint64_t p, std::uint32_t a, std::uint32_t b,
                                   std::uint64_t rest) {
                hits.push_back({p, a, b, rest});
            });
            return hits;
        }));
    }
    for (auto& j : jobs)
        for (const Hit& h : j.get()) fn(h.p, h.a, h.b, h.rest);  // ascending merge
}

std::vector<Solution> solve_f1(const SearchBounds& bounds, std::uint32_t min_c,
                               unsigned threads, bool tag_cases) {
    std::vector<Solution> out;
    scan_p2(bounds.max_p, threads,
            [&](std::uint64_t p, std::uint32_t a, std::uint32_t b, std::uint64_t rest) {
                if (b == 0 || rest <= 1) return;
                auto pp = prime_power_gt3(BigInt(rest), bounds.mr_rounds);
                if (!pp || pp->exp < min_c) return;
                Solution s = sol(FamilyId::F1);
                s.p = p;
                s.q = pp->base;
                s.a = a;
                s.b = b;
                s.c = pp->exp;
                if (tag_cases) s.case_system = classify_case_system(BigInt(p), a).system;
                out.push_back(std::move(s));
            });
    finish(out);
    return out;
}

std::vector<Solution> solve_f5(const SearchBounds& bounds, unsigned threads) {
    std::vector<Solution> out;
    scan_p2(bounds.max_p, threads,
            [&](std::uint64_t p, std::uint32_t a, std::uint32_t b, std::uint64_t rest) {
                if (b == 0 || rest <= 3 || !is_prime_u64(rest)) return;
                Solution s = sol(FamilyId::F5);
                s.p = p;
                s.q = rest;
                s.a = a;
                s.b = b;
                out.push_back(std::move(s));
            });
    finish(out);
    return out;
}

// 2^m - 1 = p with 2^m + 1 = 3 q^n. F6/F18 are the n = 1 instance.
std::vector<Solution> solve_mersenne_split(FamilyId fam, const SearchBounds& bounds,
                                           std::uint32_t min_n, bool fixed_n1) {
    std::vector<Solution> out;
    for (std::uint32_t m = 1; m <= bounds.max_m; ++m) {
        BigInt pow2m = BigInt(1) << m;
        BigInt p = pow2m - 1;
        if (p <= 3 || !is_prime(p, bounds.mr_rounds)) continue;
        BigInt t = pow2m + 1;
        if (t % 3 != 0) continue;
        BigInt rest = t / 3;
        if (fixed_n1) {
            if (rest <= 3 || !is_prime(rest, bounds.mr_rounds)) continue;
            Solution s = sol(fam);
            s.p = p;
            s.q = rest;
            s.m = m;
            out.push_back(std::move(s));
        } else {
            auto pp = prime_power_gt3(rest, bounds.mr_rounds);
            if (!pp || pp->exp < min_n) continue;
            Solution s = sol(fam);
            s.p = p;
            s.q = pp->base;
            s.m = m;
            s.n = pp->exp;
            out.push_back(std::move(s));
        }
    }
    finish(out);
    return out;
}

// 3^m - 1 = 2 p^n with 3^m + 1 = 4 q (F3), or the mirror exponent placement
// (F4); F7/F19 are both exponents = 1.
std::vector<Solution> solve_ternary_split(FamilyId fam, const SearchBounds& bounds,
                                          std::uint32_t min_n) {
    std::vector<Solution> out;
    bool exp_on_p = fam == FamilyId::F3;
    bool fixed_n1 = fam == FamilyId::F7 || fam == FamilyId::F19;
    for (std::uint32_t m = 1; m <= bounds.max_m; ++m) {
        BigInt pow3m = pow_big(BigInt(3), m);
        if ((pow3m + 1) % 4 != 0) continue;  // m even never splits as 4q
        BigInt minus_half = (pow3m - 1) / 2;
        BigInt plus_quarter = (pow3m + 1) / 4;
        Solution s = sol(fam);
        s.m = m;
        if (fixed_n1 || !exp_on_p) {
            if (minus_half <= 3 || !is_prime(minus_half, bounds.mr_rounds)) continue;
            s.p = minus_half;
        } else {
            auto pp = prime_power_gt3(minus_half, bounds.mr_rounds);
            if (!pp || pp->exp < min_n) continue;
            s.p = pp->base;
            s.n = pp->exp;
        }
        if (fixed_n1 || exp_on_p) {
            if (plus_quarter <= 3 || !is_prime(plus_quarter, bounds.mr_rounds)) continue;
            s.q = plus_quarter;
        } else {
            auto pp = prime_power_gt3(plus_quarter, bounds.mr_rounds);
            if (!pp || pp->exp < min_n) continue;
            s.q = pp->base;
            s.n = pp->exp;
        }
        out.push_back(std::move(s));
    }
    finish(out);
    return out;
}

// (8)/(12) and (10)/(14): the 2k+1 factor is the 3-power. Search over (a, b)
// with p = 2^(a-1) 3^b +- 1 capped by max_p.
std::vector<Solution> solve_case_3side(FamilyId fam, const SearchBounds& bounds) {
    bool minus_branch = fam == FamilyId::F10 || fam == FamilyId::F14;
    std::vector<Solution> out;
    BigInt cap = bounds.max_p;
    for (std::uint32_t b = 1;; ++b) {
        BigInt pow3b = pow_big(BigInt(3), b);
        if (4 * pow3b - 1 > cap) break;  // smallest p at a = 3
        for (std::uint32_t a = 3;; ++a) {
            BigInt p = (BigInt(1) << (a - 1)) * pow3b + (minus_branch ? -1 : 1);
            if (p > cap) break;
            BigInt qc = (BigInt(1) << (a - 2)) * pow3b + (minus_branch ? -1 : 1);
            auto pp = prime_power_gt3(qc, bounds.mr_rounds);
            if (!pp || pp->exp < 2) continue;
            if (!is_prime(p, bounds.mr_rounds)) continue;
            Solution s = sol(fam);
            s.p = p;
            s.q = pp->base;
            s.a = a;
            s.b = b;
            s.c = pp->exp;
            out.push_back(std::move(s));
        }
    }
    finish(out);
    return out;
}

// (9)/(13) and (11)/(15): the 2k+1 factor is the prime power. Search over
// (q, c, a) with p = 2^(a-1) q^c +- 1 capped by max_p.
std::vector<Solution> solve_case_qside(FamilyId fam, const SearchBounds& bounds) {
    bool minus_branch = fam == FamilyId::F11 || fam == FamilyId::F15;
    std::vector<Solution> out;
    BigInt cap = bounds.max_p;
    std::uint64_t qmax = to_u64(arith::integer_nth_root((cap + 1) / 4, 2).root) + 1;
    arith::for_primes(5, qmax, [&](std::uint64_t q) {
        for (std::uint32_t c = 2;; ++c) {
            BigInt qc = pow_big(BigInt(q), c);
            if (4 * qc - 1 > cap) break;
            for (std::uint32_t a = 3;; ++a) {
                BigInt p = (BigInt(1) << (a - 1)) * qc + (minus_branch ? -1 : 1);
                if (p > cap) break;
                BigInt b3 = (BigInt(1) << (a - 2)) * qc + (minus_branch ? -1 : 1);
                auto b = power_of_3(b3);
                if (!b || *b < 1) continue;
                if (!is_prime(p, bounds.mr_rounds)) continue;
                Solution s = sol(fam);
                s.p = p;
                s.q = q;
                s.a = a;
                s.b = *b;
                s.c = c;
                out.push_back(std::move(s));
            }
        }
    });
    finish(out);
    return out;
}

// (12)/(14) searched from the (q, c) side directly: q^c -+ 1 = 2^(a-2) 3^b.
std::vector<Solution> solve_rewritten_3side(FamilyId fam, const SearchBounds& bounds) {
    bool plus_one = fam == FamilyId::F14;  // q^c + 1 on the left
    std::vector<Solution> out;
    BigInt cap = bounds.max_p;
    std::uint64_t qmax = to_u64(arith::integer_nth_root((cap + 1) / 2, 2).root) + 1;
    arith::for_primes(5, qmax, [&](std::uint64_t q) {
        for (std::uint32_t c = 2;; ++c) {
            BigInt qc = pow_big(BigInt(q), c);
            BigInt p = 2 * qc + (plus_one ? 1 : -1);
            if (p > cap) break;
            BigInt side = plus_one ? qc + 1 : qc - 1;
            auto split = arith::factor_out_2_3(side);
            if (split.rest != 1 || split.three_exp < 1 || split.two_exp < 1) continue;
            if (!is_prime(p, bounds.mr_rounds)) continue;
            Solution s = sol(fam);
            s.p = p;
            s.q = q;
            s.a = split.two_exp + 2;
            s.b = split.three_exp;
            s.c = c;
            out.push_back(std::move(s));
        }
    });
    finish(out);
    return out;
}

// (13)/(15) searched from the b side: 3^b -+ 1 = 2^(a-2) q^c.
std::vector<Solution> solve_rewritten_qside(FamilyId fam, const SearchBounds& bounds) {
    bool plus_one = fam == FamilyId::F15;
    std::vector<Solution> out;
    BigInt cap = bounds.max_p;
    for (std::uint32_t b = 1;; ++b) {
        BigInt pow3b = pow_big(BigInt(3), b);
        BigInt p = 2 * pow3b + (plus_one ? 1 : -1);
        if (p > cap) break;
        BigInt side = plus_one ? pow3b + 1 : pow3b - 1;
        std::uint32_t two = 0;
        while ((side & 1) == 0) { side >>= 1; ++two; }
        if (two < 1) continue;
        auto pp = prime_power_gt3(side, bounds.mr_rounds);
        if (!pp || pp->exp < 2) continue;
        if (!is_prime(p, bounds.mr_rounds)) continue;
        Solution s = sol(fam);
        s.p = p;
        s.q = pp->base;
        s.a = two + 2;
        s.b = b;
        s.c = pp->exp;
        out.push_back(std::move(s));
    }
    finish(out);
    return out;
}

// (16)/(17): 3^b q^c = 2^(a-2) -+ 1 with p = 2^(a-1) -+ 1.
std::vector<Solution> solve_k_zero(FamilyId fam, const SearchBounds& bounds) {
    bool minus_branch = fam == FamilyId::F17;
    std::vector<Solution> out;
    BigInt cap = bounds.max_p;
    for (std::uint32_t a = 3;; ++a) {
        BigInt p = (BigInt(1) << (a - 1)) + (minus_branch ? -1 : 1);
        if (p > cap) break;
        BigInt side = (BigInt(1) << (a - 2)) + (minus_branch ? -1 : 1);
        std::uint32_t b = 0;
        while (side % 3 == 0) { side /= 3; ++b; }
        if (b < 1 || side <= 1) continue;
        auto pp = prime_power_gt3(side, bounds.mr_rounds);
        if (!pp || pp->exp < 2) continue;
        if (!is_prime(p, bounds.mr_rounds)) continue;
        Solution s = sol(fam);
        s.p = p;
        s.q = pp->base;
        s.a = a;
        s.b = b;
        s.c = pp->exp;
        out.push_back(std::move(s));
    }
    finish(out);
    return out;
}

// (20)/(22): q -+ 1 = 2^(a-2) 3^b, p = 2q -+ 1. Scanned over primes q.
std::vector<Solution> solve_residual_qscan(FamilyId fam, const SearchBounds& bounds) {
    bool plus_one = fam == FamilyId::F22;
    std::vector<Solution> out;
    std::uint64_t qcap = plus_one ? (bounds.max_p - 1) / 2 : (bounds.max_p + 1) / 2;
    arith::for_primes(5, qcap, [&](std::uint64_t q) {
        BigInt p = plus_one ? BigInt(2) * q + 1 : BigInt(2) * q - 1;
        auto split = arith::factor_out_2_3(plus_one ? BigInt(q) + 1 : BigInt(q) - 1);
        if (split.rest != 1 || split.three_exp < 1 || split.two_exp < 1) return;
        if (!is_prime(p, bounds.mr_rounds)) return;
        Solution s = sol(fam);
        s.p = p;
        s.q = q;
        s.a = split.two_exp + 2;
        s.b = split.three_exp;
        out.push_back(std::move(s));
    });
    finish(out);
    return out;
}

// (21)/(23): 3^b -+ 1 = 2^(a-2) q, p = 2*3^b -+ 1. Scanned over b.
std::vector<Solution> solve_residual_bscan(FamilyId fam, const SearchBounds& bounds) {
    bool plus_one = fam == FamilyId::F23;
    std::vector<Solution> out;
    BigInt cap = bounds.max_p;
    for (std::uint32_t b = 1;; ++b) {
        BigInt pow3b = pow_big(BigInt(3), b);
        BigInt p = 2 * pow3b + (plus_one ? 1 : -1);
        if (p > cap) break;
        BigInt side = plus_one ? pow3b + 1 : pow3b - 1;
        std::uint32_t two = 0;
        while ((side & 1) == 0) { side >>= 1; ++two; }
        if (two < 1 || side <= 3) continue;
        if (!is_prime(side, bounds.mr_rounds)) continue;
        if (!is_prime(p, bounds.mr_rounds)) continue;
        Solution s = sol(fam);
        s.p = p;
        s.q = side;
        s.a = two + 2;
        s.b = b;
        out.push_back(std::move(s));
    }
    finish(out);
    return out;
}

// (24)/(25): 3q = 2^(a-2) -+ 1, p = 2^(a-1) -+ 1. Scanned over a.
std::vector<Solution> solve_residual_ascan(FamilyId fam, const SearchBounds& bounds) {
    bool minus_branch = fam == FamilyId::F25;
    std::vector<Solution> out;
    BigInt cap = bounds.max_p;
    for (std::uint32_t a = 3;; ++a) {
        BigInt p = (BigInt(1) << (a - 1)) + (minus_branch ? -1 : 1);
        if (p > cap) break;
        BigInt side = (BigInt(1) << (a - 2)) + (minus_branch ? -1 : 1);
        if (side % 3 != 0) continue;
        BigInt q = side / 3;
        if (q <= 3 || !is_prime(q, bounds.mr_rounds)) continue;
        if (!is_prime(p, bounds.mr_rounds)) continue;
        Solution s = sol(fam);
        s.p = p;
        s.q = q;
        s.a = a;
        out.push_back(std::move(s));
    }
    finish(out);
    return out;
}

std::vector<Solution> solve_l2(const SearchBounds& bounds) {
    std::vector<Solution> out;
    for (std::uint32_t m = 3; m <= bounds.max_m; ++m) {
        BigInt half = (pow_big(BigInt(3), m) - 1) / 2;
        std::uint32_t emax = std::min<std::uint32_t>(bounds.max_exp, bit_length(half));
        for (std::uint32_t qe = 2; qe <= emax; ++qe) {
            auto r = arith::integer_nth_root(half, qe);
            if (!r.exact || r.root < 2) continue;
            Solution s = sol(FamilyId::L2);
            s.y = r.root;
            s.m = m;
            s.q = qe;
            out.push_back(std::move(s));
        }
    }
    finish(out);
    return out;
}

std::vector<Solution> solve_l3(const SearchBounds& bounds) {
    std::vector<Solution> out;
    auto primes = arith::primes_up_to(bounds.max_base);
    for (std::uint64_t xv : primes) {
        for (std::uint32_t m = 2; m <= bounds.max_exp; ++m) {
            BigInt v = pow_big(BigInt(xv), m) - 1;
            if (v < 4) continue;
            // v must be a power y^n of a single prime y <= max_base
            for (std::uint64_t yv : primes) {
                if (v % yv != 0) continue;
                std::uint32_t n = 0;
                BigInt rest = v;
                while (rest % yv == 0) { rest /= yv; ++n; }
                if (rest == 1 && n >= 2 && n <= bounds.max_exp) {
                    Solution s = sol(FamilyId::L3);
                    s.x = xv;
                    s.y = yv;
                    s.m = m;
                    s.n = n;
                    out.push_back(std::move(s));
                }
                break;  // v has this prime factor; no other single prime can carry it alone
            }
        }
    }
    finish(out);
    return out;
}

std::vector<Solution> solve_l4(const SearchBounds& bounds) {
    std::vector<Solution> out;
    for (std::uint64_t xv = 1; xv <= bounds.max_base; ++xv) {
        BigInt v = BigInt(xv) * xv + 1;
        if (v % 2 != 0) continue;
        BigInt half = v / 2;
        std::uint32_t emax = std::min<std::uint32_t>(bounds.max_exp, bit_length(half));
        for (std::uint32_t n = 3; n <= emax; ++n) {
            auto r = arith::integer_nth_root(half, n);
            if (!r.exact || r.root < 2) continue;
            Solution s = sol(FamilyId::L4);
            s.x = xv;
            s.y = r.root;
            s.n = n;
            out.push_back(std::move(s));
        }
    }
    finish(out);
    return out;
}

std::vector<Solution> solve_l5(const SearchBounds& bounds) {
    std::vector<Solution> out;
    for (std::uint64_t xv = 1; xv <= bounds.max_base; ++xv) {
        BigInt v = 3 * BigInt(xv) * xv + 1;
        if (v % 4 != 0) continue;
        BigInt quarter = v / 4;
        if (quarter == 1) {
            Solution s = sol(FamilyId::L5);
            s.x = xv;
            s.y = 1;
            out.push_back(std::move(s));
            continue;
        }
        std::uint32_t emax = std::min<std::uint32_t>(bounds.max_exp, bit_length(quarter));
        for (std::uint32_t n = 3; n <= emax; n += 2) {
            auto r = arith::integer_nth_root(quarter, n);
            if (!r.exact || r.root < 2) continue;
            // solutions are (x, y) pairs; distinct exponents give distinct y
            Solution s = sol(FamilyId::L5);
            s.x = xv;
            s.y = r.root;
            out.push_back(std::move(s));
        }
    }
    finish(out);
    return out;
}

std::vector<Solution> solve_l6(const SearchBounds& bounds) {
    std::vector<Solution> out;
    for (std::uint32_t m = 2; m <= bounds.max_m; ++m) {
        BigInt v = (BigInt(1) << m) + 1;
        if (v % 3 != 0) continue;
        BigInt third = v / 3;
        std::uint32_t emax = std::min<std::uint32_t>(bounds.max_exp, bit_length(third));
        for (std::uint32_t qe = 2; qe <= emax; ++qe) {
            auto r = arith::integer_nth_root(third, qe);
            if (!r.exact || r.root < 2) continue;
            Solution s = sol(FamilyId::L6);
            s.m = m;
            s.y = r.root;
            s.q = qe;
            out.push_back(std::move(s));
        }
    }
    finish(out);
    return out;
}

std::vector<Solution> solve_l10even(const SearchBounds& bounds) {
    std::vector<Solution> out;
    for (std::uint32_t b = 1; b <= bounds.max_exp; ++b) {
        BigInt v = pow_big(BigInt(3), b) + 1;
        if (v % 4 != 0) continue;
        BigInt quarter = v / 4;
        std::uint32_t emax = std::min<std::uint32_t>(bounds.max_exp, bit_length(quarter));
        for (std::uint32_t c = 2; c <= emax; c += 2) {
            auto r = arith::integer_nth_root(quarter, c);
            if (!r.exact || !is_prime(r.root, bounds.mr_rounds)) continue;
            Solution s = sol(FamilyId::L10even);
            s.b = b;
            s.q = r.root;
            s.c = c;
            out.push_back(std::move(s));
        }
    }
    finish(out);
    return out;
}

}  // namespace

std::vector<Solution> solve_family(FamilyId family, const SearchBounds& bounds,
                                   const SolveOptions& options) {
    bounds.validate();
    std::uint32_t min_exp = std::max<std::uint32_t>(options.min_exp, 1);
    switch (family) {
        case FamilyId::F1: return solve_f1(bounds, min_exp, options.threads, false);
        case FamilyId::F2: return solve_mersenne_split(FamilyId::F2, bounds, min_exp, false);
        case FamilyId::F3: return solve_ternary_split(FamilyId::F3, bounds, min_exp);
        case FamilyId::F4: return solve_ternary_split(FamilyId::F4, bounds, min_exp);
        case FamilyId::F5: return solve_f5(bounds, options.threads);
        case FamilyId::F6: return solve_mersenne_split(FamilyId::F6, bounds, 1, true);
        case FamilyId::F7: return solve_ternary_split(FamilyId::F7, bounds, 1);
        case FamilyId::F8: return solve_case_3side(FamilyId::F8, bounds);
        case FamilyId::F9: return solve_case_qside(FamilyId::F9, bounds);
        case FamilyId::F10: return solve_case_3side(FamilyId::F10, bounds);
        case FamilyId::F11: return solve_case_qside(FamilyId::F11, bounds);
        case FamilyId::F12: return solve_rewritten_3side(FamilyId::F12, bounds);
        case FamilyId::F13: return solve_rewritten_qside(FamilyId::F13, bounds);
        case FamilyId::F14: return solve_rewritten_3side(FamilyId::F14, bounds);
        case FamilyId::F15: return solve_rewritten_qside(FamilyId::F15, bounds);
        case FamilyId::F16: return solve_k_zero(FamilyId::F16, bounds);
        case FamilyId::F17: return solve_k_zero(FamilyId::F17, bounds);
        case FamilyId::F18: return solve_mersenne_split(FamilyId::F18, bounds, 1, true);
        case FamilyId::F19: return solve_ternary_split(FamilyId::F19, bounds, 1);
        case FamilyId::F20: return solve_residual_qscan(FamilyId::F20, bounds);
        case FamilyId::F21: return solve_residual_bscan(FamilyId::F21, bounds);
        case FamilyId::F22: return solve_residual_qscan(FamilyId::F22, bounds);
        case FamilyId::F23: return solve_residual_bscan(FamilyId::F23, bounds);
        case FamilyId::F24: return solve_residual_ascan(FamilyId::F24, bounds);
        case FamilyId::F25: return solve_residual_ascan(FamilyId::F25, bounds);
        case FamilyId::L2: return solve_l2(bounds);
        case FamilyId::L3: return solve_l3(bounds);
        case FamilyId::L4: return solve_l4(bounds);
        case FamilyId::L5: return solve_l5(bounds);
        case FamilyId::L6: return solve_l6(bounds);
        case FamilyId::L10even: return solve_l10even(bounds);
    }
    throw std::invalid_argument("unknown family tag");
}

std::vector<Solution> solve_family1_structured(const SearchBounds& bounds, unsigned threads) {
    bounds.validate();
    return solve_f1(bounds, 2, threads, true);
}

std::vector<Solution> verify_lemma(FamilyId lemma, const SearchBounds& bounds) {
    switch (lemma) {
        case FamilyId::L2:
        case FamilyId::L3:
        case FamilyId::L4:
        case FamilyId::L5:
        case FamilyId::L6:
        case FamilyId::L10even:
            return solve_family(lemma, bounds);
        default:
            throw std::invalid_argument("verify_lemma: not a lemma tag");
    }
}

}  // namespace k4dio::eqn
