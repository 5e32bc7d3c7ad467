#include "k4dio/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace k4dio::arith {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // these bases suffice for determinism on 64-bit n
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::vector<std::uint32_t> first_primes(std::uint32_t count) {
    std::vector<std::uint32_t> out;
    out.reserve(count);
    for (std::uint32_t c = 2; out.size() < count; ++c) {
        bool ok = true;
        for (std::uint32_t p : out) {
            if (static_cast<std::uint64_t>(p) * p > c) break;
            if (c % p == 0) { ok = false; break; }
        }
        if (ok) out.push_back(c);
    }
    return out;
}

bool miller_rabin_big(const BigInt& n, std::uint32_t rounds) {
    BigInt d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint32_t base : first_primes(rounds)) {
        if (n % base == 0) return n == base;
        BigInt x = boost::multiprecision::powm(BigInt(base), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const BigInt& n, std::uint32_t mr_rounds) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    if ((n & 1) == 0) return false;
    return miller_rabin_big(n, std::max<std::uint32_t>(mr_rounds, 1));
}

TwoThreeSplit factor_out_2_3(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("factor_out_2_3: n must be >= 1");
    TwoThreeSplit out;
    out.rest = n;
    while ((out.rest & 1) == 0) { out.rest >>= 1; ++out.two_exp; }
    while (out.rest % 3 == 0) { out.rest /= 3; ++out.three_exp; }
    return out;
}

namespace {

// base^exp or nullopt on 64-bit overflow
std::optional<std::uint64_t> pow_u64_checked(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) {
            __uint128_t t = static_cast<__uint128_t>(r) * base;
            if (t > UINT64_MAX) return std::nullopt;
            r = static_cast<std::uint64_t>(t);
        }
        exp >>= 1;
        if (!exp) break;
        __uint128_t s = static_cast<__uint128_t>(base) * base;
        if (s > UINT64_MAX) return std::nullopt;
        base = static_cast<std::uint64_t>(s);
    }
    return r;
}

RootResult nth_root_u64(std::uint64_t n, std::uint32_t k) {
    std::uint64_t r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    if (r > 1) r -= 1;  // float seed can overshoot
    auto le_n = [&](std::uint64_t v) {
        auto p = pow_u64_checked(v, k);
        return p && *p <= n;
    };
    while (le_n(r + 1)) ++r;
    while (r > 0 && !le_n(r)) --r;
    auto p = pow_u64_checked(r, k);
    return {BigInt(r), p && *p == n};
}

}  // namespace

RootResult integer_nth_root(const BigInt& n, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("integer_nth_root: k must be >= 1");
    if (n < 0) throw std::invalid_argument("integer_nth_root: n must be >= 0");
    if (n == 0) return {BigInt(0), true};
    if (k == 1) return {n, true};
    if (fits_u64(n)) return nth_root_u64(to_u64(n), k);
    unsigned bits = bit_length(n);
    if (k >= bits) return {BigInt(1), n == 1};

    // Newton iteration from a one-bit-high seed, then clamp to the bracket.
    BigInt r = BigInt(1) << (bits / k + 1);
    while (true) {
        BigInt rk1 = pow_big(r, k - 1);
        BigInt next = ((k - 1) * r + n / rk1) / k;
        if (next >= r) break;
        r = next;
    }
    while (pow_big(r, k) > n) --r;
    while (pow_big(r + 1, k) <= n) ++r;
    return {r, pow_big(r, k) == n};
}

std::optional<PowerRep> perfect_power(const BigInt& n) {
    if (n < 2) return std::nullopt;
    std::optional<PowerRep> best;
    unsigned bits = bit_length(n);
    for (std::uint32_t k = 2; k <= bits; ++k) {
        RootResult r = integer_nth_root(n, k);
        if (r.exact && r.root >= 2) best = PowerRep{r.root, k};  // keep the largest exponent
    }
    return best;
}

std::optional<PowerRep> prime_power(const BigInt& n, std::uint32_t mr_rounds) {
    if (n < 2) return std::nullopt;
    if (auto pp = perfect_power(n)) {
        if (is_prime(pp->base, mr_rounds)) return pp;
        return std::nullopt;
    }
    if (is_prime(n, mr_rounds)) return PowerRep{n, 1};
    return std::nullopt;
}

std::vector<BigInt> sqrt_one_residues_mod_pow2(std::uint32_t a) {
    if (a < 3) throw std::invalid_argument("sqrt_one_residues_mod_pow2: requires a >= 3");
    BigInt half = BigInt(1) << (a - 1);
    BigInt full = BigInt(1) << a;
    return {BigInt(1), half - 1, half + 1, full - 1};
}

namespace {

constexpr std::uint64_t kSieveBlock = 1u << 16;

std::vector<std::uint64_t> small_primes_to(std::uint64_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return primes;
}

}  // namespace

void for_primes(std::uint64_t lo, std::uint64_t hi,
                const std::function<void(std::uint64_t)>& fn) {
    if (hi < 2 || hi < lo) return;
    if (lo < 2) lo = 2;
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
    while (root * root < hi) ++root;
    auto base = small_primes_to(root);
    if (lo <= 2 && hi >= 2) fn(2);

    // odd-only segments
    std::vector<char> seg;
    for (std::uint64_t start = std::max<std::uint64_t>(lo | 1, 3); start <= hi; start += 2 * kSieveBlock) {
        std::uint64_t end = std::min(hi, start + 2 * kSieveBlock - 2);  // odd values start..end
        std::size_t len = static_cast<std::size_t>((end - start) / 2 + 1);
        seg.assign(len, 1);
        for (std::uint64_t p : base) {
            if (p == 2) continue;
            if (p * p > end) break;
            std::uint64_t first = std::max(p * p, ((start + p - 1) / p) * p);
            if ((first & 1) == 0) first += p;
            for (std::uint64_t v = first; v <= end; v += 2 * p) seg[(v - start) / 2] = 0;
        }
        for (std::size_t i = 0; i < len; ++i)
            if (seg[i]) fn(start + 2 * i);
    }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n >= 2) out.reserve(static_cast<std::size_t>(n / (std::log(static_cast<double>(n) + 2) - 1.1) + 16));
    for_primes(2, n, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

BigInt Factorization::recompose() const {
    BigInt v = cofactor;
    for (const auto& [p, e] : factors) v *= pow_big(p, e);
    return v;
}

bool Factorization::divides(const BigInt& prime) const {
    for (const auto& [p, e] : factors)
        if (p == prime) return true;
    return false;
}

std::string Factorization::str() const {
    if (factors.empty() && cofactor == 1) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        os << p;
        if (e > 1) os << "^" << e;
        first = false;
    }
    if (cofactor != 1) {
        if (!first) os << " * ";
        os << "[" << cofactor << "]";  // unresolved part
    }
    return os.str();
}

namespace {

std::uint64_t rho_brent_u64(std::uint64_t n, std::uint64_t c) {
    if ((n & 1) == 0) return 2;
    std::uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

BigInt rho_brent_big(const BigInt& n, std::uint64_t c) {
    if ((n & 1) == 0) return 2;
    BigInt y = 2, g = 1, q = 1, x = 0, ys = 0;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

BigInt rho_split(const BigInt& n, std::uint32_t retry_budget) {
    for (std::uint64_t c = 1; c <= retry_budget; ++c) {
        BigInt g;
        if (fits_u64(n)) {
            std::uint64_t g64 = rho_brent_u64(to_u64(n), c);
            g = g64;
        } else {
            g = rho_brent_big(n, c);
        }
        if (g > 1 && g < n) return g;
    }
    return 0;
}

}  // namespace

Factorization factorize_budgeted(const BigInt& n, const SearchBounds& bounds,
                                 std::uint32_t rho_retry_budget) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization out;
    out.value = n;
    std::map<BigInt, std::uint32_t> acc;
    const std::uint64_t bound = std::max<std::uint64_t>(bounds.trial_division_bound, 3);
    out.trial_bound_used = bound;

    BigInt rest_big = n;
    std::uint64_t rest64 = 0;
    bool in64 = fits_u64(rest_big);
    if (in64) rest64 = to_u64(rest_big);

    auto strip = [&](std::uint64_t d) {
        if (!in64) {
            while (rest_big % d == 0) {
                rest_big /= d;
                ++acc[BigInt(d)];
                if (fits_u64(rest_big)) { in64 = true; rest64 = to_u64(rest_big); break; }
            }
        }
        if (in64) {
            while (rest64 % d == 0) { rest64 /= d; ++acc[BigInt(d)]; }
        }
    };
    auto rest_exceeds_sq = [&](std::uint64_t d) {
        if (in64) return static_cast<__uint128_t>(d) * d > rest64;
        return true;  // big remainder always exceeds d^2 for d <= 2^32-ish trial range
    };
    auto rest_is_one = [&] { return in64 ? rest64 == 1 : rest_big == 1; };

    strip(2);
    strip(3);
    // 6k+-1 wheel covers every prime candidate up to the bound.
    for (std::uint64_t d = 5; d <= bound; d += (d % 6 == 5) ? 2 : 4) {
        if (rest_is_one()) break;
        if (!rest_exceeds_sq(d)) break;  // remaining part is prime
        strip(d);
    }

    // Split what trial division left, certifying primality of every piece.
    std::vector<BigInt> stack;
    BigInt rest = in64 ? BigInt(rest64) : rest_big;
    if (rest > 1) stack.push_back(rest);
    while (!stack.empty()) {
        BigInt v = stack.back();
        stack.pop_back();
        if (is_prime(v, bounds.mr_rounds)) {
            ++acc[v];
            continue;
        }
        // perfect powers trip up rho's gcd trick, peel them first
        if (auto pp = perfect_power(v)) {
            for (std::uint32_t i = 0; i < pp->exp; ++i) stack.push_back(pp->base);
            continue;
        }
        BigInt g = rho_split(v, rho_retry_budget);
        if (g == 0) {
            out.cofactor *= v;  // could not split within budget
            continue;
        }
        stack.push_back(g);
        stack.push_back(v / g);
    }

    out.factors.assign(acc.begin(), acc.end());
    return out;
}

Factorization factorize(const BigInt& n, const SearchBounds& bounds) {
    return factorize_budgeted(n, bounds, 32);
}

}  // namespace k4dio::arith
