#include "k4dio/equations.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace k4dio::eqn {

namespace {

struct FamilyMeta {
    const char* name;
    const char* equation;
    std::vector<std::string> fields;
};

const std::map<FamilyId, FamilyMeta>& meta_table() {
    static const std::map<FamilyId, FamilyMeta> table = {
        {FamilyId::F1, {"F1", "p^2 - 1 = 2^a 3^b q^c", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F2, {"F2", "2^m - 1 = p, 2^m + 1 = 3 q^n", {"p", "q", "m", "n"}}},
        {FamilyId::F3, {"F3", "3^m - 1 = 2 p^n, 3^m + 1 = 4 q", {"p", "q", "m", "n"}}},
        {FamilyId::F4, {"F4", "3^m - 1 = 2 p, 3^m + 1 = 4 q^n", {"p", "q", "m", "n"}}},
        {FamilyId::F5, {"F5", "p^2 - 1 = 2^a 3^b q", {"p", "q", "a", "b"}}},
        {FamilyId::F6, {"F6", "2^m - 1 = p, 2^m + 1 = 3 q", {"p", "q", "m"}}},
        {FamilyId::F7, {"F7", "3^m - 1 = 2 p, 3^m + 1 = 4 q", {"p", "q", "m"}}},
        {FamilyId::F8, {"F8", "2k+1 = 3^b, q^c = 1 + 2^(a-2)(2k+1), p = 1 + 2^(a-1)(2k+1)", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F9, {"F9", "2k+1 = q^c, 3^b = 1 + 2^(a-2)(2k+1), p = 1 + 2^(a-1)(2k+1)", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F10, {"F10", "2k+1 = 3^b, q^c = -1 + 2^(a-2)(2k+1), p = -1 + 2^(a-1)(2k+1)", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F11, {"F11", "2k+1 = q^c, 3^b = -1 + 2^(a-2)(2k+1), p = -1 + 2^(a-1)(2k+1)", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F12, {"F12", "q^c - 1 = 2^(a-2) 3^b, p = 2 q^c - 1", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F13, {"F13", "3^b - 1 = 2^(a-2) q^c, p = 2*3^b - 1", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F14, {"F14", "q^c + 1 = 2^(a-2) 3^b, p = 2 q^c + 1", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F15, {"F15", "3^b + 1 = 2^(a-2) q^c, p = 2*3^b + 1", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F16, {"F16", "3^b q^c = 2^(a-2) + 1, p = 2^(a-1) + 1", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F17, {"F17", "3^b q^c = 2^(a-2) - 1, p = 2^(a-1) - 1", {"p", "q", "a", "b", "c"}}},
        {FamilyId::F18, {"F18", "2^m - 1 = p, 2^m + 1 = 3 q", {"p", "q", "m"}}},
        {FamilyId::F19, {"F19", "3^m - 1 = 2 p, 3^m + 1 = 4 q", {"p", "q", "m"}}},
        {FamilyId::F20, {"F20", "q - 1 = 2^(a-2) 3^b, p = 2 q - 1", {"p", "q", "a", "b"}}},
        {FamilyId::F21, {"F21", "3^b - 1 = 2^(a-2) q, p = 2*3^b - 1", {"p", "q", "a", "b"}}},
        {FamilyId::F22, {"F22", "q + 1 = 2^(a-2) 3^b, p = 2 q + 1", {"p", "q", "a", "b"}}},
        {FamilyId::F23, {"F23", "3^b + 1 = 2^(a-2) q, p = 2*3^b + 1", {"p", "q", "a", "b"}}},
        {FamilyId::F24, {"F24", "3 q = 2^(a-2) + 1, p = 2^(a-1) + 1", {"p", "q", "a"}}},
        {FamilyId::F25, {"F25", "3 q = 2^(a-2) - 1, p = 2^(a-1) - 1", {"p", "q", "a"}}},
        {FamilyId::L2, {"L2", "3^m - 2 y^q = 1  (m > 2; y, q >= 2)", {"y", "m", "q"}}},
        {FamilyId::L3, {"L3", "x^m - y^n = 1  (x, y prime; m, n > 1)", {"x", "y", "m", "n"}}},
        {FamilyId::L4, {"L4", "x^2 + 1 = 2 y^n  (y > 1, n > 2)", {"x", "y", "n"}}},
        {FamilyId::L5, {"L5", "3 x^2 + 1 = 4 y^n  (n odd, n > 1)", {"x", "y"}}},
        {FamilyId::L6, {"L6", "2^m + 1 = 3 y^q  (m, y, q > 1)", {"m", "y", "q"}}},
        {FamilyId::L10even, {"L10even", "3^b + 1 = 4 q^c  (q prime, c even, c > 1)", {"b", "q", "c"}}},
    };
    return table;
}

const FamilyMeta& meta(FamilyId id) {
    auto it = meta_table().find(id);
    if (it == meta_table().end()) throw std::invalid_argument("unknown family tag");
    return it->second;
}

}  // namespace

const char* family_name(FamilyId id) { return meta(id).name; }
const char* family_equation(FamilyId id) { return meta(id).equation; }
const std::vector<std::string>& family_fields(FamilyId id) { return meta(id).fields; }

std::optional<FamilyId> parse_family(std::string_view name) {
    for (const auto& [id, m] : meta_table())
        if (name == m.name) return id;
    return std::nullopt;
}

std::vector<FamilyId> all_families() {
    std::vector<FamilyId> out;
    for (const auto& [id, m] : meta_table()) out.push_back(id);
    return out;
}

const char* case_system_name(CaseSystem c) {
    switch (c) {
        case CaseSystem::s8_12: return "(8)/(12)";
        case CaseSystem::s9_13: return "(9)/(13)";
        case CaseSystem::s10_14: return "(10)/(14)";
        case CaseSystem::s11_15: return "(11)/(15)";
        case CaseSystem::s16: return "(16)";
        case CaseSystem::s17: return "(17)";
    }
    return "?";
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::warn: return "warn";
    }
    return "?";
}

std::optional<BigInt> Solution::field(std::string_view name) const {
    if (name == "p") return p;
    if (name == "q") return q;
    if (name == "a") return a;
    if (name == "b") return b;
    if (name == "c") return c;
    if (name == "m") return m;
    if (name == "n") return n;
    if (name == "x") return x;
    if (name == "y") return y;
    return std::nullopt;
}

std::string Solution::line() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : family_fields(family)) {
        auto v = field(f);
        if (!v) continue;
        if (!first) os << ' ';
        os << *v;
        first = false;
    }
    return os.str();
}

namespace {

std::array<BigInt, 9> sort_key(const Solution& s) {
    auto z = [](const std::optional<BigInt>& v) { return v ? *v : BigInt(0); };
    return {z(s.p), z(s.q), z(s.a), z(s.b), z(s.c), z(s.m), z(s.n), z(s.x), z(s.y)};
}

}  // namespace

bool operator<(const Solution& lhs, const Solution& rhs) {
    return sort_key(lhs) < sort_key(rhs);
}

bool operator==(const Solution& lhs, const Solution& rhs) {
    return lhs.family == rhs.family && sort_key(lhs) == sort_key(rhs);
}

CaseClassification classify_case_system(const BigInt& p, std::uint32_t a) {
    if (a < 3) throw std::invalid_argument("classify_case_system: requires a >= 3");
    if (p < 3 || (p & 1) == 0)
        throw std::invalid_argument("classify_case_system: p must be odd (p^2 = 1 mod 8 fails otherwise)");
    BigInt mod = BigInt(1) << a;
    BigInt sq = (p * p - 1);
    // 2^a must be the exact 2-part of p^2 - 1
    if (sq % mod != 0 || (sq >> a) % 2 == 0)
        throw std::invalid_argument("classify_case_system: 2^a is not the exact 2-part of p^2 - 1");

    BigInt half = BigInt(1) << (a - 1);
    BigInt r = p % mod;
    CaseClassification out{Branch::plus_one, 0, std::nullopt};
    if (r == half + 1) {
        out.branch = Branch::plus_one;
        out.k = (p - 1 - half) >> a;
    } else if (r == half - 1) {
        out.branch = Branch::minus_one;
        out.k = (p + 1 - half) >> a;
    } else {
        // exactness above already rules out p = +-1 (mod 2^a)
        throw std::invalid_argument("classify_case_system: p is outside both +-1 + 2^(a-1) branches");
    }

    if (out.k == 0) {
        out.system = out.branch == Branch::plus_one ? CaseSystem::s16 : CaseSystem::s17;
        return out;
    }
    BigInt f = 2 * out.k + 1;
    // 2k+1 = 3^b puts the 3-power on the odd cofactor side
    BigInt t = f;
    std::uint32_t b3 = 0;
    while (t % 3 == 0) { t /= 3; ++b3; }
    if (t == 1 && b3 >= 1) {
        out.system = out.branch == Branch::plus_one ? CaseSystem::s8_12 : CaseSystem::s10_14;
        return out;
    }
    if (auto pp = arith::prime_power(f)) {
        if (pp->base > 3) {
            out.system = out.branch == Branch::plus_one ? CaseSystem::s9_13 : CaseSystem::s11_15;
            return out;
        }
    }
    return out;  // 2k+1 fits no single-prime-power pattern
}

namespace {

void require(bool ok, const Solution& sol, const char* what) {
    if (!ok)
        throw std::logic_error(std::string("solution fails re-substitution (") +
                               family_name(sol.family) + " " + sol.line() + "): " + what);
}

BigInt need(const std::optional<BigInt>& v, const Solution& sol, const char* what) {
    if (!v)
        throw std::logic_error(std::string("solution missing field (") +
                               family_name(sol.family) + "): " + what);
    return *v;
}

bool prime(const BigInt& v) { return arith::is_prime(v); }

BigInt pw2(const BigInt& e) { return BigInt(1) << e.convert_to<unsigned>(); }
BigInt pw3(const BigInt& e) { return pow_big(BigInt(3), e.convert_to<unsigned>()); }
BigInt pw(const BigInt& base, const BigInt& e) { return pow_big(base, e.convert_to<unsigned>()); }

}  // namespace

void validate_solution(const Solution& sol) {
    const Solution& s = sol;
    switch (sol.family) {
        case FamilyId::F1: {
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), a = need(s.a, s, "a"),
                   b = need(s.b, s, "b"), c = need(s.c, s, "c");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(a >= 1 && b >= 1 && c >= 1, s, "a, b, c >= 1");
            require(p * p - 1 == pw2(a) * pw3(b) * pw(q, c), s, "p^2 - 1 = 2^a 3^b q^c");
            break;
        }
        case FamilyId::F2: {
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), m = need(s.m, s, "m"),
                   n = need(s.n, s, "n");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(m >= 1 && n >= 1, s, "m, n >= 1");
            require(pw2(m) - 1 == p, s, "2^m - 1 = p");
            require(pw2(m) + 1 == 3 * pw(q, n), s, "2^m + 1 = 3 q^n");
            break;
        }
        case FamilyId::F3: {
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), m = need(s.m, s, "m"),
                   n = need(s.n, s, "n");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(pw3(m) - 1 == 2 * pw(p, n), s, "3^m - 1 = 2 p^n");
            require(pw3(m) + 1 == 4 * q, s, "3^m + 1 = 4 q");
            break;
        }
        case FamilyId::F4: {
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), m = need(s.m, s, "m"),
                   n = need(s.n, s, "n");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(pw3(m) - 1 == 2 * p, s, "3^m - 1 = 2 p");
            require(pw3(m) + 1 == 4 * pw(q, n), s, "3^m + 1 = 4 q^n");
            break;
        }
        case FamilyId::F5: {
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), a = need(s.a, s, "a"),
                   b = need(s.b, s, "b");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(a >= 1 && b >= 1, s, "a, b >= 1");
            require(p * p - 1 == pw2(a) * pw3(b) * q, s, "p^2 - 1 = 2^a 3^b q");
            break;
        }
        case FamilyId::F6:
        case FamilyId::F18: {
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), m = need(s.m, s, "m");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(pw2(m) - 1 == p && pw2(m) + 1 == 3 * q, s, "2^m -+ 1 split");
            break;
        }
        case FamilyId::F7:
        case FamilyId::F19: {
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), m = need(s.m, s, "m");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(pw3(m) - 1 == 2 * p && pw3(m) + 1 == 4 * q, s, "3^m -+ 1 split");
            break;
        }
        case FamilyId::F8:
        case FamilyId::F10:
        case FamilyId::F12:
        case FamilyId::F14: {
            // 3-power on the 2k+1 side: (8)=(12) and (10)=(14)
            bool minus_branch = sol.family == FamilyId::F10 || sol.family == FamilyId::F14;
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), a = need(s.a, s, "a"),
                   b = need(s.b, s, "b"), c = need(s.c, s, "c");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(a >= 3 && b >= 1 && c >= 2, s, "a >= 3, b >= 1, c > 1");
            BigInt qc = pw(q, c);
            if (!minus_branch) {
                require(qc - 1 == pw2(a - 2) * pw3(b), s, "q^c - 1 = 2^(a-2) 3^b");
                require(p == 2 * qc - 1, s, "p = 2 q^c - 1");
            } else {
                require(qc + 1 == pw2(a - 2) * pw3(b), s, "q^c + 1 = 2^(a-2) 3^b");
                require(p == 2 * qc + 1, s, "p = 2 q^c + 1");
            }
            break;
        }
        case FamilyId::F9:
        case FamilyId::F11:
        case FamilyId::F13:
        case FamilyId::F15: {
            // prime power on the 2k+1 side: (9)=(13) and (11)=(15)
            bool minus_branch = sol.family == FamilyId::F11 || sol.family == FamilyId::F15;
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), a = need(s.a, s, "a"),
                   b = need(s.b, s, "b"), c = need(s.c, s, "c");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(a >= 3 && b >= 1 && c >= 2, s, "a >= 3, b >= 1, c > 1");
            BigInt b3 = pw3(b);
            if (!minus_branch) {
                require(b3 - 1 == pw2(a - 2) * pw(q, c), s, "3^b - 1 = 2^(a-2) q^c");
                require(p == 2 * b3 - 1, s, "p = 2*3^b - 1");
            } else {
                require(b3 + 1 == pw2(a - 2) * pw(q, c), s, "3^b + 1 = 2^(a-2) q^c");
                require(p == 2 * b3 + 1, s, "p = 2*3^b + 1");
            }
            break;
        }
        case FamilyId::F16:
        case FamilyId::F17: {
            bool minus_branch = sol.family == FamilyId::F17;
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), a = need(s.a, s, "a"),
                   b = need(s.b, s, "b"), c = need(s.c, s, "c");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(a >= 3 && b >= 1 && c >= 2, s, "a >= 3, b >= 1, c > 1");
            BigInt side = minus_branch ? pw2(a - 2) - 1 : pw2(a - 2) + 1;
            BigInt pv = minus_branch ? pw2(a - 1) - 1 : pw2(a - 1) + 1;
            require(pw3(b) * pw(q, c) == side, s, "3^b q^c = 2^(a-2) -+ 1");
            require(p == pv, s, "p = 2^(a-1) -+ 1");
            break;
        }
        case FamilyId::F20:
        case FamilyId::F22: {
            bool plus_branch = sol.family == FamilyId::F22;
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), a = need(s.a, s, "a"),
                   b = need(s.b, s, "b");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(a >= 3 && b >= 1, s, "a >= 3, b >= 1");
            if (!plus_branch) {
                require(q - 1 == pw2(a - 2) * pw3(b), s, "q - 1 = 2^(a-2) 3^b");
                require(p == 2 * q - 1, s, "p = 2q - 1");
            } else {
                require(q + 1 == pw2(a - 2) * pw3(b), s, "q + 1 = 2^(a-2) 3^b");
                require(p == 2 * q + 1, s, "p = 2q + 1");
            }
            break;
        }
        case FamilyId::F21:
        case FamilyId::F23: {
            bool plus_branch = sol.family == FamilyId::F23;
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), a = need(s.a, s, "a"),
                   b = need(s.b, s, "b");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(a >= 3 && b >= 1, s, "a >= 3, b >= 1");
            BigInt b3 = pw3(b);
            if (!plus_branch) {
                require(b3 - 1 == pw2(a - 2) * q, s, "3^b - 1 = 2^(a-2) q");
                require(p == 2 * b3 - 1, s, "p = 2*3^b - 1");
            } else {
                require(b3 + 1 == pw2(a - 2) * q, s, "3^b + 1 = 2^(a-2) q");
                require(p == 2 * b3 + 1, s, "p = 2*3^b + 1");
            }
            break;
        }
        case FamilyId::F24:
        case FamilyId::F25: {
            bool minus_branch = sol.family == FamilyId::F25;
            BigInt p = need(s.p, s, "p"), q = need(s.q, s, "q"), a = need(s.a, s, "a");
            require(prime(p) && p > 3 && prime(q) && q > 3, s, "p, q prime > 3");
            require(a >= 3, s, "a >= 3");
            BigInt side = minus_branch ? pw2(a - 2) - 1 : pw2(a - 2) + 1;
            BigInt pv = minus_branch ? pw2(a - 1) - 1 : pw2(a - 1) + 1;
            require(3 * q == side && p == pv, s, "3q = 2^(a-2) -+ 1, p = 2^(a-1) -+ 1");
            break;
        }
        case FamilyId::L2: {
            BigInt y = need(s.y, s, "y"), m = need(s.m, s, "m"), q = need(s.q, s, "q");
            require(m > 2 && y >= 2 && q >= 2, s, "m > 2, y >= 2, q >= 2");
            require(pw3(m) - 2 * pw(y, q) == 1, s, "3^m - 2 y^q = 1");
            break;
        }
        case FamilyId::L3: {
            BigInt x = need(s.x, s, "x"), y = need(s.y, s, "y"), m = need(s.m, s, "m"),
                   n = need(s.n, s, "n");
            require(prime(x) && prime(y) && m > 1 && n > 1, s, "x, y prime; m, n > 1");
            require(pw(x, m) - pw(y, n) == 1, s, "x^m - y^n = 1");
            break;
        }
        case FamilyId::L4: {
            BigInt x = need(s.x, s, "x"), y = need(s.y, s, "y"), n = need(s.n, s, "n");
            require(y > 1 && n > 2, s, "y > 1, n > 2");
            require(x * x + 1 == 2 * pw(y, n), s, "x^2 + 1 = 2 y^n");
            break;
        }
        case FamilyId::L5: {
            BigInt x = need(s.x, s, "x"), y = need(s.y, s, "y");
            bool hit = false;
            for (std::uint32_t n = 3; n <= 64 && !hit; n += 2)
                hit = (3 * x * x + 1 == 4 * pw(y, BigInt(n)));
            require(hit, s, "3 x^2 + 1 = 4 y^n for some odd n > 1");
            break;
        }
        case FamilyId::L6: {
            BigInt m = need(s.m, s, "m"), y = need(s.y, s, "y"), q = need(s.q, s, "q");
            require(m > 1 && y > 1 && q > 1, s, "m, y, q > 1");
            require(pw2(m) + 1 == 3 * pw(y, q), s, "2^m + 1 = 3 y^q");
            break;
        }
        case FamilyId::L10even: {
            BigInt b = need(s.b, s, "b"), q = need(s.q, s, "q"), c = need(s.c, s, "c");
            require(prime(q) && c > 1 && c % 2 == 0, s, "q prime, c even > 1");
            require(pw3(b) + 1 == 4 * pw(q, c), s, "3^b + 1 = 4 q^c");
            break;
        }
        default:
            throw std::invalid_argument("unknown family tag");
    }
}

}  // namespace k4dio::eqn
