#include "k4dio/equations.hpp"
#include "k4dio/zsigmondy.hpp"

#include <algorithm>
#include <sstream>

namespace k4dio::eqn {

namespace {

Solution make_f1(std::uint64_t p, std::uint64_t q, std::uint32_t a, std::uint32_t b,
                 std::uint32_t c) {
    Solution s{.family = FamilyId::F1};
    s.p = p;
    s.q = q;
    s.a = a;
    s.b = b;
    s.c = c;
    return s;
}

// The classified solution set of family (1) with c > 1.
const std::vector<Solution>& family1_canonical() {
    static const std::vector<Solution> v = {make_f1(97, 7, 6, 1, 2), make_f1(577, 17, 7, 2, 2)};
    return v;
}

std::string list_lines(const std::vector<Solution>& sols) {
    if (sols.empty()) return "(none)";
    std::ostringstream os;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        if (i) os << "; ";
        os << "(" << sols[i].line() << ")";
    }
    return os.str();
}

bool sort_eq(const Solution& a, const Solution& b) {
    return !(a < b) && !(b < a);
}

bool same_tuples(const std::vector<Solution>& lhs, const std::vector<Solution>& rhs) {
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!(sort_eq(lhs[i], rhs[i]))) return false;
    return true;
}

}  // namespace

Theorem1Report verify_theorem1(const SearchBounds& bounds, unsigned threads) {
    bounds.validate();
    Theorem1Report rep;
    auto& checks = rep.checks;

    SolveOptions opt;
    opt.min_exp = 2;
    opt.threads = threads;
    rep.direct = solve_family(FamilyId::F1, bounds, opt);
    rep.structured = solve_family1_structured(bounds, threads);

    {
        bool agree = rep.direct.size() == rep.structured.size();
        for (std::size_t i = 0; agree && i < rep.direct.size(); ++i)
            agree = sort_eq(rep.direct[i], rep.structured[i]);
        checks.push_back({"family-(1)-routes-agree",
                          agree ? CheckStatus::pass : CheckStatus::fail,
                          "direct scan vs case-system route: " +
                              std::to_string(rep.direct.size()) + " vs " +
                              std::to_string(rep.structured.size()) + " solutions"});
    }

    {
        std::vector<Solution> expected;
        for (const Solution& s : family1_canonical())
            if (*s.p <= bounds.max_p) expected.push_back(s);
        bool match = same_tuples(rep.direct, expected);
        std::ostringstream os;
        os << expected.size() << " of " << family1_canonical().size()
           << " canonical tuples in range; found " << list_lines(rep.direct);
        checks.push_back({"family-(1)-c>1-solution-set",
                          match ? CheckStatus::pass : CheckStatus::fail, os.str()});
    }

    // Case system (14): q^c + 1 always keeps a prime factor outside {2, 3},
    // certified through a primitive divisor of q^c + 1.
    {
        std::uint64_t cap = bounds.max_p >= 3 ? (bounds.max_p - 1) / 2 : 0;
        std::size_t pairs = 0;
        bool ok = true;
        std::string why;
        bool uncertain = false;
        std::uint64_t qmax = cap >= 25 ? to_u64(arith::integer_nth_root(BigInt(cap), 2).root) : 0;
        arith::for_primes(5, qmax, [&](std::uint64_t q) {
            for (std::uint32_t c = 2; ok; ++c) {
                BigInt qc = pow_big(BigInt(q), c);
                if (qc > cap) break;
                ++pairs;
                try {
                    auto res = zsig::primitive_prime_divisor({q, 1, c, zsig::Sign::plus}, bounds);
                    if (!res.primitive_divisor || *res.primitive_divisor == 2 ||
                        *res.primitive_divisor == 3) {
                        ok = false;
                        why = "q=" + std::to_string(q) + " c=" + std::to_string(c);
                    }
                } catch (const UncertainFactorization& e) {
                    uncertain = true;
                    rep.warnings.push_back(e.what());
                }
            }
        });
        std::ostringstream os;
        os << "primitive divisor outside {2,3} certified for " << pairs
           << " (q, c) pairs with q^c <= " << cap;
        if (!ok) os << "; counterexample at " << why;
        checks.push_back({"case-system-(14)-blocked-by-primitive-divisor",
                          !ok ? CheckStatus::fail
                              : (uncertain ? CheckStatus::warn : CheckStatus::pass),
                          os.str()});
    }

    for (FamilyId fam : {FamilyId::F13, FamilyId::F15}) {
        auto found = solve_family(fam, bounds);
        std::string name = std::string("case-system-") +
                           (fam == FamilyId::F13 ? "(13)" : "(15)") + "-empty";
        checks.push_back({name, found.empty() ? CheckStatus::pass : CheckStatus::fail,
                          found.empty() ? "no solutions in range"
                                        : "unexpected " + list_lines(found)});
    }

    // k = 0 systems (16)/(17): any in-range decomposition must have b = 1,
    // and even then no prime power fits.
    {
        bool b_forced = true;
        std::string why;
        std::uint32_t amax = 3;
        while ((BigInt(1) << amax) - 1 <= bounds.max_p) ++amax;
        for (std::uint32_t a = 3; a <= amax; ++a) {
            for (int sgn : {+1, -1}) {
                BigInt side = (BigInt(1) << (a - 2)) + sgn;
                std::uint32_t b = 0;
                BigInt rest = side;
                while (rest % 3 == 0) { rest /= 3; ++b; }
                if (b < 2 || rest <= 1) continue;
                if (auto pp = arith::prime_power(rest, bounds.mr_rounds)) {
                    if (pp->base > 3 && pp->exp >= 2) {
                        b_forced = false;
                        why = "a=" + std::to_string(a) + " sign=" + std::to_string(sgn);
                    }
                }
            }
        }
        auto f16 = solve_family(FamilyId::F16, bounds);
        auto f17 = solve_family(FamilyId::F17, bounds);
        bool empty = f16.empty() && f17.empty();
        std::ostringstream os;
        os << "exponents a <= " << amax << ": no b >= 2 decomposition";
        if (!b_forced) os << " FAILED at " << why;
        os << "; systems empty: " << (empty ? "yes" : "no");
        checks.push_back({"case-systems-(16)(17)-force-b=1-and-stay-empty",
                          (b_forced && empty) ? CheckStatus::pass : CheckStatus::fail,
                          os.str()});
    }

    rep.pass = std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::fail;
    });
    return rep;
}

namespace {

Solution tuple_of(FamilyId fam, std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
    Solution s{.family = fam};
    for (const auto& [k, v] : kv) {
        std::string key = k;
        if (key == "p") s.p = v;
        else if (key == "q") s.q = v;
        else if (key == "a") s.a = v;
        else if (key == "b") s.b = v;
        else if (key == "c") s.c = v;
        else if (key == "m") s.m = v;
        else if (key == "n") s.n = v;
        else if (key == "x") s.x = v;
        else if (key == "y") s.y = v;
    }
    return s;
}

struct Claim {
    std::string name;
    FamilyId family;
    SearchBounds bounds;
    SolveOptions options;
    std::vector<Solution> expected;  // complete claimed set; filtered to range
    std::string range_note;
};

void run_claim(const Claim& claim, std::vector<CheckResult>& checks,
               std::vector<std::string>& warnings, bool inject_fault) {
    std::vector<Solution> found;
    try {
        found = solve_family(claim.family, claim.bounds, claim.options);
    } catch (const UncertainFactorization& e) {
        warnings.push_back(e.what());
        checks.push_back({claim.name, CheckStatus::warn, e.what()});
        return;
    }
    if (inject_fault) {
        // negative-control mode: corrupt the found set so the verdict trips
        Solution bogus{.family = claim.family};
        bogus.p = 9991;
        bogus.q = 9991;
        found.push_back(bogus);
    }
    bool match = found.size() == claim.expected.size();
    for (std::size_t i = 0; match && i < found.size(); ++i)
        match = !(found[i] < claim.expected[i]) && !(claim.expected[i] < found[i]);
    std::ostringstream os;
    os << "expected " << list_lines(claim.expected) << ", found " << list_lines(found);
    if (!claim.range_note.empty()) os << " [" << claim.range_note << "]";
    checks.push_back({claim.name, match ? CheckStatus::pass : CheckStatus::fail, os.str()});
}

}  // namespace

PaperReport verify_paper(const PaperVerifyConfig& config) {
    PaperReport rep;

    SearchBounds t1_bounds = config.base;
    Theorem1Report t1 = verify_theorem1(t1_bounds, config.threads);
    for (CheckResult c : t1.checks) {
        c.name = "theorem-1/" + c.name;
        rep.checks.push_back(std::move(c));
    }
    rep.warnings.insert(rep.warnings.end(), t1.warnings.begin(), t1.warnings.end());

    std::vector<Claim> claims;
    auto bounded = [&](auto&& mutate) {
        SearchBounds b = config.base;
        mutate(b);
        return b;
    };

    {
        Claim c{"family-(2)-empty-for-n>1", FamilyId::F2,
                bounded([&](SearchBounds& b) { b.max_m = config.family_max_m; }),
                SolveOptions{.min_exp = 2},
                {},
                "m <= " + std::to_string(config.family_max_m)};
        claims.push_back(std::move(c));
    }
    {
        Claim c{"family-(3)-unique-solution-for-n>1", FamilyId::F3,
                bounded([&](SearchBounds& b) { b.max_m = config.family_max_m; }),
                SolveOptions{.min_exp = 2},
                {tuple_of(FamilyId::F3, {{"p", 11}, {"q", 61}, {"m", 5}, {"n", 2}})},
                "m <= " + std::to_string(config.family_max_m)};
        if (config.family_max_m < 5) c.expected.clear();
        claims.push_back(std::move(c));
    }
    {
        Claim c{"family-(4)-empty-for-n>1", FamilyId::F4,
                bounded([&](SearchBounds& b) { b.max_m = config.family_max_m; }),
                SolveOptions{.min_exp = 2},
                {},
                "m <= " + std::to_string(config.family_max_m)};
        claims.push_back(std::move(c));
    }
    {
        Claim c{"lemma-2-unique-solution", FamilyId::L2,
                bounded([&](SearchBounds& b) { b.max_m = config.l2_max_m; }),
                SolveOptions{},
                {tuple_of(FamilyId::L2, {{"y", 11}, {"m", 5}, {"q", 2}})},
                "m <= " + std::to_string(config.l2_max_m)};
        if (config.l2_max_m < 5) c.expected.clear();
        claims.push_back(std::move(c));
    }
    {
        Claim c{"lemma-3-unique-solution", FamilyId::L3,
                bounded([&](SearchBounds& b) {
                    b.max_base = config.l3_max_base;
                    b.max_exp = config.l3_max_exp;
                }),
                SolveOptions{},
                {tuple_of(FamilyId::L3, {{"x", 3}, {"y", 2}, {"m", 2}, {"n", 3}})},
                "bases <= " + std::to_string(config.l3_max_base) + ", exponents <= " +
                    std::to_string(config.l3_max_exp)};
        if (config.l3_max_base < 3 || config.l3_max_exp < 3) c.expected.clear();
        claims.push_back(std::move(c));
    }
    {
        Claim c{"lemma-4-unique-solution", FamilyId::L4,
                bounded([&](SearchBounds& b) { b.max_base = config.l4_max_base; }),
                SolveOptions{},
                {tuple_of(FamilyId::L4, {{"x", 239}, {"y", 13}, {"n", 4}})},
                "x <= " + std::to_string(config.l4_max_base)};
        if (config.l4_max_base < 239) c.expected.clear();
        claims.push_back(std::move(c));
    }
    {
        Claim c{"lemma-5-unique-solution", FamilyId::L5,
                bounded([&](SearchBounds& b) {
                    b.max_base = config.l5_max_base;
                    b.max_exp = config.l5_max_exp;
                }),
                SolveOptions{},
                {tuple_of(FamilyId::L5, {{"x", 1}, {"y", 1}})},
                "x <= " + std::to_string(config.l5_max_base) + ", odd n <= " +
                    std::to_string(config.l5_max_exp)};
        claims.push_back(std::move(c));
    }
    {
        Claim c{"lemma-6-empty", FamilyId::L6,
                bounded([&](SearchBounds& b) { b.max_m = config.l6_max_m; }),
                SolveOptions{},
                {},
                "m <= " + std::to_string(config.l6_max_m)};
        claims.push_back(std::move(c));
    }
    {
        Claim c{"3^b+1=4q^c-empty-for-even-c", FamilyId::L10even,
                bounded([&](SearchBounds& b) { b.max_exp = config.l10_max_exp; }),
                SolveOptions{},
                {},
                "b <= " + std::to_string(config.l10_max_exp)};
        claims.push_back(std::move(c));
    }

    bool injected = false;
    for (const Claim& claim : claims) {
        bool fault_here = config.inject_fault && !injected &&
                          claim.family == FamilyId::F3;
        injected = injected || fault_here;
        run_claim(claim, rep.checks, rep.warnings, fault_here);
    }

    rep.pass = std::none_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::fail;
    });
    return rep;
}

}  // namespace k4dio::eqn
