#pragma once

#include "k4dio/arith.hpp"
#include "k4dio/bigint.hpp"
#include "k4dio/bounds.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k4dio::eqn {

// The catalogued equation families: F1..F7 are the base problems, F8..F17
// the mod-2^a case systems of the p^2 - 1 analysis, F18..F25 the residual
// one-exponent systems, and the L tags the bounded lemma verifiers.
enum class FamilyId : int {
    F1 = 1, F2, F3, F4, F5, F6, F7,
    F8, F9, F10, F11, F12, F13, F14, F15, F16, F17,
    F18, F19, F20, F21, F22, F23, F24, F25,
    L2 = 102, L3, L4, L5, L6,
    L10even = 110,
};

const char* family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);
const char* family_equation(FamilyId id);
// Display/record order of the populated value slots, e.g. {"p","q","m","n"}.
const std::vector<std::string>& family_fields(FamilyId id);
std::vector<FamilyId> all_families();

enum class Branch { plus_one, minus_one };

// Case systems are tagged by their paired presentations: (8) rewrites to
// (12), (9) to (13), (10) to (14), (11) to (15); (16)/(17) are the k = 0
// branches.
enum class CaseSystem { s8_12, s9_13, s10_14, s11_15, s16, s17 };
const char* case_system_name(CaseSystem c);

struct Solution {
    FamilyId family;
    std::optional<BigInt> p, q, a, b, c, m, n, x, y;
    std::optional<CaseSystem> case_system;  // set by the structured route

    // Values in family display order, space-separated: "11 61 5 2".
    std::string line() const;
    // Uniform ordering key (p, q, a, b, c, m, n, x, y), absent slots as 0.
    friend bool operator<(const Solution& lhs, const Solution& rhs);
    friend bool operator==(const Solution& lhs, const Solution& rhs);
    std::optional<BigInt> field(std::string_view name) const;
};

struct SolveOptions {
    std::uint32_t min_exp = 1;  // lower bound on c (F1) or n (F2..F4)
    unsigned threads = 1;       // used by the prime-scan families
};

// Exactly the in-bounds solutions of the family, canonically sorted. Every
// returned tuple re-substitutes exactly (checked before returning).
std::vector<Solution> solve_family(FamilyId family, const SearchBounds& bounds,
                                   const SolveOptions& options = {});

// The p-scan route for family F1 with c >= 2: factor p^2 - 1 directly and
// test the 2,3-free part as a prime power. Tags each solution with the case
// system it instantiates.
std::vector<Solution> solve_family1_structured(const SearchBounds& bounds,
                                               unsigned threads = 1);

// Lemma verifiers are plain family solves under the lemma side conditions.
std::vector<Solution> verify_lemma(FamilyId lemma, const SearchBounds& bounds);

struct CaseClassification {
    Branch branch;
    BigInt k;
    std::optional<CaseSystem> system;  // empty when 2k+1 fits no pattern
};

// Locates p inside the four-root structure of x^2 = 1 (mod 2^a). Requires
// a >= 3, p odd, and 2^a the exact 2-part of p^2 - 1.
CaseClassification classify_case_system(const BigInt& p, std::uint32_t a);

// Throws std::logic_error when a solution fails its own family equations;
// solvers run it on everything they return.
void validate_solution(const Solution& sol);

enum class CheckStatus { pass, fail, warn };
const char* check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct Theorem1Report {
    std::vector<Solution> direct;
    std::vector<Solution> structured;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    bool pass = false;
};

// Runs both routes, compares them against the canonical classification, and
// re-checks every intermediate case-system claim inside the bounds.
Theorem1Report verify_theorem1(const SearchBounds& bounds, unsigned threads = 1);

// Per-claim caps for the whole-catalogue verification run. The defaults are
// the documented reference bounds; raising them only enlarges the searches.
struct PaperVerifyConfig {
    SearchBounds base;
    std::uint32_t family_max_m = 60;   // families (2)-(4)
    std::uint32_t l2_max_m = 40;
    std::uint64_t l3_max_base = 1000;
    std::uint32_t l3_max_exp = 30;
    std::uint64_t l4_max_base = 1000;
    std::uint64_t l5_max_base = 10000;
    std::uint32_t l5_max_exp = 25;
    std::uint32_t l6_max_m = 60;
    std::uint32_t l10_max_exp = 60;
    unsigned threads = 1;
    bool inject_fault = false;  // negative-control mode: corrupt one result set
};

struct PaperReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    bool pass = false;
};

PaperReport verify_paper(const PaperVerifyConfig& config);

}  // namespace k4dio::eqn
