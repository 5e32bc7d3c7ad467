#include "k4dio.h"

#include "k4dio/arith.hpp"
#include "k4dio/dickson.hpp"
#include "k4dio/equations.hpp"
#include "k4dio/k4.hpp"
#include "k4dio/zsigmondy.hpp"

#include <cstring>
#include <deque>
#include <memory>
#include <sstream>
#include <string>

using namespace k4dio;

namespace {

thread_local std::string g_last_error;

k4dio_status fail(k4dio_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Exceptions from the core map onto the C status codes here.
template <typename Fn>
k4dio_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const dickson::Unsupported& e) {
        return fail(K4DIO_ERR_UNSUPPORTED, e.what());
    } catch (const UncertainFactorization& e) {
        return fail(K4DIO_ERR_UNCERTAIN_FACTORIZATION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(K4DIO_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(K4DIO_ERR_INTERNAL, e.what());
    }
}

k4dio_status copy_out(const std::string& s, char* buf, size_t cap) {
    if (!buf || cap < s.size() + 1)
        return fail(K4DIO_ERR_BUFFER_TOO_SMALL,
                    "need " + std::to_string(s.size() + 1) + " bytes");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return K4DIO_OK;
}

BigInt parse_or_throw(const char* s) {
    if (!s) throw std::invalid_argument("null decimal string");
    auto v = parse_bigint(s);
    if (!v) throw std::invalid_argument(std::string("bad decimal string: '") + s + "'");
    return *v;
}

SearchBounds to_bounds(const k4dio_bounds* b) {
    SearchBounds out;
    if (b) {
        out.max_p = b->max_p;
        out.max_q = b->max_q;
        out.max_m = b->max_m;
        out.max_exp = b->max_exp;
        out.max_base = b->max_base;
        out.trial_division_bound = b->trial_division_bound;
        out.mr_rounds = b->mr_rounds;
    }
    out.validate();
    return out;
}

unsigned thread_count(const k4dio_bounds* b) { return b && b->threads ? b->threads : 1; }

// Stable string storage per handle; deque keeps addresses valid on growth.
struct Interner {
    std::deque<std::string> pool;
    const char* intern(std::string s) {
        pool.push_back(std::move(s));
        return pool.back().c_str();
    }
};

}  // namespace

extern "C" {

const char* k4dio_status_name(k4dio_status status) {
    switch (status) {
        case K4DIO_OK: return "ok";
        case K4DIO_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case K4DIO_ERR_UNKNOWN_FAMILY: return "unknown_family";
        case K4DIO_ERR_UNSUPPORTED: return "unsupported";
        case K4DIO_ERR_UNCERTAIN_FACTORIZATION: return "uncertain_factorization";
        case K4DIO_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
        case K4DIO_ERR_BAD_INDEX: return "bad_index";
        case K4DIO_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* k4dio_version(void) { return "0.1.0"; }

const char* k4dio_last_error(void) { return g_last_error.c_str(); }

void k4dio_bounds_init(k4dio_bounds* bounds) {
    if (!bounds) return;
    SearchBounds d;
    bounds->max_p = d.max_p;
    bounds->max_q = d.max_q;
    bounds->max_m = d.max_m;
    bounds->max_exp = d.max_exp;
    bounds->max_base = d.max_base;
    bounds->trial_division_bound = d.trial_division_bound;
    bounds->mr_rounds = d.mr_rounds;
    bounds->threads = 1;
}

/* ------------------------------------------------------------------ */

k4dio_status k4dio_is_prime(const char* n_dec, uint32_t mr_rounds, int* out_is_prime) {
    return guarded([&] {
        if (!out_is_prime) throw std::invalid_argument("null output");
        BigInt n = parse_or_throw(n_dec);
        if (n < 0) throw std::invalid_argument("n must be >= 0");
        *out_is_prime = arith::is_prime(n, mr_rounds ? mr_rounds : 64) ? 1 : 0;
        return K4DIO_OK;
    });
}

k4dio_status k4dio_factor_out_2_3(const char* n_dec, uint32_t* out_a, uint32_t* out_b,
                                  char* rest_buf, size_t rest_cap) {
    return guarded([&] {
        auto split = arith::factor_out_2_3(parse_or_throw(n_dec));
        if (out_a) *out_a = split.two_exp;
        if (out_b) *out_b = split.three_exp;
        return copy_out(to_string(split.rest), rest_buf, rest_cap);
    });
}

k4dio_status k4dio_perfect_power(const char* n_dec, char* base_buf, size_t base_cap,
                                 uint32_t* out_exp, int* out_found) {
    return guarded([&] {
        BigInt n = parse_or_throw(n_dec);
        if (n < 2) throw std::invalid_argument("perfect_power: n must be >= 2");
        auto pp = arith::perfect_power(n);
        if (out_found) *out_found = pp ? 1 : 0;
        if (!pp) return K4DIO_OK;
        if (out_exp) *out_exp = pp->exp;
        return copy_out(to_string(pp->base), base_buf, base_cap);
    });
}

k4dio_status k4dio_integer_nth_root(const char* n_dec, uint32_t k, char* root_buf,
                                    size_t root_cap, int* out_exact) {
    return guarded([&] {
        auto r = arith::integer_nth_root(parse_or_throw(n_dec), k);
        if (out_exact) *out_exact = r.exact ? 1 : 0;
        return copy_out(to_string(r.root), root_buf, root_cap);
    });
}

k4dio_status k4dio_sqrt_one_residues_mod_pow2(uint32_t a, char* buf, size_t cap) {
    return guarded([&] {
        auto residues = arith::sqrt_one_residues_mod_pow2(a);
        std::ostringstream os;
        for (std::size_t i = 0; i < residues.size(); ++i) {
            if (i) os << ' ';
            os << residues[i];
        }
        return copy_out(os.str(), buf, cap);
    });
}

struct k4dio_factorization {
    arith::Factorization fz;
    Interner strings;
    std::string cofactor_str;
    std::string pretty;
};

k4dio_status k4dio_factorize(const char* n_dec, const k4dio_bounds* bounds,
                             k4dio_factorization** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output");
        auto handle = new k4dio_factorization;
        handle->fz = arith::factorize(parse_or_throw(n_dec), to_bounds(bounds));
        handle->cofactor_str = to_string(handle->fz.cofactor);
        handle->pretty = handle->fz.str();
        *out = handle;
        return K4DIO_OK;
    });
}

size_t k4dio_factorization_size(const k4dio_factorization* fz) {
    return fz ? fz->fz.factors.size() : 0;
}

k4dio_status k4dio_factorization_entry(const k4dio_factorization* fz, size_t index,
                                       const char** out_prime, uint32_t* out_exp) {
    return guarded([&] {
        if (!fz || index >= fz->fz.factors.size())
            return fail(K4DIO_ERR_BAD_INDEX, "factorization entry out of range");
        if (out_prime)
            *out_prime = const_cast<k4dio_factorization*>(fz)->strings.intern(
                to_string(fz->fz.factors[index].first));
        if (out_exp) *out_exp = fz->fz.factors[index].second;
        return K4DIO_OK;
    });
}

const char* k4dio_factorization_cofactor(const k4dio_factorization* fz) {
    return fz ? fz->cofactor_str.c_str() : nullptr;
}

const char* k4dio_factorization_str(const k4dio_factorization* fz) {
    return fz ? fz->pretty.c_str() : nullptr;
}

void k4dio_factorization_free(k4dio_factorization* fz) { delete fz; }

/* ------------------------------------------------------------------ */

static k4dio_zsig_exception to_c_tag(std::optional<zsig::ExceptionTag> tag) {
    if (!tag) return K4DIO_ZSIG_NONE;
    switch (*tag) {
        case zsig::ExceptionTag::cube_plus: return K4DIO_ZSIG_CUBE_PLUS;
        case zsig::ExceptionTag::mersenne_six: return K4DIO_ZSIG_MERSENNE_SIX;
        case zsig::ExceptionTag::power_of_two_square: return K4DIO_ZSIG_POWER_OF_TWO_SQUARE;
    }
    return K4DIO_ZSIG_NONE;
}

k4dio_status k4dio_zsigmondy_exception(uint64_t a, uint64_t b, uint32_t n, int sign_plus,
                                       k4dio_zsig_exception* out_tag) {
    return guarded([&] {
        if (!out_tag) throw std::invalid_argument("null output");
        zsig::Query q{a, b, n, sign_plus ? zsig::Sign::plus : zsig::Sign::minus};
        *out_tag = to_c_tag(zsig::classify_exception(q));
        return K4DIO_OK;
    });
}

k4dio_status k4dio_primitive_prime_divisor(uint64_t a, uint64_t b, uint32_t n, int sign_plus,
                                           const k4dio_bounds* bounds, char* divisor_buf,
                                           size_t divisor_cap, k4dio_zsig_exception* out_tag) {
    return guarded([&] {
        zsig::Query q{a, b, n, sign_plus ? zsig::Sign::plus : zsig::Sign::minus};
        auto res = zsig::primitive_prime_divisor(q, to_bounds(bounds));
        if (out_tag) *out_tag = to_c_tag(res.exception);
        if (res.primitive_divisor)
            return copy_out(to_string(*res.primitive_divisor), divisor_buf, divisor_cap);
        if (divisor_buf && divisor_cap) divisor_buf[0] = '\0';
        return K4DIO_OK;
    });
}

/* ------------------------------------------------------------------ */

struct k4dio_solutions {
    std::vector<eqn::Solution> sols;
    Interner strings;
};

static k4dio_status solve_into(const char* family, const k4dio_bounds* bounds, uint32_t min_exp,
                               bool structured, k4dio_solutions** out) {
    if (!out) throw std::invalid_argument("null output");
    SearchBounds sb = to_bounds(bounds);
    eqn::SolveOptions opt;
    opt.min_exp = min_exp ? min_exp : 1;
    opt.threads = thread_count(bounds);
    auto handle = std::make_unique<k4dio_solutions>();
    if (structured) {
        handle->sols = eqn::solve_family1_structured(sb, opt.threads);
    } else {
        auto id = eqn::parse_family(family ? family : "");
        if (!id)
            return fail(K4DIO_ERR_UNKNOWN_FAMILY,
                        std::string("unknown family tag: '") + (family ? family : "") + "'");
        handle->sols = eqn::solve_family(*id, sb, opt);
    }
    *out = handle.release();
    return K4DIO_OK;
}

k4dio_status k4dio_solve_family(const char* family, const k4dio_bounds* bounds,
                                uint32_t min_exp, k4dio_solutions** out) {
    return guarded([&] { return solve_into(family, bounds, min_exp, false, out); });
}

k4dio_status k4dio_solve_family1_structured(const k4dio_bounds* bounds, k4dio_solutions** out) {
    return guarded([&] { return solve_into(nullptr, bounds, 2, true, out); });
}

size_t k4dio_solutions_size(const k4dio_solutions* sols) { return sols ? sols->sols.size() : 0; }

const char* k4dio_solution_line(const k4dio_solutions* sols, size_t index) {
    if (!sols || index >= sols->sols.size()) return nullptr;
    return const_cast<k4dio_solutions*>(sols)->strings.intern(sols->sols[index].line());
}

const char* k4dio_solution_field(const k4dio_solutions* sols, size_t index, const char* field) {
    if (!sols || index >= sols->sols.size() || !field) return nullptr;
    auto v = sols->sols[index].field(field);
    if (!v) return nullptr;
    return const_cast<k4dio_solutions*>(sols)->strings.intern(to_string(*v));
}

const char* k4dio_solution_case_system(const k4dio_solutions* sols, size_t index) {
    if (!sols || index >= sols->sols.size()) return nullptr;
    auto cs = sols->sols[index].case_system;
    if (!cs) return nullptr;
    return eqn::case_system_name(*cs);
}

void k4dio_solutions_free(k4dio_solutions* sols) { delete sols; }

k4dio_status k4dio_family_fields(const char* family, char* buf, size_t cap) {
    return guarded([&] {
        auto id = eqn::parse_family(family ? family : "");
        if (!id)
            return fail(K4DIO_ERR_UNKNOWN_FAMILY,
                        std::string("unknown family tag: '") + (family ? family : "") + "'");
        std::ostringstream os;
        const auto& fields = eqn::family_fields(*id);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os << ' ';
            os << fields[i];
        }
        return copy_out(os.str(), buf, cap);
    });
}

k4dio_status k4dio_family_equation(const char* family, char* buf, size_t cap) {
    return guarded([&] {
        auto id = eqn::parse_family(family ? family : "");
        if (!id)
            return fail(K4DIO_ERR_UNKNOWN_FAMILY,
                        std::string("unknown family tag: '") + (family ? family : "") + "'");
        return copy_out(eqn::family_equation(*id), buf, cap);
    });
}

k4dio_status k4dio_family_list(char* buf, size_t cap) {
    return guarded([&] {
        std::ostringstream os;
        for (eqn::FamilyId id : eqn::all_families()) os << eqn::family_name(id) << '\n';
        return copy_out(os.str(), buf, cap);
    });
}

k4dio_status k4dio_classify_case_system(const char* p_dec, uint32_t a, int* out_branch,
                                        char* k_buf, size_t k_cap, char* system_buf,
                                        size_t system_cap) {
    return guarded([&] {
        auto cls = eqn::classify_case_system(parse_or_throw(p_dec), a);
        if (out_branch) *out_branch = cls.branch == eqn::Branch::plus_one ? 1 : -1;
        if (k_buf) {
            k4dio_status st = copy_out(to_string(cls.k), k_buf, k_cap);
            if (st != K4DIO_OK) return st;
        }
        if (system_buf)
            return copy_out(cls.system ? eqn::case_system_name(*cls.system) : "", system_buf,
                            system_cap);
        return K4DIO_OK;
    });
}

/* ------------------------------------------------------------------ */

struct k4dio_report {
    std::vector<eqn::CheckResult> checks;
    std::vector<std::string> warnings;
    bool pass = false;
};

k4dio_status k4dio_verify_theorem1(const k4dio_bounds* bounds, k4dio_report** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output");
        auto rep = eqn::verify_theorem1(to_bounds(bounds), thread_count(bounds));
        auto handle = new k4dio_report{std::move(rep.checks), std::move(rep.warnings), rep.pass};
        *out = handle;
        return K4DIO_OK;
    });
}

k4dio_status k4dio_verify_paper(const k4dio_bounds* bounds, int inject_fault,
                                k4dio_report** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output");
        eqn::PaperVerifyConfig cfg;
        cfg.base = to_bounds(bounds);
        cfg.threads = thread_count(bounds);
        cfg.inject_fault = inject_fault != 0;
        auto rep = eqn::verify_paper(cfg);
        auto handle = new k4dio_report{std::move(rep.checks), std::move(rep.warnings), rep.pass};
        *out = handle;
        return K4DIO_OK;
    });
}

int k4dio_report_pass(const k4dio_report* report) { return report && report->pass ? 1 : 0; }

size_t k4dio_report_size(const k4dio_report* report) { return report ? report->checks.size() : 0; }

k4dio_status k4dio_report_entry(const k4dio_report* report, size_t index,
                                const char** out_name, int* out_status,
                                const char** out_detail) {
    return guarded([&] {
        if (!report || index >= report->checks.size())
            return fail(K4DIO_ERR_BAD_INDEX, "report entry out of range");
        const auto& entry = report->checks[index];
        if (out_name) *out_name = entry.name.c_str();
        if (out_status) *out_status = static_cast<int>(entry.status);
        if (out_detail) *out_detail = entry.detail.c_str();
        return K4DIO_OK;
    });
}

size_t k4dio_report_warning_count(const k4dio_report* report) {
    return report ? report->warnings.size() : 0;
}

const char* k4dio_report_warning(const k4dio_report* report, size_t index) {
    if (!report || index >= report->warnings.size()) return nullptr;
    return report->warnings[index].c_str();
}

void k4dio_report_free(k4dio_report* report) { delete report; }

/* ------------------------------------------------------------------ */

struct k4dio_k4_list {
    std::vector<k4::Candidate> candidates;
    SearchBounds bounds;
    Interner strings;
};

k4dio_status k4dio_k4_check(uint64_t q, const k4dio_bounds* bounds, k4dio_k4_list** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output");
        auto handle = new k4dio_k4_list;
        handle->bounds = to_bounds(bounds);
        handle->candidates.push_back(k4::order_check(q, handle->bounds));
        *out = handle;
        return K4DIO_OK;
    });
}

k4dio_status k4dio_k4_enumerate(uint64_t max_q, const k4dio_bounds* bounds,
                                int include_rejected, k4dio_k4_list** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output");
        auto handle = new k4dio_k4_list;
        handle->bounds = to_bounds(bounds);
        handle->candidates =
            k4::enumerate_candidates(max_q, handle->bounds, include_rejected != 0);
        *out = handle;
        return K4DIO_OK;
    });
}

size_t k4dio_k4_size(const k4dio_k4_list* list) { return list ? list->candidates.size() : 0; }

const char* k4dio_k4_field(const k4dio_k4_list* list, size_t index, const char* field) {
    if (!list || index >= list->candidates.size() || !field) return nullptr;
    auto* mut = const_cast<k4dio_k4_list*>(list);
    const k4::Candidate& cand = list->candidates[index];
    std::string f = field;
    if (f == "q") return mut->strings.intern(std::to_string(cand.q));
    if (f == "base") return mut->strings.intern(std::to_string(cand.base));
    if (f == "exp") return mut->strings.intern(std::to_string(cand.exp));
    if (f == "order") return mut->strings.intern(to_string(cand.order));
    if (f == "verdict") return k4::verdict_name(cand.verdict);
    if (f == "factorization") return mut->strings.intern(cand.factorization.str());
    if (f == "primes") {
        std::ostringstream os;
        for (std::size_t i = 0; i < cand.distinct_primes.size(); ++i) {
            if (i) os << ',';
            os << cand.distinct_primes[i];
        }
        return mut->strings.intern(os.str());
    }
    if (f == "families") {
        std::ostringstream os;
        auto fams = k4::link_families(cand, list->bounds);
        for (std::size_t i = 0; i < fams.size(); ++i) {
            if (i) os << ',';
            os << eqn::family_name(fams[i]);
        }
        return mut->strings.intern(os.str());
    }
    return nullptr;
}

void k4dio_k4_free(k4dio_k4_list* list) { delete list; }

/* ------------------------------------------------------------------ */

k4dio_status k4dio_parse_system(const char* spec, char* canon_buf, size_t canon_cap,
                                char* pretty_buf, size_t pretty_cap) {
    return guarded([&] {
        auto sys = dickson::parse_system_spec(spec ? spec : "");
        if (canon_buf) {
            k4dio_status st = copy_out(sys.spec(), canon_buf, canon_cap);
            if (st != K4DIO_OK) return st;
        }
        if (pretty_buf) return copy_out(sys.str(), pretty_buf, pretty_cap);
        return K4DIO_OK;
    });
}

k4dio_status k4dio_builtin_systems(char* buf, size_t cap) {
    return guarded([&] {
        std::ostringstream os;
        for (const auto& sys : dickson::builtin_systems())
            os << sys.name << ' ' << sys.spec() << ' ' << sys.str() << '\n';
        return copy_out(os.str(), buf, cap);
    });
}

k4dio_status k4dio_admissible(const char* spec, uint64_t prime_bound, int* out_admissible,
                              uint64_t* out_blocking_prime, uint64_t* out_tested_bound,
                              char* witness_buf, size_t witness_cap, char* positivity_buf,
                              size_t positivity_cap) {
    return guarded([&] {
        auto sys = dickson::parse_system_spec(spec ? spec : "");
        auto verdict = dickson::is_admissible(sys, prime_bound ? prime_bound : 100);
        if (out_admissible) *out_admissible = verdict.admissible ? 1 : 0;
        if (out_blocking_prime)
            *out_blocking_prime = verdict.blocking_prime ? *verdict.blocking_prime : 0;
        if (out_tested_bound) *out_tested_bound = verdict.tested_prime_bound;
        if (witness_buf) {
            std::ostringstream os;
            for (std::size_t i = 0; i < verdict.witnesses.size(); ++i) {
                if (i) os << ';';
                os << verdict.witnesses[i].first << ':';
                const auto& pt = verdict.witnesses[i].second;
                for (std::size_t j = 0; j < pt.size(); ++j) {
                    if (j) os << ',';
                    os << pt[j];
                }
            }
            k4dio_status st = copy_out(os.str(), witness_buf, witness_cap);
            if (st != K4DIO_OK) return st;
        }
        if (positivity_buf) {
            std::ostringstream os;
            if (verdict.positivity_witness) {
                const auto& pt = *verdict.positivity_witness;
                for (std::size_t j = 0; j < pt.size(); ++j) {
                    if (j) os << ',';
                    os << pt[j];
                }
            }
            return copy_out(os.str(), positivity_buf, positivity_cap);
        }
        return K4DIO_OK;
    });
}

k4dio_status k4dio_count_simultaneous_primes(const char* spec, uint64_t h, uint32_t threads,
                                             uint64_t* out_count) {
    return guarded([&] {
        if (!out_count) throw std::invalid_argument("null output");
        auto sys = dickson::parse_system_spec(spec ? spec : "");
        *out_count = dickson::count_simultaneous_primes(sys, h, threads ? threads : 1);
        return K4DIO_OK;
    });
}

k4dio_status k4dio_bateman_horn(const char* spec, uint64_t euler_prime_bound,
                                int* out_admissible, double* out_cf, double* out_last_delta) {
    return guarded([&] {
        auto sys = dickson::parse_system_spec(spec ? spec : "");
        auto ep = dickson::bateman_horn_constant(sys, euler_prime_bound);
        if (out_admissible) *out_admissible = ep.admissible ? 1 : 0;
        if (out_cf) *out_cf = ep.cf;
        if (out_last_delta) *out_last_delta = ep.last_factor_delta;
        return K4DIO_OK;
    });
}

k4dio_status k4dio_predicted_count(const char* spec, uint64_t h, double cf,
                                   double* out_closed, double* out_integral,
                                   int* out_integral_available) {
    return guarded([&] {
        auto sys = dickson::parse_system_spec(spec ? spec : "");
        auto pred = dickson::predicted_count(sys, h, cf);
        if (out_closed) *out_closed = pred.closed_form;
        if (out_integral) *out_integral = pred.integral_form;
        if (out_integral_available) *out_integral_available = pred.integral_available ? 1 : 0;
        return K4DIO_OK;
    });
}

k4dio_status k4dio_count_prime_aps(uint32_t length_m, uint64_t h, uint64_t* out_count) {
    return guarded([&] {
        if (!out_count) throw std::invalid_argument("null output");
        *out_count = dickson::count_prime_aps(length_m, h);
        return K4DIO_OK;
    });
}

struct k4dio_gap_table {
    std::vector<std::pair<uint64_t, uint64_t>> rows;
};

k4dio_status k4dio_gap_pair_counts(uint64_t max_gap, uint64_t n, k4dio_gap_table** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output");
        auto handle = new k4dio_gap_table{dickson::gap_pair_counts(max_gap, n)};
        *out = handle;
        return K4DIO_OK;
    });
}

size_t k4dio_gap_table_size(const k4dio_gap_table* table) { return table ? table->rows.size() : 0; }

k4dio_status k4dio_gap_table_entry(const k4dio_gap_table* table, size_t index,
                                   uint64_t* out_gap, uint64_t* out_count) {
    return guarded([&] {
        if (!table || index >= table->rows.size())
            return fail(K4DIO_ERR_BAD_INDEX, "gap table entry out of range");
        if (out_gap) *out_gap = table->rows[index].first;
        if (out_count) *out_count = table->rows[index].second;
        return K4DIO_OK;
    });
}

void k4dio_gap_table_free(k4dio_gap_table* table) { delete table; }

k4dio_status k4dio_sieve_report(const char* spec, uint64_t h, uint64_t euler_prime_bound,
                                uint32_t threads, k4dio_sieve_summary* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output");
        auto sys = dickson::parse_system_spec(spec ? spec : "");
        auto rep = dickson::sieve_report(sys, h, euler_prime_bound ? euler_prime_bound : 100000,
                                         threads ? threads : 1);
        out->empirical_count = rep.empirical_count;
        out->admissible = rep.constant.admissible ? 1 : 0;
        out->blocking_prime = rep.constant.blocking_prime ? *rep.constant.blocking_prime : 0;
        out->cf = rep.constant.cf;
        out->predicted_closed = rep.prediction.closed_form;
        out->predicted_integral = rep.prediction.integral_form;
        out->integral_available = rep.prediction.integral_available ? 1 : 0;
        out->ratio = rep.ratio;
        return K4DIO_OK;
    });
}

} /* extern "C" */
