#include "k4dio/dickson.hpp"

#include "k4dio/arith.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

namespace k4dio::dickson {

long long LinearForm::eval(const std::vector<long long>& point) const {
    long long v = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * point[i];
    return v;
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool univariate = coeffs.size() == 1;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        long long c = coeffs[i];
        if (c == 0) continue;
        std::string var = univariate ? "x" : "x" + std::to_string(i + 1);
        if (first) {
            if (c == -1) os << "-";
            else if (c != 1) os << c;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (std::abs(c) != 1) os << std::abs(c);
        }
        os << var;
        first = false;
    }
    if (first) os << constant;
    else if (constant > 0) os << " + " << constant;
    else if (constant < 0) os << " - " << -constant;
    return os.str();
}

std::string LinearSystem::spec() const {
    std::ostringstream os;
    for (std::size_t f = 0; f < forms.size(); ++f) {
        if (f) os << ";";
        for (long long c : forms[f].coeffs) os << c << ",";
        os << forms[f].constant;
    }
    return os.str();
}

std::string LinearSystem::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t f = 0; f < forms.size(); ++f) {
        if (f) os << ", ";
        os << forms[f].str();
    }
    os << "}";
    return os.str();
}

void LinearSystem::validate() const {
    if (forms.empty()) throw std::invalid_argument("linear system needs at least one form");
    std::size_t n = forms.front().coeffs.size();
    if (n == 0) throw std::invalid_argument("linear system needs at least one variable");
    for (const LinearForm& f : forms) {
        if (f.coeffs.size() != n)
            throw std::invalid_argument("all forms must share the variable count");
        if (std::all_of(f.coeffs.begin(), f.coeffs.end(), [](long long c) { return c == 0; }))
            throw std::invalid_argument("form has all coefficients zero");
    }
}

namespace {

LinearSystem make_univariate(std::string name, std::vector<std::pair<long long, long long>> ab) {
    LinearSystem s;
    s.name = std::move(name);
    for (auto [a, b] : ab) s.forms.push_back(LinearForm{{a}, b});
    return s;
}

}  // namespace

const std::vector<LinearSystem>& builtin_systems() {
    static const std::vector<LinearSystem> systems = {
        make_univariate("(26)", {{1, 0}, {3, -2}}),
        make_univariate("(27)", {{1, 0}, {2, -1}}),
        make_univariate("(28)", {{1, 0}, {2, 1}}),
        make_univariate("(29)", {{1, 0}, {4, 1}}),
        make_univariate("(30a)", {{1, 0}, {4, -1}}),
        make_univariate("(30b)", {{1, 0}, {8, -1}}),
        make_univariate("(31)", {{1, 0}, {6, -1}}),
        make_univariate("(32)", {{1, 0}, {6, 1}}),
        make_univariate("twin", {{1, 0}, {1, 2}}),
        make_univariate("sophie", {{1, 0}, {2, 1}}),
    };
    return systems;
}

LinearSystem parse_system_spec(const std::string& raw) {
    std::string spec = raw;
    // trim
    auto issp = [](char c) { return c == ' ' || c == '\t'; };
    while (!spec.empty() && issp(spec.front())) spec.erase(spec.begin());
    while (!spec.empty() && issp(spec.back())) spec.pop_back();
    if (spec.empty()) throw std::invalid_argument("empty system spec");

    for (const LinearSystem& s : builtin_systems())
        if (spec == s.name) return s;
    if (spec == "(30)") {
        // the catalogue keeps both exponent instances; bare (30) means the a=3 one
        for (const LinearSystem& s : builtin_systems())
            if (s.name == "(30a)") return s;
    }

    LinearSystem out;
    out.name = spec;
    std::stringstream forms_in(spec);
    std::string form_str;
    while (std::getline(forms_in, form_str, ';')) {
        std::stringstream vals_in(form_str);
        std::string val;
        std::vector<long long> vals;
        while (std::getline(vals_in, val, ',')) {
            std::size_t pos = 0;
            long long v;
            try {
                v = std::stoll(val, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad integer in system spec: '" + val + "'");
            }
            while (pos < val.size() && issp(val[pos])) ++pos;
            if (pos != val.size())
                throw std::invalid_argument("bad integer in system spec: '" + val + "'");
            vals.push_back(v);
        }
        if (vals.size() < 2)
            throw std::invalid_argument("each form needs at least one coefficient and a constant");
        LinearForm f;
        f.constant = vals.back();
        vals.pop_back();
        f.coeffs = std::move(vals);
        out.forms.push_back(std::move(f));
    }
    out.validate();
    return out;
}

namespace {

// Walks all points of [0, r)^n in lexicographic order.
bool next_point(std::vector<long long>& pt, long long r) {
    for (std::size_t i = 0; i < pt.size(); ++i) {
        if (++pt[i] < r) return true;
        pt[i] = 0;
    }
    return false;
}

bool point_clears_prime(const LinearSystem& sys, const std::vector<long long>& pt,
                        std::uint64_t r) {
    for (const LinearForm& f : sys.forms) {
        long long v = f.eval(pt) % static_cast<long long>(r);
        if (v == 0) return false;
    }
    return true;
}

}  // namespace

Admissibility is_admissible(const LinearSystem& sys, std::uint64_t prime_bound) {
    sys.validate();
    if (sys.arity() > 2) throw Unsupported("admissibility cycle search supports up to 2 variables");
    Admissibility out;
    out.tested_prime_bound = std::max<std::uint64_t>(prime_bound, sys.forms.size());

    // A prime dividing every coefficient and the constant of one form blocks
    // outright, no matter how large; contents keep the test finite.
    for (const LinearForm& f : sys.forms) {
        long long g = std::abs(f.constant);
        for (long long c : f.coeffs) g = std::gcd(g, std::abs(c));
        if (g <= 1) continue;
        auto fz = arith::factorize(BigInt(g));
        for (const auto& [p, e] : fz.factors) {
            std::uint64_t pv = to_u64(p);
            if (pv > out.tested_prime_bound) {
                out.admissible = false;
                out.blocking_prime = pv;
                return out;
            }
        }
    }

    for (std::uint64_t r : arith::primes_up_to(out.tested_prime_bound)) {
        std::vector<long long> pt(sys.arity(), 0);
        bool found = false;
        do {
            if (point_clears_prime(sys, pt, r)) {
                out.witnesses.emplace_back(r, pt);
                found = true;
                break;
            }
        } while (next_point(pt, static_cast<long long>(r)));
        if (!found) {
            out.admissible = false;
            out.blocking_prime = r;
            out.witnesses.clear();
            return out;
        }
    }

    // one integral point with every form value > 1
    std::size_t n = sys.arity();
    if (n == 1) {
        // exact interval intersection of a*x + b >= 2 constraints
        bool feasible = true;
        bool has_lo = false, has_hi = false;
        long long lo = 0, hi = 0;
        auto floor_div = [](long long num, long long den) {  // den > 0
            long long quot = num / den;
            if (num % den != 0 && num < 0) --quot;
            return quot;
        };
        for (const LinearForm& f : sys.forms) {
            long long a = f.coeffs[0], b = f.constant;
            if (a > 0) {
                long long bound = -floor_div(b - 2, a);  // ceil((2-b)/a)
                lo = has_lo ? std::max(lo, bound) : bound;
                has_lo = true;
            } else {
                long long bound = floor_div(b - 2, -a);  // x <= (b-2)/(-a)
                hi = has_hi ? std::min(hi, bound) : bound;
                has_hi = true;
            }
        }
        if (has_lo && has_hi && lo > hi) feasible = false;
        if (feasible) out.positivity_witness = std::vector<long long>{has_lo ? lo : hi};
    } else {
        for (long long radius = 0; radius <= 100 && !out.positivity_witness; ++radius) {
            std::vector<long long> pt(n, -radius);
            do {
                bool ok = true;
                for (const LinearForm& f : sys.forms)
                    if (f.eval(pt) <= 1) { ok = false; break; }
                if (ok) { out.positivity_witness = pt; break; }
            } while ([&] {
                for (std::size_t i = 0; i < n; ++i) {
                    if (++pt[i] <= radius) return true;
                    pt[i] = -radius;
                }
                return false;
            }());
        }
    }
    out.admissible = out.positivity_witness.has_value();
    if (!out.admissible) out.witnesses.clear();
    return out;
}

namespace {

// Largest absolute form value over the scan region, for sizing the sieve.
std::uint64_t max_abs_value(const LinearSystem& sys, long long lo, long long hi) {
    std::uint64_t vmax = 2;
    for (const LinearForm& f : sys.forms) {
        long long extreme = std::abs(f.constant);
        for (long long c : f.coeffs)
            extreme += std::abs(c) * std::max(std::abs(lo), std::abs(hi));
        vmax = std::max<std::uint64_t>(vmax, static_cast<std::uint64_t>(extreme));
    }
    return vmax;
}

std::vector<bool> prime_table(std::uint64_t limit) {
    std::vector<bool> table(limit + 1, false);
    arith::for_primes(2, limit, [&](std::uint64_t p) { table[p] = true; });
    return table;
}

}  // namespace

std::uint64_t count_simultaneous_primes(const LinearSystem& sys, std::uint64_t h,
                                        unsigned threads) {
    sys.validate();
    if (h < 2) throw std::invalid_argument("count_simultaneous_primes: h >= 2");
    std::size_t n = sys.arity();
    if (n > 2) throw Unsupported("simultaneous-prime counting supports up to 2 variables");
    if (n == 2 && h > 1000) throw Unsupported("bivariate box counting supports h <= 1000");

    long long lo = n == 1 ? 1 : -static_cast<long long>(h);
    long long hi = static_cast<long long>(h);
    std::uint64_t vmax = max_abs_value(sys, lo, hi);
    if (vmax > 200'000'000ull) throw Unsupported("form values exceed the sieve budget");
    std::vector<bool> table = prime_table(vmax);

    auto value_prime = [&](long long v) { return v > 1 && table[static_cast<std::uint64_t>(v)]; };

    if (n == 1) {
        auto count_range = [&](long long from, long long to) {
            std::uint64_t cnt = 0;
            std::vector<long long> pt(1);
            for (long long x = from; x <= to; ++x) {
                pt[0] = x;
                bool all = true;
                for (const LinearForm& f : sys.forms)
                    if (!value_prime(f.eval(pt))) { all = false; break; }
                cnt += all;
            }
            return cnt;
        };
        if (threads <= 1 || h < 4096) return count_range(1, hi);
        std::uint64_t chunk = h / threads + 1;
        std::vector<std::future<std::uint64_t>> jobs;
        for (unsigned t = 0; t < threads; ++t) {
            long long from = 1 + static_cast<long long>(t * chunk);
            long long to = std::min<long long>(hi, from + static_cast<long long>(chunk) - 1);
            if (from > hi) break;
            jobs.push_back(std::async(std::launch::async, count_range, from, to));
        }
        std::uint64_t total = 0;
        for (auto& j : jobs) total += j.get();  // associative merge
        return total;
    }

    std::uint64_t cnt = 0;
    std::vector<long long> pt(2);
    for (long long x1 = lo; x1 <= hi; ++x1) {
        for (long long x2 = lo; x2 <= hi; ++x2) {
            pt[0] = x1;
            pt[1] = x2;
            bool all = true;
            for (const LinearForm& f : sys.forms)
                if (!value_prime(f.eval(pt))) { all = false; break; }
            cnt += all;
        }
    }
    return cnt;
}

EulerProduct bateman_horn_constant(const LinearSystem& sys, std::uint64_t bound) {
    sys.validate();
    if (sys.arity() != 1) throw Unsupported("the Euler product is computed for univariate systems");
    for (const LinearForm& f : sys.forms)
        if (f.coeffs[0] <= 0)
            throw std::invalid_argument("Euler product needs positive leading coefficients");
    if (bound < 2) throw std::invalid_argument("euler_prime_bound >= 2");

    EulerProduct out;
    out.prime_bound = bound;
    Admissibility adm = is_admissible(sys, 100);
    if (!adm.admissible) {
        out.admissible = false;
        out.blocking_prime = adm.blocking_prime;
        out.cf = 0.0;  // structural zero, not computed
        return out;
    }
    out.admissible = true;

    const unsigned m = static_cast<unsigned>(sys.forms.size());
    long double product = 1.0L;
    long double last = 1.0L;
    arith::for_primes(2, bound, [&](std::uint64_t p) {
        // w(p): distinct roots of the form product mod p; each linear form
        // contributes at most one root (admissibility rules out p | content)
        std::uint64_t roots[8];
        std::size_t nroots = 0;
        for (const LinearForm& f : sys.forms) {
            std::uint64_t a = static_cast<std::uint64_t>(((f.coeffs[0] % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p));
            std::uint64_t b = static_cast<std::uint64_t>(((f.constant % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p));
            if (a == 0) continue;  // p | leading coeff, p never divides f unless p | content
            std::uint64_t inv = arith::powmod_u64(a, p - 2, p);
            std::uint64_t root = arith::mulmod_u64((p - b) % p, inv, p);
            bool dup = false;
            for (std::size_t i = 0; i < nroots; ++i) dup = dup || roots[i] == root;
            if (!dup && nroots < 8) roots[nroots++] = root;
        }
        long double w = static_cast<long double>(nroots);
        long double pp = static_cast<long double>(p);
        long double factor = (1.0L - w / pp) / std::pow(1.0L - 1.0L / pp, static_cast<long double>(m));
        product *= factor;
        last = factor;
    });
    out.cf = static_cast<double>(product);
    out.last_factor_delta = static_cast<double>(std::fabs(last - 1.0L));
    return out;
}

Prediction predicted_count(const LinearSystem& sys, std::uint64_t h, double cf) {
    sys.validate();
    if (h < 3) throw std::invalid_argument("predicted_count: h >= 3");
    Prediction out;
    const double n = static_cast<double>(sys.arity());
    const double m = static_cast<double>(sys.forms.size());
    const double hh = static_cast<double>(h);
    out.closed_form = cf * std::pow(hh, n) / std::pow(std::log(hh), m);

    if (sys.arity() == 1) {
        // Simpson quadrature of 1/log^m over [2, h]
        const int panels = 10000;  // even
        const double a = 2.0, b = hh;
        const double step = (b - a) / panels;
        auto f = [&](double t) { return 1.0 / std::pow(std::log(t), m); };
        double acc = f(a) + f(b);
        for (int i = 1; i < panels; ++i) acc += f(a + i * step) * (i % 2 ? 4.0 : 2.0);
        out.integral_form = cf * acc * step / 3.0;
        out.integral_available = true;
        out.primary = "integral";
    } else {
        out.primary = "closed_form";
    }
    return out;
}

std::uint64_t count_prime_aps(std::uint32_t length_m, std::uint64_t h) {
    if (length_m < 3) throw std::invalid_argument("count_prime_aps: length >= 3");
    if (h < 3) throw std::invalid_argument("count_prime_aps: h >= 3");
    if (h > 100'000) throw Unsupported("progression counting supports h <= 100000");
    std::vector<bool> table = prime_table(h);
    std::vector<std::uint64_t> primes = arith::primes_up_to(h);
    std::uint64_t count = 0;
    for (std::uint64_t x1 : primes) {
        for (std::uint64_t x2 = 1; x1 + static_cast<std::uint64_t>(length_m - 1) * x2 <= h; ++x2) {
            bool all = true;
            for (std::uint32_t j = 1; j < length_m; ++j)
                if (!table[x1 + j * x2]) { all = false; break; }
            count += all;
        }
    }
    return count;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> gap_pair_counts(std::uint64_t max_gap,
                                                                     std::uint64_t n) {
    if (max_gap < 2 || max_gap % 2 != 0)
        throw std::invalid_argument("gap_pair_counts: max_gap must be even and >= 2");
    if (n < 5) throw std::invalid_argument("gap_pair_counts: N >= 5");
    std::vector<bool> table = prime_table(n);
    std::vector<std::uint64_t> primes = arith::primes_up_to(n);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t gap = 2; gap <= max_gap; gap += 2) {
        std::uint64_t cnt = 0;
        for (std::uint64_t p : primes)
            if (p + gap <= n && table[p + gap]) ++cnt;  // both ends inside [2, N]
        out.emplace_back(gap, cnt);
    }
    return out;
}

SieveReport sieve_report(const LinearSystem& sys, std::uint64_t h,
                         std::uint64_t euler_prime_bound, unsigned threads) {
    SieveReport rep;
    rep.system = sys;
    rep.range_h = h;
    rep.empirical_count = count_simultaneous_primes(sys, h, threads);
    if (sys.arity() == 1) {
        bool positive_leads = std::all_of(sys.forms.begin(), sys.forms.end(),
                                          [](const LinearForm& f) { return f.coeffs[0] > 0; });
        if (positive_leads) {
            rep.constant = bateman_horn_constant(sys, euler_prime_bound);
            if (rep.constant.admissible) {
                rep.prediction = predicted_count(sys, h, rep.constant.cf);
                if (rep.prediction.value() > 0)
                    rep.ratio = static_cast<double>(rep.empirical_count) / rep.prediction.value();
            }
        }
    }
    rep.note = "bounded-range counts are evidence about growth, not a proof of infinitude";
    return rep;
}

}  // namespace k4dio::dickson
