#include "permsign/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "permsign/arith.hpp"
#include "permsign/classnum.hpp"
#include "permsign/constructions.hpp"

namespace permsign::verifier {

using arith::Modulus;
using arith::PrimePower;
using perm::Sign;

namespace {

const std::map<TheoremId, std::string_view> kTheoremNames = {
    {TheoremId::lerch, "lerch"},
    {TheoremId::kth_power, "kth-power"},
    {TheoremId::sun_cube, "sun-cube"},
    {TheoremId::sigma21, "sigma21"},
    {TheoremId::sigma31, "sigma31"},
    {TheoremId::sigma23, "sigma23"},
    {TheoremId::sigma01_sun, "sigma01-sun"},
    {TheoremId::sigma40, "sigma40"},
    {TheoremId::sigma41, "sigma41"},
    {TheoremId::np_parity, "np-parity"},
    {TheoremId::tau_star, "tau-star"},
    {TheoremId::lemma_sum_squares, "lemma-sum-squares"},
    {TheoremId::mordell, "mordell"},
    {TheoremId::vandermonde_e, "vandermonde-e"},
    {TheoremId::primroot_sign, "primroot-sign"},
    {TheoremId::primroot_split, "primroot-split"},
    {TheoremId::kohl_ii, "kohl-ii"},
};

Sign jacobi_sign(std::int64_t a, std::uint64_t n) {
    int j = arith::jacobi(a, n);
    if (j == 0)
        throw domain_error("Jacobi symbol (" + std::to_string(a) + "/" + std::to_string(n) +
                           ") vanishes; arguments are not coprime");
    return j == 1 ? Sign::positive : Sign::negative;
}

std::uint64_t as_positive(std::optional<std::int64_t> v, const char* name) {
    if (!v || *v < 1)
        throw domain_error(std::string("parameter ") + name + " must be a positive integer");
    return static_cast<std::uint64_t>(*v);
}

void require_odd_prime_param(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !arith::is_prime(p))
        throw domain_error("p must be an odd prime, got " + std::to_string(p));
}

// Exactly the keys a theorem takes, nothing else.
void validate_keys(const TheoremCase& c) {
    bool need_p = c.id != TheoremId::lerch;
    bool need_n = c.id == TheoremId::lerch;
    bool need_a = c.id == TheoremId::lerch;
    bool need_k = c.id == TheoremId::kth_power;
    bool need_r = c.id == TheoremId::primroot_sign || c.id == TheoremId::primroot_split;
    bool need_g = c.id == TheoremId::primroot_sign || c.id == TheoremId::kohl_ii;
    auto check = [&](bool need, const std::optional<std::int64_t>& v, const char* name) {
        if (need && !v)
            throw domain_error(std::string(to_string(c.id)) + " requires parameter " + name);
        if (!need && v)
            throw domain_error(std::string(to_string(c.id)) + " does not take parameter " + name);
    };
    check(need_p, c.params.p, "p");
    check(need_n, c.params.n, "n");
    check(need_a, c.params.a, "a");
    check(need_k, c.params.k, "k");
    check(need_r, c.params.r, "r");
    check(need_g, c.params.g, "g");
}

struct LerchCase {
    std::uint64_t n;
    std::uint64_t a;  // reduced into [0, n)
};

LerchCase lerch_args(const TheoremCase& c) {
    std::uint64_t n = as_positive(c.params.n, "n");
    if (n < 2) throw domain_error("lerch needs n >= 2");
    Modulus mod(n);
    std::uint64_t a = arith::mod_reduce(*c.params.a, mod);
    if (std::gcd(a, n) != 1)
        throw domain_error("lerch needs gcd(a, n) = 1, got a = " + std::to_string(*c.params.a) +
                           ", n = " + std::to_string(n));
    return {n, a};
}

std::uint64_t prime_param(const TheoremCase& c) {
    std::uint64_t p = as_positive(c.params.p, "p");
    require_odd_prime_param(p);
    return p;
}

std::uint64_t prime_3mod4_param(const TheoremCase& c) {
    std::uint64_t p = prime_param(c);
    if (p % 4 != 3)
        throw domain_error(std::string(to_string(c.id)) + " needs p = 3 (mod 4), got " +
                           std::to_string(p));
    return p;
}

PrimePower prime_power_params(const TheoremCase& c) {
    std::uint64_t p = prime_param(c);
    std::uint64_t r = as_positive(c.params.r, "r");
    return PrimePower(p, static_cast<unsigned>(r));
}

std::uint64_t class_number(std::uint64_t p) { return classnum::class_number_neg_p(p).h; }

Sign observe_half_factorial_sign(std::uint64_t p) {
    std::uint64_t f = arith::half_factorial_mod_p(p);
    if (f == 1) return Sign::positive;
    if (f == p - 1) return Sign::negative;
    throw inconsistency_error("((p-1)/2)! mod p not +-1 despite p = 3 (mod 4)");
}

bool theorem_backed(const TheoremCase& c) {
    if (c.id == TheoremId::np_parity) return *c.params.p % 4 == 3;
    return true;
}

}  // namespace

std::string_view to_string(TheoremId id) { return kTheoremNames.at(id); }

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (const auto& [id, n] : kTheoremNames)
        if (n == name) return id;
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& [id, n] : kTheoremNames) v.push_back(id);
        return v;
    }();
    return ids;
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::match: return "match";
        case Status::mismatch: return "mismatch";
        case Status::conjecture_match: return "conjecture-match";
        case Status::conjecture_mismatch: return "conjecture-mismatch";
        case Status::paper_discrepancy_noted: return "paper-discrepancy-noted";
    }
    throw std::logic_error("unreachable");
}

std::optional<Status> status_from_string(std::string_view name) {
    for (Status s : {Status::match, Status::mismatch, Status::conjecture_match,
                     Status::conjecture_mismatch, Status::paper_discrepancy_noted})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

void SweepSummary::add(Status s) {
    total++;
    switch (s) {
        case Status::match: match++; break;
        case Status::mismatch: mismatch++; break;
        case Status::conjecture_match: conjecture_match++; break;
        case Status::conjecture_mismatch: conjecture_mismatch++; break;
        case Status::paper_discrepancy_noted: paper_discrepancy_noted++; break;
    }
}

Value predict(const TheoremCase& c) {
    validate_keys(c);
    switch (c.id) {
        case TheoremId::lerch: {
            auto [n, a] = lerch_args(c);
            if (n % 2 == 1) return jacobi_sign(static_cast<std::int64_t>(a), n);
            if (n % 4 == 2) return Sign::positive;
            return perm::sign_of_parity((a - 1) / 2);  // a odd since gcd(a, 4k) = 1
        }
        case TheoremId::kth_power: {
            std::uint64_t p = prime_param(c);
            std::uint64_t k = as_positive(c.params.k, "k");
            if (std::gcd(k, p - 1) != 1)
                throw domain_error("kth-power needs gcd(k, p-1) = 1");
            if (p % 4 == 3) return Sign::positive;
            return perm::sign_of_parity((k - 1) / 2);
        }
        case TheoremId::sun_cube: {
            std::uint64_t p = prime_param(c);
            if (p % 3 != 2) throw domain_error("sun-cube needs p = 2 (mod 3)");
            return perm::sign_of_parity((p + 1) / 2);
        }
        case TheoremId::sigma21: {
            std::uint64_t p = prime_param(c);
            return p % 4 == 3 ? Sign::positive : jacobi_sign(2, p);
        }
        case TheoremId::sigma31: {
            std::uint64_t p = prime_param(c);
            // For p = 1 (mod 4) the printed closed form says -1; the corrected
            // value is +1 (it also follows from the sigma21/sigma23 forms via
            // the cocycle identity). Records carry paper-discrepancy-noted.
            return p % 4 == 3 ? jacobi_sign(2, p) * Sign::negative : Sign::positive;
        }
        case TheoremId::sigma23: {
            std::uint64_t p = prime_param(c);
            return jacobi_sign(-2, p);
        }
        case TheoremId::sigma01_sun: {
            std::uint64_t p = prime_3mod4_param(c);
            if (p % 8 == 3) return Sign::positive;
            return perm::sign_of_parity((class_number(p) + 1) / 2);
        }
        case TheoremId::sigma40: {
            std::uint64_t p = prime_3mod4_param(c);
            Sign s = perm::sign_of_parity((p + 1) / 8);
            if (p % 8 == 7) s = s * perm::sign_of_parity((class_number(p) + 1) / 2);
            return s;
        }
        case TheoremId::sigma41: {
            std::uint64_t p = prime_3mod4_param(c);
            return perm::sign_of_parity((p + 1) / 8);
        }
        case TheoremId::np_parity: {
            std::uint64_t p = prime_param(c);
            return (p + 1) / 8 % 2 == 0 ? Parity::even : Parity::odd;
        }
        case TheoremId::tau_star: {
            std::uint64_t p = prime_param(c);
            return jacobi_sign(2, p) * Sign::negative;
        }
        case TheoremId::lemma_sum_squares: {
            std::uint64_t p = prime_3mod4_param(c);
            return perm::sign_of_parity((p + 1) / 8);
        }
        case TheoremId::mordell: {
            std::uint64_t p = prime_3mod4_param(c);
            if (p == 3) throw domain_error("mordell requires p > 3");
            return perm::sign_of_parity((class_number(p) + 1) / 2);
        }
        case TheoremId::vandermonde_e: {
            std::uint64_t p = prime_3mod4_param(c);
            std::uint64_t rhs = arith::half_factorial_mod_p(p);
            if ((p - 3) / 4 % 2 == 1) rhs = p - rhs;
            if (rhs == 1) return Sign::positive;
            if (rhs == p - 1) return Sign::negative;
            throw inconsistency_error("half factorial not +-1 despite p = 3 (mod 4)");
        }
        case TheoremId::primroot_sign: {
            PrimePower pp = prime_power_params(c);
            if (pp.prime() % 4 != 3)
                throw domain_error("primroot-sign needs p = 3 (mod 4)");
            return perm::sign_of_parity((class_number(pp.prime()) - 1) / 2);
        }
        case TheoremId::primroot_split: {
            PrimePower pp = prime_power_params(c);
            if (pp.prime() % 4 != 1)
                throw domain_error("primroot-split needs p = 1 (mod 4)");
            std::int64_t half =
                static_cast<std::int64_t>(arith::euler_phi(pp.totient()) / 2);
            return CountPair{half, half};
        }
        case TheoremId::kohl_ii: {
            std::uint64_t p = prime_3mod4_param(c);
            // Sign s with s = -((p-1)/2)! (mod p).
            return observe_half_factorial_sign(p) * Sign::negative;
        }
    }
    throw std::logic_error("unreachable");
}

Value observe(const TheoremCase& c, const VerifyOptions& options) {
    validate_keys(c);
    switch (c.id) {
        case TheoremId::lerch: {
            auto [n, a] = lerch_args(c);
            return constructions::mul_perm(Modulus(n), static_cast<std::int64_t>(a)).sign();
        }
        case TheoremId::kth_power:
            return constructions::power_perm(prime_param(c), as_positive(c.params.k, "k")).sign();
        case TheoremId::sun_cube:
            return constructions::cube_perm_with_zero(prime_param(c)).sign();
        case TheoremId::sigma21:
            return constructions::sigma_ij(2, 1, prime_param(c)).sign();
        case TheoremId::sigma31:
            return constructions::sigma_ij(3, 1, prime_param(c)).sign();
        case TheoremId::sigma23:
            return constructions::sigma_ij(2, 3, prime_param(c)).sign();
        case TheoremId::sigma01_sun:
            return constructions::sigma_ij(0, 1, prime_3mod4_param(c)).sign();
        case TheoremId::sigma40:
            return constructions::sigma_ij(4, 0, prime_3mod4_param(c)).sign();
        case TheoremId::sigma41:
            return constructions::sigma_ij(4, 1, prime_3mod4_param(c)).sign();
        case TheoremId::np_parity:
            return constructions::count_Np(prime_param(c)) % 2 == 0 ? Parity::even : Parity::odd;
        case TheoremId::tau_star:
            return constructions::tau_p_perm(prime_param(c)).sign();
        case TheoremId::lemma_sum_squares:
            return classnum::sum_of_squares_product_sign(prime_3mod4_param(c));
        case TheoremId::mordell: {
            std::uint64_t p = prime_3mod4_param(c);
            if (p == 3) throw domain_error("mordell requires p > 3");
            return classnum::mordell_check(p).first;
        }
        case TheoremId::vandermonde_e: {
            std::uint64_t p = prime_3mod4_param(c);
            std::uint64_t v = classnum::vandermonde_full_product_sign(p);
            if (v == 1) return Sign::positive;
            if (v == p - 1) return Sign::negative;
            throw inconsistency_error("pairwise-difference product not +-1 at p = " +
                                      std::to_string(p));
        }
        case TheoremId::primroot_sign: {
            PrimePower pp = prime_power_params(c);
            return constructions::sigma_g_perm(pp, as_positive(c.params.g, "g")).sign();
        }
        case TheoremId::primroot_split: {
            PrimePower pp = prime_power_params(c);
            std::vector<std::uint64_t> roots =
                options.split_sample
                    ? arith::smallest_primitive_roots(pp, *options.split_sample)
                    : arith::enumerate_primitive_roots(pp);
            CountPair split;
            for (std::uint64_t g : roots) {
                if (constructions::sigma_g_perm(pp, g).sign() == Sign::positive) split.plus++;
                else split.minus++;
            }
            return split;
        }
        case TheoremId::kohl_ii: {
            std::uint64_t p = prime_3mod4_param(c);
            PrimePower pp(p, 1);
            return constructions::sigma_g_perm(pp, as_positive(c.params.g, "g")).sign();
        }
    }
    throw std::logic_error("unreachable");
}

VerificationRecord verify(const TheoremCase& c, const VerifyOptions& options) {
    VerificationRecord rec;
    rec.theorem_case = c;
    rec.predicted = predict(c);
    rec.observed = observe(c, options);

    if (c.params.p && *c.params.p % 4 == 3)
        rec.h_neg_p = static_cast<std::int64_t>(class_number(static_cast<std::uint64_t>(*c.params.p)));
    switch (c.id) {
        case TheoremId::lerch:
            if (*c.params.n % 2 == 1) rec.jacobi_symbol = arith::jacobi(*c.params.a, *c.params.n);
            break;
        case TheoremId::sigma21:
        case TheoremId::sigma31:
        case TheoremId::tau_star:
            rec.jacobi_symbol = arith::jacobi(2, static_cast<std::uint64_t>(*c.params.p));
            break;
        case TheoremId::sigma23:
            rec.jacobi_symbol = arith::jacobi(-2, static_cast<std::uint64_t>(*c.params.p));
            break;
        default:
            break;
    }

    bool agree = rec.predicted == rec.observed;
    if (c.id == TheoremId::sigma31 && *c.params.p % 4 == 1)
        rec.status = agree ? Status::paper_discrepancy_noted : Status::mismatch;
    else if (c.id == TheoremId::primroot_split && options.split_sample) {
        // A sample cannot confirm the exact half-split, only refute it; it
        // stays consistent while neither sign count exceeds the half.
        const auto& half = std::get<CountPair>(rec.predicted);
        const auto& seen = std::get<CountPair>(rec.observed);
        bool consistent = seen.plus <= half.plus && seen.minus <= half.minus;
        rec.status = consistent ? Status::conjecture_match : Status::conjecture_mismatch;
    }
    else if (!theorem_backed(c))
        rec.status = agree ? Status::conjecture_match : Status::conjecture_mismatch;
    else
        rec.status = agree ? Status::match : Status::mismatch;
    return rec;
}

std::vector<std::uint64_t> sample_units(std::uint64_t n, std::size_t count) {
    std::vector<std::uint64_t> units;
    std::vector<bool> taken(n, false);
    for (std::size_t j = 0; j < count && units.size() < count; j++) {
        std::uint64_t start = 1 + j * (n - 1) / count;
        for (std::uint64_t step = 0; step < n; step++) {
            std::uint64_t candidate = 1 + (start - 1 + step) % (n - 1);
            if (!taken[candidate] && std::gcd(candidate, n) == 1) {
                taken[candidate] = true;
                units.push_back(candidate);
                break;
            }
        }
    }
    std::sort(units.begin(), units.end());
    return units;
}

namespace {

std::vector<std::uint64_t> primes_in(std::int64_t lo, std::int64_t hi, int residue, int mod) {
    std::vector<std::uint64_t> primes;
    for (std::int64_t p = std::max<std::int64_t>(lo, 3); p <= hi; p++) {
        if (p % 2 == 0) continue;
        if (mod != 0 && p % mod != residue) continue;
        if (arith::is_prime(static_cast<std::uint64_t>(p))) primes.push_back(p);
    }
    return primes;
}

RootSelection default_roots(TheoremId id) {
    return id == TheoremId::primroot_split ? RootSelection::every() : RootSelection::smallest(8);
}

TheoremCase make_case(TheoremId id, CaseParams params) { return {id, std::move(params)}; }

}  // namespace

std::vector<TheoremCase> generate_cases(TheoremId id, const SweepOptions& options) {
    std::vector<TheoremCase> cases;
    const std::int64_t lo = options.pmin, hi = options.pmax;
    if (lo > hi) return cases;
    std::uint64_t max_modulus =
        options.max_modulus ? options.max_modulus : static_cast<std::uint64_t>(hi);
    RootSelection roots = options.roots.value_or(default_roots(id));

    switch (id) {
        case TheoremId::lerch:
            for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; n++) {
                if (n <= 300) {
                    for (std::int64_t a = 1; a < n; a++)
                        if (std::gcd(a, n) == 1)
                            cases.push_back(make_case(id, {.n = n, .a = a}));
                } else {
                    for (std::uint64_t a : sample_units(static_cast<std::uint64_t>(n), 50))
                        cases.push_back(make_case(id, {.n = n, .a = static_cast<std::int64_t>(a)}));
                }
            }
            break;
        case TheoremId::kth_power:
            for (std::uint64_t p : primes_in(lo, hi, 0, 0))
                for (std::int64_t k = 1; k <= options.kmax; k++)
                    if (std::gcd(static_cast<std::uint64_t>(k), p - 1) == 1)
                        cases.push_back(make_case(id, {.p = static_cast<std::int64_t>(p), .k = k}));
            break;
        case TheoremId::sun_cube:
            for (std::uint64_t p : primes_in(lo, hi, 2, 3))
                cases.push_back(make_case(id, {.p = static_cast<std::int64_t>(p)}));
            break;
        case TheoremId::sigma21:
        case TheoremId::sigma31:
        case TheoremId::sigma23:
        case TheoremId::np_parity:
        case TheoremId::tau_star:
            for (std::uint64_t p : primes_in(lo, hi, 0, 0))
                cases.push_back(make_case(id, {.p = static_cast<std::int64_t>(p)}));
            break;
        case TheoremId::sigma01_sun:
        case TheoremId::sigma40:
        case TheoremId::sigma41:
        case TheoremId::lemma_sum_squares:
        case TheoremId::vandermonde_e:
            for (std::uint64_t p : primes_in(lo, hi, 3, 4))
                cases.push_back(make_case(id, {.p = static_cast<std::int64_t>(p)}));
            break;
        case TheoremId::mordell:
            for (std::uint64_t p : primes_in(std::max<std::int64_t>(lo, 7), hi, 3, 4))
                cases.push_back(make_case(id, {.p = static_cast<std::int64_t>(p)}));
            break;
        case TheoremId::primroot_sign:
        case TheoremId::primroot_split: {
            int residue = id == TheoremId::primroot_sign ? 3 : 1;
            for (std::uint64_t p : primes_in(lo, hi, residue, 4)) {
                std::uint64_t modulus = p;
                for (std::int64_t r = 1; modulus <= max_modulus; r++) {
                    if (id == TheoremId::primroot_split) {
                        cases.push_back(make_case(
                            id, {.p = static_cast<std::int64_t>(p), .r = r}));
                    } else {
                        PrimePower pp(p, static_cast<unsigned>(r));
                        auto gs = roots.all ? arith::enumerate_primitive_roots(pp)
                                            : arith::smallest_primitive_roots(pp, roots.count);
                        for (std::uint64_t g : gs)
                            cases.push_back(make_case(id, {.p = static_cast<std::int64_t>(p),
                                                           .r = r,
                                                           .g = static_cast<std::int64_t>(g)}));
                    }
                    if (modulus > max_modulus / p) break;
                    modulus *= p;
                }
            }
            break;
        }
        case TheoremId::kohl_ii:
            for (std::uint64_t p : primes_in(lo, hi, 3, 4)) {
                PrimePower pp(p, 1);
                auto gs = roots.all ? arith::enumerate_primitive_roots(pp)
                                    : arith::smallest_primitive_roots(pp, roots.count);
                for (std::uint64_t g : gs)
                    cases.push_back(make_case(id, {.p = static_cast<std::int64_t>(p),
                                                   .g = static_cast<std::int64_t>(g)}));
            }
            break;
    }
    return cases;
}

SweepResult sweep(TheoremId id, const SweepOptions& options) {
    std::vector<TheoremCase> cases = generate_cases(id, options);
    VerifyOptions verify_options;
    if (id == TheoremId::primroot_split) {
        RootSelection roots = options.roots.value_or(default_roots(id));
        if (!roots.all) verify_options.split_sample = roots.count;
    }

    SweepResult result;
    result.records.resize(cases.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || cases.size() < 2) {
        for (std::size_t i = 0; i < cases.size(); i++)
            result.records[i] = verify(cases[i], verify_options);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= cases.size()) return;
                try {
                    result.records[i] = verify(cases[i], verify_options);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        std::size_t n_threads = std::min<std::size_t>(jobs, cases.size());
        for (std::size_t t = 0; t < n_threads; t++) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    for (const auto& rec : result.records) result.summary.add(rec.status);
    return result;
}

}  // namespace permsign::verifier
