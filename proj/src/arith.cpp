#include "permsign/arith.hpp"

#include <array>
#include <numeric>

namespace permsign::arith {

namespace {

constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 40;

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

Modulus::Modulus(std::uint64_t n) : n_(n) {
    if (n < 2 || n >= kModulusCap)
        throw domain_error("modulus must satisfy 2 <= n < 2^40, got " + std::to_string(n));
}

PrimePower::PrimePower(std::uint64_t p, unsigned r) : p_(p), r_(r) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw domain_error("prime power base must be an odd prime, got " + std::to_string(p));
    if (r < 1) throw domain_error("prime power exponent must be >= 1");
    m_ = 1;
    for (unsigned i = 0; i < r; i++) {
        if (m_ >= kModulusCap / p)
            throw domain_error("prime power " + std::to_string(p) + "^" + std::to_string(r) +
                               " exceeds 2^40");
        m_ *= p;
    }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_reduce(std::int64_t a, Modulus n) {
    std::int64_t m = static_cast<std::int64_t>(n.value());
    std::int64_t r = a % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inv(std::int64_t a, Modulus n) {
    // Extended Euclid on (a mod n, n); invariants old_r = old_s*a (mod n).
    std::int64_t m = static_cast<std::int64_t>(n.value());
    std::int64_t r0 = static_cast<std::int64_t>(mod_reduce(a, n)), r1 = m;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tr = r0 - q * r1; r0 = r1; r1 = tr;
        std::int64_t ts = s0 - q * s1; s0 = s1; s1 = ts;
    }
    if (r0 != 1)
        throw not_invertible_error("no inverse: gcd(" + std::to_string(a) + ", " +
                                   std::to_string(n.value()) + ") = " + std::to_string(r0));
    if (s0 < 0) s0 += m;
    return static_cast<std::uint64_t>(s0);
}

std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, Modulus n) {
    return pow_mod_u64(mod_reduce(base, n), exp, n.value());
}

int jacobi(std::int64_t a, std::uint64_t n) {
    if (n % 2 == 0) throw domain_error("Jacobi symbol needs odd n, got " + std::to_string(n));
    // Reduce a into [0, n): (a/n) depends only on a mod n for odd n.
    std::uint64_t ua;
    {
        std::int64_t r = a % static_cast<std::int64_t>(n);
        if (r < 0) r += static_cast<std::int64_t>(n);
        ua = static_cast<std::uint64_t>(r);
    }
    int result = 1;
    while (ua != 0) {
        while (ua % 2 == 0) {
            ua /= 2;
            if (n % 8 == 3 || n % 8 == 5) result = -result;  // (2/n) supplement
        }
        std::swap(ua, n);  // quadratic reciprocity for odd coprime arguments
        if (ua % 4 == 3 && n % 4 == 3) result = -result;
        ua %= n;
    }
    return n == 1 ? result : 0;
}

bool is_prime(std::uint64_t n) {
    if (n >= (std::uint64_t{1} << 63))
        throw domain_error("primality test supports n < 2^63");
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; s++; }
    // This witness set is exact for all n < 3.3 * 10^24.
    for (std::uint64_t w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod_u64(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw domain_error("phi(0) undefined");
    std::uint64_t result = n;
    for (std::uint64_t p : distinct_prime_factors(n)) result = result / p * (p - 1);
    return result;
}

bool is_primitive_root(std::uint64_t g, PrimePower pp) {
    std::uint64_t m = pp.modulus();
    if (g % pp.prime() == 0)
        throw domain_error("candidate " + std::to_string(g) + " is divisible by " +
                           std::to_string(pp.prime()));
    std::uint64_t phi = pp.totient();
    for (std::uint64_t q : distinct_prime_factors(phi))
        if (pow_mod_u64(g % m, phi / q, m) == 1) return false;
    return true;
}

namespace {

std::vector<std::uint64_t> primitive_roots_upto(PrimePower pp, std::size_t limit) {
    std::uint64_t m = pp.modulus();
    std::uint64_t phi = pp.totient();
    auto factors = distinct_prime_factors(phi);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t g = 2; g < m && roots.size() < limit; g++) {
        if (g % pp.prime() == 0) continue;
        bool primitive = true;
        for (std::uint64_t q : factors)
            if (pow_mod_u64(g, phi / q, m) == 1) { primitive = false; break; }
        if (primitive) roots.push_back(g);
    }
    return roots;
}

}  // namespace

std::vector<std::uint64_t> enumerate_primitive_roots(PrimePower pp) {
    return primitive_roots_upto(pp, static_cast<std::size_t>(-1));
}

std::vector<std::uint64_t> smallest_primitive_roots(PrimePower pp, std::size_t count) {
    return primitive_roots_upto(pp, count);
}

std::uint64_t half_factorial_mod_p(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw domain_error("expected an odd prime, got " + std::to_string(p));
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= (p - 1) / 2; i++) f = mul_mod(f, i, p);
    return f;
}

}  // namespace permsign::arith
