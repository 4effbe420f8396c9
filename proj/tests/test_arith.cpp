#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "permsign/arith.hpp"
#include "permsign/errors.hpp"

using namespace permsign;
using namespace permsign::arith;

namespace {

// Sieve of Eratosthenes, the reference for is_prime below.
std::vector<bool> sieve(std::size_t limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = false;
    if (limit >= 1) prime[1] = false;
    for (std::size_t i = 2; i * i <= limit; i++)
        if (prime[i])
            for (std::size_t j = i * i; j <= limit; j += i) prime[j] = false;
    return prime;
}

// Legendre symbol by enumerating squares, the reference for jacobi().
int legendre_by_squares(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    for (std::uint64_t x = 1; x <= (p - 1) / 2; x++)
        if (mul_mod(x, x, p) == a) return 1;
    return -1;
}

std::uint64_t gcd_count_phi(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= n; i++)
        if (std::gcd(i, n) == 1) count++;
    return count;
}

}  // namespace

TEST_CASE("Modulus validates its range") {
    CHECK(Modulus(2).value() == 2);
    CHECK(Modulus((1ull << 40) - 1).value() == (1ull << 40) - 1);
    CHECK_THROWS_AS(Modulus(0), domain_error);
    CHECK_THROWS_AS(Modulus(1), domain_error);
    CHECK_THROWS_AS(Modulus(1ull << 40), domain_error);
}

TEST_CASE("PrimePower validates base, exponent and size") {
    PrimePower pp(3, 2);
    CHECK(pp.prime() == 3);
    CHECK(pp.exponent() == 2);
    CHECK(pp.modulus() == 9);
    CHECK(pp.totient() == 6);
    CHECK(PrimePower(7, 1).totient() == 6);
    CHECK(PrimePower(5, 4).modulus() == 625);
    CHECK_THROWS_AS(PrimePower(2, 1), domain_error);
    CHECK_THROWS_AS(PrimePower(9, 1), domain_error);
    CHECK_THROWS_AS(PrimePower(3, 0), domain_error);
    CHECK_THROWS_AS(PrimePower(3, 26), domain_error);  // 3^26 > 2^40
    CHECK(PrimePower(3, 25).modulus() == 847288609443ull);
}

TEST_CASE("mul_mod agrees with double-width multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(0, (1ull << 40) - 1);
    for (int t = 0; t < 2000; t++) {
        std::uint64_t m = dist(rng) + 2, a = dist(rng) % m, b = dist(rng) % m;
        unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
        CHECK(mul_mod(a, b, m) == static_cast<std::uint64_t>(wide % m));
    }
}

TEST_CASE("mod_reduce maps into [0, n) and respects congruence") {
    CHECK(mod_reduce(-1, Modulus(7)) == 6);
    CHECK(mod_reduce(-14, Modulus(7)) == 0);
    CHECK(mod_reduce(20, Modulus(7)) == 6);
    CHECK(mod_reduce(0, Modulus(2)) == 0);
}

TEST_CASE("mod_inv inverts exactly the units") {
    CHECK(mod_inv(3, Modulus(7)) == 5);
    CHECK(mod_inv(1, Modulus(2)) == 1);
    CHECK(mod_inv(-1, Modulus(7)) == 6);
    for (std::uint64_t n = 2; n < 60; n++)
        for (std::uint64_t a = 1; a < n; a++) {
            if (std::gcd(a, n) == 1) {
                std::uint64_t inv = mod_inv(static_cast<std::int64_t>(a), Modulus(n));
                CHECK(mul_mod(a, inv, n) == 1 % n);
            } else {
                CHECK_THROWS_AS(mod_inv(static_cast<std::int64_t>(a), Modulus(n)),
                                not_invertible_error);
            }
        }
}

TEST_CASE("mod_pow matches repeated multiplication") {
    CHECK(mod_pow(2, 10, Modulus(1000)) == 24);
    CHECK(mod_pow(5, 0, Modulus(7)) == 1);
    CHECK(mod_pow(-2, 3, Modulus(7)) == 6);  // (-8) mod 7
    for (std::uint64_t b = 0; b < 12; b++) {
        std::uint64_t acc = 1 % 13;
        for (std::uint64_t e = 0; e < 20; e++) {
            CHECK(mod_pow(static_cast<std::int64_t>(b), e, Modulus(13)) == acc);
            acc = acc * b % 13;
        }
    }
}

TEST_CASE("jacobi equals the Legendre symbol on odd primes") {
    auto prime = sieve(300);
    for (std::uint64_t p = 3; p <= 300; p += 2) {
        if (!prime[p]) continue;
        for (std::uint64_t a = 0; a < p; a++)
            CHECK(jacobi(static_cast<std::int64_t>(a), p) == legendre_by_squares(a, p));
    }
}

TEST_CASE("jacobi is multiplicative across the factorization of n") {
    auto prime = sieve(200);
    for (std::uint64_t n = 3; n <= 199; n += 2) {
        for (std::int64_t a = -30; a <= 30; a++) {
            int expect = 1;
            std::uint64_t rest = n;
            for (std::uint64_t p = 3; p <= rest; p += 2) {
                if (!prime[p]) continue;
                while (rest % p == 0) {
                    expect *= legendre_by_squares(mod_reduce(a, Modulus(p)), p);
                    rest /= p;
                }
            }
            CHECK(jacobi(a, n) == expect);
        }
    }
}

TEST_CASE("jacobi frozen values") {
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(3, 9) == 0);
    CHECK(jacobi(-1, 5) == 1);
    CHECK(jacobi(-1, 7) == -1);
    CHECK(jacobi(5, 1) == 1);
    CHECK(jacobi(1000003, 3) == jacobi(1000003 % 3, 3));
    CHECK_THROWS_AS(jacobi(2, 8), domain_error);  // even lower argument
}

TEST_CASE("is_prime agrees with a sieve up to 3*10^5") {
    const std::size_t limit = 300000;
    auto prime = sieve(limit);
    for (std::uint64_t n = 0; n <= limit; n++) CHECK(is_prime(n) == prime[n]);
}

TEST_CASE("is_prime rejects Carmichael numbers and accepts large primes") {
    CHECK_FALSE(is_prime(561));       // 3 * 11 * 17
    CHECK_FALSE(is_prime(41041));     // 7 * 11 * 13 * 41
    CHECK_FALSE(is_prime(825265));    // 5 * 7 * 17 * 19 * 73
    CHECK_FALSE(is_prime(1ull << 40));
    CHECK(is_prime((1ull << 31) - 1));  // Mersenne prime 2^31 - 1
    CHECK(is_prime(999999999989ull));   // largest prime below 10^12
    CHECK_FALSE(is_prime(999999999989ull * 3));
}

TEST_CASE("distinct_prime_factors lists each prime divisor once, ascending") {
    CHECK(distinct_prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(distinct_prime_factors(1) == std::vector<std::uint64_t>{});
    CHECK(distinct_prime_factors(97) == std::vector<std::uint64_t>{97});
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; t++) {
        std::uint64_t n = rng() % 1000000 + 1;
        std::uint64_t rest = n;
        std::uint64_t last = 0;
        for (std::uint64_t f : distinct_prime_factors(n)) {
            CHECK(is_prime(f));
            CHECK(f > last);
            last = f;
            CHECK(rest % f == 0);
            while (rest % f == 0) rest /= f;
        }
        CHECK(rest == 1);  // no prime divisor was missed
    }
}

TEST_CASE("euler_phi matches the gcd count") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(45) == 24);
    for (std::uint64_t n = 1; n <= 2000; n++) CHECK(euler_phi(n) == gcd_count_phi(n));
}

TEST_CASE("primitive roots by order check") {
    // g is a primitive root of p^r iff its multiplicative order is phi(p^r).
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}) {
        PrimePower pp(p, r);
        std::uint64_t m = pp.modulus(), n = pp.totient();
        std::set<std::uint64_t> by_order;
        for (std::uint64_t g = 1; g < m; g++) {
            if (std::gcd(g, m) != 1) continue;
            std::uint64_t order = 1, x = g;
            while (x != 1) {
                x = mul_mod(x, g, m);
                order++;
            }
            if (order == n) by_order.insert(g);
        }
        auto roots = enumerate_primitive_roots(pp);
        CHECK(std::set<std::uint64_t>(roots.begin(), roots.end()) == by_order);
        CHECK(roots.size() == euler_phi(n));
        for (std::uint64_t g = 1; g < m; g++)
            if (std::gcd(g, m) == 1)
                CHECK(is_primitive_root(g, pp) == (by_order.count(g) == 1));
    }
}

TEST_CASE("primitive root frozen values") {
    CHECK(enumerate_primitive_roots(PrimePower(7, 1)) == std::vector<std::uint64_t>{3, 5});
    CHECK(enumerate_primitive_roots(PrimePower(3, 2)) == std::vector<std::uint64_t>{2, 5});
    CHECK(enumerate_primitive_roots(PrimePower(5, 1)) == std::vector<std::uint64_t>{2, 3});
    CHECK_THROWS_AS(is_primitive_root(0, PrimePower(7, 1)), domain_error);
    CHECK_THROWS_AS(is_primitive_root(14, PrimePower(7, 1)), domain_error);
    CHECK_FALSE(is_primitive_root(2, PrimePower(7, 1)));
}

TEST_CASE("smallest_primitive_roots is a prefix of the full enumeration") {
    for (std::uint64_t p : {5, 7, 11, 13, 23, 41}) {
        PrimePower pp(p, 1);
        auto all = enumerate_primitive_roots(pp);
        for (std::size_t k = 0; k <= all.size() + 2; k++) {
            auto some = smallest_primitive_roots(pp, k);
            std::size_t expect = std::min(k, all.size());
            CHECK(some.size() == expect);
            CHECK(std::equal(some.begin(), some.end(), all.begin()));
        }
    }
}

TEST_CASE("half_factorial_mod_p") {
    CHECK(half_factorial_mod_p(3) == 1);    // 1!
    CHECK(half_factorial_mod_p(7) == 6);    // 3! = 6
    CHECK(half_factorial_mod_p(11) == 10);  // 5! = 120 = 10 (mod 11)
    CHECK(half_factorial_mod_p(23) == 1);   // 11! = 39916800 = 1 (mod 23)
}
