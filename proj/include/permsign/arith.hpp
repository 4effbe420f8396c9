#pragma once

#include <cstdint>
#include <vector>

#include "permsign/errors.hpp"

namespace permsign::arith {

// Modulus for residue arithmetic. 2 <= n < 2^40, so products of two reduced
// residues fit comfortably in the 128-bit intermediates used throughout.
class Modulus {
public:
    explicit Modulus(std::uint64_t n);
    std::uint64_t value() const { return n_; }

private:
    std::uint64_t n_;
};

// Odd prime power p^r with p^r < 2^40.
class PrimePower {
public:
    PrimePower(std::uint64_t p, unsigned r);
    std::uint64_t prime() const { return p_; }
    unsigned exponent() const { return r_; }
    std::uint64_t modulus() const { return m_; }
    std::uint64_t totient() const { return m_ / p_ * (p_ - 1); }

private:
    std::uint64_t p_;
    unsigned r_;
    std::uint64_t m_;
};

// a*b mod m without overflow for any m < 2^63.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// Canonical representative of a in [0, n).
std::uint64_t mod_reduce(std::int64_t a, Modulus n);

// Inverse of a modulo n. Throws not_invertible_error when gcd(a, n) > 1.
std::uint64_t mod_inv(std::int64_t a, Modulus n);

// base^exp mod n by binary exponentiation. 0^0 = 1.
std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, Modulus n);

// Jacobi symbol (a/n) for odd n >= 1: 0 iff gcd(a, n) > 1, (a/1) = 1,
// negative a handled via (a mod n / n). Throws domain_error for even n.
int jacobi(std::int64_t a, std::uint64_t n);

// Deterministic Miller-Rabin, exact for all n < 2^63.
bool is_prime(std::uint64_t n);

// Distinct prime factors, ascending. Trial division; exact for n < 2^40.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// Euler's totient. phi(1) = 1.
std::uint64_t euler_phi(std::uint64_t n);

// True iff g generates (Z/p^r Z)^x. Throws domain_error when g = 0 (mod p).
bool is_primitive_root(std::uint64_t g, PrimePower pp);

// All primitive roots of p^r in ascending order.
std::vector<std::uint64_t> enumerate_primitive_roots(PrimePower pp);

// The `count` smallest primitive roots of p^r (fewer if fewer exist).
std::vector<std::uint64_t> smallest_primitive_roots(PrimePower pp, std::size_t count);

// ((p-1)/2)! mod p for an odd prime p.
std::uint64_t half_factorial_mod_p(std::uint64_t p);

}  // namespace permsign::arith
