#include "permsign/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace permsign::constructions {

using arith::Modulus;
using arith::PrimePower;
using perm::Permutation;

namespace {

void require_odd_prime(std::uint64_t p, const char* who) {
    if (p < 3 || p % 2 == 0 || !arith::is_prime(p))
        throw domain_error(std::string(who) + " needs an odd prime, got " + std::to_string(p));
}

std::uint32_t pos(std::uint64_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

Permutation mul_perm(Modulus n, std::int64_t a) {
    std::uint64_t m = n.value();
    std::uint64_t ar = arith::mod_reduce(a, n);
    if (std::gcd(ar, m) != 1)
        throw not_invertible_error("multiplier " + std::to_string(a) + " is not a unit mod " +
                                   std::to_string(m));
    std::vector<std::uint32_t> images(m);
    for (std::uint64_t t = 0; t < m; t++) images[t] = pos(arith::mul_mod(ar, t, m));
    return Permutation(std::move(images));
}

Permutation power_perm(std::uint64_t p, std::uint64_t k) {
    require_odd_prime(p, "power_perm");
    if (k < 1) throw domain_error("power_perm needs k >= 1");
    if (std::gcd(k, p - 1) != 1)
        throw not_bijective_error("x -> x^" + std::to_string(k) + " is not a bijection mod " +
                                  std::to_string(p) + ": gcd(k, p-1) = " +
                                  std::to_string(std::gcd(k, p - 1)));
    Modulus n(p);
    std::vector<std::uint32_t> images(p - 1);
    for (std::uint64_t i = 1; i < p; i++)
        images[i - 1] = pos(arith::mod_pow(static_cast<std::int64_t>(i), k, n) - 1);
    return Permutation(std::move(images));
}

Permutation cube_perm_with_zero(std::uint64_t p) {
    require_odd_prime(p, "cube_perm_with_zero");
    if (p % 3 != 2)
        throw domain_error("cubing is only bijective mod p for p = 2 (mod 3), got " +
                           std::to_string(p));
    std::vector<std::uint32_t> images(p);
    for (std::uint64_t t = 0; t < p; t++)
        images[t] = pos(arith::mul_mod(arith::mul_mod(t, t, p), t, p));
    return Permutation(std::move(images));
}

ResidueSequence sequence_A(int which, std::uint64_t p) {
    require_odd_prime(p, "sequence_A");
    if (which < 0 || which > 4)
        throw domain_error("sequence index must be 0..4, got " + std::to_string(which));
    std::uint64_t half = (p - 1) / 2;
    ResidueSequence seq;
    seq.modulus = p;
    seq.label = static_cast<SequenceLabel>(which);
    seq.entries.reserve(half);
    for (std::uint64_t i = 1; i <= half; i++) {
        std::uint64_t e = 0;
        switch (which) {
            case 0:
            case 1: e = arith::mul_mod(i, i, p); break;
            case 2: e = arith::mul_mod(2 * i, 2 * i, p); break;
            case 3: e = arith::mul_mod(2 * i - 1, 2 * i - 1, p); break;
            case 4:
                e = arith::jacobi(static_cast<std::int64_t>(i), p) == 1 ? i : p - i;
                break;
        }
        seq.entries.push_back(e);
    }
    if (which == 0) std::sort(seq.entries.begin(), seq.entries.end());
    return seq;
}

Permutation sigma_ij(int which_i, int which_j, std::uint64_t p) {
    ResidueSequence ai = sequence_A(which_i, p);
    ResidueSequence aj = sequence_A(which_j, p);
    return perm::match_sequences(aj.entries, ai.entries);
}

FoldedResidue fold_R(std::int64_t k, std::uint64_t p) {
    require_odd_prime(p, "fold_R");
    std::uint64_t v = arith::mod_reduce(k, Modulus(p));
    return std::min(v, p - v);
}

std::uint64_t count_Np(std::uint64_t p) {
    require_odd_prime(p, "count_Np");
    std::uint64_t half = (p - 1) / 2;
    std::vector<std::uint64_t> folded(half);
    for (std::uint64_t i = 1; i <= half; i++)
        folded[i - 1] = std::min(arith::mul_mod(i, i, p), p - arith::mul_mod(i, i, p));
    return perm::count_inversions(folded);
}

Permutation tau_p_perm(std::uint64_t p) {
    require_odd_prime(p, "tau_p_perm");
    Modulus n(p);
    std::uint64_t half = (p - 1) / 2;
    std::vector<std::uint32_t> images(half);
    for (std::uint64_t k = 1; k <= half; k++) {
        std::uint64_t inv = arith::mod_inv(static_cast<std::int64_t>(k), n);
        std::uint64_t star = inv <= half ? inv : p - inv;
        images[k - 1] = pos(star - 1);
    }
    return Permutation(std::move(images));
}

ResidueSequence reduced_residues(PrimePower pp) {
    ResidueSequence seq;
    seq.modulus = pp.modulus();
    seq.label = SequenceLabel::reduced_residues;
    seq.entries.reserve(pp.totient());
    for (std::uint64_t v = 1; v < pp.modulus(); v++)
        if (v % pp.prime() != 0) seq.entries.push_back(v);
    return seq;
}

Permutation sigma_g_perm(PrimePower pp, std::uint64_t g) {
    if (!arith::is_primitive_root(g, pp))
        throw domain_error(std::to_string(g) + " is not a primitive root of " +
                           std::to_string(pp.prime()) + "^" + std::to_string(pp.exponent()));
    std::uint64_t m = pp.modulus();
    std::uint64_t n = pp.totient();
    std::uint64_t p = pp.prime();
    std::vector<std::uint32_t> images(n);
    std::uint64_t power = 1;
    for (std::uint64_t i = 1; i <= n; i++) {
        power = arith::mul_mod(power, g % m, m);
        // Position of a unit v among the ascending units: v-1 minus the
        // multiples of p below v.
        images[i - 1] = pos((power - 1) - (power - 1) / p);
    }
    return Permutation(std::move(images));
}

}  // namespace permsign::constructions
