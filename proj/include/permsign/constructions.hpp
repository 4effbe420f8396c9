#pragma once

#include <cstdint>
#include <vector>

#include "permsign/arith.hpp"
#include "permsign/permutation.hpp"

namespace permsign::constructions {

enum class SequenceLabel { a0, a1, a2, a3, a4, reduced_residues };

// A labeled sequence of residues modulo a fixed modulus.
struct ResidueSequence {
    std::vector<std::uint64_t> entries;
    std::uint64_t modulus = 0;
    SequenceLabel label = SequenceLabel::a0;
};

// Representative of +-k in [0, (p-1)/2].
using FoldedResidue = std::uint64_t;

// t -> a*t mod n on positions {0, ..., n-1}. Requires gcd(a, n) = 1.
perm::Permutation mul_perm(arith::Modulus n, std::int64_t a);

// i -> i^k mod p on {1, ..., p-1}, as positions 0..p-2 over the ascending
// list. Requires gcd(k, p-1) = 1; throws not_bijective_error otherwise.
perm::Permutation power_perm(std::uint64_t p, std::uint64_t k);

// k -> k^3 mod p on all of {0, ..., p-1}. Requires an odd prime p = 2 (mod 3),
// which makes cubing bijective.
perm::Permutation cube_perm_with_zero(std::uint64_t p);

// The five half-length square sequences modulo an odd prime p, each of length
// (p-1)/2 with i running from 1:
//   A0: quadratic residues in ascending order
//   A1: {i^2}_p
//   A2: {(2i)^2}_p
//   A3: {(2i-1)^2}_p
//   A4: {i * (i/p)}_p   (Legendre-signed indices)
ResidueSequence sequence_A(int which, std::uint64_t p);

// The permutation sigma with A_i[t] = A_j[sigma(t)]. Throws
// set_mismatch_error when the two sequences do not hold the same set
// (e.g. which_i = 4 with p = 1 mod 4).
perm::Permutation sigma_ij(int which_i, int which_j, std::uint64_t p);

// min({k}_p, p - {k}_p): the distance of k from 0 modulo p.
FoldedResidue fold_R(std::int64_t k, std::uint64_t p);

// Number of pairs i < j <= (p-1)/2 with fold_R(i^2) > fold_R(j^2).
std::uint64_t count_Np(std::uint64_t p);

// k -> k* on {1, ..., (p-1)/2} where k * k* = +-1 (mod p), as positions.
perm::Permutation tau_p_perm(std::uint64_t p);

// Units modulo p^r in ascending order.
ResidueSequence reduced_residues(arith::PrimePower pp);

// For the ascending units b_1 < ... < b_n of p^r and a primitive root g:
// position i-1 (holding b_i) maps to the position of {g^i}_{p^r}.
perm::Permutation sigma_g_perm(arith::PrimePower pp, std::uint64_t g);

}  // namespace permsign::constructions
