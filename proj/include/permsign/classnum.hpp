#pragma once

#include <cstdint>
#include <utility>

#include "permsign/permutation.hpp"

namespace permsign::classnum {

// Class number h(-p) of Q(sqrt(-p)) for a prime p = 3 (mod 4), together with
// the two character sums it was derived from.
struct ClassNumberResult {
    std::uint64_t p = 0;
    std::uint64_t h = 0;
    std::int64_t character_sum = 0;  // sum of (i/p) over 1 <= i <= (p-1)/2
    std::int64_t weighted_sum = 0;   // sum of i*(i/p) over 1 <= i <= p-1
};

// Evaluates h(-p) by both character-sum formulas,
//   h = character_sum / (2 - (2/p))   and   h = -weighted_sum / p,
// in exact integer arithmetic and requires them to agree (p = 3 is the
// classical exception where only the weighted form applies; h(-3) = 1).
ClassNumberResult class_number_neg_p(std::uint64_t p);

// Both sides of ((p-1)/2)! = (-1)^((h(-p)+1)/2) (mod p), as signs:
// first the factorial side, then the class-number side. Requires p > 3,
// p = 3 (mod 4); the congruence is false at p = 3.
std::pair<perm::Sign, perm::Sign> mordell_check(std::uint64_t p);

// Sign of prod_{1<=i<j<=(p-1)/2} (i^2 + j^2) mod p for p = 3 (mod 4);
// the product is always +-1 mod p there. Empty product (p = 3) gives +1.
perm::Sign sum_of_squares_product_sign(std::uint64_t p);

// prod_{1<=i<j<=p-1} (j - i) mod p, evaluated as prod_d d^(p-1-d), for
// p = 3 (mod 4). Returned as the residue in [0, p).
std::uint64_t vandermonde_full_product_sign(std::uint64_t p);

}  // namespace permsign::classnum
