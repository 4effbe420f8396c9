#include "permsign/classnum.hpp"

#include <vector>

#include "permsign/arith.hpp"

namespace permsign::classnum {

using perm::Sign;

namespace {

void require_3mod4_prime(std::uint64_t p, const char* who) {
    if (p % 4 != 3 || !arith::is_prime(p))
        throw domain_error(std::string(who) + " needs a prime p = 3 (mod 4), got " +
                           std::to_string(p));
}

// Quadratic-residue table for a small odd prime: qr[v] iff v is a nonzero
// square mod p. Lets the character sums run in O(p) total.
std::vector<bool> residue_table(std::uint64_t p) {
    std::vector<bool> qr(p, false);
    for (std::uint64_t i = 1; i <= (p - 1) / 2; i++) qr[arith::mul_mod(i, i, p)] = true;
    return qr;
}

Sign sign_from_residue(std::uint64_t v, std::uint64_t p, const char* who) {
    if (v == 1) return Sign::positive;
    if (v == p - 1) return Sign::negative;
    throw inconsistency_error(std::string(who) + ": residue " + std::to_string(v) +
                              " mod " + std::to_string(p) + " is not +-1");
}

}  // namespace

ClassNumberResult class_number_neg_p(std::uint64_t p) {
    require_3mod4_prime(p, "class_number_neg_p");
    auto qr = residue_table(p);
    ClassNumberResult result;
    result.p = p;
    for (std::uint64_t i = 1; i < p; i++) {
        std::int64_t chi = qr[i] ? 1 : -1;
        if (i <= (p - 1) / 2) result.character_sum += chi;
        result.weighted_sum += static_cast<std::int64_t>(i) * chi;
    }
    if (p == 3) {
        // Q(sqrt(-3)) has 6 units instead of 2, so both plain forms pick up a
        // factor 3: the weighted sum is -p*h*(2/w) = -1 rather than -p*h.
        result.h = 1;
        if (result.weighted_sum != -1 || result.character_sum != 1)
            throw inconsistency_error("Dirichlet sums at p = 3 are off");
        return result;
    }
    if (result.weighted_sum % static_cast<std::int64_t>(p) != 0)
        throw inconsistency_error("weighted character sum not divisible by p at p = " +
                                  std::to_string(p));
    std::int64_t h_weighted = -result.weighted_sum / static_cast<std::int64_t>(p);
    std::int64_t divisor = 2 - arith::jacobi(2, p);
    if (result.character_sum % divisor != 0)
        throw inconsistency_error("character sum not divisible by 2 - (2/p) at p = " +
                                  std::to_string(p));
    std::int64_t h_character = result.character_sum / divisor;
    if (h_character != h_weighted || h_character < 1)
        throw inconsistency_error("class number formulas disagree at p = " + std::to_string(p) +
                                  ": " + std::to_string(h_character) + " vs " +
                                  std::to_string(h_weighted));
    result.h = static_cast<std::uint64_t>(h_character);
    return result;
}

std::pair<Sign, Sign> mordell_check(std::uint64_t p) {
    require_3mod4_prime(p, "mordell_check");
    if (p == 3) throw domain_error("mordell_check requires p > 3; the congruence fails at 3");
    Sign factorial_side = sign_from_residue(arith::half_factorial_mod_p(p), p, "mordell_check");
    std::uint64_t h = class_number_neg_p(p).h;
    Sign class_side = perm::sign_of_parity((h + 1) / 2);
    return {factorial_side, class_side};
}

Sign sum_of_squares_product_sign(std::uint64_t p) {
    require_3mod4_prime(p, "sum_of_squares_product_sign");
    std::uint64_t half = (p - 1) / 2;
    std::vector<std::uint64_t> sq(half + 1);
    for (std::uint64_t i = 1; i <= half; i++) sq[i] = arith::mul_mod(i, i, p);
    std::uint64_t product = 1;
    for (std::uint64_t i = 1; i <= half; i++) {
        for (std::uint64_t j = i + 1; j <= half; j++) {
            std::uint64_t term = sq[i] + sq[j];
            if (term >= p) term -= p;
            product = arith::mul_mod(product, term, p);
        }
    }
    return sign_from_residue(product, p, "sum_of_squares_product_sign");
}

std::uint64_t vandermonde_full_product_sign(std::uint64_t p) {
    require_3mod4_prime(p, "vandermonde_full_product_sign");
    arith::Modulus n(p);
    // Difference d occurs p-1-d times among pairs i < j <= p-1.
    std::uint64_t product = 1;
    for (std::uint64_t d = 1; d + 1 < p; d++)
        product = arith::mul_mod(product, arith::mod_pow(static_cast<std::int64_t>(d), p - 1 - d, n), p);
    return product;
}

}  // namespace permsign::classnum
