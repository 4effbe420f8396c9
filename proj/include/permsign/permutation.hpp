#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permsign/errors.hpp"

namespace permsign::perm {

enum class Sign : int { negative = -1, positive = 1 };

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::positive : Sign::negative;
}
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign sign_of_parity(std::uint64_t n) {
    return n % 2 == 0 ? Sign::positive : Sign::negative;
}

// Permutation of positions {0, ..., m-1}. Construction validates bijectivity.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);
    static Permutation identity(std::size_t m);

    std::size_t size() const { return images_.size(); }
    std::uint32_t operator()(std::uint32_t t) const { return images_[t]; }
    std::span<const std::uint32_t> images() const { return images_; }

    // (-1)^(m - number of cycles).
    Sign sign() const;
    // Number of pairs s < t with image(s) > image(t). O(m log m).
    std::uint64_t inversions() const;
    // (*this) after other: result(t) = (*this)(other(t)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> images_;
};

// Counts pairs s < t with values[s] > values[t]; ties are not inversions.
std::uint64_t count_inversions(std::span<const std::uint64_t> values);

// The permutation sigma with b[t] = a[sigma(t)] for all t. Entries of a must
// be distinct and the two sequences must hold the same set of values; throws
// length_mismatch_error / set_mismatch_error otherwise.
Permutation match_sequences(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

}  // namespace permsign::perm
