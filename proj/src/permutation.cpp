#include "permsign/permutation.hpp"

#include <algorithm>
#include <unordered_map>

namespace permsign::perm {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw not_bijective_error("image list is not a permutation of 0.." +
                                      std::to_string(images_.size()) + "-1");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t m) {
    std::vector<std::uint32_t> v(m);
    for (std::size_t i = 0; i < m; i++) v[i] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(v));
}

Sign Permutation::sign() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < images_.size(); i++) {
        if (seen[i]) continue;
        cycles++;
        std::size_t j = i;
        while (!seen[j]) { seen[j] = true; j = images_[j]; }
    }
    return sign_of_parity(images_.size() - cycles);
}

std::uint64_t Permutation::inversions() const {
    std::vector<std::uint64_t> v(images_.begin(), images_.end());
    return count_inversions(v);
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw length_mismatch_error("compose needs equal sizes, got " + std::to_string(size()) +
                                    " and " + std::to_string(other.size()));
    std::vector<std::uint32_t> v(size());
    for (std::size_t t = 0; t < size(); t++) v[t] = images_[other.images_[t]];
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> v(size());
    for (std::size_t t = 0; t < size(); t++) v[images_[t]] = static_cast<std::uint32_t>(t);
    return Permutation(std::move(v));
}

std::uint64_t count_inversions(std::span<const std::uint64_t> values) {
    // Bottom-up merge count. Taking from the left on ties keeps them uncounted.
    std::vector<std::uint64_t> a(values.begin(), values.end());
    std::vector<std::uint64_t> buf(a.size());
    std::uint64_t inversions = 0;
    for (std::size_t width = 1; width < a.size(); width *= 2) {
        for (std::size_t lo = 0; lo + width < a.size(); lo += 2 * width) {
            std::size_t mid = lo + width;
            std::size_t hi = std::min(mid + width, a.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (a[i] <= a[j]) buf[k++] = a[i++];
                else { inversions += mid - i; buf[k++] = a[j++]; }
            }
            while (i < mid) buf[k++] = a[i++];
            while (j < hi) buf[k++] = a[j++];
            std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
        }
    }
    return inversions;
}

Permutation match_sequences(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    if (a.size() != b.size())
        throw length_mismatch_error("sequence lengths differ: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    std::unordered_map<std::uint64_t, std::uint32_t> position;
    position.reserve(a.size());
    for (std::size_t t = 0; t < a.size(); t++)
        if (!position.emplace(a[t], static_cast<std::uint32_t>(t)).second)
            throw set_mismatch_error("duplicate value " + std::to_string(a[t]) +
                                     " in reference sequence");
    std::vector<std::uint32_t> images(b.size());
    std::vector<bool> used(a.size(), false);
    for (std::size_t t = 0; t < b.size(); t++) {
        auto it = position.find(b[t]);
        if (it == position.end() || used[it->second])
            throw set_mismatch_error("value " + std::to_string(b[t]) +
                                     " does not pair up across the sequences");
        used[it->second] = true;
        images[t] = it->second;
    }
    return Permutation(std::move(images));
}

}  // namespace permsign::perm
