#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "emolab/rng.hpp"

namespace emolab {

/// Fixed-length binary string packed into 64-bit words.
///
/// Position 0 is the leftmost character of the text rendering. Bits past
/// size() in the last word are always zero, so word-level popcounts and
/// equality comparisons need no masking.
class BitString {
public:
    /// All-zero string of length n (n >= 1).
    explicit BitString(std::size_t n);

    /// Parses a '0'/'1' rendering; throws ContractViolation on other characters
    /// or an empty string.
    static BitString from_string(std::string_view text);

    static BitString ones(std::size_t n);

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1U; }
    void set(std::size_t pos, bool value);
    void flip(std::size_t pos) { words_[pos >> 6] ^= std::uint64_t{1} << (pos & 63); }

    std::size_t count_ones() const noexcept;
    std::size_t count_zeros() const noexcept { return size_ - count_ones(); }

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

inline std::size_t count_ones(const BitString& x) noexcept { return x.count_ones(); }

std::size_t hamming_distance(const BitString& a, const BitString& b);

/// Uniformly random string of length n; throws ContractViolation when n == 0.
BitString random_bitstring(std::size_t n, RngStream& rng);

/// Copy of x with every bit flipped independently with probability rate.
/// Consumes exactly one draw from rng per bit when 0 < rate < 1.
BitString bitwise_mutate(const BitString& x, double rate, RngStream& rng);

}  // namespace emolab
