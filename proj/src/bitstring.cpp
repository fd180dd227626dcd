#include "emolab/bitstring.hpp"

#include <bit>

#include "emolab/errors.hpp"

namespace emolab {

namespace {
constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

BitString::BitString(std::size_t n) : size_(n), words_(word_count(n), 0) {
    require(n >= 1, "BitString: length must be positive");
}

BitString BitString::from_string(std::string_view text) {
    BitString x(text.empty() ? 0 : text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            x.set(i, true);
        } else if (text[i] != '0') {
            throw ContractViolation("BitString: invalid character in '" + std::string(text) + "'");
        }
    }
    return x;
}

BitString BitString::ones(std::size_t n) {
    BitString x(n);
    for (auto& w : x.words_) w = ~std::uint64_t{0};
    if (const std::size_t tail = n & 63; tail != 0) x.words_.back() = (std::uint64_t{1} << tail) - 1;
    return x;
}

void BitString::set(std::size_t pos, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (pos & 63);
    if (value) {
        words_[pos >> 6] |= mask;
    } else {
        words_[pos >> 6] &= ~mask;
    }
}

std::size_t BitString::count_ones() const noexcept {
    std::size_t total = 0;
    for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::string BitString::to_string() const {
    std::string text(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (test(i)) text[i] = '1';
    }
    return text;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
    require(a.size() == b.size(), "hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.test(i) != b.test(i);
    return d;
}

BitString random_bitstring(std::size_t n, RngStream& rng) {
    require(n >= 1, "random_bitstring: n must be positive");
    BitString x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.coin()) x.set(i, true);
    }
    return x;
}

BitString bitwise_mutate(const BitString& x, double rate, RngStream& rng) {
    require(rate >= 0.0 && rate <= 1.0, "bitwise_mutate: rate must lie in [0, 1]");
    BitString y = x;
    if (rate == 0.0) return y;
    if (rate == 1.0) {
        for (std::size_t i = 0; i < y.size(); ++i) y.flip(i);
        return y;
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (rng.bernoulli(rate)) y.flip(i);
    }
    return y;
}

}  // namespace emolab
