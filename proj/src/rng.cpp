#include "emolab/rng.hpp"

#include "emolab/errors.hpp"

namespace emolab {

std::uint64_t RngStream::below(std::uint64_t bound) {
    require(bound > 0, "RngStream::below: bound must be positive");
    // Rejection sampling on the largest multiple of bound.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % bound;
}

}  // namespace emolab
