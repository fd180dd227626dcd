#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "emolab/bitstring.hpp"
#include "emolab/objectives.hpp"

namespace emolab {

/// Bi-objective NK-landscape: two independent NK models over one bitstring.
///
/// For objective j and locus i, the contribution table is indexed by the
/// (K+1)-bit word whose most significant bit is x[i], followed by the bits at
/// loci(j, i) in stored order. Objective j is the mean of the n contributions.
class NkInstance {
public:
    static constexpr std::size_t objectives = 2;

    NkInstance(std::size_t n, std::size_t K, std::uint64_t seed,
               std::vector<std::vector<std::size_t>> loci,
               std::vector<std::vector<double>> contributions);

    std::size_t n() const noexcept { return n_; }
    std::size_t K() const noexcept { return K_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Neighbour positions of locus i for objective j.
    const std::vector<std::size_t>& loci(std::size_t j, std::size_t i) const { return loci_[j * n_ + i]; }
    /// Contribution table of locus i for objective j (2^(K+1) entries).
    const std::vector<double>& table(std::size_t j, std::size_t i) const { return contributions_[j * n_ + i]; }

    ObjectiveVector evaluate(const BitString& x) const;

    /// {n, K, seed, loci, contributions}; loci and contributions hold 2n rows,
    /// objective-major (row j*n + i).
    std::string to_json() const;
    static NkInstance from_json(const std::string& text);

    friend bool operator==(const NkInstance&, const NkInstance&) = default;

private:
    std::size_t n_;
    std::size_t K_;
    std::uint64_t seed_;
    std::vector<std::vector<std::size_t>> loci_;
    std::vector<std::vector<double>> contributions_;
};

/// Random instance: per objective and locus, K distinct neighbours != i drawn
/// without replacement, and table entries uniform in [0, 1). Pure in
/// (n, K, seed); throws ContractViolation when K >= n.
NkInstance generate_nk_instance(std::size_t n, std::size_t K, std::uint64_t seed);

}  // namespace emolab
