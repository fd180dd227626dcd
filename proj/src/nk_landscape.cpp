#include "emolab/nk_landscape.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "emolab/errors.hpp"
#include "emolab/rng.hpp"

namespace emolab {

NkInstance::NkInstance(std::size_t n, std::size_t K, std::uint64_t seed,
                       std::vector<std::vector<std::size_t>> loci,
                       std::vector<std::vector<double>> contributions)
    : n_(n), K_(K), seed_(seed), loci_(std::move(loci)), contributions_(std::move(contributions)) {
    require(n >= 1, "NkInstance: n must be positive");
    require(K < n, "NkInstance: K must be smaller than n");
    require(K < 20, "NkInstance: K too large for a contribution table");
    require(loci_.size() == objectives * n && contributions_.size() == objectives * n,
            "NkInstance: expected 2n loci and contribution rows");
    const std::size_t table_size = std::size_t{1} << (K + 1);
    for (std::size_t row = 0; row < loci_.size(); ++row) {
        const std::size_t i = row % n;
        auto neighbours = loci_[row];
        require(neighbours.size() == K, "NkInstance: loci row must hold K positions");
        std::sort(neighbours.begin(), neighbours.end());
        require(std::adjacent_find(neighbours.begin(), neighbours.end()) == neighbours.end(),
                "NkInstance: loci must be distinct");
        for (const auto pos : neighbours) {
            require(pos < n && pos != i, "NkInstance: locus out of range or equal to its own position");
        }
        require(contributions_[row].size() == table_size, "NkInstance: table must hold 2^(K+1) entries");
        for (const double c : contributions_[row]) {
            require(c >= 0.0 && c < 1.0, "NkInstance: contributions must lie in [0, 1)");
        }
    }
}

ObjectiveVector NkInstance::evaluate(const BitString& x) const {
    require(x.size() == n_, "NkInstance::evaluate: length mismatch");
    ObjectiveVector f;
    for (std::size_t j = 0; j < objectives; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            std::size_t index = x.test(i) ? 1 : 0;
            for (const auto pos : loci(j, i)) index = (index << 1) | (x.test(pos) ? 1 : 0);
            sum += table(j, i)[index];
        }
        f[j] = sum / static_cast<double>(n_);
    }
    return f;
}

std::string NkInstance::to_json() const {
    nlohmann::json doc;
    doc["n"] = n_;
    doc["K"] = K_;
    doc["seed"] = seed_;
    doc["loci"] = loci_;
    doc["contributions"] = contributions_;
    return doc.dump();
}

NkInstance NkInstance::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        return NkInstance(doc.at("n").get<std::size_t>(), doc.at("K").get<std::size_t>(),
                          doc.at("seed").get<std::uint64_t>(),
                          doc.at("loci").get<std::vector<std::vector<std::size_t>>>(),
                          doc.at("contributions").get<std::vector<std::vector<double>>>());
    } catch (const nlohmann::json::exception& e) {
        throw ContractViolation(std::string("NkInstance::from_json: ") + e.what());
    }
}

NkInstance generate_nk_instance(std::size_t n, std::size_t K, std::uint64_t seed) {
    require(n >= 1, "generate_nk_instance: n must be positive");
    require(K < n, "generate_nk_instance: K must be smaller than n");
    RngStream rng(seed);
    const std::size_t table_size = std::size_t{1} << (K + 1);
    std::vector<std::vector<std::size_t>> loci;
    std::vector<std::vector<double>> tables;
    loci.reserve(NkInstance::objectives * n);
    tables.reserve(NkInstance::objectives * n);
    std::vector<std::size_t> candidates(n - 1);
    for (std::size_t j = 0; j < NkInstance::objectives; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            // Every position except i, then a partial Fisher-Yates shuffle.
            std::iota(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(i), std::size_t{0});
            std::iota(candidates.begin() + static_cast<std::ptrdiff_t>(i), candidates.end(), i + 1);
            for (std::size_t s = 0; s < K; ++s) {
                const std::size_t pick = s + rng.below(candidates.size() - s);
                std::swap(candidates[s], candidates[pick]);
            }
            loci.emplace_back(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(K));
            std::vector<double> table(table_size);
            for (auto& c : table) c = rng.uniform01();
            tables.push_back(std::move(table));
        }
    }
    return NkInstance(n, K, seed, std::move(loci), std::move(tables));
}

}  // namespace emolab
