#include "emolab/survival.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

#include "emolab/errors.hpp"

namespace emolab {

FrontPartition fast_nondominated_sort(std::span<Individual> pop) {
    const std::size_t size = pop.size();
    FrontPartition partition;
    if (size == 0) return partition;

    // Each unordered pair is compared once; (x, y) edges mean x dominates y.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::size_t> dominator_count(size, 0);
    std::vector<std::size_t> out_degree(size + 1, 0);
    for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = x + 1; y < size; ++y) {
            switch (dominance(pop[x].objectives, pop[y].objectives)) {
                case DominanceRelation::Dominates:
                    edges.emplace_back(x, y);
                    ++dominator_count[y];
                    ++out_degree[x + 1];
                    break;
                case DominanceRelation::DominatedBy:
                    edges.emplace_back(y, x);
                    ++dominator_count[x];
                    ++out_degree[y + 1];
                    break;
                default:
                    break;
            }
        }
    }
    // S_x as compressed rows: dominated_set[offset[x] .. offset[x+1]).
    std::vector<std::size_t>& offset = out_degree;
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    std::vector<std::uint32_t> dominated_set(edges.size());
    {
        std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
        for (const auto& [x, y] : edges) dominated_set[cursor[x]++] = y;
    }

    std::vector<std::size_t> current;
    for (std::size_t x = 0; x < size; ++x) {
        if (dominator_count[x] == 0) {
            pop[x].rank = 1;
            current.push_back(x);
        }
    }
    std::size_t rank = 1;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (const std::size_t x : current) {
            for (std::size_t e = offset[x]; e < offset[x + 1]; ++e) {
                const std::size_t y = dominated_set[e];
                if (--dominator_count[y] == 0) {
                    pop[y].rank = rank + 1;
                    next.push_back(y);
                }
            }
        }
        partition.fronts.push_back(std::move(current));
        current = std::move(next);
        ++rank;
    }
    return partition;
}

std::vector<double> crowding_distance_assign(std::span<const Individual> pop, std::span<const std::size_t> members) {
    const std::size_t l = members.size();
    std::vector<double> dist(l, 0.0);
    if (l == 0) return dist;
    constexpr double inf = std::numeric_limits<double>::infinity();

    std::vector<std::size_t> order(l);
    for (std::size_t i = 0; i < ObjectiveVector::dimension; ++i) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const Individual& ia = pop[members[a]];
            const Individual& ib = pop[members[b]];
            if (ia.objectives[i] != ib.objectives[i]) return ia.objectives[i] < ib.objectives[i];
            return ia.birth_index < ib.birth_index;
        });
        auto value = [&](std::size_t j) { return pop[members[order[j]]].objectives[i]; };
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        const double range = value(l - 1) - value(0);
        if (range == 0.0) continue;
        for (std::size_t j = 1; j + 1 < l; ++j) dist[order[j]] += (value(j + 1) - value(j - 1)) / range;
    }
    return dist;
}

std::vector<double> crowding_distance_assign(std::span<const Individual> front) {
    std::vector<std::size_t> all(front.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return crowding_distance_assign(front, all);
}

std::vector<double> reference_distances(std::span<const Individual> pop, std::span<const std::size_t> members,
                                        const ObjectiveVector& z) {
    std::vector<double> dist;
    dist.reserve(members.size());
    for (const std::size_t m : members) dist.push_back(euclidean_distance(pop[m].objectives, z));
    return dist;
}

std::vector<double> reference_distances(std::span<const Individual> front, const ObjectiveVector& z) {
    std::vector<std::size_t> all(front.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return reference_distances(front, all, z);
}

std::vector<Individual> survival_select(std::vector<Individual> combined, std::size_t capacity,
                                        const SurvivalPolicy& policy) {
    require(combined.size() >= capacity, "survival_select: fewer candidates than survivor slots");
    const FrontPartition partition = fast_nondominated_sort(combined);

    std::vector<Individual> survivors;
    survivors.reserve(capacity);
    for (const auto& front : partition.fronts) {
        const std::size_t open = capacity - survivors.size();
        if (open == 0) break;
        if (front.size() <= open) {
            for (const std::size_t m : front) survivors.push_back(std::move(combined[m]));
            continue;
        }

        // Critical front.
        const bool by_reference = std::holds_alternative<ReferencePointDistance>(policy);
        const std::vector<double> keys =
            by_reference ? reference_distances(combined, front, std::get<ReferencePointDistance>(policy).z)
                         : crowding_distance_assign(combined, front);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (keys[a] != keys[b]) return by_reference ? keys[a] < keys[b] : keys[a] > keys[b];
            return combined[front[a]].birth_index < combined[front[b]].birth_index;
        });
        for (std::size_t j = 0; j < open; ++j) {
            Individual& chosen = combined[front[order[j]]];
            chosen.survival_key = keys[order[j]];
            survivors.push_back(std::move(chosen));
        }
        break;
    }
    return survivors;
}

}  // namespace emolab
