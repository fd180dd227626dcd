#include "emolab/pareto_front.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>
#include <variant>

#include "emolab/errors.hpp"

namespace emolab {

bool ParetoFront::contains(const ObjectiveVector& v) const {
    return std::binary_search(points.begin(), points.end(), v);
}

ParetoFront pareto_front_closed_form(const ProblemSpec& problem) {
    ParetoFront front;
    auto& pts = front.points;
    if (const auto* p = std::get_if<OneMinMax>(&problem)) {
        for (std::size_t i = 0; i <= p->n; ++i) pts.emplace_back(double(i), double(p->n - i));
    } else if (const auto* p = std::get_if<OneJumpZeroJump>(&problem)) {
        const std::size_t total = p->n + 2 * p->k;
        for (std::size_t i = 2 * p->k; i <= p->n; ++i) pts.emplace_back(double(i), double(total - i));
        pts.emplace_back(double(p->k), double(p->n + p->k));
        pts.emplace_back(double(p->n + p->k), double(p->k));
    } else if (const auto* p = std::get_if<OneMinMaxStar>(&problem)) {
        for (std::size_t i = 0; i + 1 <= p->n; ++i) pts.emplace_back(double(i), double(p->n - i));
        pts.emplace_back(-double(p->n), 2.0 * double(p->n));
    } else {
        throw UnsupportedProblem("pareto_front_closed_form: NK-landscape fronts require enumeration");
    }
    std::sort(pts.begin(), pts.end());
    return front;
}

namespace {

/// Two-objective non-dominated archive kept as a staircase: f1 ascending,
/// f2 strictly descending.
class StaircaseArchive {
public:
    void offer(const ObjectiveVector& v, std::uint64_t id) {
        auto it = steps_.lower_bound(v[0]);
        if (it != steps_.end() && it->second.f2 >= v[1]) return;  // weakly dominated
        // Entries with f1 <= v[0] and f2 <= v[1] sit directly below upper_bound(v[0]).
        auto last = steps_.upper_bound(v[0]);
        auto first = last;
        while (first != steps_.begin() && std::prev(first)->second.f2 <= v[1]) --first;
        steps_.erase(first, last);
        steps_.emplace(v[0], Step{v[1], id});
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [f1, step] : steps_) fn(ObjectiveVector{f1, step.f2}, step.id);
    }

private:
    struct Step {
        double f2;
        std::uint64_t id;
    };
    std::map<double, Step> steps_;
};

BitString bits_of(std::uint64_t v, std::size_t n) {
    BitString x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if ((v >> i) & 1U) x.set(i, true);
    }
    return x;
}

}  // namespace

ParetoFront enumerate_pareto_front(const ProblemSpec& problem, bool witness) {
    const std::size_t n = problem_size(problem);
    if (n > enumeration_limit) {
        throw SizeGuardError("enumerate_pareto_front: n = " + std::to_string(n) + " exceeds the enumeration limit of " +
                             std::to_string(enumeration_limit));
    }
    StaircaseArchive archive;
    BitString x(n);
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < count; ++v) {
        if (v != 0) {
            // Only bits that changed between v-1 and v need updating.
            for (std::uint64_t changed = v ^ (v - 1); changed != 0; changed &= changed - 1) {
                x.flip(static_cast<std::size_t>(std::countr_zero(changed)));
            }
        }
        archive.offer(evaluate(problem, x), v);
    }
    ParetoFront front;
    if (witness) front.witnesses.emplace();
    archive.for_each([&](const ObjectiveVector& p, std::uint64_t id) {
        front.points.push_back(p);
        if (witness) front.witnesses->push_back(bits_of(id, n));
    });
    return front;
}

}  // namespace emolab
