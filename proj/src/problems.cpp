#include "emolab/problems.hpp"

#include "emolab/errors.hpp"
#include "emolab/pareto_front.hpp"

namespace emolab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_ojzj_parameters(std::size_t n, std::size_t k) {
    require(n >= 1, "OneJumpZeroJump: n must be positive");
    require(k >= 2 && k <= n / 4, "OneJumpZeroJump: k must lie in [2 .. n/4]");
}

ObjectiveVector one_min_max(const BitString& x) {
    const auto ones = static_cast<double>(x.count_ones());
    return {static_cast<double>(x.size()) - ones, ones};
}

}  // namespace

ProblemSpec make_one_min_max(std::size_t n) {
    require(n >= 1, "OneMinMax: n must be positive");
    return OneMinMax{n};
}

ProblemSpec make_one_jump_zero_jump(std::size_t n, std::size_t k) {
    check_ojzj_parameters(n, k);
    return OneJumpZeroJump{n, k};
}

ProblemSpec make_one_min_max_star(std::size_t n) {
    require(n >= 1, "OneMinMax*: n must be positive");
    return OneMinMaxStar{n};
}

ProblemSpec make_nk_landscape(NkInstance instance) {
    return NkLandscape{std::make_shared<const NkInstance>(std::move(instance))};
}

void validate(const ProblemSpec& problem) {
    std::visit(overloaded{
                   [](const OneMinMax& p) { require(p.n >= 1, "OneMinMax: n must be positive"); },
                   [](const OneJumpZeroJump& p) { check_ojzj_parameters(p.n, p.k); },
                   [](const OneMinMaxStar& p) { require(p.n >= 1, "OneMinMax*: n must be positive"); },
                   [](const NkLandscape& p) { require(p.instance != nullptr, "NkLandscape: missing instance"); },
               },
               problem);
}

std::size_t problem_size(const ProblemSpec& problem) {
    return std::visit(overloaded{
                          [](const NkLandscape& p) { return p.instance->n(); },
                          [](const auto& p) { return p.n; },
                      },
                      problem);
}

std::string problem_label(const ProblemSpec& problem) {
    return std::visit(overloaded{
                          [](const OneMinMax&) { return std::string("omm"); },
                          [](const OneJumpZeroJump&) { return std::string("ojzj"); },
                          [](const OneMinMaxStar&) { return std::string("ommstar"); },
                          [](const NkLandscape&) { return std::string("nk"); },
                      },
                      problem);
}

ObjectiveVector evaluate(const ProblemSpec& problem, const BitString& x) {
    require(x.size() == problem_size(problem), "evaluate: bitstring length differs from problem size");
    return std::visit(
        overloaded{
            [&](const OneMinMax&) { return one_min_max(x); },
            [&](const OneJumpZeroJump& p) {
                const std::size_t ones = x.count_ones();
                const std::size_t zeros = p.n - ones;
                const double f1 = (ones <= p.n - p.k || ones == p.n) ? static_cast<double>(p.k + ones)
                                                                     : static_cast<double>(p.n - ones);
                const double f2 = (zeros <= p.n - p.k || zeros == p.n) ? static_cast<double>(p.k + zeros)
                                                                       : static_cast<double>(p.n - zeros);
                return ObjectiveVector{f1, f2};
            },
            [&](const OneMinMaxStar& p) {
                if (x.count_ones() == 0) {
                    const auto n = static_cast<double>(p.n);
                    return ObjectiveVector{-n, 2 * n};
                }
                return one_min_max(x);
            },
            [&](const NkLandscape& p) { return p.instance->evaluate(x); },
        },
        problem);
}

OjzjClass classify_ojzj(const BitString& x, std::size_t n, std::size_t k) {
    check_ojzj_parameters(n, k);
    require(x.size() == n, "classify_ojzj: bitstring length differs from n");
    const std::size_t ones = x.count_ones();
    if (ones >= k && ones <= n - k) return OjzjClass::InnerParetoSet;
    if (ones == 0 || ones == n) return OjzjClass::OuterParetoSet;
    return OjzjClass::NotParetoOptimal;
}

std::size_t pareto_front_size(const ProblemSpec& problem) {
    return std::visit(overloaded{
                          [](const OneJumpZeroJump& p) { return p.n - 2 * p.k + 3; },
                          [](const NkLandscape&) -> std::size_t {
                              throw UnsupportedProblem("pareto_front_size: no closed form for NK-landscape");
                          },
                          [](const auto& p) { return p.n + 1; },
                      },
                      problem);
}

ObjectiveVector default_reference_point(const ProblemSpec& problem, RngStream& rng) {
    return std::visit(overloaded{
                          [](const OneMinMax& p) { return ObjectiveVector{0.0, static_cast<double>(p.n)}; },
                          [](const OneJumpZeroJump& p) {
                              return ObjectiveVector{static_cast<double>(p.n + p.k), static_cast<double>(p.k)};
                          },
                          [](const OneMinMaxStar& p) {
                              const auto n = static_cast<double>(p.n);
                              return ObjectiveVector{-n, 2 * n};
                          },
                          [&](const NkLandscape&) {
                              const ParetoFront front = enumerate_pareto_front(problem);
                              return front.points[rng.below(front.size())];
                          },
                      },
                      problem);
}

}  // namespace emolab
