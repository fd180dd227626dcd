#include <doctest.h>

#include <set>

#include "emolab/errors.hpp"
#include "emolab/pareto_front.hpp"
#include "emolab/problems.hpp"
#include "oracles.hpp"

using namespace emolab;

namespace {

BitString with_ones(std::size_t n, std::size_t ones) {
    BitString x(n);
    for (std::size_t i = 0; i < ones; ++i) x.set(i, true);
    return x;
}

std::vector<ObjectiveVector> all_evaluations(const ProblemSpec& problem) {
    const std::size_t n = problem_size(problem);
    std::vector<ObjectiveVector> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        BitString x(n);
        for (std::size_t i = 0; i < n; ++i) x.set(i, (v >> i) & 1U);
        out.push_back(evaluate(problem, x));
    }
    return out;
}

}  // namespace

TEST_CASE("evaluate examples") {
    CHECK(evaluate(make_one_min_max(10), BitString::ones(10)) == ObjectiveVector{0, 10});
    CHECK(evaluate(make_one_jump_zero_jump(12, 2), BitString::ones(12)) == ObjectiveVector{14, 2});
    CHECK(evaluate(make_one_jump_zero_jump(12, 2), with_ones(12, 11)) == ObjectiveVector{1, 3});
    CHECK(evaluate(make_one_jump_zero_jump(12, 2), BitString(12)) == ObjectiveVector{2, 14});
    CHECK(evaluate(make_one_min_max_star(10), BitString(10)) == ObjectiveVector{-10, 20});
    CHECK(evaluate(make_one_min_max_star(10), with_ones(10, 1)) == ObjectiveVector{9, 1});
    CHECK_THROWS_AS(evaluate(make_one_min_max(5), BitString(6)), ContractViolation);
}

TEST_CASE("OneJumpZeroJump parameter guard") {
    CHECK_THROWS_AS(make_one_jump_zero_jump(12, 1), ContractViolation);
    CHECK_THROWS_AS(make_one_jump_zero_jump(12, 4), ContractViolation);
    CHECK_NOTHROW(make_one_jump_zero_jump(12, 3));
    CHECK_THROWS_AS(make_one_min_max(0), ContractViolation);
}

TEST_CASE("NK landscape with constant tables evaluates to the constant") {
    const std::size_t n = 6;
    const std::size_t K = 2;
    NkInstance base = generate_nk_instance(n, K, 3);
    std::vector<std::vector<std::size_t>> loci;
    std::vector<std::vector<double>> tables;
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            loci.push_back(base.loci(j, i));
            tables.emplace_back(std::size_t{1} << (K + 1), 0.375);
        }
    const ProblemSpec problem = make_nk_landscape(NkInstance(n, K, 3, loci, tables));
    for (const auto& f : all_evaluations(problem)) CHECK(f == ObjectiveVector{0.375, 0.375});
}

TEST_CASE("NK instance generation") {
    SUBCASE("K = 0 gives two-entry tables and linear objectives") {
        const NkInstance inst = generate_nk_instance(5, 0, 11);
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(inst.table(0, i).size() == 2);
            CHECK(inst.loci(1, i).empty());
        }
        // Linear: f(x) = f(0) + sum over set bits of independent increments.
        const ProblemSpec p = make_nk_landscape(inst);
        const ObjectiveVector base = evaluate(p, BitString(5));
        const ObjectiveVector x01 = evaluate(p, BitString::from_string("11000"));
        const ObjectiveVector x0 = evaluate(p, BitString::from_string("10000"));
        const ObjectiveVector x1 = evaluate(p, BitString::from_string("01000"));
        for (std::size_t j = 0; j < 2; ++j) CHECK(x01[j] - base[j] == doctest::Approx((x0[j] - base[j]) + (x1[j] - base[j])));
    }
    SUBCASE("determinism") {
        CHECK(generate_nk_instance(10, 3, 42) == generate_nk_instance(10, 3, 42));
        CHECK(!(generate_nk_instance(10, 3, 42) == generate_nk_instance(10, 3, 43)));
    }
    SUBCASE("table sizes and loci") {
        const NkInstance inst = generate_nk_instance(10, 3, 7);
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 10; ++i) {
                CHECK(inst.table(j, i).size() == 16);
                for (const double c : inst.table(j, i)) CHECK((c >= 0.0 && c < 1.0));
                std::set<std::size_t> distinct(inst.loci(j, i).begin(), inst.loci(j, i).end());
                CHECK(distinct.size() == 3);
                CHECK(distinct.count(i) == 0);
            }
    }
    SUBCASE("K >= n is rejected") { CHECK_THROWS_AS(generate_nk_instance(4, 4, 1), ContractViolation); }
    SUBCASE("objectives lie in [0,1) and JSON round-trips exactly") {
        const NkInstance inst = generate_nk_instance(8, 3, 99);
        const NkInstance back = NkInstance::from_json(inst.to_json());
        CHECK(back == inst);
        const ProblemSpec a = make_nk_landscape(inst);
        const ProblemSpec b = make_nk_landscape(back);
        const auto fa = all_evaluations(a);
        const auto fb = all_evaluations(b);
        CHECK(fa == fb);
        for (const auto& f : fa) CHECK((f[0] >= 0.0 && f[0] < 1.0 && f[1] >= 0.0 && f[1] < 1.0));
    }
    SUBCASE("malformed JSON is a contract violation") {
        CHECK_THROWS_AS(NkInstance::from_json("{\"n\": 3}"), ContractViolation);
        CHECK_THROWS_AS(NkInstance::from_json("not json"), ContractViolation);
    }
}

TEST_CASE("closed-form fronts") {
    const auto omm = pareto_front_closed_form(make_one_min_max(4));
    CHECK(omm.points == std::vector<ObjectiveVector>{{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}});

    const auto ojzj = pareto_front_closed_form(make_one_jump_zero_jump(8, 2));
    CHECK(ojzj.points == std::vector<ObjectiveVector>{{2, 10}, {4, 8}, {5, 7}, {6, 6}, {7, 5}, {8, 4}, {10, 2}});

    const auto star = pareto_front_closed_form(make_one_min_max_star(4));
    CHECK(star.points == std::vector<ObjectiveVector>{{-4, 8}, {0, 4}, {1, 3}, {2, 2}, {3, 1}});

    CHECK_THROWS_AS(pareto_front_closed_form(make_nk_landscape(generate_nk_instance(5, 1, 1))), UnsupportedProblem);
}

TEST_CASE("enumeration agrees with closed form and brute-force filtering") {
    for (std::size_t n = 4; n <= 12; ++n) {
        std::vector<ProblemSpec> problems{make_one_min_max(n), make_one_min_max_star(n)};
        for (std::size_t k = 2; k <= n / 4; ++k) problems.push_back(make_one_jump_zero_jump(n, k));
        for (const auto& p : problems) {
            const auto enumerated = enumerate_pareto_front(p);
            CHECK(enumerated.points == pareto_front_closed_form(p).points);
            CHECK(enumerated.points == oracle::nondominated(all_evaluations(p)));
            CHECK(enumerated.size() == pareto_front_size(p));
        }
    }
    CHECK(enumerate_pareto_front(make_one_jump_zero_jump(12, 3)).size() == 9);
}

TEST_CASE("NK enumeration re-checked by brute-force dominance") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const ProblemSpec p = make_nk_landscape(generate_nk_instance(5, 2, seed));
        const auto front = enumerate_pareto_front(p, true);
        const auto everything = all_evaluations(p);
        CHECK(everything.size() == 32);
        for (const auto& point : front.points)
            for (const auto& f : everything) CHECK_FALSE(oracle::strictly_dominates(f, point));
        CHECK(front.points == oracle::nondominated(everything));
        REQUIRE(front.witnesses);
        for (std::size_t i = 0; i < front.size(); ++i) CHECK(evaluate(p, (*front.witnesses)[i]) == front.points[i]);
    }
}

TEST_CASE("enumeration size guard") {
    CHECK_THROWS_AS(enumerate_pareto_front(make_one_min_max(26)), SizeGuardError);
    RngStream rng(1);
    CHECK_THROWS_AS(default_reference_point(make_nk_landscape(generate_nk_instance(26, 1, 1)), rng), SizeGuardError);
}

TEST_CASE("classify_ojzj") {
    CHECK(classify_ojzj(with_ones(12, 6), 12, 2) == OjzjClass::InnerParetoSet);
    CHECK(classify_ojzj(BitString(12), 12, 2) == OjzjClass::OuterParetoSet);
    CHECK(classify_ojzj(BitString::ones(12), 12, 2) == OjzjClass::OuterParetoSet);
    CHECK(classify_ojzj(with_ones(12, 1), 12, 2) == OjzjClass::NotParetoOptimal);
    CHECK_THROWS_AS(classify_ojzj(BitString(12), 12, 5), ContractViolation);
}

TEST_CASE("problem invariants by enumeration") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& f : all_evaluations(make_one_min_max(n))) CHECK(f[0] + f[1] == double(n));

        // Every OneMinMax / OneMinMax* vector lies on the front.
        const auto omm_front = pareto_front_closed_form(make_one_min_max(n));
        for (const auto& f : all_evaluations(make_one_min_max(n))) CHECK(omm_front.contains(f));
        const auto star_front = pareto_front_closed_form(make_one_min_max_star(n));
        for (const auto& f : all_evaluations(make_one_min_max_star(n))) CHECK(star_front.contains(f));

        for (std::size_t k = 2; k <= n / 4; ++k) {
            const ProblemSpec p = make_one_jump_zero_jump(n, k);
            const auto front = pareto_front_closed_form(p);
            for (std::size_t ones = 0; ones <= n; ++ones) {
                const BitString x = with_ones(n, ones);
                const ObjectiveVector f = evaluate(p, x);
                const bool optimal = classify_ojzj(x, n, k) != OjzjClass::NotParetoOptimal;
                CHECK(optimal == (f[0] + f[1] == double(n + 2 * k)));
                bool dominated = false;
                for (const auto& q : front.points) dominated = dominated || oracle::strictly_dominates(q, f);
                CHECK(dominated == !optimal);
            }
        }
    }
}

TEST_CASE("default reference points") {
    RngStream rng(0);
    CHECK(default_reference_point(make_one_min_max(50), rng) == ObjectiveVector{0, 50});
    CHECK(default_reference_point(make_one_jump_zero_jump(30, 2), rng) == ObjectiveVector{32, 2});
    CHECK(default_reference_point(make_one_min_max_star(30), rng) == ObjectiveVector{-30, 60});

    const ProblemSpec nk = make_nk_landscape(generate_nk_instance(10, 3, 5));
    const auto front = enumerate_pareto_front(nk, true);
    std::set<std::size_t> picked;
    for (std::uint64_t s = 0; s < 200; ++s) {
        RngStream r(s);
        const ObjectiveVector z = default_reference_point(nk, r);
        REQUIRE(front.contains(z));
        picked.insert(static_cast<std::size_t>(std::lower_bound(front.points.begin(), front.points.end(), z) -
                                               front.points.begin()));
    }
    if (front.size() > 1) CHECK(picked.size() > 1);
}
