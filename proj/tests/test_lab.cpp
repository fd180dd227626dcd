#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "emolab/errors.hpp"
#include "emolab/experiment.hpp"
#include "emolab/pareto_front.hpp"
#include "emolab/plan_io.hpp"
#include "emolab/results_csv.hpp"
#include "emolab/stats.hpp"
#include "emolab/svg_plot.hpp"
#include "oracles.hpp"

using namespace emolab;

namespace {

ExperimentPlan small_plan() {
    ExperimentPlan plan;
    plan.name = "small";
    plan.family.kind = ProblemFamilyKind::OneMinMax;
    plan.n_values = {6, 8};
    plan.variants = {{"nsga", PolicyKind::Crowding, {PopulationRule::Kind::FrontMultiple, 4}},
                     {"rnsga", PolicyKind::Reference, {PopulationRule::Kind::Fixed, 1}}};
    plan.runs_per_cell = 3;
    plan.master_seed = 11;
    return plan;
}

SummaryRow row(const std::string& variant, std::size_t n, double m) {
    SummaryRow r;
    r.problem = "omm";
    r.variant = variant;
    r.n = n;
    r.mean_evaluations = m;
    r.runs = 1;
    r.success_rate = 1;
    return r;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

}  // namespace

TEST_CASE("run_experiment cardinality and determinism") {
    const ExperimentPlan plan = small_plan();
    const auto serial = run_experiment(plan, 1);
    CHECK(serial.size() == 12);
    const auto parallel = run_experiment(plan, 8);
    CHECK(serial == parallel);
    for (const auto& r : serial) {
        CHECK(r.hit);
        CHECK(r.seed == trial_seed(plan.master_seed, r.n, r.variant_index, r.trial));
        CHECK(r.pop_size == (r.variant == "nsga" ? 4 * (r.n + 1) : 1));
    }
    CHECK(std::is_sorted(serial.begin(), serial.end(), [](const TrialRecord& a, const TrialRecord& b) {
        return std::tie(a.n, a.variant_index, a.trial) < std::tie(b.n, b.variant_index, b.trial);
    }));
}

TEST_CASE("invalid plans fail before running") {
    ExperimentPlan plan = small_plan();
    plan.variants[1].label = "nsga";
    CHECK_THROWS_AS(run_experiment(plan, 1), ContractViolation);
    plan = small_plan();
    plan.runs_per_cell = 0;
    CHECK_THROWS_AS(run_experiment(plan, 1), ContractViolation);
    plan = small_plan();
    plan.family = {ProblemFamilyKind::OneJumpZeroJump, 2, 0, 1};
    CHECK_THROWS_AS(validate(plan), ContractViolation);  // n = 6 admits no k = 2
    plan = small_plan();
    plan.variants[0].label = "a,b";
    CHECK_THROWS_AS(validate(plan), ContractViolation);
}

TEST_CASE("seed schedule is injective") {
    std::set<std::uint64_t> seeds;
    std::size_t count = 0;
    for (std::size_t n : {5, 10, 15, 20, 25, 30, 40, 50})
        for (std::size_t v = 0; v < 3; ++v)
            for (std::size_t t = 0; t < 1000; ++t, ++count) seeds.insert(trial_seed(7, n, v, t));
    CHECK(seeds.size() == count);
}

TEST_CASE("summarize") {
    std::vector<TrialRecord> recs(2);
    recs[0].problem = recs[1].problem = "omm";
    recs[0].n = recs[1].n = 10;
    recs[0].variant = recs[1].variant = "v";
    recs[0].evaluations = 100;
    recs[1].evaluations = 100;
    recs[0].hit = recs[1].hit = true;
    auto rows = summarize(recs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].mean_evaluations == 100);
    CHECK(rows[0].std_evaluations == 0);

    recs[0].evaluations = 90;
    recs[1].evaluations = 110;
    rows = summarize(recs);
    CHECK(rows[0].mean_evaluations == 100);
    CHECK(rows[0].std_evaluations == doctest::Approx(14.142135623730951));

    recs.resize(4, recs[0]);
    recs[3].hit = false;
    CHECK(summarize(recs)[0].success_rate == 0.75);

    CHECK_THROWS_AS(summarize({}), ContractViolation);

    const auto records = run_experiment(small_plan(), 1);
    const auto a = summarize(records);
    const auto b = summarize(run_experiment(small_plan(), 3));
    REQUIRE(a.size() == 4);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].mean_evaluations == b[i].mean_evaluations);
        CHECK(a[i].runs == 3);
    }
}

TEST_CASE("rank_sum_test") {
    const std::vector<double> same{3, 1, 4, 1, 5, 9, 2, 6};
    CHECK(rank_sum_test(same, same).p_value >= 0.99);

    std::vector<double> low, high;
    for (int i = 1; i <= 20; ++i) low.push_back(i);
    for (int i = 100; i <= 119; ++i) high.push_back(i);
    const auto r = rank_sum_test(low, high);
    CHECK(r.statistic == oracle::pair_count_u(low, high));
    CHECK(r.statistic == 0.0);
    CHECK(r.p_value < 1e-4);
    CHECK(r.direction == SmallerGroup::First);

    const std::vector<double> a{1, 2}, b{3, 4};
    CHECK(rank_sum_test(a, b).statistic == oracle::pair_count_u(a, b));
    CHECK(rank_sum_test(a, b).statistic == 0.0);

    // Ties: frozen from an asymptotic two-sided test without continuity correction.
    const std::vector<double> ta{1, 2, 2, 3, 5}, tb{2, 3, 4, 4, 6, 7};
    const auto tied = rank_sum_test(ta, tb);
    CHECK(tied.statistic == oracle::pair_count_u(ta, tb));
    CHECK(tied.statistic == 6.5);
    CHECK(tied.p_value == doctest::Approx(0.11560643738731947).epsilon(1e-9));

    const std::vector<double> tiny{1};
    CHECK_THROWS_AS(rank_sum_test(tiny, b), ContractViolation);

    RngStream rng(3);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> x, y;
        for (std::size_t i = 0, m = 2 + rng.below(15); i < m; ++i) x.push_back(double(rng.below(10)));
        for (std::size_t i = 0, m = 2 + rng.below(15); i < m; ++i) y.push_back(double(rng.below(10)));
        const auto xy = rank_sum_test(x, y);
        const auto yx = rank_sum_test(y, x);
        REQUIRE(xy.statistic == oracle::pair_count_u(x, y));
        CHECK(xy.p_value == doctest::Approx(yx.p_value));
        CHECK((xy.p_value >= 0.0 && xy.p_value <= 1.0));
        if (xy.direction == SmallerGroup::First) CHECK(yx.direction == SmallerGroup::Second);
        if (xy.direction == SmallerGroup::Second) CHECK(yx.direction == SmallerGroup::First);
        if (xy.direction == SmallerGroup::Neither) CHECK(yx.direction == SmallerGroup::Neither);
    }
}

TEST_CASE("loglog_slope") {
    std::vector<SummaryRow> quad, flat, nlogn;
    std::vector<double> lx, ly;
    for (std::size_t n = 10; n <= 50; n += 10) {
        const double dn = double(n);
        quad.push_back(row("q", n, 3 * dn * dn));
        flat.push_back(row("c", n, 42));
        nlogn.push_back(row("l", n, dn * std::log(dn)));
        lx.push_back(std::log(dn));
        ly.push_back(std::log(dn * std::log(dn)));
    }
    CHECK(std::abs(loglog_slope(quad, "q") - 2.0) < 1e-9);
    CHECK(std::abs(loglog_slope(flat, "c")) < 1e-12);
    const double slope = loglog_slope(nlogn, "l");
    CHECK(slope == doctest::Approx(oracle::normal_equation_slope(lx, ly)).epsilon(1e-9));
    CHECK((slope >= 1.2 && slope <= 1.6));
    quad.resize(2);
    CHECK_THROWS_AS(loglog_slope(quad, "q"), ContractViolation);
    CHECK_THROWS_AS(loglog_slope(flat, "missing"), ContractViolation);
}

TEST_CASE("preset plans") {
    const auto plans = preset_plans();
    REQUIRE(plans.size() == 4);

    const auto& omm = plans.at("omm");
    CHECK(omm.n_values == std::vector<std::size_t>{10, 20, 30, 40, 50});
    CHECK(omm.runs_per_cell == 1000);
    REQUIRE(omm.variants.size() == 3);
    CHECK(omm.variants[0].policy == PolicyKind::Crowding);
    CHECK(omm.variants[0].population.resolve(make_one_min_max(10)) == 44);
    CHECK(omm.variants[1].population.resolve(make_one_min_max(10)) == 1);
    CHECK(omm.variants[2].policy == PolicyKind::Reference);
    CHECK(omm.variants[2].population.resolve(make_one_min_max(10)) == 44);

    const auto& ojzj = plans.at("ojzj");
    CHECK(ojzj.family.k == 2);
    CHECK(ojzj.variants[0].population.resolve(make_one_jump_zero_jump(30, 2)) == 4 * (30 - 4 + 3));
    CHECK(ojzj.variants[1].population.resolve(make_one_jump_zero_jump(30, 2)) == 1);

    const auto& star = plans.at("ommstar");
    CHECK(star.max_evaluations == 100000u);
    REQUIRE(star.variants.size() == 2);
    for (const auto& v : star.variants) CHECK(v.population.resolve(make_one_min_max_star(30)) == 124);

    const auto& nk = plans.at("nk");
    CHECK(nk.n_values == std::vector<std::size_t>{5, 10, 15, 20, 25});
    CHECK(nk.family.nk_K == 3);
    CHECK(nk.max_evaluations == 1000000u);
    CHECK(nk.runs_per_cell == 50);
    for (const auto& v : nk.variants) CHECK(v.population.value == 100);

    for (const auto& [name, plan] : plans) {
        CHECK_NOTHROW(validate(plan));
        const ExperimentPlan back = plan_from_json(plan_to_json(plan));
        CHECK(plan_to_json(back) == plan_to_json(plan));
    }
}

TEST_CASE("NK plans share one reference point per instance") {
    ExperimentPlan plan = preset_plans().at("nk");
    plan.n_values = {8};
    plan.family.nk_instances = 2;
    plan.runs_per_cell = 4;
    const ProblemSpec p0 = build_problem(plan, 8, 0);
    const ProblemSpec p1 = build_problem(plan, 8, 1);
    CHECK(std::get<NkLandscape>(p0).instance->seed() != std::get<NkLandscape>(p1).instance->seed());
    const ObjectiveVector z = plan_reference_point(plan, p0, 0);
    CHECK(enumerate_pareto_front(p0).contains(z));
    CHECK(plan_reference_point(plan, p0, 0) == z);
    const auto records = run_experiment(plan, 2);
    CHECK(records.size() == 8);
}

TEST_CASE("plan JSON errors") {
    CHECK_THROWS_AS(plan_from_json("{}"), ContractViolation);
    CHECK_THROWS_AS(plan_from_json("[1,2"), ContractViolation);
    CHECK_THROWS_AS(plan_from_json(R"({"problem":{"family":"lotz"},"n_values":[4],"variants":[],"runs_per_cell":1})"),
                    ContractViolation);
}

TEST_CASE("CSV writers and summary reader") {
    const auto records = run_experiment(small_plan(), 1);
    std::ostringstream trials;
    write_trials_csv(trials, records);
    const std::string text = trials.str();
    CHECK(text.rfind("problem,n,k,variant,policy,pop_size,seed,evaluations,hit\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 13);
    CHECK(text.find("\nomm,6,,nsga,crowding,28,") != std::string::npos);

    const auto rows = summarize(records);
    std::ostringstream summary;
    write_summary_csv(summary, rows);
    std::istringstream in(summary.str());
    const auto back = read_summary_csv(in);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].variant == rows[i].variant);
        CHECK(back[i].mean_evaluations == doctest::Approx(rows[i].mean_evaluations));
    }

    std::istringstream bad("problem,n\n");
    CHECK_THROWS_AS(read_summary_csv(bad), ContractViolation);
    std::istringstream bad_row("problem,n,variant,mean_evals,std_evals,success_rate,runs\nomm,ten,v,1,0,1,1\n");
    CHECK_THROWS_AS(read_summary_csv(bad_row), ContractViolation);
}

TEST_CASE("SVG chart structure") {
    std::vector<SummaryRow> rows;
    for (const char* v : {"A", "B & C", "D"})
        for (std::size_t n = 10; n <= 50; n += 10) rows.push_back(row(v, n, double(n * n)));
    const std::string svg = render_summary_svg(rows);
    CHECK(count_of(svg, "<polyline") == 3);
    CHECK(count_of(svg, "class=\"marker\"") == 15);
    CHECK(svg.find("B &amp; C") != std::string::npos);
    CHECK(render_summary_svg(rows, {true}).find("(log)") != std::string::npos);

    CHECK_THROWS_AS(render_summary_svg({}), ContractViolation);
    rows[0].mean_evaluations = 0;
    CHECK_THROWS_AS(render_summary_svg(rows, {true}), ContractViolation);
    CHECK_NOTHROW(render_summary_svg(rows));
}
