#include "emolab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "emolab/errors.hpp"
#include "emolab/evolve.hpp"
#include "emolab/stats.hpp"

namespace emolab {

namespace {

// Key layout for derive_seed. Trial keys keep bit 63 clear; NK instance and
// reference-point keys set it and use bit 62 to tell the two apart.
constexpr std::uint64_t max_n = std::uint64_t{1} << 23;
constexpr std::uint64_t max_variants = 256;
constexpr std::uint64_t max_trials = std::uint64_t{1} << 32;
constexpr std::uint64_t instance_domain = std::uint64_t{1} << 63;
constexpr std::uint64_t reference_domain = instance_domain | (std::uint64_t{1} << 62);

std::string policy_name(PolicyKind kind) { return kind == PolicyKind::Crowding ? "crowding" : "reference"; }

}  // namespace

std::size_t PopulationRule::resolve(const ProblemSpec& problem) const {
    if (kind == Kind::Fixed) return value;
    return value * pareto_front_size(problem);
}

std::string PopulationRule::describe() const {
    if (kind == Kind::Fixed) return std::to_string(value);
    return std::to_string(value) + "|F*|";
}

void validate(const ExperimentPlan& plan) {
    require(!plan.n_values.empty(), "plan: n_values must not be empty");
    require(!plan.variants.empty(), "plan: at least one variant is required");
    require(plan.variants.size() <= max_variants, "plan: too many variants");
    require(plan.runs_per_cell >= 1, "plan: runs_per_cell must be at least 1");
    require(plan.runs_per_cell < max_trials, "plan: runs_per_cell too large");
    if (plan.max_evaluations) require(*plan.max_evaluations > 0, "plan: max_evaluations must be positive");
    if (plan.family.kind == ProblemFamilyKind::NkLandscape) {
        require(plan.family.nk_instances >= 1, "plan: nk instances must be at least 1");
    }
    std::set<std::string> labels;
    for (const auto& v : plan.variants) {
        require(!v.label.empty(), "plan: variant labels must not be empty");
        require(v.label.find_first_of(",\"\n\r") == std::string::npos,
                "plan: variant label '" + v.label + "' contains a CSV metacharacter");
        require(labels.insert(v.label).second, "plan: duplicate variant label '" + v.label + "'");
        require(v.population.value >= 1, "plan: population rule value must be positive");
        require(!(v.population.kind == PopulationRule::Kind::FrontMultiple &&
                  plan.family.kind == ProblemFamilyKind::NkLandscape),
                "plan: front-multiple population sizes need a closed-form front");
    }
    std::set<std::size_t> sizes;
    for (const std::size_t n : plan.n_values) {
        require(n >= 1 && n < max_n, "plan: problem size out of range");
        require(sizes.insert(n).second, "plan: duplicate problem size " + std::to_string(n));
        switch (plan.family.kind) {
            case ProblemFamilyKind::OneJumpZeroJump:
                require(plan.family.k >= 2 && plan.family.k <= n / 4,
                        "plan: k must lie in [2 .. n/4] for n = " + std::to_string(n));
                break;
            case ProblemFamilyKind::NkLandscape:
                require(plan.family.nk_K < n, "plan: K must be smaller than n = " + std::to_string(n));
                require(n <= 25, "plan: NK reference points need enumeration, so n must not exceed 25");
                break;
            default:
                break;
        }
    }
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t n, std::size_t variant, std::size_t trial) {
    const std::uint64_t key = (std::uint64_t{n} << 40) | (std::uint64_t{variant} << 32) | std::uint64_t{trial};
    return derive_seed(master_seed, key);
}

ProblemSpec build_problem(const ExperimentPlan& plan, std::size_t n, std::size_t instance) {
    switch (plan.family.kind) {
        case ProblemFamilyKind::OneMinMax: return make_one_min_max(n);
        case ProblemFamilyKind::OneJumpZeroJump: return make_one_jump_zero_jump(n, plan.family.k);
        case ProblemFamilyKind::OneMinMaxStar: return make_one_min_max_star(n);
        case ProblemFamilyKind::NkLandscape: {
            const std::uint64_t key = instance_domain | (std::uint64_t{n} << 32) | std::uint64_t{instance};
            return make_nk_landscape(generate_nk_instance(n, plan.family.nk_K, derive_seed(plan.master_seed, key)));
        }
    }
    throw ContractViolation("build_problem: unknown problem family");
}

ObjectiveVector plan_reference_point(const ExperimentPlan& plan, const ProblemSpec& problem, std::size_t instance) {
    const std::uint64_t key = reference_domain | (std::uint64_t{problem_size(problem)} << 32) | std::uint64_t{instance};
    RngStream rng(derive_seed(plan.master_seed, key));
    return default_reference_point(problem, rng);
}

std::vector<TrialRecord> run_experiment(const ExperimentPlan& plan, std::size_t parallelism) {
    validate(plan);
    require(parallelism >= 1, "run_experiment: parallelism must be at least 1");

    struct Instance {
        ProblemSpec problem;
        ObjectiveVector reference;
    };
    const std::size_t instances_per_n =
        plan.family.kind == ProblemFamilyKind::NkLandscape ? plan.family.nk_instances : std::size_t{1};
    std::vector<std::vector<Instance>> instances;
    for (const std::size_t n : plan.n_values) {
        auto& row = instances.emplace_back();
        for (std::size_t i = 0; i < instances_per_n; ++i) {
            ProblemSpec problem = build_problem(plan, n, i);
            const ObjectiveVector z = plan_reference_point(plan, problem, i);
            row.push_back(Instance{std::move(problem), z});
        }
    }

    const std::size_t variants = plan.variants.size();
    const std::size_t per_n = variants * plan.runs_per_cell;
    const std::size_t total = plan.n_values.size() * per_n;
    std::vector<TrialRecord> records(total);

    auto run_task = [&](std::size_t task) {
        const std::size_t n_index = task / per_n;
        const std::size_t variant_index = (task % per_n) / plan.runs_per_cell;
        const std::size_t trial = task % plan.runs_per_cell;
        const std::size_t n = plan.n_values[n_index];
        const VariantSpec& variant = plan.variants[variant_index];
        const Instance& inst = instances[n_index][trial % instances_per_n];

        const std::size_t pop_size = variant.population.resolve(inst.problem);
        AlgorithmConfig config = variant.policy == PolicyKind::Crowding ? nsga2_config(pop_size, inst.reference)
                                                                        : rnsga2_config(pop_size, inst.reference);
        config.max_evaluations = plan.max_evaluations;
        const std::uint64_t seed = trial_seed(plan.master_seed, n, variant_index, trial);
        const RunResult result = run(inst.problem, config, seed);

        TrialRecord& rec = records[task];
        rec.problem = problem_label(inst.problem);
        rec.n = n;
        if (const auto* ojzj = std::get_if<OneJumpZeroJump>(&inst.problem)) rec.k = ojzj->k;
        rec.variant = variant.label;
        rec.variant_index = variant_index;
        rec.policy = policy_name(variant.policy);
        rec.pop_size = pop_size;
        rec.trial = trial;
        rec.seed = seed;
        rec.evaluations = result.hit ? *result.evaluations_to_hit : result.evaluations;
        rec.hit = result.hit;
    };

    const std::size_t workers = std::min(parallelism, total);
    if (workers <= 1) {
        for (std::size_t task = 0; task < total; ++task) run_task(task);
        return records;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t task = next++; task < total; task = next++) {
                    try {
                        run_task(task);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = total;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
    require(!records.empty(), "summarize: no records");
    struct Group {
        SummaryRow row;
        std::vector<double> evaluations;
        std::size_t hits = 0;
    };
    std::vector<Group> groups;
    std::map<std::tuple<std::string, std::size_t, std::string>, std::size_t> index;
    for (const auto& rec : records) {
        const auto key = std::make_tuple(rec.problem, rec.n, rec.variant);
        auto [it, inserted] = index.try_emplace(key, groups.size());
        if (inserted) {
            Group g;
            g.row.problem = rec.problem;
            g.row.n = rec.n;
            g.row.variant = rec.variant;
            groups.push_back(std::move(g));
        }
        Group& g = groups[it->second];
        g.evaluations.push_back(static_cast<double>(rec.evaluations));
        g.hits += rec.hit ? 1 : 0;
    }
    std::vector<SummaryRow> rows;
    rows.reserve(groups.size());
    for (auto& g : groups) {
        g.row.runs = g.evaluations.size();
        g.row.mean_evaluations = mean(g.evaluations);
        g.row.std_evaluations = sample_std(g.evaluations);
        g.row.success_rate = static_cast<double>(g.hits) / static_cast<double>(g.row.runs);
        rows.push_back(std::move(g.row));
    }
    return rows;
}

std::map<std::string, ExperimentPlan> preset_plans() {
    using Kind = PopulationRule::Kind;
    const std::vector<std::size_t> synthetic_sizes{10, 20, 30, 40, 50};
    std::map<std::string, ExperimentPlan> plans;

    ExperimentPlan omm;
    omm.name = "omm";
    omm.family.kind = ProblemFamilyKind::OneMinMax;
    omm.n_values = synthetic_sizes;
    omm.variants = {
        {"NSGA-II N=4(n+1)", PolicyKind::Crowding, {Kind::FrontMultiple, 4}},
        {"R-NSGA-II N=1", PolicyKind::Reference, {Kind::Fixed, 1}},
        {"R-NSGA-II N=4(n+1)", PolicyKind::Reference, {Kind::FrontMultiple, 4}},
    };
    omm.runs_per_cell = 1000;
    omm.master_seed = default_master_seed;
    plans.emplace(omm.name, omm);

    ExperimentPlan ojzj;
    ojzj.name = "ojzj";
    ojzj.family = {ProblemFamilyKind::OneJumpZeroJump, 2, 0, 1};
    ojzj.n_values = synthetic_sizes;
    ojzj.variants = {
        {"NSGA-II N=4(n-2k+3)", PolicyKind::Crowding, {Kind::FrontMultiple, 4}},
        {"R-NSGA-II N=1", PolicyKind::Reference, {Kind::Fixed, 1}},
        {"R-NSGA-II N=4(n-2k+3)", PolicyKind::Reference, {Kind::FrontMultiple, 4}},
    };
    ojzj.runs_per_cell = 1000;
    ojzj.master_seed = default_master_seed;
    plans.emplace(ojzj.name, ojzj);

    ExperimentPlan ommstar;
    ommstar.name = "ommstar";
    ommstar.family.kind = ProblemFamilyKind::OneMinMaxStar;
    ommstar.n_values = synthetic_sizes;
    ommstar.variants = {
        {"NSGA-II N=4(n+1)", PolicyKind::Crowding, {Kind::FrontMultiple, 4}},
        {"R-NSGA-II N=4(n+1)", PolicyKind::Reference, {Kind::FrontMultiple, 4}},
    };
    ommstar.runs_per_cell = 1000;
    ommstar.master_seed = default_master_seed;
    ommstar.max_evaluations = 100000;
    plans.emplace(ommstar.name, ommstar);

    ExperimentPlan nk;
    nk.name = "nk";
    nk.family = {ProblemFamilyKind::NkLandscape, 0, 3, 1};
    nk.n_values = {5, 10, 15, 20, 25};
    nk.variants = {
        {"NSGA-II N=100", PolicyKind::Crowding, {Kind::Fixed, 100}},
        {"R-NSGA-II N=100", PolicyKind::Reference, {Kind::Fixed, 100}},
    };
    nk.runs_per_cell = 50;
    nk.master_seed = default_master_seed;
    nk.max_evaluations = 1000000;
    plans.emplace(nk.name, nk);

    return plans;
}

}  // namespace emolab
