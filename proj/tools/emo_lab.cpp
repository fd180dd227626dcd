// emo_lab: command-line front end for sweeps, single runs, front oracles and
// charts. Exit codes: 0 success, 2 usage or validation error, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "emolab/errors.hpp"
#include "emolab/evolve.hpp"
#include "emolab/experiment.hpp"
#include "emolab/pareto_front.hpp"
#include "emolab/plan_io.hpp"
#include "emolab/results_csv.hpp"
#include "emolab/svg_plot.hpp"

namespace fs = std::filesystem;
using namespace emolab;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <class Fn>
void write_file(const fs::path& path, Fn&& fill) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    fill(out);
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

/// --seed, then EMO_LAB_SEED, then the fallback.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("EMO_LAB_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size()) return value;
        } catch (const std::exception&) {
        }
        throw ContractViolation(std::string("EMO_LAB_SEED is not an unsigned integer: ") + env);
    }
    return fallback;
}

struct ProblemFlags {
    std::string family;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::size_t nk_K = 3;
    std::optional<std::uint64_t> instance_seed;
    std::string instance_file;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& flags) {
    cmd->add_option("--problem", flags.family, "Benchmark problem")
        ->required()
        ->check(CLI::IsMember({"omm", "ojzj", "ommstar", "nk"}));
    cmd->add_option("--n", flags.n, "Problem size")->check(CLI::PositiveNumber);
    cmd->add_option("--k", flags.k, "Jump width for ojzj (default 2)");
    cmd->add_option("--nk-K", flags.nk_K, "NK epistasis degree K");
    cmd->add_option("--instance-seed", flags.instance_seed, "Seed of a generated NK instance");
    cmd->add_option("--instance", flags.instance_file, "NK instance JSON file (overrides generation)");
}

ProblemSpec build_from_flags(const ProblemFlags& flags) {
    if (flags.family == "nk") {
        if (!flags.instance_file.empty()) return make_nk_landscape(NkInstance::from_json(read_file(flags.instance_file)));
        require(flags.n >= 1, "--n is required");
        return make_nk_landscape(generate_nk_instance(flags.n, flags.nk_K, flags.instance_seed.value_or(0)));
    }
    require(flags.n >= 1, "--n is required");
    if (flags.family == "omm") return make_one_min_max(flags.n);
    if (flags.family == "ommstar") return make_one_min_max_star(flags.n);
    return make_one_jump_zero_jump(flags.n, flags.k.value_or(2));
}

std::string describe_problem(const ProblemSpec& problem) {
    std::ostringstream out;
    out << "problem=" << problem_label(problem) << " n=" << problem_size(problem);
    if (const auto* p = std::get_if<OneJumpZeroJump>(&problem)) out << " k=" << p->k;
    if (const auto* p = std::get_if<NkLandscape>(&problem)) {
        out << " K=" << p->instance->K() << " instance_seed=" << p->instance->seed();
    }
    return out.str();
}

// sweep ---------------------------------------------------------------------

struct SweepFlags {
    std::string preset;
    std::string plan_file;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> seed;
    std::size_t parallelism = 1;
    std::string out_dir = ".";
};

int cmd_sweep(const SweepFlags& flags) {
    ExperimentPlan plan;
    if (!flags.plan_file.empty()) {
        plan = plan_from_json(read_file(flags.plan_file));
    } else {
        const auto presets = preset_plans();
        const auto it = presets.find(flags.preset);
        if (it == presets.end()) throw ContractViolation("unknown preset '" + flags.preset + "'");
        plan = it->second;
    }
    if (flags.runs) plan.runs_per_cell = *flags.runs;
    plan.master_seed = resolve_seed(flags.seed, plan.master_seed);
    validate(plan);

    std::cout << "master seed: " << plan.master_seed << "\n"
              << "parallelism: " << flags.parallelism << "\n"
              << "plan:\n"
              << plan_to_json(plan) << std::endl;

    const fs::path out(flags.out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create " + out.string() + ": " + ec.message());
    write_file(out / "plan.json", [&](std::ostream& os) { os << plan_to_json(plan) << '\n'; });

    const auto records = run_experiment(plan, flags.parallelism);
    const auto summary = summarize(records);
    write_file(out / "trials.csv", [&](std::ostream& os) { write_trials_csv(os, records); });
    write_file(out / "summary.csv", [&](std::ostream& os) { write_summary_csv(os, summary); });

    std::cout << "wrote " << records.size() << " trials to " << (out / "trials.csv").string() << "\n";
    write_summary_csv(std::cout, summary);
    return 0;
}

// run -----------------------------------------------------------------------

struct RunFlags {
    ProblemFlags problem;
    std::string policy = "crowding";
    std::size_t pop_size = 1;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> cap;
    std::optional<double> mutation_rate;
    std::optional<std::vector<double>> reference;
    std::string trace_file;
};

int cmd_run(const RunFlags& flags) {
    const ProblemSpec problem = build_from_flags(flags.problem);
    const std::uint64_t seed = resolve_seed(flags.seed, 0);
    ObjectiveVector z;
    if (flags.reference) {
        require(flags.reference->size() == 2, "--reference takes two values");
        z = {(*flags.reference)[0], (*flags.reference)[1]};
    } else {
        RngStream rng(derive_seed(seed, 0));
        z = default_reference_point(problem, rng);
    }
    AlgorithmConfig config = flags.policy == "crowding" ? nsga2_config(flags.pop_size, z) : rnsga2_config(flags.pop_size, z);
    config.max_evaluations = flags.cap;
    config.mutation_rate = flags.mutation_rate;
    validate(config, problem);

    std::cout << describe_problem(problem) << " policy=" << flags.policy << " pop_size=" << flags.pop_size
              << " mutation_rate=" << effective_mutation_rate(config, problem) << " reference=("
              << format_objectives(z) << ")"
              << " cap=" << (flags.cap ? std::to_string(*flags.cap) : std::string("none")) << " seed=" << seed
              << std::endl;

    std::optional<ParetoFront> front;
    if (!std::holds_alternative<NkLandscape>(problem)) front = pareto_front_closed_form(problem);
    std::ofstream trace;
    GenerationObserver observer;
    if (!flags.trace_file.empty()) {
        trace.open(flags.trace_file, std::ios::binary);
        if (!trace) throw IoError("cannot write " + flags.trace_file);
        write_trace_header(trace);
        observer = [&](const RunState& s) { write_trace_row(trace, trace_generation(s, z, front ? &*front : nullptr)); };
    }
    const RunResult result = run(problem, config, seed, observer);
    if (trace.is_open() && !trace.flush()) throw IoError("failed writing " + flags.trace_file);

    std::cout << "hit=" << (result.hit ? 1 : 0) << " evaluations_to_hit="
              << (result.evaluations_to_hit ? std::to_string(*result.evaluations_to_hit) : std::string(""))
              << " evaluations=" << result.evaluations << " generations=" << result.generations << "\n";
    return 0;
}

// oracle --------------------------------------------------------------------

struct OracleFlags {
    ProblemFlags problem;
    bool enumerate = false;
    bool witness = false;
    std::string instance_out;
};

int cmd_oracle(const OracleFlags& flags) {
    const ProblemSpec problem = build_from_flags(flags.problem);
    const bool by_enumeration = flags.enumerate || std::holds_alternative<NkLandscape>(problem);
    std::cout << "# " << describe_problem(problem) << " method=" << (by_enumeration ? "enumeration" : "closed-form")
              << std::endl;
    if (!flags.instance_out.empty()) {
        const auto* nk = std::get_if<NkLandscape>(&problem);
        require(nk != nullptr, "--instance-out applies to nk only");
        write_file(flags.instance_out, [&](std::ostream& os) { os << nk->instance->to_json() << '\n'; });
    }
    const ParetoFront front =
        by_enumeration ? enumerate_pareto_front(problem, flags.witness) : pareto_front_closed_form(problem);
    for (std::size_t i = 0; i < front.size(); ++i) {
        std::cout << format_objectives(front.points[i]);
        if (front.witnesses) std::cout << ' ' << (*front.witnesses)[i].to_string();
        std::cout << '\n';
    }
    std::cout << "# size " << front.size() << "\n";
    return 0;
}

// plot ----------------------------------------------------------------------

struct PlotFlags {
    std::string summary_file;
    std::string out_file;
    bool log_y = false;
};

int cmd_plot(const PlotFlags& flags) {
    std::cout << "summary=" << flags.summary_file << " out=" << flags.out_file << " log_y=" << (flags.log_y ? 1 : 0)
              << std::endl;
    std::istringstream in(read_file(flags.summary_file));
    const auto rows = read_summary_csv(in);
    PlotOptions options;
    options.log_y = flags.log_y;
    const std::string svg = render_summary_svg(rows, options);
    write_file(flags.out_file, [&](std::ostream& os) { os << svg; });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evolutionary multi-objective laboratory: NSGA-II and R-NSGA-II runtime experiments"};
    app.require_subcommand(1);

    SweepFlags sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a preset or plan file and write trials.csv / summary.csv");
    auto* preset_opt = sweep_cmd->add_option("--preset", sweep.preset, "omm | ojzj | ommstar | nk");
    auto* plan_opt = sweep_cmd->add_option("--plan", sweep.plan_file, "Plan JSON file");
    preset_opt->excludes(plan_opt);
    sweep_cmd->add_option("--runs", sweep.runs, "Override runs per cell")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", sweep.seed, "Master seed (falls back to EMO_LAB_SEED)");
    sweep_cmd->add_option("--parallelism", sweep.parallelism, "Concurrent trials")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", sweep.out_dir, "Output directory");

    RunFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "Single seeded run of NSGA-II or R-NSGA-II");
    add_problem_flags(run_cmd, run_flags.problem);
    run_cmd->add_option("--policy", run_flags.policy, "crowding (NSGA-II) | reference (R-NSGA-II)")
        ->check(CLI::IsMember({"crowding", "reference"}));
    run_cmd->add_option("--pop-size", run_flags.pop_size, "Population size N")->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", run_flags.seed, "Run seed (falls back to EMO_LAB_SEED)");
    run_cmd->add_option("--cap", run_flags.cap, "Maximum evaluations");
    run_cmd->add_option("--mutation-rate", run_flags.mutation_rate, "Per-bit flip probability (default 1/n)");
    run_cmd->add_option("--reference", run_flags.reference, "Reference point f1 f2")->expected(2);
    run_cmd->add_option("--trace", run_flags.trace_file, "Write a per-generation CSV trace");

    OracleFlags oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Print the Pareto front, one objective vector per line");
    add_problem_flags(oracle_cmd, oracle.problem);
    oracle_cmd->add_flag("--enumerate", oracle.enumerate, "Use exhaustive enumeration (n <= 25)");
    oracle_cmd->add_flag("--witness", oracle.witness, "Append one solution per point (enumeration only)");
    oracle_cmd->add_option("--instance-out", oracle.instance_out, "Write the NK instance JSON here");

    PlotFlags plot;
    auto* plot_cmd = app.add_subcommand("plot", "Render summary.csv as an SVG line chart");
    plot_cmd->add_option("--summary", plot.summary_file, "summary.csv path")->required();
    plot_cmd->add_option("--out", plot.out_file, "SVG output path")->required();
    plot_cmd->add_flag("--log-y", plot.log_y, "Logarithmic y axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*sweep_cmd) {
            if (sweep.preset.empty() && sweep.plan_file.empty()) throw ContractViolation("sweep needs --preset or --plan");
            return cmd_sweep(sweep);
        }
        if (*run_cmd) return cmd_run(run_flags);
        if (*oracle_cmd) {
            if (oracle.witness) oracle.enumerate = true;
            return cmd_oracle(oracle);
        }
        if (*plot_cmd) return cmd_plot(plot);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
