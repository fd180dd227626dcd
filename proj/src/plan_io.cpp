#include "emolab/plan_io.hpp"

#include <json.hpp>

#include "emolab/errors.hpp"

namespace emolab {

using nlohmann::json;

namespace {

std::string family_name(ProblemFamilyKind kind) {
    switch (kind) {
        case ProblemFamilyKind::OneMinMax: return "omm";
        case ProblemFamilyKind::OneJumpZeroJump: return "ojzj";
        case ProblemFamilyKind::OneMinMaxStar: return "ommstar";
        case ProblemFamilyKind::NkLandscape: return "nk";
    }
    return "?";
}

ProblemFamilyKind parse_family(const std::string& name) {
    if (name == "omm") return ProblemFamilyKind::OneMinMax;
    if (name == "ojzj") return ProblemFamilyKind::OneJumpZeroJump;
    if (name == "ommstar") return ProblemFamilyKind::OneMinMaxStar;
    if (name == "nk") return ProblemFamilyKind::NkLandscape;
    throw ContractViolation("plan: unknown problem family '" + name + "'");
}

}  // namespace

std::string plan_to_json(const ExperimentPlan& plan) {
    json doc;
    doc["name"] = plan.name;
    json problem{{"family", family_name(plan.family.kind)}};
    if (plan.family.kind == ProblemFamilyKind::OneJumpZeroJump) problem["k"] = plan.family.k;
    if (plan.family.kind == ProblemFamilyKind::NkLandscape) {
        problem["K"] = plan.family.nk_K;
        problem["instances"] = plan.family.nk_instances;
    }
    doc["problem"] = problem;
    doc["n_values"] = plan.n_values;
    doc["variants"] = json::array();
    for (const auto& v : plan.variants) {
        const char* rule = v.population.kind == PopulationRule::Kind::Fixed ? "fixed" : "front_multiple";
        doc["variants"].push_back({{"label", v.label},
                                   {"policy", v.policy == PolicyKind::Crowding ? "crowding" : "reference"},
                                   {"population", {{rule, v.population.value}}}});
    }
    doc["runs_per_cell"] = plan.runs_per_cell;
    doc["master_seed"] = plan.master_seed;
    doc["max_evaluations"] = plan.max_evaluations ? json(*plan.max_evaluations) : json(nullptr);
    return doc.dump(2);
}

ExperimentPlan plan_from_json(const std::string& text) {
    ExperimentPlan plan;
    try {
        const json doc = json::parse(text);
        plan.name = doc.value("name", std::string("custom"));
        const json& problem = doc.at("problem");
        plan.family.kind = parse_family(problem.at("family").get<std::string>());
        plan.family.k = problem.value("k", std::size_t{0});
        plan.family.nk_K = problem.value("K", std::size_t{0});
        plan.family.nk_instances = problem.value("instances", std::size_t{1});
        plan.n_values = doc.at("n_values").get<std::vector<std::size_t>>();
        for (const json& v : doc.at("variants")) {
            VariantSpec spec;
            spec.label = v.at("label").get<std::string>();
            const std::string policy = v.at("policy").get<std::string>();
            if (policy == "crowding") {
                spec.policy = PolicyKind::Crowding;
            } else if (policy == "reference") {
                spec.policy = PolicyKind::Reference;
            } else {
                throw ContractViolation("plan: unknown policy '" + policy + "'");
            }
            const json& pop = v.at("population");
            if (pop.contains("fixed")) {
                spec.population = {PopulationRule::Kind::Fixed, pop.at("fixed").get<std::size_t>()};
            } else if (pop.contains("front_multiple")) {
                spec.population = {PopulationRule::Kind::FrontMultiple, pop.at("front_multiple").get<std::size_t>()};
            } else {
                throw ContractViolation("plan: population rule needs 'fixed' or 'front_multiple'");
            }
            plan.variants.push_back(std::move(spec));
        }
        plan.runs_per_cell = doc.at("runs_per_cell").get<std::size_t>();
        plan.master_seed = doc.value("master_seed", default_master_seed);
        if (doc.contains("max_evaluations") && !doc.at("max_evaluations").is_null()) {
            plan.max_evaluations = doc.at("max_evaluations").get<std::uint64_t>();
        }
    } catch (const json::exception& e) {
        throw ContractViolation(std::string("plan: ") + e.what());
    }
    validate(plan);
    return plan;
}

}  // namespace emolab
