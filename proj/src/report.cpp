#include "tempus/report.hpp"

#include <charconv>
#include <sstream>

#include "tempus/reversal.hpp"

namespace tempus {

using nlohmann::json;

namespace {

[[noreturn]] void missing(const std::string& field, const std::string& message) {
    throw ScenarioError(ScenarioErrorCode::Invariant, field, message);
}

std::string selection_name(Selection s) { return s == Selection::A ? "A" : "B"; }

std::string plan_string(const std::vector<int>& plan) {
    std::ostringstream os;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        if (i) os << ' ';
        os << plan[i];
    }
    return os.str();
}

json trajectory_to_json(const Trajectory& traj) {
    json periods = json::array();
    for (std::size_t s = 0; s < traj.actions.size(); ++s) {
        periods.push_back({{"period", s},
                           {"action", traj.actions[s]},
                           {"self_value", traj.realized_value_from(static_cast<int>(s))},
                           {"intended_plan", traj.intended_plans[s]},
                           {"discount", traj.discount_used[s].describe()}});
    }
    return {{"periods", periods},
            {"terminal_reward", traj.terminal_reward},
            {"terminal_period", traj.terminal_period}};
}

json choice_to_json(int vantage, const ChoiceResult& r) {
    return {{"vantage", vantage},
            {"value_a", r.value_a},
            {"value_b", r.value_b},
            {"selection", selection_name(r.selection)}};
}

json witness_to_json(const ReversalWitness& w) {
    return {{"small", {{"amount", w.small.amount}, {"at", w.small.at}}},
            {"large", {{"amount", w.large.amount}, {"at", w.large.at}}},
            {"early_vantage", w.early_vantage},
            {"late_vantage", w.late_vantage},
            {"small_at_early", w.small_at_early},
            {"large_at_early", w.large_at_early},
            {"small_at_late", w.small_at_late},
            {"large_at_late", w.large_at_late}};
}

Report make_report(const Scenario& scenario, std::string command) {
    Report report;
    report.command = std::move(command);
    report.body = {{"command", report.command}, {"scenario", scenario.resolved}};
    return report;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

const BinaryChoice& require_binary_choice(const Scenario& scenario) {
    if (const auto* c = std::get_if<BinaryChoice>(&scenario.problem)) return *c;
    missing("problem.kind", "this command requires a binary_choice problem");
}

Trajectory simulate_scenario(const Scenario& scenario, const AgentKind& kind) {
    if (const auto* c = std::get_if<ConsumptionProblem>(&scenario.problem))
        return simulate(*c, scenario.discount, kind);
    if (const auto* t = std::get_if<TaskProblem>(&scenario.problem))
        return simulate(*t, scenario.discount, kind);
    missing("problem.kind", "this command requires a consumption or task problem");
}

void trajectory_rows(Report& report, const Trajectory& traj) {
    report.columns = {"period", "action", "self_value", "intended_plan", "discount"};
    for (std::size_t s = 0; s < traj.actions.size(); ++s) {
        report.rows.push_back({std::to_string(s), std::to_string(traj.actions[s]),
                               format_value(traj.realized_value_from(static_cast<int>(s))),
                               plan_string(traj.intended_plans[s]),
                               traj.discount_used[s].describe()});
    }
}

}  // namespace

std::string format_value(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

std::string render(const Report& report, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Json:
            os << report.body.dump(2) << '\n';
            break;
        case OutputFormat::Csv: {
            for (std::size_t i = 0; i < report.columns.size(); ++i)
                os << (i ? "," : "") << csv_field(report.columns[i]);
            os << '\n';
            for (const auto& row : report.rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    os << (i ? "," : "") << csv_field(row[i]);
                os << '\n';
            }
            break;
        }
        case OutputFormat::Table: {
            std::vector<std::size_t> widths;
            for (const auto& c : report.columns) widths.push_back(c.size());
            for (const auto& row : report.rows)
                for (std::size_t i = 0; i < row.size(); ++i)
                    widths[i] = std::max(widths[i], row[i].size());
            auto emit = [&](const std::vector<std::string>& row) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    os << row[i];
                    if (i + 1 < row.size())
                        os << std::string(widths[i] - row[i].size() + 2, ' ');
                }
                os << '\n';
            };
            os << "# " << report.command << '\n';
            emit(report.columns);
            for (const auto& row : report.rows) emit(row);
            break;
        }
    }
    return os.str();
}

Report run_command(const Scenario& scenario) {
    Report report = make_report(scenario, "run");
    if (const auto* choice = std::get_if<BinaryChoice>(&scenario.problem)) {
        report.columns = {"vantage", "value_a", "value_b", "selection"};
        json vantages = json::array();
        for (int now = 0; now <= choice->decided_at; ++now) {
            const ChoiceResult r = choose(*choice, scenario.discount, now);
            report.rows.push_back({std::to_string(now), format_value(r.value_a),
                                   format_value(r.value_b), selection_name(r.selection)});
            vantages.push_back(choice_to_json(now, r));
        }
        report.body["result"] = {{"kind", "binary_choice"}, {"vantages", vantages}};
        return report;
    }
    const Trajectory traj = simulate_scenario(scenario, scenario.agent);
    trajectory_rows(report, traj);
    report.body["result"] = {{"kind", "simulation"}, {"trajectory", trajectory_to_json(traj)}};
    return report;
}

Report choose_command(const Scenario& scenario, int vantage) {
    const BinaryChoice& choice = require_binary_choice(scenario);
    Report report = make_report(scenario, "choose");
    const ChoiceResult r = choose(choice, scenario.discount, vantage);
    report.columns = {"vantage", "value_a", "value_b", "selection"};
    report.rows.push_back({std::to_string(vantage), format_value(r.value_a),
                           format_value(r.value_b), selection_name(r.selection)});
    report.body["result"] = choice_to_json(vantage, r);
    return report;
}

Report check_consistency_command(const Scenario& scenario, int horizon, double tol) {
    Report report = make_report(scenario, "check-consistency");
    const ConsistencyVerdict verdict = check_consistency(scenario.discount, horizon, tol);
    report.columns = {"consistent", "delay_a", "delay_b", "ratio_a", "ratio_b", "deviation"};
    json body = {{"consistent", verdict.consistent},
                 {"horizon", horizon},
                 {"tolerance", verdict.tolerance}};
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        report.rows.push_back({"no", std::to_string(w.delay_a), std::to_string(w.delay_b),
                               format_value(w.ratio_at_a), format_value(w.ratio_at_b),
                               format_value(w.deviation)});
        body["witness"] = {{"delay_a", w.delay_a},
                           {"delay_b", w.delay_b},
                           {"ratio_a", w.ratio_at_a},
                           {"ratio_b", w.ratio_at_b},
                           {"deviation", w.deviation}};
    } else {
        report.rows.push_back({"yes", "", "", "", "", ""});
    }
    report.body["result"] = body;
    return report;
}

Report find_reversal_command(const Scenario& scenario, int max_amount, int delay_bound,
                             int vantage_bound) {
    Report report = make_report(scenario, "find-reversal");
    std::vector<double> amounts;
    for (int a = 1; a <= max_amount; ++a) amounts.push_back(a);
    const auto witness =
        find_reversal(scenario.discount, amounts, delay_bound, vantage_bound);
    report.columns = {"found", "small", "small_at", "large", "large_at", "s1", "s2",
                      "small@s1", "large@s1", "small@s2", "large@s2"};
    if (witness) {
        const auto& w = *witness;
        report.rows.push_back(
            {"yes", format_value(w.small.amount), std::to_string(w.small.at),
             format_value(w.large.amount), std::to_string(w.large.at),
             std::to_string(w.early_vantage), std::to_string(w.late_vantage),
             format_value(w.small_at_early), format_value(w.large_at_early),
             format_value(w.small_at_late), format_value(w.large_at_late)});
        report.body["result"] = {{"found", true}, {"witness", witness_to_json(w)}};
    } else {
        report.rows.push_back({"no", "", "", "", "", "", "", "", "", "", ""});
        report.body["result"] = {{"found", false}};
    }
    return report;
}

Report dilate_command(const Scenario& scenario) {
    if (!scenario.relativity) missing("relativity", "dilate requires a relativity block");
    Report report = make_report(scenario, "dilate");
    report.columns = {"itinerary", "coordinate_span", "proper_time", "ratio"};
    json itineraries = json::array();
    auto add = [&](const std::string& label, const Itinerary& it) {
        const double span = coordinate_span(it);
        const double proper = elapsed_proper_time(it);
        report.rows.push_back({label, format_value(span), format_value(proper),
                               format_value(proper / span)});
        json segments = json::array();
        for (const auto& seg : it.segments) segments.push_back(proper_time(seg));
        itineraries.push_back({{"label", label},
                               {"coordinate_span", span},
                               {"proper_time", proper},
                               {"segment_proper_times", segments}});
    };
    add("home", scenario.relativity->home);
    if (scenario.relativity->traveler) add("traveler", *scenario.relativity->traveler);
    report.body["result"] = {{"itineraries", itineraries}};
    return report;
}

Report clone_compare_command(const Scenario& scenario, int max_amount, int delay_bound) {
    if (!scenario.relativity || !scenario.relativity->traveler)
        missing("relativity", "clone-compare requires home and traveler itineraries");
    Report report = make_report(scenario, "clone-compare");
    const auto& rel = *scenario.relativity;

    std::optional<BinaryChoice> probe = rel.probe;
    bool searched = false;
    if (!probe) {
        probe = find_diverging_probe(scenario.discount, rel.home, *rel.traveler, max_amount,
                                     delay_bound);
        searched = true;
    }

    report.columns = {"clone", "elapsed_proper", "value_a", "value_b", "selection"};
    json body;
    body["probe_searched"] = searched;
    if (!probe) {
        report.rows.push_back({"none", "", "", "", ""});
        body["diverged"] = false;
        body["probe_found"] = false;
        report.body["result"] = body;
        return report;
    }
    const auto divergence =
        clone_divergence(scenario.discount, rel.home, *rel.traveler, *probe);
    auto add = [&](const std::string& label, const CloneView& view) {
        report.rows.push_back({label, std::to_string(view.elapsed_proper),
                               format_value(view.choice.value_a),
                               format_value(view.choice.value_b),
                               selection_name(view.choice.selection)});
    };
    add("home", divergence.home);
    add("traveler", divergence.traveler);
    body["probe_found"] = true;
    body["probe"] = {{"option_a", {{"amount", probe->option_a.amount}, {"at", probe->option_a.at}}},
                     {"option_b", {{"amount", probe->option_b.amount}, {"at", probe->option_b.at}}},
                     {"decided_at", probe->decided_at}};
    body["home"] = choice_to_json(probe->decided_at, divergence.home.choice);
    body["home"]["elapsed_proper"] = divergence.home.elapsed_proper;
    body["traveler"] = choice_to_json(probe->decided_at, divergence.traveler.choice);
    body["traveler"]["elapsed_proper"] = divergence.traveler.elapsed_proper;
    body["diverged"] = divergence.diverged;
    report.body["result"] = body;
    return report;
}

Report compare_agents_command(const Scenario& scenario) {
    Report report = make_report(scenario, "compare-agents");
    const int modify_at =
        scenario.agent.tag == AgentKind::Tag::SelfModifying ? scenario.agent.modify_at : 0;
    const std::vector<std::pair<std::string, AgentKind>> kinds = {
        {"naive", AgentKind::naive()},
        {"sophisticated", AgentKind::sophisticated()},
        {"committed", AgentKind::committed()},
        {"self_modifying", AgentKind::self_modifying(modify_at)},
    };
    report.columns = {"agent", "actions", "value_from_0"};
    json agents = json::array();
    std::vector<Trajectory> trajectories;
    for (const auto& [name, kind] : kinds) {
        Trajectory traj = simulate_scenario(scenario, kind);
        report.rows.push_back({name, plan_string(traj.actions),
                               format_value(traj.realized_value_from(0))});
        json entry = {{"agent", name}, {"trajectory", trajectory_to_json(traj)}};
        agents.push_back(entry);
        trajectories.push_back(std::move(traj));
    }
    bool all_identical = true;
    for (const auto& traj : trajectories)
        all_identical = all_identical && same_actions(traj, trajectories.front());
    report.body["result"] = {{"agents", agents}, {"all_identical", all_identical}};
    return report;
}

}  // namespace tempus
