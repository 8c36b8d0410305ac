#include "tempus/scenario.hpp"

#include <set>

namespace tempus {

using nlohmann::json;

namespace {

[[noreturn]] void fail(ScenarioErrorCode code, const std::string& field,
                       const std::string& message) {
    throw ScenarioError(code, field, message);
}

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

const json& require_object(const json& doc, const std::string& path) {
    if (!doc.is_object()) fail(ScenarioErrorCode::Invariant, path, "must be an object");
    return doc;
}

void reject_unknown(const json& obj, const std::string& path,
                    const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            fail(ScenarioErrorCode::UnknownField, join(path, it.key()), "unknown field");
    }
}

const json& require_field(const json& obj, const std::string& path, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail(ScenarioErrorCode::Invariant, join(path, key), "required field is missing");
    return *it;
}

double require_number(const json& obj, const std::string& path, const std::string& key) {
    const json& v = require_field(obj, path, key);
    if (!v.is_number()) fail(ScenarioErrorCode::Invariant, join(path, key), "must be a number");
    return v.get<double>();
}

int require_int(const json& obj, const std::string& path, const std::string& key) {
    const json& v = require_field(obj, path, key);
    if (!v.is_number_integer())
        fail(ScenarioErrorCode::Invariant, join(path, key), "must be an integer");
    return v.get<int>();
}

std::string require_string(const json& obj, const std::string& path, const std::string& key) {
    const json& v = require_field(obj, path, key);
    if (!v.is_string()) fail(ScenarioErrorCode::Invariant, join(path, key), "must be a string");
    return v.get<std::string>();
}

DiscountFunction parse_discount(const json& doc, const std::string& path, json& resolved) {
    require_object(doc, path);
    const std::string family = require_string(doc, path, "family");
    try {
        if (family == "exponential") {
            reject_unknown(doc, path, {"family", "delta"});
            const double delta = require_number(doc, path, "delta");
            resolved = {{"family", "exponential"}, {"delta", delta}};
            return DiscountFunction::exponential(delta);
        }
        if (family == "hyperbolic") {
            reject_unknown(doc, path, {"family"});
            resolved = {{"family", "hyperbolic"}};
            return DiscountFunction::hyperbolic();
        }
        if (family == "shifted_hyperbolic") {
            reject_unknown(doc, path, {"family", "m"});
            const int m = require_int(doc, path, "m");
            resolved = {{"family", "shifted_hyperbolic"}, {"m", m}};
            return DiscountFunction::shifted_hyperbolic(m);
        }
        if (family == "tabulated") {
            reject_unknown(doc, path, {"family", "weights"});
            const json& w = require_field(doc, path, "weights");
            if (!w.is_array())
                fail(ScenarioErrorCode::Invariant, join(path, "weights"), "must be an array");
            std::vector<double> weights;
            for (const auto& v : w) {
                if (!v.is_number())
                    fail(ScenarioErrorCode::Invariant, join(path, "weights"),
                         "entries must be numbers");
                weights.push_back(v.get<double>());
            }
            resolved = {{"family", "tabulated"}, {"weights", weights}};
            return DiscountFunction::tabulated(std::move(weights));
        }
    } catch (const std::invalid_argument& e) {
        fail(ScenarioErrorCode::Invariant, path, e.what());
    }
    fail(ScenarioErrorCode::Invariant, join(path, "family"),
         "must be one of exponential, hyperbolic, shifted_hyperbolic, tabulated");
}

DatedReward parse_reward(const json& doc, const std::string& path, json& resolved) {
    require_object(doc, path);
    reject_unknown(doc, path, {"amount", "at"});
    DatedReward r;
    r.amount = require_number(doc, path, "amount");
    r.at = require_int(doc, path, "at");
    if (r.at < 0) fail(ScenarioErrorCode::Invariant, join(path, "at"), "must be nonnegative");
    resolved = {{"amount", r.amount}, {"at", r.at}};
    return r;
}

BinaryChoice parse_binary_choice(const json& doc, const std::string& path, json& resolved,
                                 bool with_kind) {
    require_object(doc, path);
    std::set<std::string> known = {"option_a", "option_b", "decided_at"};
    if (with_kind) known.insert("kind");
    reject_unknown(doc, path, known);
    BinaryChoice c;
    json ra, rb;
    c.option_a = parse_reward(require_field(doc, path, "option_a"), join(path, "option_a"), ra);
    c.option_b = parse_reward(require_field(doc, path, "option_b"), join(path, "option_b"), rb);
    c.decided_at = require_int(doc, path, "decided_at");
    if (c.decided_at < 0)
        fail(ScenarioErrorCode::Invariant, join(path, "decided_at"), "must be nonnegative");
    if (c.decided_at > c.option_a.at || c.decided_at > c.option_b.at)
        fail(ScenarioErrorCode::Invariant, join(path, "decided_at"),
             "must not be after either reward date");
    resolved = {{"option_a", ra}, {"option_b", rb}, {"decided_at", c.decided_at}};
    if (with_kind) resolved["kind"] = "binary_choice";
    return c;
}

UtilityFunction parse_utility(const json& doc, const std::string& path, json& resolved) {
    require_object(doc, path);
    const std::string kind = require_string(doc, path, "kind");
    try {
        if (kind == "linear") {
            reject_unknown(doc, path, {"kind"});
            resolved = {{"kind", "linear"}};
            return UtilityFunction::linear();
        }
        if (kind == "log") {
            reject_unknown(doc, path, {"kind"});
            resolved = {{"kind", "log"}};
            return UtilityFunction::log();
        }
        if (kind == "power") {
            reject_unknown(doc, path, {"kind", "exponent"});
            const double a = require_number(doc, path, "exponent");
            resolved = {{"kind", "power"}, {"exponent", a}};
            return UtilityFunction::power(a);
        }
    } catch (const std::invalid_argument& e) {
        fail(ScenarioErrorCode::Invariant, path, e.what());
    }
    fail(ScenarioErrorCode::Invariant, join(path, "kind"),
         "must be one of linear, log, power");
}

std::variant<BinaryChoice, ConsumptionProblem, TaskProblem> parse_problem(
    const json& doc, const std::string& path, json& resolved) {
    require_object(doc, path);
    const std::string kind = require_string(doc, path, "kind");
    try {
        if (kind == "binary_choice")
            return parse_binary_choice(doc, path, resolved, /*with_kind=*/true);
        if (kind == "consumption") {
            reject_unknown(doc, path, {"kind", "horizon", "endowment", "utility"});
            ConsumptionProblem p;
            p.horizon = require_int(doc, path, "horizon");
            p.endowment = require_int(doc, path, "endowment");
            json u;
            p.utility = parse_utility(require_field(doc, path, "utility"),
                                      join(path, "utility"), u);
            p.validate();
            resolved = {{"kind", "consumption"},
                        {"horizon", p.horizon},
                        {"endowment", p.endowment},
                        {"utility", u}};
            return p;
        }
        if (kind == "task") {
            reject_unknown(doc, path, {"kind", "deadline", "cost", "benefit"});
            TaskProblem p;
            p.deadline = require_int(doc, path, "deadline");
            p.cost = require_number(doc, path, "cost");
            p.benefit = require_number(doc, path, "benefit");
            p.validate();
            resolved = {{"kind", "task"},
                        {"deadline", p.deadline},
                        {"cost", p.cost},
                        {"benefit", p.benefit}};
            return p;
        }
    } catch (const std::invalid_argument& e) {
        fail(ScenarioErrorCode::Invariant, path, e.what());
    }
    fail(ScenarioErrorCode::Invariant, join(path, "kind"),
         "must be one of binary_choice, consumption, task");
}

AgentKind parse_agent(const json& doc, const std::string& path, json& resolved) {
    require_object(doc, path);
    const std::string kind = require_string(doc, path, "kind");
    if (kind == "naive") {
        reject_unknown(doc, path, {"kind"});
        resolved = {{"kind", "naive"}};
        return AgentKind::naive();
    }
    if (kind == "sophisticated") {
        reject_unknown(doc, path, {"kind"});
        resolved = {{"kind", "sophisticated"}};
        return AgentKind::sophisticated();
    }
    if (kind == "committed") {
        reject_unknown(doc, path, {"kind"});
        resolved = {{"kind", "committed"}};
        return AgentKind::committed();
    }
    if (kind == "self_modifying") {
        reject_unknown(doc, path, {"kind", "modify_at", "sophisticated_before"});
        const int k = require_int(doc, path, "modify_at");
        if (k < 0)
            fail(ScenarioErrorCode::Invariant, join(path, "modify_at"), "must be nonnegative");
        bool soph = false;
        if (auto it = doc.find("sophisticated_before"); it != doc.end()) {
            if (!it->is_boolean())
                fail(ScenarioErrorCode::Invariant, join(path, "sophisticated_before"),
                     "must be a boolean");
            soph = it->get<bool>();
        }
        resolved = {{"kind", "self_modifying"}, {"modify_at", k},
                    {"sophisticated_before", soph}};
        return AgentKind::self_modifying(k, soph);
    }
    fail(ScenarioErrorCode::Invariant, join(path, "kind"),
         "must be one of naive, sophisticated, committed, self_modifying");
}

Itinerary parse_itinerary(const json& doc, const std::string& path, json& resolved) {
    if (!doc.is_array() || doc.empty())
        fail(ScenarioErrorCode::Invariant, path, "must be a nonempty array of segments");
    Itinerary it;
    resolved = json::array();
    int i = 0;
    for (const auto& seg_doc : doc) {
        const std::string seg_path = path + "[" + std::to_string(i++) + "]";
        require_object(seg_doc, seg_path);
        reject_unknown(seg_doc, seg_path, {"duration", "beta", "gravity"});
        ClockSegment seg;
        seg.coordinate_duration = require_number(seg_doc, seg_path, "duration");
        if (auto f = seg_doc.find("beta"); f != seg_doc.end())
            seg.beta = require_number(seg_doc, seg_path, "beta");
        if (auto f = seg_doc.find("gravity"); f != seg_doc.end())
            seg.gravity_ratio = require_number(seg_doc, seg_path, "gravity");
        try {
            proper_time(seg);  // runs the segment invariant checks
        } catch (const std::invalid_argument& e) {
            fail(ScenarioErrorCode::Invariant, seg_path, e.what());
        }
        resolved.push_back({{"duration", seg.coordinate_duration},
                            {"beta", seg.beta},
                            {"gravity", seg.gravity_ratio}});
        it.segments.push_back(seg);
    }
    return it;
}

RelativitySpec parse_relativity(const json& doc, const std::string& path, json& resolved) {
    require_object(doc, path);
    reject_unknown(doc, path, {"home", "traveler", "probe"});
    RelativitySpec spec;
    json home, traveler, probe;
    spec.home = parse_itinerary(require_field(doc, path, "home"), join(path, "home"), home);
    resolved = {{"home", home}};
    if (auto it = doc.find("traveler"); it != doc.end()) {
        spec.traveler = parse_itinerary(*it, join(path, "traveler"), traveler);
        resolved["traveler"] = traveler;
    }
    if (auto it = doc.find("probe"); it != doc.end()) {
        spec.probe = parse_binary_choice(*it, join(path, "probe"), probe, /*with_kind=*/false);
        resolved["probe"] = probe;
    }
    return spec;
}

OutputFormat parse_output(const json& doc, const std::string& path, json& resolved) {
    require_object(doc, path);
    reject_unknown(doc, path, {"format"});
    const std::string format = require_string(doc, path, "format");
    resolved = {{"format", format}};
    if (format == "table") return OutputFormat::Table;
    if (format == "csv") return OutputFormat::Csv;
    if (format == "json") return OutputFormat::Json;
    fail(ScenarioErrorCode::Invariant, join(path, "format"),
         "must be one of table, csv, json");
}

}  // namespace

const char* code_name(ScenarioErrorCode code) {
    switch (code) {
        case ScenarioErrorCode::Syntax: return "syntax";
        case ScenarioErrorCode::UnknownField: return "unknown-field";
        case ScenarioErrorCode::Invariant: return "invariant";
    }
    return "unknown";
}

ScenarioError::ScenarioError(ScenarioErrorCode code, std::string field,
                             const std::string& message)
    : std::runtime_error("error[" + std::string(code_name(code)) + "] " +
                         (field.empty() ? "" : field + ": ") + message),
      code_(code),
      field_(std::move(field)) {}

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ScenarioErrorCode::Syntax, "", e.what());
    }
    return parse_scenario_json(doc);
}

Scenario parse_scenario_json(const json& doc) {
    require_object(doc, "");
    reject_unknown(doc, "", {"discount", "problem", "agent", "relativity", "output"});

    Scenario s;
    json discount, problem;
    s.discount = parse_discount(require_field(doc, "", "discount"), "discount", discount);
    s.problem = parse_problem(require_field(doc, "", "problem"), "problem", problem);
    s.resolved = {{"discount", discount}, {"problem", problem}};

    if (auto it = doc.find("agent"); it != doc.end()) {
        json agent;
        s.agent = parse_agent(*it, "agent", agent);
        s.resolved["agent"] = agent;
    }
    if (auto it = doc.find("relativity"); it != doc.end()) {
        json rel;
        s.relativity = parse_relativity(*it, "relativity", rel);
        s.resolved["relativity"] = rel;
    }
    if (auto it = doc.find("output"); it != doc.end()) {
        json out;
        s.format = parse_output(*it, "output", out);
        s.resolved["output"] = out;
    }
    return s;
}

}  // namespace tempus
