#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "tempus/discounting.hpp"
#include "tempus/planning.hpp"
#include "tempus/problems.hpp"
#include "tempus/relativity.hpp"

namespace tempus {

enum class ScenarioErrorCode { Syntax, UnknownField, Invariant };

const char* code_name(ScenarioErrorCode code);  // "syntax" | "unknown-field" | "invariant"

/// Validation failure naming the offending field and constraint.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(ScenarioErrorCode code, std::string field, const std::string& message);
    ScenarioErrorCode code() const { return code_; }
    const std::string& field() const { return field_; }

private:
    ScenarioErrorCode code_;
    std::string field_;
};

enum class OutputFormat { Table, Csv, Json };

struct RelativitySpec {
    Itinerary home;
    std::optional<Itinerary> traveler;
    std::optional<BinaryChoice> probe;
};

/// A fully validated scenario file. `resolved` is the normalized JSON
/// form, embedded in JSON reports and itself parseable.
struct Scenario {
    DiscountFunction discount = DiscountFunction::hyperbolic();
    std::variant<BinaryChoice, ConsumptionProblem, TaskProblem> problem;
    AgentKind agent = AgentKind::naive();
    std::optional<RelativitySpec> relativity;
    OutputFormat format = OutputFormat::Table;
    nlohmann::json resolved;
};

/// Parses and validates a scenario document. Unknown fields are
/// rejected. Throws ScenarioError.
Scenario parse_scenario(const std::string& text);
Scenario parse_scenario_json(const nlohmann::json& doc);

}  // namespace tempus
