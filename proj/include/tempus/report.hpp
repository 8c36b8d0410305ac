#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tempus/scenario.hpp"

namespace tempus {

/// A command result in tabular + structured form. The same Report renders
/// to all three output formats; `body` carries the full JSON result with
/// the resolved scenario embedded under "scenario".
struct Report {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json body;
};

/// Canonical decimal rendering of a double (shortest round-trip form);
/// used everywhere a value reaches an output stream so reports are
/// byte-stable.
std::string format_value(double v);

std::string render(const Report& report, OutputFormat format);

// Command entry points. Each validates the scenario parts it needs and
// throws ScenarioError (invariant) when a required block is missing.
Report run_command(const Scenario& scenario);
Report choose_command(const Scenario& scenario, int vantage);
Report check_consistency_command(const Scenario& scenario, int horizon, double tol);
Report find_reversal_command(const Scenario& scenario, int max_amount, int delay_bound,
                             int vantage_bound);
Report dilate_command(const Scenario& scenario);
Report clone_compare_command(const Scenario& scenario, int max_amount, int delay_bound);
Report compare_agents_command(const Scenario& scenario);

}  // namespace tempus
