#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tempus/report.hpp"
#include "tempus/scenario.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

tempus::OutputFormat parse_format(const std::string& name) {
    if (name == "table") return tempus::OutputFormat::Table;
    if (name == "csv") return tempus::OutputFormat::Csv;
    if (name == "json") return tempus::OutputFormat::Json;
    throw CLI::ValidationError("--format", "must be one of table, csv, json");
}

void emit(const tempus::Report& report, tempus::OutputFormat format,
          const std::string& out_path) {
    const std::string text = tempus::render(report, format);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

struct CommonArgs {
    std::string scenario_path;
    std::string format;
    std::string out_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("scenario", scenario_path, "Scenario file (JSON)")->required();
        cmd->add_option("--format", format, "Output format: table, csv, json");
        cmd->add_option("--out", out_path, "Write the report to a file instead of stdout");
    }

    tempus::Scenario load() const { return tempus::parse_scenario(read_file(scenario_path)); }

    void emit_report(const tempus::Scenario& scenario, const tempus::Report& report) const {
        const tempus::OutputFormat fmt =
            format.empty() ? scenario.format : parse_format(format);
        emit(report, fmt, out_path);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intertemporal choice simulator: discounting agents, preference "
                 "reversals, and proper-time effects"};
    app.require_subcommand(1);

    CommonArgs run_args;
    auto* cmd_run = app.add_subcommand("run", "Simulate the scenario's agent on its problem");
    run_args.attach(cmd_run);

    CommonArgs choose_args;
    std::optional<int> choose_now;
    auto* cmd_choose =
        app.add_subcommand("choose", "Evaluate a binary choice from one vantage period");
    choose_args.attach(cmd_choose);
    cmd_choose->add_option("--now", choose_now,
                           "Vantage period (default: the decision period)");

    CommonArgs cc_args;
    int cc_horizon = 100;
    double cc_tol = tempus::kDefaultConsistencyTol;
    auto* cmd_cc = app.add_subcommand("check-consistency",
                                      "Test the discount function's one-step ratio");
    cc_args.attach(cmd_cc);
    cmd_cc->add_option("--horizon", cc_horizon, "Largest delay to test (default 100)");
    cmd_cc->add_option("--tol", cc_tol, "Relative tolerance (default 1e-9)");

    CommonArgs fr_args;
    int fr_max_amount = 30, fr_delay = 4, fr_vantage = 3;
    auto* cmd_fr = app.add_subcommand("find-reversal",
                                      "Search for a preference-reversal witness");
    fr_args.attach(cmd_fr);
    cmd_fr->add_option("--max-amount", fr_max_amount, "Amount grid 1..N (default 30)");
    cmd_fr->add_option("--max-delay", fr_delay, "Largest reward date (default 4)");
    cmd_fr->add_option("--max-vantage", fr_vantage, "Largest vantage period (default 3)");

    CommonArgs dilate_args;
    auto* cmd_dilate = app.add_subcommand("dilate", "Map itineraries to proper time");
    dilate_args.attach(cmd_dilate);

    CommonArgs clone_args;
    int clone_max_amount = 40, clone_delay = 4;
    auto* cmd_clone = app.add_subcommand(
        "clone-compare", "Compare how two reunited clones rank a dated choice");
    clone_args.attach(cmd_clone);
    cmd_clone->add_option("--max-amount", clone_max_amount,
                          "Probe search amount bound (default 40)");
    cmd_clone->add_option("--max-delay", clone_delay, "Probe search delay bound (default 4)");

    CommonArgs cmp_args;
    auto* cmd_cmp = app.add_subcommand("compare-agents",
                                       "Run all four agent kinds and diff trajectories");
    cmp_args.attach(cmd_cmp);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_run) {
            const auto scenario = run_args.load();
            run_args.emit_report(scenario, tempus::run_command(scenario));
        } else if (*cmd_choose) {
            const auto scenario = choose_args.load();
            int now = 0;
            if (choose_now) {
                now = *choose_now;
            } else if (const auto* c =
                           std::get_if<tempus::BinaryChoice>(&scenario.problem)) {
                now = c->decided_at;
            }
            choose_args.emit_report(scenario, tempus::choose_command(scenario, now));
        } else if (*cmd_cc) {
            const auto scenario = cc_args.load();
            cc_args.emit_report(scenario,
                                tempus::check_consistency_command(scenario, cc_horizon, cc_tol));
        } else if (*cmd_fr) {
            const auto scenario = fr_args.load();
            fr_args.emit_report(scenario, tempus::find_reversal_command(
                                              scenario, fr_max_amount, fr_delay, fr_vantage));
        } else if (*cmd_dilate) {
            const auto scenario = dilate_args.load();
            dilate_args.emit_report(scenario, tempus::dilate_command(scenario));
        } else if (*cmd_clone) {
            const auto scenario = clone_args.load();
            clone_args.emit_report(scenario, tempus::clone_compare_command(
                                                 scenario, clone_max_amount, clone_delay));
        } else if (*cmd_cmp) {
            const auto scenario = cmp_args.load();
            cmp_args.emit_report(scenario, tempus::compare_agents_command(scenario));
        }
    } catch (const tempus::ScenarioError& e) {
        std::cerr << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error[runtime] " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
