#pragma once

#include <optional>
#include <vector>

#include "tempus/discounting.hpp"
#include "tempus/problems.hpp"

namespace tempus {

/// Behavioral model of how the succession of per-period selves decides.
struct AgentKind {
    enum class Tag { Naive, Sophisticated, Committed, SelfModifying };

    Tag tag = Tag::Naive;
    int modify_at = 0;                       // SelfModifying only
    bool sophisticated_before_modify = false; // SelfModifying only

    static AgentKind naive() { return {Tag::Naive}; }
    static AgentKind sophisticated() { return {Tag::Sophisticated}; }
    static AgentKind committed() { return {Tag::Committed}; }
    static AgentKind self_modifying(int modify_at, bool sophisticated_before = false) {
        return {Tag::SelfModifying, modify_at, sophisticated_before};
    }
};

/// Realized path of a simulation. Actions are allocation amounts for
/// consumption problems and 0/1 act flags for task problems.
/// `intended_plans[s]` is the full calendar plan the period-s self meant
/// to follow (realized history as prefix, intention as suffix).
struct Trajectory {
    std::vector<int> actions;
    std::vector<std::vector<int>> intended_plans;
    std::vector<DiscountFunction> discount_used;

    std::vector<double> period_rewards;  // realized utility per period
    double terminal_reward = 0.0;        // lands at terminal_period
    int terminal_period = 0;

    /// Realized stream evaluated from vantage s under the discount
    /// function the period-s self was using.
    double realized_value_from(int s) const;
};

bool same_actions(const Trajectory& a, const Trajectory& b);

/// A consumption problem whose per-period utility is docked `penalty`
/// in every period where the realized allocation deviates from
/// `reference_plan`.
struct PenalizedConsumptionProblem {
    ConsumptionProblem base;
    std::vector<int> reference_plan;
    double penalty = 0.0;
};

/// Task-problem analogue: the reference is an act period (nullopt =
/// never act); deviating in a period costs `penalty` in that period.
struct PenalizedTaskProblem {
    TaskProblem base;
    std::optional<int> reference_act;
    double penalty = 0.0;
};

PenalizedConsumptionProblem apply_commitment_penalty(const ConsumptionProblem& problem,
                                                     std::vector<int> reference_plan,
                                                     double penalty);
PenalizedTaskProblem apply_commitment_penalty(const TaskProblem& problem,
                                              std::optional<int> reference_act,
                                              double penalty);

/// Feasible completion for periods vantage..T-1 maximizing the discounted
/// utility sum from `vantage`, given the already-fixed `committed_prefix`
/// (actions for periods 0..vantage-1). Returns the full calendar plan.
/// Ties resolve toward the lexicographically largest plan (consume as
/// early as possible).
std::vector<int> optimal_plan(const ConsumptionProblem& problem, const DiscountFunction& f,
                              int vantage, const std::vector<int>& committed_prefix = {});

/// Task counterpart; the plan is a 0/1 act-flag vector. Ties resolve
/// toward acting earlier.
std::vector<int> optimal_plan(const TaskProblem& problem, const DiscountFunction& f,
                              int vantage, const std::vector<int>& committed_prefix = {});

Trajectory simulate(const ConsumptionProblem& problem, const DiscountFunction& f,
                    const AgentKind& kind);
Trajectory simulate(const TaskProblem& problem, const DiscountFunction& f,
                    const AgentKind& kind);
Trajectory simulate(const PenalizedConsumptionProblem& problem, const DiscountFunction& f,
                    const AgentKind& kind);
Trajectory simulate(const PenalizedTaskProblem& problem, const DiscountFunction& f,
                    const AgentKind& kind);

}  // namespace tempus
