#include "tempus/problems.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tempus {

UtilityFunction UtilityFunction::linear() { return UtilityFunction(Kind::Linear, 1.0); }
UtilityFunction UtilityFunction::log() { return UtilityFunction(Kind::Log, 0.0); }

UtilityFunction UtilityFunction::power(double exponent) {
    if (!(exponent > 0.0 && exponent <= 1.0))
        throw std::invalid_argument("power utility requires exponent in (0, 1]");
    return UtilityFunction(Kind::Power, exponent);
}

double UtilityFunction::operator()(double r) const {
    if (r < 0.0) throw std::domain_error("consumption must be nonnegative");
    switch (kind_) {
        case Kind::Linear: return r;
        case Kind::Log: return std::log1p(r);
        case Kind::Power: return std::pow(r, exponent_);
    }
    throw std::logic_error("unreachable");
}

std::string UtilityFunction::describe() const {
    switch (kind_) {
        case Kind::Linear: return "linear";
        case Kind::Log: return "log";
        case Kind::Power: return "power(" + std::to_string(exponent_) + ")";
    }
    return {};
}

void ConsumptionProblem::validate() const {
    if (horizon < 1) throw std::invalid_argument("consumption horizon must be >= 1");
    if (endowment < 0) throw std::invalid_argument("endowment must be >= 0");
}

void TaskProblem::validate() const {
    if (deadline < 1) throw std::invalid_argument("task deadline must be >= 1");
    if (!(cost > 0.0)) throw std::invalid_argument("task cost must be positive");
    if (!(benefit > 0.0)) throw std::invalid_argument("task benefit must be positive");
}

double evaluate_dated(const DatedReward& reward, const DiscountFunction& f, int now) {
    if (now > reward.at)
        throw std::invalid_argument("reward lies in the past of the vantage period");
    return f.present_value(reward.amount, reward.at - now);
}

ChoiceResult choose(const BinaryChoice& choice, const DiscountFunction& f, int now) {
    if (now > choice.decided_at)
        throw std::invalid_argument("vantage period is after the decision period");
    if (choice.decided_at > choice.option_a.at || choice.decided_at > choice.option_b.at)
        throw std::invalid_argument("decision period is after a reward date");

    ChoiceResult result;
    result.value_a = evaluate_dated(choice.option_a, f, now);
    result.value_b = evaluate_dated(choice.option_b, f, now);
    if (result.value_b > result.value_a) {
        result.selection = Selection::B;
    } else if (result.value_a > result.value_b) {
        result.selection = Selection::A;
    } else {
        // tie: earlier reward date, then option A
        result.selection = choice.option_b.at < choice.option_a.at ? Selection::B
                                                                   : Selection::A;
    }
    return result;
}

double plan_value(const std::vector<int>& plan, const ConsumptionProblem& problem,
                  const DiscountFunction& f, int vantage) {
    problem.validate();
    if (static_cast<int>(plan.size()) != problem.horizon)
        throw std::invalid_argument("plan length must equal the horizon");
    if (vantage < 0 || vantage > problem.horizon - 1)
        throw std::invalid_argument("vantage must lie in [0, horizon)");
    int total = 0;
    for (int r : plan) {
        if (r < 0) throw std::invalid_argument("allocations must be nonnegative");
        total += r;
    }
    if (total > problem.endowment)
        throw std::invalid_argument("plan exceeds the endowment");

    double value = 0.0;
    for (int t = vantage; t < problem.horizon; ++t)
        value += f.weight(t - vantage) * problem.utility(plan[static_cast<std::size_t>(t)]);
    return value;
}

}  // namespace tempus
