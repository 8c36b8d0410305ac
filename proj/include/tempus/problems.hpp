#pragma once

#include <string>
#include <vector>

#include "tempus/discounting.hpp"

namespace tempus {

/// A reward of `amount` units landing at an absolute period `at`.
struct DatedReward {
    double amount = 0.0;
    int at = 0;
};

/// Pick one of two dated rewards; the pick becomes binding at `decided_at`.
struct BinaryChoice {
    DatedReward option_a;
    DatedReward option_b;
    int decided_at = 0;
};

enum class Selection { A, B };

struct ChoiceResult {
    Selection selection = Selection::A;
    double value_a = 0.0;
    double value_b = 0.0;
};

/// One-period utility of consuming r resource units. All variants are
/// strictly increasing on r >= 0 with u(0) = 0.
class UtilityFunction {
public:
    enum class Kind { Linear, Log, Power };

    static UtilityFunction linear();
    static UtilityFunction log();                 // ln(1+r)
    static UtilityFunction power(double exponent); // r^a, 0 < a <= 1

    double operator()(double r) const;
    Kind kind() const { return kind_; }
    double exponent() const { return exponent_; }
    std::string describe() const;

private:
    UtilityFunction(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}
    Kind kind_;
    double exponent_;
};

/// Allocate an integer endowment across periods 0..horizon-1.
struct ConsumptionProblem {
    int horizon = 1;      // T >= 1
    int endowment = 0;    // W >= 0
    UtilityFunction utility = UtilityFunction::linear();

    void validate() const;
};

/// Do a task in exactly one period t in 0..deadline-1 (or forfeit):
/// `cost` is paid at the chosen period, `benefit` lands at period
/// `deadline` iff the task was done.
struct TaskProblem {
    int deadline = 1;     // T >= 1
    double cost = 0.0;    // > 0
    double benefit = 0.0; // > 0

    void validate() const;
};

/// Discounted value of `reward` seen from period `now`.
/// Requires now <= reward.at.
double evaluate_dated(const DatedReward& reward, const DiscountFunction& f, int now);

/// Evaluates both options from period `now` (now <= decided_at) and picks
/// the strictly better one; ties go to the earlier reward date, then to
/// option A.
ChoiceResult choose(const BinaryChoice& choice, const DiscountFunction& f, int now);

/// Sum over t in [vantage, T) of weight(t - vantage) * U(plan[t]).
/// The plan must be feasible: nonnegative integers summing to <= endowment.
double plan_value(const std::vector<int>& plan, const ConsumptionProblem& problem,
                  const DiscountFunction& f, int vantage);

}  // namespace tempus
