#include "tempus/planning.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tempus {
namespace {

// Finite-horizon deterministic decision process with a small integer
// state space. Consumption: state = remaining endowment. Task: state =
// task-done flag. Actions are listed preferred-first so that a strict
// argmax scan realizes the documented tie-break (consume/act earlier).
struct Process {
    int horizon = 0;
    int num_states = 0;
    int initial_state = 0;
    bool has_terminal = false;
    int terminal_period = 0;
    std::function<std::vector<int>(int t, int state)> actions;
    std::function<int(int t, int state, int a)> next;
    std::function<double(int t, int state, int a)> reward;
    std::function<double(int state)> terminal;
};

Process make_process(const ConsumptionProblem& problem,
                     const std::vector<int>* reference, double penalty) {
    problem.validate();
    Process p;
    p.horizon = problem.horizon;
    p.num_states = problem.endowment + 1;
    p.initial_state = problem.endowment;
    const UtilityFunction u = problem.utility;
    p.actions = [](int, int remaining) {
        std::vector<int> out;
        for (int r = remaining; r >= 0; --r) out.push_back(r);
        return out;
    };
    p.next = [](int, int remaining, int r) { return remaining - r; };
    if (reference) {
        std::vector<int> ref = *reference;
        p.reward = [u, ref, penalty](int t, int, int r) {
            double v = u(r);
            if (r != ref[static_cast<std::size_t>(t)]) v -= penalty;
            return v;
        };
    } else {
        p.reward = [u](int, int, int r) { return u(r); };
    }
    return p;
}

Process make_process(const TaskProblem& problem,
                     const std::optional<int>* reference, double penalty) {
    problem.validate();
    Process p;
    p.horizon = problem.deadline;
    p.num_states = 2;
    p.initial_state = 0;
    p.has_terminal = true;
    p.terminal_period = problem.deadline;
    p.actions = [](int, int done) {
        return done ? std::vector<int>{0} : std::vector<int>{1, 0};
    };
    p.next = [](int, int done, int a) { return done || a ? 1 : 0; };
    const double cost = problem.cost;
    if (reference) {
        std::optional<int> ref = *reference;
        p.reward = [cost, ref, penalty](int t, int, int a) {
            double v = a ? -cost : 0.0;
            const int ref_action = (ref && *ref == t) ? 1 : 0;
            if (a != ref_action) v -= penalty;
            return v;
        };
    } else {
        p.reward = [cost](int, int, int a) { return a ? -cost : 0.0; };
    }
    const double benefit = problem.benefit;
    p.terminal = [benefit](int done) { return done ? benefit : 0.0; };
    return p;
}

struct SearchResult {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<int> suffix;
};

// Exhaustive depth-first search over action sequences from (t, state),
// valued from `vantage`. Strict improvement only, so the first maximizer
// in the preferred-first action order wins ties.
void search_suffix(const Process& p, const DiscountFunction& f, int vantage,
                   int t, int state, double acc, std::vector<int>& current,
                   SearchResult& best) {
    if (t == p.horizon) {
        double total = acc;
        if (p.has_terminal)
            total += f.weight(p.terminal_period - vantage) * p.terminal(state);
        if (total > best.value) {
            best.value = total;
            best.suffix = current;
        }
        return;
    }
    for (int a : p.actions(t, state)) {
        current.push_back(a);
        search_suffix(p, f, vantage, t + 1, p.next(t, state, a),
                      acc + f.weight(t - vantage) * p.reward(t, state, a), current,
                      best);
        current.pop_back();
    }
}

std::vector<int> optimal_suffix(const Process& p, const DiscountFunction& f,
                                int vantage, int state) {
    SearchResult best;
    std::vector<int> current;
    search_suffix(p, f, vantage, vantage, state, 0.0, current, best);
    return best.suffix;
}

// Replays a prefix of actions and returns the reached state; validates
// feasibility through the process's own action sets.
int replay_prefix(const Process& p, const std::vector<int>& prefix) {
    int state = p.initial_state;
    for (int t = 0; t < static_cast<int>(prefix.size()); ++t) {
        const auto legal = p.actions(t, state);
        const int a = prefix[static_cast<std::size_t>(t)];
        bool ok = false;
        for (int cand : legal) ok = ok || cand == a;
        if (!ok) throw std::invalid_argument("infeasible action prefix");
        state = p.next(t, state, a);
    }
    return state;
}

// Value to the period-`vantage` self of following `policy` from (t, state).
double rollout_value(const Process& p, const std::vector<std::vector<int>>& policy,
                     const DiscountFunction& f, int vantage, int t, int state) {
    double v = 0.0;
    for (int tau = t; tau < p.horizon; ++tau) {
        const int a = policy[static_cast<std::size_t>(tau)][static_cast<std::size_t>(state)];
        v += f.weight(tau - vantage) * p.reward(tau, state, a);
        state = p.next(tau, state, a);
    }
    if (p.has_terminal)
        v += f.weight(p.terminal_period - vantage) * p.terminal(state);
    return v;
}

// Pollak consistent planning: the period-(T-1) self's policy is its
// myopic optimum at every state; each earlier self best-responds under
// its own vantage given the successors' fixed policies.
std::vector<std::vector<int>> backward_induction(const Process& p,
                                                 const DiscountFunction& f) {
    std::vector<std::vector<int>> policy(
        static_cast<std::size_t>(p.horizon),
        std::vector<int>(static_cast<std::size_t>(p.num_states), 0));
    for (int t = p.horizon - 1; t >= 0; --t) {
        for (int state = 0; state < p.num_states; ++state) {
            double best = -std::numeric_limits<double>::infinity();
            int best_action = 0;
            for (int a : p.actions(t, state)) {
                const double v =
                    f.weight(0) * p.reward(t, state, a) +
                    rollout_value(p, policy, f, t, t + 1, p.next(t, state, a));
                if (v > best) {
                    best = v;
                    best_action = a;
                }
            }
            policy[static_cast<std::size_t>(t)][static_cast<std::size_t>(state)] = best_action;
        }
    }
    return policy;
}

std::vector<int> policy_path(const Process& p, const std::vector<std::vector<int>>& policy,
                             int t, int state) {
    std::vector<int> path;
    for (int tau = t; tau < p.horizon; ++tau) {
        const int a = policy[static_cast<std::size_t>(tau)][static_cast<std::size_t>(state)];
        path.push_back(a);
        state = p.next(tau, state, a);
    }
    return path;
}

std::vector<int> concat(std::vector<int> prefix, const std::vector<int>& suffix) {
    prefix.insert(prefix.end(), suffix.begin(), suffix.end());
    return prefix;
}

Trajectory finalize(const Process& p, std::vector<int> actions,
                    std::vector<std::vector<int>> intended,
                    std::vector<DiscountFunction> discounts) {
    Trajectory traj;
    traj.actions = std::move(actions);
    traj.intended_plans = std::move(intended);
    traj.discount_used = std::move(discounts);
    int state = p.initial_state;
    for (int t = 0; t < p.horizon; ++t) {
        const int a = traj.actions[static_cast<std::size_t>(t)];
        traj.period_rewards.push_back(p.reward(t, state, a));
        state = p.next(t, state, a);
    }
    traj.terminal_period = p.has_terminal ? p.terminal_period : p.horizon;
    traj.terminal_reward = p.has_terminal ? p.terminal(state) : 0.0;
    return traj;
}

Trajectory simulate_process(const Process& p, const DiscountFunction& f,
                            const AgentKind& kind) {
    std::vector<int> actions;
    std::vector<std::vector<int>> intended;
    std::vector<DiscountFunction> discounts;

    switch (kind.tag) {
        case AgentKind::Tag::Committed: {
            const auto plan = optimal_suffix(p, f, 0, p.initial_state);
            for (int s = 0; s < p.horizon; ++s) {
                intended.push_back(plan);
                discounts.push_back(f);
            }
            actions = plan;
            break;
        }
        case AgentKind::Tag::Naive: {
            int state = p.initial_state;
            for (int s = 0; s < p.horizon; ++s) {
                const auto suffix = optimal_suffix(p, f, s, state);
                intended.push_back(concat(actions, suffix));
                discounts.push_back(f);
                actions.push_back(suffix.front());
                state = p.next(s, state, suffix.front());
            }
            break;
        }
        case AgentKind::Tag::Sophisticated: {
            const auto policy = backward_induction(p, f);
            int state = p.initial_state;
            for (int s = 0; s < p.horizon; ++s) {
                intended.push_back(concat(actions, policy_path(p, policy, s, state)));
                discounts.push_back(f);
                const int a = policy[static_cast<std::size_t>(s)][static_cast<std::size_t>(state)];
                actions.push_back(a);
                state = p.next(s, state, a);
            }
            break;
        }
        case AgentKind::Tag::SelfModifying: {
            const int k = kind.modify_at;
            if (k < 0 || k >= p.horizon)
                throw std::invalid_argument("modify_at must lie in [0, horizon)");
            std::vector<std::vector<int>> pre_policy;
            if (kind.sophisticated_before_modify && k > 0)
                pre_policy = backward_induction(p, f);
            int state = p.initial_state;
            for (int s = 0; s < p.horizon; ++s) {
                if (s < k) {
                    discounts.push_back(f);
                    if (kind.sophisticated_before_modify) {
                        intended.push_back(concat(actions, policy_path(p, pre_policy, s, state)));
                        const int a =
                            pre_policy[static_cast<std::size_t>(s)][static_cast<std::size_t>(state)];
                        actions.push_back(a);
                        state = p.next(s, state, a);
                    } else {
                        const auto suffix = optimal_suffix(p, f, s, state);
                        intended.push_back(concat(actions, suffix));
                        actions.push_back(suffix.front());
                        state = p.next(s, state, suffix.front());
                    }
                } else {
                    // The period-s self weights calendar period t by the
                    // vantage-k weight: weight'(t - s) = weight(t - k).
                    const DiscountFunction fs = f.shifted(s - k);
                    discounts.push_back(fs);
                    const auto suffix = optimal_suffix(p, fs, s, state);
                    intended.push_back(concat(actions, suffix));
                    actions.push_back(suffix.front());
                    state = p.next(s, state, suffix.front());
                }
            }
            break;
        }
    }
    return finalize(p, std::move(actions), std::move(intended), std::move(discounts));
}

}  // namespace

double Trajectory::realized_value_from(int s) const {
    const int horizon = static_cast<int>(actions.size());
    if (s < 0 || s >= horizon)
        throw std::invalid_argument("vantage must lie in [0, horizon)");
    const DiscountFunction& f = discount_used[static_cast<std::size_t>(s)];
    double v = 0.0;
    for (int t = s; t < horizon; ++t)
        v += f.weight(t - s) * period_rewards[static_cast<std::size_t>(t)];
    if (terminal_reward != 0.0) v += f.weight(terminal_period - s) * terminal_reward;
    return v;
}

bool same_actions(const Trajectory& a, const Trajectory& b) {
    return a.actions == b.actions;
}

PenalizedConsumptionProblem apply_commitment_penalty(const ConsumptionProblem& problem,
                                                     std::vector<int> reference_plan,
                                                     double penalty) {
    problem.validate();
    if (penalty < 0.0) throw std::invalid_argument("penalty must be nonnegative");
    if (static_cast<int>(reference_plan.size()) != problem.horizon)
        throw std::invalid_argument("reference plan length must equal the horizon");
    int total = 0;
    for (int r : reference_plan) {
        if (r < 0) throw std::invalid_argument("reference plan must be nonnegative");
        total += r;
    }
    if (total > problem.endowment)
        throw std::invalid_argument("reference plan exceeds the endowment");
    return {problem, std::move(reference_plan), penalty};
}

PenalizedTaskProblem apply_commitment_penalty(const TaskProblem& problem,
                                              std::optional<int> reference_act,
                                              double penalty) {
    problem.validate();
    if (penalty < 0.0) throw std::invalid_argument("penalty must be nonnegative");
    if (reference_act && (*reference_act < 0 || *reference_act >= problem.deadline))
        throw std::invalid_argument("reference act period must lie in [0, deadline)");
    return {problem, reference_act, penalty};
}

std::vector<int> optimal_plan(const ConsumptionProblem& problem, const DiscountFunction& f,
                              int vantage, const std::vector<int>& committed_prefix) {
    const Process p = make_process(problem, nullptr, 0.0);
    if (vantage < 0 || vantage >= p.horizon)
        throw std::invalid_argument("vantage must lie in [0, horizon)");
    if (static_cast<int>(committed_prefix.size()) != vantage)
        throw std::invalid_argument("prefix length must equal the vantage");
    const int state = replay_prefix(p, committed_prefix);
    return concat(committed_prefix, optimal_suffix(p, f, vantage, state));
}

std::vector<int> optimal_plan(const TaskProblem& problem, const DiscountFunction& f,
                              int vantage, const std::vector<int>& committed_prefix) {
    const Process p = make_process(problem, nullptr, 0.0);
    if (vantage < 0 || vantage >= p.horizon)
        throw std::invalid_argument("vantage must lie in [0, horizon)");
    if (static_cast<int>(committed_prefix.size()) != vantage)
        throw std::invalid_argument("prefix length must equal the vantage");
    const int state = replay_prefix(p, committed_prefix);
    return concat(committed_prefix, optimal_suffix(p, f, vantage, state));
}

Trajectory simulate(const ConsumptionProblem& problem, const DiscountFunction& f,
                    const AgentKind& kind) {
    return simulate_process(make_process(problem, nullptr, 0.0), f, kind);
}

Trajectory simulate(const TaskProblem& problem, const DiscountFunction& f,
                    const AgentKind& kind) {
    return simulate_process(make_process(problem, nullptr, 0.0), f, kind);
}

Trajectory simulate(const PenalizedConsumptionProblem& problem, const DiscountFunction& f,
                    const AgentKind& kind) {
    return simulate_process(make_process(problem.base, &problem.reference_plan, problem.penalty),
                            f, kind);
}

Trajectory simulate(const PenalizedTaskProblem& problem, const DiscountFunction& f,
                    const AgentKind& kind) {
    return simulate_process(make_process(problem.base, &problem.reference_act, problem.penalty),
                            f, kind);
}

}  // namespace tempus
