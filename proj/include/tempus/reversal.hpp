#pragma once

#include <optional>
#include <vector>

#include "tempus/discounting.hpp"
#include "tempus/problems.hpp"

namespace tempus {

/// Concrete proof of time-inconsistency: from the early vantage the
/// large-later reward strictly wins, from the late vantage the
/// small-sooner reward strictly wins.
struct ReversalWitness {
    DatedReward small;  // X at t1
    DatedReward large;  // Y at t2 > t1
    int early_vantage = 0;  // s1
    int late_vantage = 0;   // s2, s1 < s2 <= t1
    double small_at_early = 0.0;
    double large_at_early = 0.0;
    double small_at_late = 0.0;
    double large_at_late = 0.0;
};

// Comparison margin guarding against floating rounding masquerading as a
// strict flip; genuine margins from the closed-form families are far larger.
inline constexpr double kReversalMargin = 1e-12;

/// True iff recomputing all four present values under f reproduces the
/// stated flip with strict inequalities.
bool verify_witness(const ReversalWitness& w, const DiscountFunction& f);

/// Exhaustive search over X, Y in `amounts` (taken in the given order),
/// reward dates 0 <= t1 < t2 <= delay_bound, vantages s1 < s2 <= min(t1,
/// vantage_bound). Returns the lexicographically first witness in
/// (X, Y, t1, t2, s1, s2) order, or nullopt if none exists.
std::optional<ReversalWitness> find_reversal(const DiscountFunction& f,
                                             const std::vector<double>& amounts,
                                             int delay_bound, int vantage_bound);

}  // namespace tempus
