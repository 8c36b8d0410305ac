#include "tempus/reversal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tempus {
namespace {

bool strictly_greater(double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return lhs - rhs > kReversalMargin * scale;
}

}  // namespace

bool verify_witness(const ReversalWitness& w, const DiscountFunction& f) {
    if (!(w.large.at > w.small.at)) return false;
    if (!(w.early_vantage < w.late_vantage)) return false;
    if (w.early_vantage < 0 || w.late_vantage > w.small.at) return false;

    const double small_early = evaluate_dated(w.small, f, w.early_vantage);
    const double large_early = evaluate_dated(w.large, f, w.early_vantage);
    const double small_late = evaluate_dated(w.small, f, w.late_vantage);
    const double large_late = evaluate_dated(w.large, f, w.late_vantage);
    return strictly_greater(large_early, small_early) &&
           strictly_greater(small_late, large_late);
}

std::optional<ReversalWitness> find_reversal(const DiscountFunction& f,
                                             const std::vector<double>& amounts,
                                             int delay_bound, int vantage_bound) {
    if (amounts.empty()) throw std::invalid_argument("amount grid must be nonempty");
    if (delay_bound < 1 || vantage_bound < 0)
        throw std::invalid_argument("delay and vantage bounds must be nonnegative (delay >= 1)");

    for (double x : amounts) {
        for (double y : amounts) {
            for (int t1 = 0; t1 < delay_bound; ++t1) {
                for (int t2 = t1 + 1; t2 <= delay_bound; ++t2) {
                    const int s_max = std::min(t1, vantage_bound);
                    for (int s1 = 0; s1 < s_max; ++s1) {
                        for (int s2 = s1 + 1; s2 <= s_max; ++s2) {
                            ReversalWitness w;
                            w.small = {x, t1};
                            w.large = {y, t2};
                            w.early_vantage = s1;
                            w.late_vantage = s2;
                            w.small_at_early = evaluate_dated(w.small, f, s1);
                            w.large_at_early = evaluate_dated(w.large, f, s1);
                            w.small_at_late = evaluate_dated(w.small, f, s2);
                            w.large_at_late = evaluate_dated(w.large, f, s2);
                            if (strictly_greater(w.large_at_early, w.small_at_early) &&
                                strictly_greater(w.small_at_late, w.large_at_late))
                                return w;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace tempus
