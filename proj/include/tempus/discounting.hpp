#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tempus {

/// A discount function assigns a positive weight to every integer delay.
/// Built-in families:
///   Exponential:  delta^t, 0 < delta < 1
///   Hyperbolic:   1/(1+t)
///   Tabulated:    explicit positive, nonincreasing weights for delays 0..H
///
/// Any family can carry an integer shift m >= 0, giving weight(t) =
/// base_weight(t + m). A shifted Hyperbolic is exactly the 1/(1+t+m)
/// family; a shifted Exponential is delta^m * delta^t, which ranks dated
/// rewards identically to the unshifted one.
class DiscountFunction {
public:
    enum class Family { Exponential, Hyperbolic, Tabulated };

    static DiscountFunction exponential(double delta);
    static DiscountFunction hyperbolic();
    static DiscountFunction shifted_hyperbolic(int m);
    static DiscountFunction tabulated(std::vector<double> weights);

    /// Weight for an integer delay t >= 0. Throws std::out_of_range for a
    /// Tabulated function queried past its table.
    double weight(int t) const;

    /// amount * weight(t).
    double present_value(double amount, int t) const;

    /// Same family with the delay argument shifted forward by `offset`
    /// periods: result.weight(t) == this->weight(t + offset).
    DiscountFunction shifted(int offset) const;

    Family family() const { return family_; }
    int shift() const { return shift_; }
    double delta() const { return delta_; }

    /// Largest queryable delay, or nullopt if unbounded.
    std::optional<int> max_delay() const;

    std::string describe() const;

private:
    DiscountFunction(Family family, double delta, int shift,
                     std::vector<double> weights);

    Family family_;
    double delta_ = 0.0;          // Exponential only
    int shift_ = 0;
    std::vector<double> table_;   // Tabulated only
};

/// delta = 1/(1+i); requires i > 0 so that 0 < delta < 1.
DiscountFunction delta_from_interest_rate(double interest_rate);

/// Outcome of the one-step-ratio consistency test. When inconsistent,
/// `witness` pins the first delay a whose ratio weight(a+1)/weight(a)
/// deviates from the ratio at delay 0.
struct ConsistencyVerdict {
    struct Witness {
        int delay_a = 0;          // reference delay (always 0)
        int delay_b = 0;          // first failing delay
        double ratio_at_a = 0.0;  // weight(1)/weight(0)
        double ratio_at_b = 0.0;  // weight(delay_b+1)/weight(delay_b)
        double deviation = 0.0;   // |ratio_at_b - ratio_at_a| / ratio_at_a
    };

    bool consistent = false;
    std::optional<Witness> witness;
    double tolerance = 0.0;
};

inline constexpr double kDefaultConsistencyTol = 1e-9;

/// Tests whether the one-step ratio weight(a+1)/weight(a) is constant for
/// a in [0, horizon). A constant ratio on the integer grid is equivalent
/// to weight(t) = weight(0) * delta^t, the time-consistent family.
ConsistencyVerdict check_consistency(const DiscountFunction& f, int horizon,
                                     double tol = kDefaultConsistencyTol);

}  // namespace tempus
