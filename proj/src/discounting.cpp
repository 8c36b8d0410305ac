#include "tempus/discounting.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tempus {

DiscountFunction::DiscountFunction(Family family, double delta, int shift,
                                   std::vector<double> weights)
    : family_(family), delta_(delta), shift_(shift), table_(std::move(weights)) {}

DiscountFunction DiscountFunction::exponential(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("exponential discount requires 0 < delta < 1");
    return DiscountFunction(Family::Exponential, delta, 0, {});
}

DiscountFunction DiscountFunction::hyperbolic() {
    return DiscountFunction(Family::Hyperbolic, 0.0, 0, {});
}

DiscountFunction DiscountFunction::shifted_hyperbolic(int m) {
    if (m < 0)
        throw std::invalid_argument("shifted hyperbolic requires m >= 0");
    return DiscountFunction(Family::Hyperbolic, 0.0, m, {});
}

DiscountFunction DiscountFunction::tabulated(std::vector<double> weights) {
    if (weights.empty())
        throw std::invalid_argument("tabulated discount requires at least one weight");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
            throw std::invalid_argument("tabulated weights must be positive and finite");
        if (i > 0 && weights[i] > weights[i - 1])
            throw std::invalid_argument("tabulated weights must be nonincreasing in delay");
    }
    return DiscountFunction(Family::Tabulated, 0.0, 0, std::move(weights));
}

double DiscountFunction::weight(int t) const {
    if (t < 0) throw std::out_of_range("delay must be nonnegative");
    const int d = t + shift_;
    switch (family_) {
        case Family::Exponential:
            return std::pow(delta_, d);
        case Family::Hyperbolic:
            return 1.0 / (1.0 + d);
        case Family::Tabulated:
            if (static_cast<std::size_t>(d) >= table_.size())
                throw std::out_of_range("delay exceeds tabulated horizon");
            return table_[static_cast<std::size_t>(d)];
    }
    throw std::logic_error("unreachable");
}

double DiscountFunction::present_value(double amount, int t) const {
    return amount * weight(t);
}

DiscountFunction DiscountFunction::shifted(int offset) const {
    if (offset < 0) throw std::invalid_argument("shift offset must be nonnegative");
    return DiscountFunction(family_, delta_, shift_ + offset, table_);
}

std::optional<int> DiscountFunction::max_delay() const {
    if (family_ == Family::Tabulated)
        return static_cast<int>(table_.size()) - 1 - shift_;
    return std::nullopt;
}

std::string DiscountFunction::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Exponential:
            os << "exponential(delta=" << delta_ << ")";
            break;
        case Family::Hyperbolic:
            os << (shift_ > 0 ? "shifted_hyperbolic" : "hyperbolic");
            break;
        case Family::Tabulated:
            os << "tabulated[" << table_.size() << "]";
            break;
    }
    if (shift_ > 0) os << " shift=" << shift_;
    return os.str();
}

DiscountFunction delta_from_interest_rate(double interest_rate) {
    if (!(interest_rate > 0.0))
        throw std::invalid_argument("interest rate must be positive");
    return DiscountFunction::exponential(1.0 / (1.0 + interest_rate));
}

ConsistencyVerdict check_consistency(const DiscountFunction& f, int horizon,
                                     double tol) {
    if (horizon < 2)
        throw std::invalid_argument("consistency check requires horizon >= 2");
    if (auto h = f.max_delay(); h && *h < horizon)
        throw std::out_of_range("tabulated discount shorter than horizon");

    ConsistencyVerdict verdict;
    verdict.tolerance = tol;
    const double r0 = f.weight(1) / f.weight(0);
    for (int a = 1; a < horizon; ++a) {
        const double ra = f.weight(a + 1) / f.weight(a);
        const double deviation = std::abs(ra - r0) / r0;
        if (deviation > tol) {
            verdict.consistent = false;
            verdict.witness = ConsistencyVerdict::Witness{0, a, r0, ra, deviation};
            return verdict;
        }
    }
    verdict.consistent = true;
    return verdict;
}

}  // namespace tempus
