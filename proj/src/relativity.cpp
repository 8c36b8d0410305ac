#include "tempus/relativity.hpp"

#include <cmath>
#include <stdexcept>

namespace tempus {
namespace {

constexpr double kSpanTol = 1e-9;

void validate(const ClockSegment& seg) {
    if (!(seg.coordinate_duration > 0.0))
        throw std::invalid_argument("segment duration must be positive");
    if (!(seg.beta >= 0.0 && seg.beta < 1.0))
        throw std::invalid_argument("beta must lie in [0, 1)");
    if (!(seg.gravity_ratio >= 0.0 && seg.gravity_ratio < 1.0))
        throw std::invalid_argument("gravity ratio must lie in [0, 1)");
}

// Like choose(), but values within a 1e-12 relative margin count as a
// tie; rounding noise in the shifted weights must not read as a flip.
ChoiceResult choose_with_margin(const BinaryChoice& choice, const DiscountFunction& f,
                                int now) {
    ChoiceResult result = choose(choice, f, now);
    const double scale = std::max(std::abs(result.value_a), std::abs(result.value_b));
    if (std::abs(result.value_a - result.value_b) <= 1e-12 * scale) {
        result.selection = choice.option_b.at < choice.option_a.at ? Selection::B
                                                                   : Selection::A;
    }
    return result;
}

CloneView view_at_reunion(const DiscountFunction& f, const Itinerary& itinerary,
                          const BinaryChoice& probe) {
    CloneView view;
    view.elapsed_proper = round_to_grid(elapsed_proper_time(itinerary));
    view.choice = choose_with_margin(probe, f.shifted(view.elapsed_proper), probe.decided_at);
    return view;
}

}  // namespace

double proper_time(const ClockSegment& seg) {
    validate(seg);
    return seg.coordinate_duration * std::sqrt(1.0 - seg.beta * seg.beta) *
           std::sqrt(1.0 - seg.gravity_ratio);
}

double elapsed_proper_time(const Itinerary& itinerary) {
    if (itinerary.segments.empty())
        throw std::invalid_argument("itinerary must have at least one segment");
    double total = 0.0;
    for (const auto& seg : itinerary.segments) total += proper_time(seg);
    return total;
}

double coordinate_span(const Itinerary& itinerary) {
    if (itinerary.segments.empty())
        throw std::invalid_argument("itinerary must have at least one segment");
    double total = 0.0;
    for (const auto& seg : itinerary.segments) {
        validate(seg);
        total += seg.coordinate_duration;
    }
    return total;
}

int round_to_grid(double periods) {
    return static_cast<int>(std::llround(periods));  // nearest, half away from zero
}

CloneDivergenceReport clone_divergence(const DiscountFunction& f, const Itinerary& home,
                                       const Itinerary& traveler,
                                       const BinaryChoice& probe) {
    const double home_span = coordinate_span(home);
    const double traveler_span = coordinate_span(traveler);
    if (std::abs(home_span - traveler_span) > kSpanTol)
        throw std::invalid_argument("itineraries must span the same coordinate time");
    if (probe.decided_at != round_to_grid(home_span))
        throw std::invalid_argument("probe must be decided at the reunion period");

    CloneDivergenceReport report;
    report.home = view_at_reunion(f, home, probe);
    report.traveler = view_at_reunion(f, traveler, probe);
    report.diverged = report.home.choice.selection != report.traveler.choice.selection;
    return report;
}

std::optional<BinaryChoice> find_diverging_probe(const DiscountFunction& f,
                                                 const Itinerary& home,
                                                 const Itinerary& traveler,
                                                 int amount_bound, int delay_bound) {
    if (amount_bound < 1 || delay_bound < 2)
        throw std::invalid_argument("probe grid too small");
    const int reunion = round_to_grid(coordinate_span(home));
    for (int a = 1; a <= amount_bound; ++a) {
        for (int b = 1; b <= amount_bound; ++b) {
            for (int d1 = 1; d1 < delay_bound; ++d1) {
                for (int d2 = d1 + 1; d2 <= delay_bound; ++d2) {
                    BinaryChoice probe;
                    probe.option_a = {static_cast<double>(a), reunion + d1};
                    probe.option_b = {static_cast<double>(b), reunion + d2};
                    probe.decided_at = reunion;
                    if (clone_divergence(f, home, traveler, probe).diverged)
                        return probe;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace tempus
