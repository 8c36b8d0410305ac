#pragma once

#include <optional>
#include <vector>

#include "tempus/discounting.hpp"
#include "tempus/problems.hpp"

namespace tempus {

/// One leg of a journey: a coordinate-time duration traversed at a given
/// velocity (beta = v/c) inside a given gravitational well
/// (gravity_ratio = r_s/r, 0 in flat spacetime).
struct ClockSegment {
    double coordinate_duration = 0.0;  // > 0
    double beta = 0.0;                 // in [0, 1)
    double gravity_ratio = 0.0;        // in [0, 1)
};

struct Itinerary {
    std::vector<ClockSegment> segments;  // nonempty
};

/// tau = dt * sqrt(1 - beta^2) * sqrt(1 - gravity_ratio); always <= dt,
/// with equality iff the segment is at rest in flat spacetime.
double proper_time(const ClockSegment& seg);

double elapsed_proper_time(const Itinerary& itinerary);

double coordinate_span(const Itinerary& itinerary);

/// Nearest integer, halves away from zero.
int round_to_grid(double periods);

/// How one clone, having aged `m` proper periods en route, evaluates the
/// probe at reunion.
struct CloneView {
    int elapsed_proper = 0;  // m, rounded to the grid
    ChoiceResult choice;
};

struct CloneDivergenceReport {
    CloneView home;
    CloneView traveler;
    bool diverged = false;
};

/// Both clones start with discounting keyed to elapsed proper time. By
/// reunion each has aged a different number of proper periods m, so each
/// evaluates a reward d coordinate periods out with weight(d + m). The
/// clones disagree exactly when the two shifted rankings differ; for an
/// exponential family the shift rescales both values equally and
/// divergence never occurs. Requires the itineraries to span the same
/// coordinate time (the reunion) and the probe to be decided then.
CloneDivergenceReport clone_divergence(const DiscountFunction& f, const Itinerary& home,
                                       const Itinerary& traveler, const BinaryChoice& probe);

/// Exhaustive scan for a probe on which the clones disagree: amounts
/// 1..amount_bound, reward delays after reunion 0 < d1 < d2 <=
/// delay_bound. Returns the first diverging probe in (amount_a,
/// amount_b, d1, d2) order, or nullopt.
std::optional<BinaryChoice> find_diverging_probe(const DiscountFunction& f,
                                                 const Itinerary& home,
                                                 const Itinerary& traveler,
                                                 int amount_bound, int delay_bound);

}  // namespace tempus
