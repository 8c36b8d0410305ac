#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "tempus/relativity.hpp"

using namespace tempus;

namespace {
const DiscountFunction kHyp = DiscountFunction::hyperbolic();

Itinerary rest(double duration) { return {{{duration, 0.0, 0.0}}}; }
}  // namespace

TEST_CASE("proper time of a single segment") {
    CHECK(proper_time({10.0, 0.0, 0.0}) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(proper_time({10.0, 0.8, 0.0}) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(proper_time({10.0, 0.0, 0.75}) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("segment invariants") {
    CHECK_THROWS_AS(proper_time({0.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(proper_time({1.0, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(proper_time({1.0, -0.1, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(proper_time({1.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("proper time never exceeds coordinate time") {
    for (double beta : {0.0, 0.1, 0.5, 0.99})
        for (double g : {0.0, 0.2, 0.9}) {
            const double tau = proper_time({7.0, beta, g});
            if (beta == 0.0 && g == 0.0)
                CHECK(tau == 7.0);
            else
                CHECK(tau < 7.0);
        }
}

TEST_CASE("proper time is monotone in velocity and gravity") {
    for (double beta = 0.0; beta < 0.9; beta += 0.1)
        CHECK(proper_time({5.0, beta + 0.1, 0.0}) < proper_time({5.0, beta, 0.0}));
    for (double g = 0.0; g < 0.9; g += 0.1)
        CHECK(proper_time({5.0, 0.0, g + 0.1}) < proper_time({5.0, 0.0, g}));
}

TEST_CASE("elapsed proper time is additive") {
    const Itinerary it{{{3.0, 0.0, 0.0}, {4.0, 0.0, 0.0}}};
    CHECK(elapsed_proper_time(it) == doctest::Approx(7.0).epsilon(1e-12));

    const Itinerary mixed{{{10.0, 0.8, 0.0}, {10.0, 0.0, 0.75}, {2.0, 0.0, 0.0}}};
    CHECK(elapsed_proper_time(mixed) == doctest::Approx(6.0 + 5.0 + 2.0).epsilon(1e-12));
    CHECK(coordinate_span(mixed) == doctest::Approx(22.0).epsilon(1e-12));

    CHECK_THROWS_AS(elapsed_proper_time(Itinerary{}), std::invalid_argument);
}

TEST_CASE("permutation and segment-splitting invariance") {
    Itinerary it{{{10.0, 0.8, 0.0}, {4.0, 0.0, 0.5}, {1.0, 0.2, 0.1}}};
    const double total = elapsed_proper_time(it);
    std::sort(it.segments.begin(), it.segments.end(),
              [](const ClockSegment& a, const ClockSegment& b) {
                  return a.coordinate_duration < b.coordinate_duration;
              });
    CHECK(elapsed_proper_time(it) == doctest::Approx(total).epsilon(1e-12));

    const Itinerary whole{{{10.0, 0.6, 0.2}}};
    const Itinerary split{{{4.0, 0.6, 0.2}, {6.0, 0.6, 0.2}}};
    CHECK(elapsed_proper_time(split) ==
          doctest::Approx(elapsed_proper_time(whole)).epsilon(1e-12));
}

TEST_CASE("grid rounding is nearest, half away from zero") {
    CHECK(round_to_grid(2.4) == 2);
    CHECK(round_to_grid(2.5) == 3);
    CHECK(round_to_grid(2.6) == 3);
    CHECK(round_to_grid(-2.5) == -3);
    CHECK(round_to_grid(0.0) == 0);
}

TEST_CASE("identical itineraries never diverge") {
    const Itinerary journey{{{10.0, 0.8, 0.0}}};
    for (const auto& f : {kHyp, DiscountFunction::exponential(0.5)}) {
        for (int a = 1; a <= 20; a += 3)
            for (int b = 1; b <= 20; b += 3)
                for (int d1 = 1; d1 < 4; ++d1)
                    for (int d2 = d1 + 1; d2 <= 4; ++d2) {
                        BinaryChoice probe{{double(a), 10 + d1}, {double(b), 10 + d2}, 10};
                        CHECK_FALSE(clone_divergence(f, journey, journey, probe).diverged);
                    }
        CHECK_FALSE(find_diverging_probe(f, journey, journey, 40, 4).has_value());
    }
}

TEST_CASE("hyperbolic clones diverge after unequal journeys") {
    const Itinerary home = rest(10.0);
    const Itinerary traveler{{{10.0, 0.8, 0.0}}};

    // elapsed pasts: 10 proper periods at home, 6 on the ship
    BinaryChoice probe{{27.0, 11}, {30.0, 12}, 10};
    const auto report = clone_divergence(kHyp, home, traveler, probe);
    CHECK(report.home.elapsed_proper == 10);
    CHECK(report.traveler.elapsed_proper == 6);
    // home: 27/12 < 30/13 is false -> ... 27/12 = 2.25 vs 30/13 ~ 2.3077
    CHECK(report.home.choice.selection == Selection::B);
    // traveler: 27/8 = 3.375 vs 30/9 ~ 3.333
    CHECK(report.traveler.choice.selection == Selection::A);
    CHECK(report.diverged);

    const auto found = find_diverging_probe(kHyp, home, traveler, 40, 4);
    REQUIRE(found.has_value());
    CHECK(clone_divergence(kHyp, home, traveler, *found).diverged);
}

TEST_CASE("exponential clones never diverge") {
    const Itinerary home = rest(10.0);
    const std::vector<Itinerary> travels = {
        {{{10.0, 0.8, 0.0}}}, {{{10.0, 0.0, 0.75}}}, {{{5.0, 0.99, 0.0}, {5.0, 0.0, 0.0}}}};
    for (double delta : {0.3, 0.5, 0.9})
        for (const auto& traveler : travels)
            CHECK_FALSE(find_diverging_probe(DiscountFunction::exponential(delta), home,
                                             traveler, 40, 4)
                            .has_value());
}

TEST_CASE("clone comparison validates the reunion") {
    const Itinerary home = rest(10.0);
    const Itinerary longer = rest(12.0);
    const BinaryChoice probe{{16.0, 11}, {30.0, 12}, 10};
    CHECK_THROWS_AS(clone_divergence(kHyp, home, longer, probe), std::invalid_argument);

    const BinaryChoice early{{16.0, 11}, {30.0, 12}, 9};
    CHECK_THROWS_AS(clone_divergence(kHyp, home, home, early), std::invalid_argument);
}
