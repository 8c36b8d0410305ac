#include <doctest.h>

#include <stdexcept>

#include "tempus/problems.hpp"

using namespace tempus;

namespace {
const DiscountFunction kHyp = DiscountFunction::hyperbolic();
}

TEST_CASE("evaluate_dated") {
    CHECK(evaluate_dated({30.0, 2}, kHyp, 0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(evaluate_dated({16.0, 1}, kHyp, 1) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(evaluate_dated({42.5, 7}, DiscountFunction::exponential(0.5), 7) == 42.5);
    CHECK_THROWS_AS(evaluate_dated({5.0, 1}, kHyp, 2), std::invalid_argument);
}

TEST_CASE("evaluate_dated strictly decreases as the reward recedes") {
    for (int at = 1; at < 12; ++at)
        CHECK(evaluate_dated({9.0, at + 1}, kHyp, 0) < evaluate_dated({9.0, at}, kHyp, 0));
}

TEST_CASE("choose reproduces the two-vantage flip") {
    const BinaryChoice choice{{16.0, 1}, {30.0, 2}, 1};

    const auto monday = choose(choice, kHyp, 0);
    CHECK(monday.selection == Selection::B);
    CHECK(monday.value_a == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(monday.value_b == doctest::Approx(10.0).epsilon(1e-12));

    const auto tuesday = choose(choice, kHyp, 1);
    CHECK(tuesday.selection == Selection::A);
    CHECK(tuesday.value_a == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(tuesday.value_b == doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("choose tie-breaking") {
    // symmetric tie goes to A
    const BinaryChoice same{{10.0, 2}, {10.0, 2}, 0};
    CHECK(choose(same, kHyp, 0).selection == Selection::A);

    // equal values, B is earlier: 15/3 == 10/2 under hyperbolic weights
    const BinaryChoice earlier_b{{15.0, 2}, {10.0, 1}, 0};
    const auto r = choose(earlier_b, kHyp, 0);
    CHECK(r.value_a == r.value_b);
    CHECK(r.selection == Selection::B);
}

TEST_CASE("choose rejects bad vantages") {
    const BinaryChoice choice{{16.0, 1}, {30.0, 2}, 1};
    CHECK_THROWS_AS(choose(choice, kHyp, 2), std::invalid_argument);
    const BinaryChoice late{{16.0, 1}, {30.0, 2}, 2};
    CHECK_THROWS_AS(choose(late, kHyp, 0), std::invalid_argument);
}

TEST_CASE("choose is invariant under positive scaling") {
    // scale the discount function: tabulated c/(1+t) vs hyperbolic
    for (double c : {0.25, 3.0}) {
        std::vector<double> weights;
        for (int t = 0; t <= 8; ++t) weights.push_back(c / (1.0 + t));
        const auto scaled = DiscountFunction::tabulated(weights);
        for (double a = 1.0; a <= 20.0; a += 3.0) {
            for (double b = 1.0; b <= 20.0; b += 3.0) {
                const BinaryChoice choice{{a, 2}, {b, 4}, 1};
                for (int now = 0; now <= 1; ++now) {
                    const auto lhs = choose(choice, kHyp, now);
                    const auto rhs = choose(choice, scaled, now);
                    CHECK(lhs.selection == rhs.selection);
                    CHECK(rhs.value_a == doctest::Approx(c * lhs.value_a).epsilon(1e-12));
                }
            }
        }
    }

    // scale both amounts by the same factor
    for (double c : {0.5, 7.0}) {
        for (double a = 1.0; a <= 20.0; a += 3.0) {
            for (double b = 1.0; b <= 20.0; b += 3.0) {
                const BinaryChoice plain{{a, 1}, {b, 3}, 0};
                const BinaryChoice scaled{{c * a, 1}, {c * b, 3}, 0};
                CHECK(choose(plain, kHyp, 0).selection == choose(scaled, kHyp, 0).selection);
            }
        }
    }
}

TEST_CASE("utility functions") {
    CHECK(UtilityFunction::linear()(0.0) == 0.0);
    CHECK(UtilityFunction::log()(0.0) == 0.0);
    CHECK(UtilityFunction::power(0.5)(0.0) == 0.0);
    CHECK(UtilityFunction::power(0.5)(4.0) == doctest::Approx(2.0).epsilon(1e-12));
    for (int r = 0; r < 10; ++r) {
        CHECK(UtilityFunction::linear()(r + 1) > UtilityFunction::linear()(r));
        CHECK(UtilityFunction::log()(r + 1) > UtilityFunction::log()(r));
        CHECK(UtilityFunction::power(0.3)(r + 1) > UtilityFunction::power(0.3)(r));
    }
    CHECK_THROWS_AS(UtilityFunction::power(0.0), std::invalid_argument);
    CHECK_THROWS_AS(UtilityFunction::power(1.5), std::invalid_argument);
    CHECK_THROWS_AS(UtilityFunction::linear()(-1.0), std::domain_error);
}

TEST_CASE("plan_value") {
    const ConsumptionProblem linear{3, 5, UtilityFunction::linear()};
    CHECK(plan_value({5, 0, 0}, linear, kHyp, 0) == 5.0);
    CHECK(plan_value({0, 0, 0}, linear, kHyp, 0) == 0.0);

    const ConsumptionProblem two{2, 2, UtilityFunction::linear()};
    CHECK(plan_value({1, 1}, two, kHyp, 0) == doctest::Approx(1.5).epsilon(1e-12));

    // vantage shifts the delay origin
    CHECK(plan_value({1, 1}, two, kHyp, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("plan_value rejects infeasible plans") {
    const ConsumptionProblem p{2, 2, UtilityFunction::linear()};
    CHECK_THROWS_AS(plan_value({2, 1}, p, kHyp, 0), std::invalid_argument);
    CHECK_THROWS_AS(plan_value({-1, 1}, p, kHyp, 0), std::invalid_argument);
    CHECK_THROWS_AS(plan_value({1}, p, kHyp, 0), std::invalid_argument);
    CHECK_THROWS_AS(plan_value({1, 1}, p, kHyp, 2), std::invalid_argument);
}

TEST_CASE("plan_value with linear utility is additive across plans") {
    const ConsumptionProblem p{4, 10, UtilityFunction::linear()};
    const std::vector<int> a{1, 0, 2, 1};
    const std::vector<int> b{2, 3, 0, 1};
    std::vector<int> sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum.push_back(a[i] + b[i]);
    for (int s = 0; s < p.horizon; ++s)
        CHECK(plan_value(sum, p, kHyp, s) ==
              doctest::Approx(plan_value(a, p, kHyp, s) + plan_value(b, p, kHyp, s))
                  .epsilon(1e-12));
}

TEST_CASE("problem validation") {
    CHECK_THROWS_AS((ConsumptionProblem{0, 1, UtilityFunction::linear()}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((ConsumptionProblem{1, -1, UtilityFunction::linear()}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((TaskProblem{0, 1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((TaskProblem{1, 0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((TaskProblem{1, 1.0, -2.0}.validate()), std::invalid_argument);
}
