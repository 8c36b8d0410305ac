#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tempus/reversal.hpp"

using namespace tempus;

namespace {

std::vector<double> amount_grid(int max_amount) {
    std::vector<double> out;
    for (int a = 1; a <= max_amount; ++a) out.push_back(a);
    return out;
}

const DiscountFunction kHyp = DiscountFunction::hyperbolic();

}  // namespace

TEST_CASE("verify_witness on the worked example") {
    ReversalWitness w;
    w.small = {16.0, 1};
    w.large = {30.0, 2};
    w.early_vantage = 0;
    w.late_vantage = 1;

    CHECK(verify_witness(w, kHyp));
    // same ranking from both vantages under exponential 0.5: 8 vs 7.5, 16 vs 15
    CHECK_FALSE(verify_witness(w, DiscountFunction::exponential(0.5)));
}

TEST_CASE("degenerate witnesses are rejected") {
    ReversalWitness w;
    w.small = {16.0, 2};
    w.large = {16.0, 2};
    w.early_vantage = 0;
    w.late_vantage = 1;
    CHECK_FALSE(verify_witness(w, kHyp));

    w.large = {30.0, 3};
    w.late_vantage = 0;  // vantages must strictly increase
    CHECK_FALSE(verify_witness(w, kHyp));
}

TEST_CASE("find_reversal locates a hyperbolic witness") {
    const auto witness = find_reversal(kHyp, amount_grid(30), 3, 2);
    REQUIRE(witness.has_value());
    CHECK(verify_witness(*witness, kHyp));
    CHECK(witness->large.at > witness->small.at);
    CHECK(witness->large_at_early > witness->small_at_early);
    CHECK(witness->small_at_late > witness->large_at_late);
}

TEST_CASE("find_reversal is deterministic and lexicographically first") {
    const auto a = find_reversal(kHyp, amount_grid(30), 3, 2);
    const auto b = find_reversal(kHyp, amount_grid(30), 3, 2);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->small.amount == b->small.amount);
    CHECK(a->large.amount == b->large.amount);
    CHECK(a->small.at == b->small.at);
    CHECK(a->large.at == b->large.at);
    CHECK(a->early_vantage == b->early_vantage);
    CHECK(a->late_vantage == b->late_vantage);
}

TEST_CASE("every returned witness is sound") {
    const std::vector<DiscountFunction> suite = {
        kHyp, DiscountFunction::shifted_hyperbolic(1),
        DiscountFunction::tabulated({1.0, 0.9, 0.85, 0.83, 0.82, 0.815})};
    for (const auto& f : suite) {
        const auto witness = find_reversal(f, amount_grid(25), 4, 3);
        if (witness) CHECK(verify_witness(*witness, f));
    }
}

TEST_CASE("exponential families admit no reversal") {
    for (double delta : {0.3, 0.5, 0.7, 0.9, 0.99}) {
        const auto f = DiscountFunction::exponential(delta);
        CHECK_FALSE(find_reversal(f, amount_grid(30), 4, 3).has_value());
        // completeness: the independent scan agrees
        CHECK_FALSE(oracle::reversal_exists(f, amount_grid(30), 4, 3));
    }
}

TEST_CASE("find_reversal agrees with the independent scan") {
    const std::vector<DiscountFunction> suite = {
        kHyp, DiscountFunction::shifted_hyperbolic(3), DiscountFunction::exponential(0.8),
        DiscountFunction::tabulated({1.0, 0.5, 0.25, 0.125, 0.0625})};
    for (const auto& f : suite) {
        CHECK(find_reversal(f, amount_grid(20), 4, 3).has_value() ==
              oracle::reversal_exists(f, amount_grid(20), 4, 3));
    }
}

TEST_CASE("a single future period cannot flip") {
    for (const auto& f : {kHyp, DiscountFunction::exponential(0.4)})
        CHECK_FALSE(find_reversal(f, amount_grid(30), 1, 3).has_value());
}

TEST_CASE("consistent discounting implies no reversal within the horizon") {
    // geometric table: consistent by construction
    std::vector<double> weights;
    double w = 1.0;
    for (int t = 0; t <= 10; ++t, w *= 0.85) weights.push_back(w);
    const auto f = DiscountFunction::tabulated(weights);
    REQUIRE(check_consistency(f, 9).consistent);
    CHECK_FALSE(find_reversal(f, amount_grid(25), 6, 4).has_value());
}

TEST_CASE("empty grids are rejected") {
    CHECK_THROWS_AS(find_reversal(kHyp, {}, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_reversal(kHyp, amount_grid(5), 0, 2), std::invalid_argument);
}
