#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "hardy/error.hpp"
#include "hardy/lhv.hpp"
#include "hardy/thresholds.hpp"
#include "test_support.hpp"

using namespace hardy;

namespace {

const OutcomeSet kQubit = outcome_set_for_dim(2);
const OutcomeSet kQutrit = outcome_set_for_dim(3);

FeasibilityResult feasible_for(const HardyQuartet& q) {
    return lhv_feasible(constraints_from(q), outcome_set_for_dim(q.d1), outcome_set_for_dim(q.d2));
}

HardyQuartet white_quartet(double eps, double a) {
    HardyQuartet q;
    q.variant = QuartetVariant::White2x2;
    q.eps = eps;
    q.a = a;
    return q;
}

// Sign agreement between the LP and a slack, skipping the boundary band.
void check_agreement(const HardyQuartet& q, double slack) {
    if (std::abs(slack) <= kFeasibilityTol) {
        return;
    }
    const auto r = feasible_for(q);
    CHECK_MESSAGE(r.feasible == (slack > 0.0), "slack " << slack << " total " << r.total_violation);
}

}  // namespace

TEST_CASE("strategy enumeration") {
    const auto s2 = enumerate_strategies(kQubit, kQubit);
    const auto s3 = enumerate_strategies(kQutrit, kQutrit);
    CHECK(s2.size() == 16);
    CHECK(s3.size() == 81);
    CHECK(enumerate_strategies(kQubit, kQutrit).size() == 36);

    // Lexicographic in (X1, Y1, X2, Y2).
    CHECK(s2.front().party1 == std::array<Outcome, 2>{Outcome::Plus, Outcome::Plus});
    CHECK(s2.front().party2 == std::array<Outcome, 2>{Outcome::Plus, Outcome::Plus});
    CHECK(s2[1].party2 == std::array<Outcome, 2>{Outcome::Plus, Outcome::Minus});
    CHECK(s2.back().party1 == std::array<Outcome, 2>{Outcome::Minus, Outcome::Minus});
    CHECK(s2[8].party1[0] == Outcome::Minus);

    // All distinct.
    for (std::size_t i = 0; i < s3.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            CHECK_FALSE(s3[i] == s3[j]);
        }
    }

    // Each strategy fixes exactly one outcome per setting pair.
    for (const auto& s : s3) {
        for (Setting a : {Setting::X, Setting::Y}) {
            for (Setting b : {Setting::X, Setting::Y}) {
                int produced = 0;
                for (Outcome x : kQutrit) {
                    for (Outcome y : kQutrit) {
                        produced += s.produces({a, x, b, y}) ? 1 : 0;
                    }
                }
                CHECK(produced == 1);
            }
        }
        CHECK(s.outcome(Party::Two, Setting::Y) == s.party2[1]);
    }
}

TEST_CASE("feasibility examples") {
    SUBCASE("maximally mixed is local") {
        const auto r = feasible_for(quartet_white_2x2(SchmidtSpec::hardy_max(), 0.0));
        CHECK(r.feasible);
        REQUIRE(r.weights.has_value());
        CHECK(r.max_violation <= kFeasibilityTol);
    }
    SUBCASE("pure Hardy state is not") {
        const auto r = feasible_for(quartet_white_2x2(SchmidtSpec::hardy_max(), 1.0));
        CHECK_FALSE(r.feasible);
        CHECK_FALSE(r.weights.has_value());
        CHECK(r.max_violation > 0.0);
        CHECK(r.total_violation == doctest::Approx(0.090169943749474235).epsilon(1e-9));
    }
    SUBCASE("hand-made quartet with positive slack") {
        const auto q = white_quartet(0.1, 0.1);
        CHECK(hardy_inequality(q).slack == doctest::Approx(0.1));
        CHECK(feasible_for(q).feasible);
    }
}

TEST_CASE("feasible weights certify the constraints") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = test::random_two_qubit_spec();
        const auto q = quartet_white_2x2(spec, test::uniform(0.0, 0.5));
        const auto c = constraints_from(q);
        const auto r = lhv_feasible(c, kQubit, kQubit);
        REQUIRE(r.feasible);
        const auto& w = *r.weights;
        double total = 0.0;
        for (double x : w) {
            CHECK(x >= 0.0);
            total += x;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        for (const auto& item : c.items) {
            double p = 0.0;
            for (std::size_t s = 0; s < w.size(); ++s) {
                p += r.strategies[s].produces(item.pair) ? w[s] : 0.0;
            }
            CHECK(std::abs(p - item.probability) <= kFeasibilityTol);
        }
    }
}

TEST_CASE("mixtures of deterministic strategies are always feasible") {
    for (int trial = 0; trial < 25; ++trial) {
        const auto o1 = outcome_set_for_dim(test::uniform_int(2, 3));
        const auto o2 = outcome_set_for_dim(test::uniform_int(2, 3));
        const auto strategies = enumerate_strategies(o1, o2);
        std::vector<double> w(strategies.size());
        double s = 0.0;
        for (auto& x : w) {
            x = test::uniform(0.0, 1.0) < 0.3 ? test::uniform(0.0, 1.0) : 0.0;
            s += x;
        }
        if (s == 0.0) {
            w[0] = s = 1.0;
        }
        for (auto& x : w) {
            x /= s;
        }
        const auto behavior = behavior_from_weights(strategies, w, o1, o2);
        CHECK(behavior.full_behavior);
        CHECK(behavior.items.size() == 4 * o1.size() * o2.size());
        CHECK(lhv_feasible(behavior, o1, o2).feasible);
    }
}

TEST_CASE("full-behavior feasibility is monotone") {
    for (int trial = 0; trial < 12; ++trial) {
        const auto spec = test::random_two_qubit_spec();
        const auto state = mix(spec, trial % 2 ? NoiseKind::Colored : NoiseKind::White,
                               test::uniform(0.0, 1.0));
        const auto full = build_full_behavior(state);
        REQUIRE(full.items.size() == 16);
        const bool full_ok = lhv_feasible(full, kQubit, kQubit).feasible;
        BehaviorConstraints subset;
        for (std::size_t i = 0; i < full.items.size(); i += 2) {
            subset.items.push_back(full.items[i]);
        }
        const bool subset_ok = lhv_feasible(subset, kQubit, kQubit).feasible;
        // Adding constraints never turns infeasible into feasible.
        CHECK((subset_ok || !full_ok));
        const bool quartet_ok = feasible_for(closed_form_quartet(state)).feasible;
        CHECK((quartet_ok || !full_ok));
    }
}

TEST_CASE("constraint validation") {
    BehaviorConstraints c;
    c.items.push_back({{Setting::X, Outcome::Plus, Setting::X, Outcome::Plus}, 0.2});
    c.items.push_back({{Setting::X, Outcome::Plus, Setting::X, Outcome::Plus}, 0.2});
    try {
        (void)lhv_feasible(c, kQubit, kQubit);
        FAIL("expected duplicate rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
        CHECK(std::string(e.what()).find("duplicated") != std::string::npos);
    }

    c.items.pop_back();
    c.items[0].probability = 1.5;
    CHECK_THROWS_AS(c.validate(), Error);

    c.items[0] = {{Setting::X, Outcome::Zero, Setting::X, Outcome::Plus}, 0.2};
    try {
        (void)lhv_feasible(c, kQubit, kQubit);
        FAIL("expected outcome rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidOutcomePair);
    }
    CHECK(lhv_feasible(c, kQutrit, kQubit).feasible);
}

TEST_CASE("measure constraints") {
    const auto w = measure_constraints(white_quartet(0.05, 0.02));
    CHECK(w.a_and_b == doctest::Approx(0.05));
    CHECK(w.c_and_d == doctest::Approx(0.07));

    const auto spec = SchmidtSpec::create(3, 3, {0.8, 0.6});
    auto q = sextet_white_highdim(spec, 0.0);
    const double scale = 0.05 / q.eps;
    q.eps *= scale;
    q.y1_plus_x2_zero *= scale;
    q.x1_zero_y2_plus *= scale;
    const auto h = measure_constraints(q);
    CHECK(h.c_minus_b_and_c == doctest::Approx(0.10));
    CHECK(h.d_minus_a_and_d == doctest::Approx(0.10));

    const auto c = measure_constraints(quartet_colored_2x2(SchmidtSpec::hardy_max(), 0.5));
    CHECK(c.c_minus_b_and_c == c.d_minus_a_and_d);
}

TEST_CASE("Hardy inequality") {
    const auto spec = SchmidtSpec::create(2, 2, {0.9, std::sqrt(0.19)});
    const double t = threshold_white_2x2(spec.p1(), spec.p2());
    CHECK(std::abs(hardy_inequality(quartet_white_2x2(spec, t)).slack) < 1e-12);

    const auto pure = hardy_inequality(quartet_white_2x2(spec, 1.0));
    CHECK_FALSE(pure.satisfied);
    CHECK(pure.slack == doctest::Approx(-hardy_probability_2x2(spec.p1(), spec.p2())));

    for (int trial = 0; trial < 50; ++trial) {
        const auto s = test::random_two_qubit_spec();
        CHECK(hardy_inequality(quartet_colored_2x2(s, 0.0)).satisfied);
    }

    CHECK(classify_slack(2e-9) == SlackVerdict::Satisfied);
    CHECK(classify_slack(-2e-9) == SlackVerdict::Violated);
    CHECK(classify_slack(5e-10) == SlackVerdict::Boundary);
    CHECK(std::string(to_string(SlackVerdict::Boundary)) == "boundary");
}

TEST_CASE("LP agrees with the inequality sign") {
    const auto grid_p = [](int i) { return 0.05 * i; };

    SUBCASE("white 2x2 and colored") {
        for (int k = 0; k <= 11; ++k) {
            const double p1 = 0.1 + 0.05 * k;  // p1 in {0.1, ..., 0.65}
            const auto spec = SchmidtSpec::create(2, 2, {p1, std::sqrt(1.0 - p1 * p1)});
            for (int i = 0; i <= 20; ++i) {
                const auto w = quartet_white_2x2(spec, grid_p(i));
                check_agreement(w, hardy_inequality(w).slack);
                const auto c = quartet_colored_2x2(spec, grid_p(i));
                check_agreement(c, hardy_inequality(c).slack);
            }
        }
    }

    SUBCASE("high-dimensional sextet at 3x3") {
        for (int k = 0; k <= 11; ++k) {
            const double p1 = 0.1 + 0.05 * k;
            const auto spec = SchmidtSpec::create(3, 3, {p1, std::sqrt(1.0 - p1 * p1)});
            for (int i = 0; i <= 20; ++i) {
                const auto q = sextet_white_highdim(spec, grid_p(i));
                check_agreement(q, hardy_inequality(q).slack);
            }
        }
    }

    SUBCASE("elsewhere the LP tracks the 0-outcome bookkeeping") {
        // With 0-sectors of rank d-2 the sextet's LP boundary sits at
        // 2 eps + z1 + z2 - a, which equals 4 eps - a only for qutrits.
        const auto spec = SchmidtSpec::create(4, 4, {0.8, 0.6});
        for (int i = 0; i <= 20; ++i) {
            const auto q = sextet_white_highdim(spec, grid_p(i));
            check_agreement(q, 2.0 * q.eps + q.y1_plus_x2_zero + q.x1_zero_y2_plus - q.a);
        }
    }
}
