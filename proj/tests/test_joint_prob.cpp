#include <doctest.h>

#include <cmath>
#include <string>

#include "hardy/error.hpp"
#include "hardy/joint_prob.hpp"
#include "test_support.hpp"

using namespace hardy;

namespace {

constexpr OutcomePair kYpYp{Setting::Y, Outcome::Plus, Setting::Y, Outcome::Plus};
constexpr OutcomePair kXpXp{Setting::X, Outcome::Plus, Setting::X, Outcome::Plus};

double max_deviation(const NoisyHardyState& state) {
    double worst = 0.0;
    for (const auto& e : compare_with_born(state)) {
        worst = std::max(worst, std::abs(e.closed_form - e.born));
    }
    return worst;
}

std::vector<Outcome> outcomes_for(int dim) {
    if (dim > 2) {
        return {Outcome::Plus, Outcome::Minus, Outcome::Zero};
    }
    return {Outcome::Plus, Outcome::Minus};
}

}  // namespace

TEST_CASE("describe") {
    CHECK(describe({Setting::Y, Outcome::Plus, Setting::X, Outcome::Minus}) == "P(Y1=+1, X2=-1)");
    CHECK(describe({Setting::X, Outcome::Zero, Setting::Y, Outcome::Plus}) == "P(X1=0, Y2=+1)");
}

TEST_CASE("Born rule on fixed examples") {
    const auto spec = SchmidtSpec::hardy_max();
    const auto pure = mix_white(spec, 1.0);
    CHECK(born_joint(pure, kYpYp) == doctest::Approx(0.090169943749474235).epsilon(1e-12));
    CHECK(born_joint(pure, kXpXp) == doctest::Approx(0.0).epsilon(1e-14));

    const auto noise = mix_white(spec, 0.0);
    for (Setting a : {Setting::X, Setting::Y}) {
        for (Setting b : {Setting::X, Setting::Y}) {
            for (Outcome oa : {Outcome::Plus, Outcome::Minus}) {
                for (Outcome ob : {Outcome::Plus, Outcome::Minus}) {
                    CHECK(born_joint(noise, {a, oa, b, ob}) == doctest::Approx(0.25).epsilon(1e-14));
                }
            }
        }
    }

    try {
        (void)born_joint(pure, {Setting::X, Outcome::Zero, Setting::X, Outcome::Plus});
        FAIL("expected InvalidOutcomePair");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidOutcomePair);
    }
}

TEST_CASE("white 2x2 quartet") {
    const auto spec = SchmidtSpec::hardy_max();
    const auto q = quartet_white_2x2(spec, 0.9);
    CHECK(q.eps == doctest::Approx(0.025).epsilon(1e-15));
    CHECK(q.a == doctest::Approx(0.9 * 0.090169943749474235).epsilon(1e-14));
    const auto entries = q.entries();
    REQUIRE(entries.size() == 4);
    CHECK(entries[3].first == kYpYp);
    CHECK(entries[3].second == doctest::Approx(q.a + q.eps));
    CHECK(max_deviation(mix_white(spec, 0.9)) < 1e-12);

    const auto big = SchmidtSpec::create(3, 3, {0.8, 0.6});
    try {
        (void)quartet_white_2x2(big, 0.5);
        FAIL("expected InvalidSpec");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidSpec);
    }
}

TEST_CASE("colored 2x2 quartet") {
    const auto spec = SchmidtSpec::create(2, 2, {0.9, std::sqrt(0.19)});
    const double x = spec.p1() * spec.p2();

    SUBCASE("p = 1 leaves only the Hardy probability") {
        const auto q = quartet_colored_2x2(spec, 1.0);
        CHECK(q.eps1 == 0.0);
        CHECK(q.eps2 == 0.0);
        CHECK(q.eps3 == doctest::Approx(hardy_probability_2x2(spec.p1(), spec.p2())).epsilon(1e-13));
    }

    SUBCASE("p = 0") {
        const auto q = quartet_colored_2x2(spec, 0.0);
        CHECK(q.eps1 == doctest::Approx(1.0 / (2.0 * (1.0 + 2.0 * x))).epsilon(1e-14));
        CHECK(max_deviation(mix_colored(TwoQubitSpec(spec), 0.0)) < 1e-12);
    }

    SUBCASE("the two eps2 entries coincide") {
        const auto q = quartet_colored_2x2(spec, 0.4);
        const auto entries = q.entries();
        CHECK(entries[1].second == entries[2].second);
        const auto state = mix_colored(TwoQubitSpec(spec), 0.4);
        CHECK(std::abs(born_joint(state, entries[1].first) - born_joint(state, entries[2].first)) < 1e-14);
    }
}

TEST_CASE("high-dimensional white sextet") {
    SUBCASE("reduces to the 2x2 quartet on qubits") {
        const auto spec = SchmidtSpec::create(2, 2, {0.9, std::sqrt(0.19)});
        const auto q = sextet_white_highdim(spec, 0.6);
        const auto r = quartet_white_2x2(spec, 0.6);
        CHECK(q.eps == doctest::Approx(r.eps).epsilon(1e-15));
        CHECK(q.a == doctest::Approx(r.a).epsilon(1e-13));
        CHECK(q.entries().size() == 4);
    }

    SUBCASE("pure state gives vanishing 0-outcome entries") {
        const auto spec = SchmidtSpec::create(3, 3, {0.8, 0.6});
        const auto q = sextet_white_highdim(spec, 1.0);
        CHECK(q.y1_plus_x2_zero == 0.0);
        CHECK(q.x1_zero_y2_plus == 0.0);
        CHECK(q.entries().size() == 6);
        CHECK(max_deviation(mix_white(spec, 1.0)) < 1e-12);
    }

    SUBCASE("maximally mixed 2x3") {
        const auto spec = SchmidtSpec::create(2, 3, {0.8, 0.6});
        const auto q = sextet_white_highdim(spec, 0.0);
        const auto entries = q.entries();
        REQUIRE(entries.size() == 5);
        for (const auto& [pair, value] : entries) {
            CHECK(value == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
        }
        CHECK(q.x1_zero_y2_plus == 0.0);
        CHECK(max_deviation(mix_white(spec, 0.0)) < 1e-12);
    }

    SUBCASE("0 sector of rank two") {
        const auto spec = SchmidtSpec::create(4, 4, {0.8, 0.6});
        const auto q = sextet_white_highdim(spec, 0.5);
        CHECK(q.y1_plus_x2_zero == doctest::Approx(2.0 * q.eps).epsilon(1e-15));
        CHECK(max_deviation(mix_white(spec, 0.5)) < 1e-12);
    }

    SUBCASE("three Schmidt weights") {
        const auto spec = SchmidtSpec::create(3, 4, {0.8, 0.5, std::sqrt(0.11)});
        for (double p : {0.0, 0.3, 0.77, 1.0}) {
            CHECK(max_deviation(mix_white(spec, p)) < 1e-12);
        }
    }
}

TEST_CASE("closed form dispatch") {
    const auto two = SchmidtSpec::create(2, 2, {0.9, std::sqrt(0.19)});
    const auto three = SchmidtSpec::create(3, 2, {0.9, std::sqrt(0.19)});
    CHECK(closed_form_quartet(mix_white(two, 0.5)).variant == QuartetVariant::White2x2);
    CHECK(closed_form_quartet(mix_colored(TwoQubitSpec(two), 0.5)).variant == QuartetVariant::Colored2x2);
    CHECK(closed_form_quartet(mix_white(three, 0.5)).variant == QuartetVariant::WhiteHighDim);
    CHECK(std::string(to_string(QuartetVariant::WhiteHighDim)) == "white_highdim");
}

TEST_CASE("closed form matches the Born rule on random states") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = test::random_spec();
        const double p = test::uniform(0.0, 1.0);
        CHECK(max_deviation(mix_white(spec, p)) < 1e-12);
        if (spec.is_two_qubit()) {
            CHECK(max_deviation(mix_colored(TwoQubitSpec(spec), p)) < 1e-12);
        }
    }
}

TEST_CASE("joint distributions are complete and non-signalling") {
    for (int trial = 0; trial < 60; ++trial) {
        const auto spec = test::random_spec();
        const NoiseKind kind =
            spec.is_two_qubit() && trial % 2 == 0 ? NoiseKind::Colored : NoiseKind::White;
        const auto state = mix(spec, kind, test::uniform(0.0, 1.0));
        const auto obs = observables_for(spec);
        const auto oa = outcomes_for(spec.d1());
        const auto ob = outcomes_for(spec.d2());

        for (Setting a : {Setting::X, Setting::Y}) {
            for (Setting b : {Setting::X, Setting::Y}) {
                double total = 0.0;
                for (Outcome x : oa) {
                    for (Outcome y : ob) {
                        const double v = born_joint(state, obs, {a, x, b, y});
                        CHECK(v >= 0.0);
                        CHECK(v <= 1.0);
                        total += v;
                    }
                }
                CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
            }
        }

        // Party-one marginal must not depend on party two's setting, and vice versa.
        for (Setting a : {Setting::X, Setting::Y}) {
            for (Outcome x : oa) {
                double m[2] = {0.0, 0.0};
                int k = 0;
                for (Setting b : {Setting::X, Setting::Y}) {
                    for (Outcome y : ob) {
                        m[k] += born_joint(state, obs, {a, x, b, y});
                    }
                    ++k;
                }
                CHECK(std::abs(m[0] - m[1]) < 1e-12);
            }
        }
        for (Setting b : {Setting::X, Setting::Y}) {
            for (Outcome y : ob) {
                double m[2] = {0.0, 0.0};
                int k = 0;
                for (Setting a : {Setting::X, Setting::Y}) {
                    for (Outcome x : oa) {
                        m[k] += born_joint(state, obs, {a, x, b, y});
                    }
                    ++k;
                }
                CHECK(std::abs(m[0] - m[1]) < 1e-12);
            }
        }
    }
}

TEST_CASE("Hardy probability") {
    CHECK(hardy_probability_2x2(0.9, std::sqrt(0.19)) > 0.0);
    const auto spec = SchmidtSpec::hardy_max();
    CHECK(hardy_probability_2x2(spec.p1(), spec.p2()) == doctest::Approx(0.090169943749474235).epsilon(1e-14));
    CHECK(hardy_probability(spec.p1(), spec.p2()) == doctest::Approx(0.090169943749474235).epsilon(1e-14));
    CHECK(hardy_probability(0.6, 0.6) == 0.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = test::random_two_qubit_spec();
        CHECK(hardy_probability_2x2(s.p1(), s.p2()) <= 0.0902);
    }
}
