#include "hardy/hardy_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardy/error.hpp"

namespace hardy {

namespace {

using namespace std::complex_literals;

[[noreturn]] void invalid_spec(const std::string& what) {
    throw Error(ErrorKind::InvalidSpec, what);
}

void require_positive_pair(double p1, double p2) {
    if (!(p1 > 0.0) || !(p2 > 0.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
        invalid_spec("weights must be strictly positive and finite");
    }
}

}  // namespace

SchmidtSpec SchmidtSpec::create(int d1, int d2, std::vector<double> weights) {
    if (d1 < 2 || d2 < 2) {
        invalid_spec("local dimensions must be >= 2");
    }
    if (weights.size() < 2) {
        invalid_spec("at least two Schmidt weights are required");
    }
    if (weights.size() > static_cast<std::size_t>(std::min(d1, d2))) {
        invalid_spec("more Schmidt weights than min(d1, d2)");
    }
    double sum_sq = 0.0;
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            invalid_spec("weights must be strictly positive and finite");
        }
        sum_sq += w * w;
    }
    if (std::abs(sum_sq - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "sum of squared weights is " << sum_sq << ", not 1";
        invalid_spec(msg.str());
    }
    if (std::abs(weights[0] - weights[1]) < kDegeneracyTol) {
        invalid_spec("p1 = p2 (maximally entangled pair is not a Hardy state)");
    }
    return SchmidtSpec(d1, d2, std::move(weights));
}

SchmidtSpec SchmidtSpec::two_qubit_from_p1_squared(double p1_squared) {
    if (!(p1_squared > 0.0 && p1_squared < 1.0)) {
        invalid_spec("p1^2 must lie strictly between 0 and 1");
    }
    return create(2, 2, {std::sqrt(p1_squared), std::sqrt(1.0 - p1_squared)});
}

double hardy_max_product() { return (3.0 - std::sqrt(5.0)) / 2.0; }

SchmidtSpec SchmidtSpec::hardy_max() {
    // (p1 + p2)^2 = 1 + 2x and (p1 - p2)^2 = 1 - 2x with x = p1 p2.
    const double x = hardy_max_product();
    const double sum = std::sqrt(1.0 + 2.0 * x);
    const double diff = std::sqrt(1.0 - 2.0 * x);
    const double p1 = 0.5 * (sum + diff);
    const double p2 = 0.5 * (sum - diff);
    return create(2, 2, {p1, p2});
}

int outcome_value(Outcome o) noexcept {
    switch (o) {
        case Outcome::Plus: return 1;
        case Outcome::Minus: return -1;
        case Outcome::Zero: return 0;
    }
    return 0;
}

const char* to_string(Setting s) noexcept { return s == Setting::X ? "X" : "Y"; }

const char* to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::Plus: return "+1";
        case Outcome::Minus: return "-1";
        case Outcome::Zero: return "0";
    }
    return "?";
}

Ket hardy_state(const SchmidtSpec& spec) {
    const auto d2 = static_cast<std::size_t>(spec.d2());
    std::vector<Complex> amps(static_cast<std::size_t>(spec.d1()) * d2);
    const auto w = spec.weights();
    for (std::size_t i = 0; i < w.size(); ++i) {
        amps[i * d2 + i] = w[i];
    }
    return Ket(std::move(amps)).normalized();
}

std::pair<Ket, Ket> x_basis(double p1, double p2) {
    require_positive_pair(p1, p2);
    const double n = 1.0 / std::sqrt(p1 + p2);
    const double a = std::sqrt(p2) * n;
    const double b = std::sqrt(p1) * n;
    return {Ket{a, -1i * b}, Ket{-1i * b, a}};
}

std::pair<Ket, Ket> y_basis(double p1, double p2) {
    require_positive_pair(p1, p2);
    const double n = 1.0 / std::sqrt((p1 * p1 + p2 * p2 - p1 * p2) * (p1 + p2));
    const double a = p2 * std::sqrt(p2) * n;
    const double b = p1 * std::sqrt(p1) * n;
    return {Ket{-1i * a, b}, Ket{b, -1i * a}};
}

bool Observable::has(Outcome o) const noexcept {
    return std::any_of(sectors_.begin(), sectors_.end(),
                       [o](const Sector& s) { return s.outcome == o; });
}

const ComplexMatrix& Observable::projector(Outcome o) const {
    for (const auto& s : sectors_) {
        if (s.outcome == o) {
            return s.projector;
        }
    }
    throw Error(ErrorKind::InvalidOutcomePair,
                std::string("observable ") + to_string(setting_) +
                    (party_ == Party::One ? "1" : "2") + " has no outcome " + to_string(o));
}

Observable observable(Party party, Setting setting, const SchmidtSpec& spec) {
    const auto dim = static_cast<std::size_t>(party == Party::One ? spec.d1() : spec.d2());
    const auto [plus, minus] =
        setting == Setting::X ? x_basis(spec.p1(), spec.p2()) : y_basis(spec.p1(), spec.p2());

    auto embed = [dim](const Ket& qubit) {
        std::vector<Complex> amps(dim);
        amps[0] = qubit[0];
        amps[1] = qubit[1];
        return projector(Ket(std::move(amps)));
    };

    std::vector<Observable::Sector> sectors;
    sectors.push_back({Outcome::Plus, embed(plus)});
    sectors.push_back({Outcome::Minus, embed(minus)});
    if (dim > 2) {
        ComplexMatrix zero(dim, dim);
        for (std::size_t i = 2; i < dim; ++i) {
            zero(i, i) = 1.0;
        }
        sectors.push_back({Outcome::Zero, std::move(zero)});
    }
    return Observable(party, setting, std::move(sectors));
}

const Observable& ObservableSet::get(Party party, Setting setting) const {
    if (party == Party::One) {
        return setting == Setting::X ? x1 : y1;
    }
    return setting == Setting::X ? x2 : y2;
}

ObservableSet observables_for(const SchmidtSpec& spec) {
    return ObservableSet{observable(Party::One, Setting::X, spec),
                         observable(Party::One, Setting::Y, spec),
                         observable(Party::Two, Setting::X, spec),
                         observable(Party::Two, Setting::Y, spec)};
}

}  // namespace hardy
