#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hardy/linalg.hpp"
#include "hardy/matrix.hpp"

namespace hardy {

/// Schmidt weights p_1..p_r of a Hardy state on C^{d1} (x) C^{d2}.
/// Invariants (checked by create): d1, d2 >= 2; 2 <= r <= min(d1, d2);
/// every weight positive and finite; sum p_i^2 = 1 within 1e-12;
/// |p_1 - p_2| >= 1e-9.
class SchmidtSpec {
public:
    static constexpr double kDegeneracyTol = 1e-9;

    static SchmidtSpec create(int d1, int d2, std::vector<double> weights);
    /// Two weights from p1^2; p2^2 = 1 - p1^2 exactly up to rounding.
    static SchmidtSpec two_qubit_from_p1_squared(double p1_squared);
    /// p1 p2 = (3 - sqrt 5)/2 with p1^2 + p2^2 = 1 and p1 > p2: the weights
    /// that maximise the pure-state Hardy probability.
    static SchmidtSpec hardy_max();

    [[nodiscard]] int d1() const noexcept { return d1_; }
    [[nodiscard]] int d2() const noexcept { return d2_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    [[nodiscard]] double p1() const noexcept { return weights_[0]; }
    [[nodiscard]] double p2() const noexcept { return weights_[1]; }
    [[nodiscard]] bool is_two_qubit() const noexcept { return d1_ == 2 && d2_ == 2; }
    [[nodiscard]] int dim_product() const noexcept { return d1_ * d2_; }

private:
    SchmidtSpec(int d1, int d2, std::vector<double> weights)
        : d1_(d1), d2_(d2), weights_(std::move(weights)) {}

    int d1_;
    int d2_;
    std::vector<double> weights_;
};

/// p1 p2 for the weight-maximising preset.
double hardy_max_product();

enum class Party { One = 1, Two = 2 };
enum class Setting { X, Y };
enum class Outcome { Plus, Minus, Zero };

[[nodiscard]] int outcome_value(Outcome o) noexcept;
[[nodiscard]] const char* to_string(Setting s) noexcept;
[[nodiscard]] const char* to_string(Outcome o) noexcept;

/// sum_i p_i |i-1>|i-1>
Ket hardy_state(const SchmidtSpec& spec);

/// (|x+>, |x->) with the exact phases of the defining matrix:
/// |x+> = (sqrt(p2)|0> - i sqrt(p1)|1>) / sqrt(p1+p2),
/// |x-> = (-i sqrt(p1)|0> + sqrt(p2)|1>) / sqrt(p1+p2).
std::pair<Ket, Ket> x_basis(double p1, double p2);

/// (|y+>, |y->):
/// |y+> = (-i p2 sqrt(p2)|0> + p1 sqrt(p1)|1>) / N,
/// |y-> = (p1 sqrt(p1)|0> - i p2 sqrt(p2)|1>) / N,
/// N = sqrt((p1^2 + p2^2 - p1 p2)(p1 + p2)).
std::pair<Ket, Ket> y_basis(double p1, double p2);

class Observable {
public:
    struct Sector {
        Outcome outcome;
        ComplexMatrix projector;
    };

    Observable(Party party, Setting setting, std::vector<Sector> sectors)
        : party_(party), setting_(setting), sectors_(std::move(sectors)) {}

    [[nodiscard]] Party party() const noexcept { return party_; }
    [[nodiscard]] Setting setting() const noexcept { return setting_; }
    [[nodiscard]] std::span<const Sector> sectors() const noexcept { return sectors_; }
    [[nodiscard]] bool has(Outcome o) const noexcept;
    /// Throws InvalidOutcomePair if the eigenvalue is absent.
    [[nodiscard]] const ComplexMatrix& projector(Outcome o) const;

private:
    Party party_;
    Setting setting_;
    std::vector<Sector> sectors_;
};

/// +1/-1 projectors live in span{|0>,|1>} of the party's space; when the
/// local dimension exceeds 2 the 0 eigenvalue projects onto span{|i>: i>=2}.
Observable observable(Party party, Setting setting, const SchmidtSpec& spec);

/// The four local observables X1, Y1, X2, Y2 for one spec.
struct ObservableSet {
    Observable x1, y1, x2, y2;

    [[nodiscard]] const Observable& get(Party party, Setting setting) const;
};

ObservableSet observables_for(const SchmidtSpec& spec);

}  // namespace hardy
