#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hardy/hardy_state.hpp"
#include "hardy/noise.hpp"

namespace hardy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternal = 3;

inline constexpr int kSchemaVersion = 1;

/// Runs one command line (without the program name). Output goes to `out`;
/// failures write exactly one "error: <kind>: <reason>" line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Format { Text, Csv, Json };

struct WeightFlags {
    int d1 = 2;
    int d2 = 2;
    std::optional<double> p1sq;
    std::optional<double> p2sq;
    std::vector<double> weights;
    bool hardy_max = false;
};

/// Builds the spec the flags describe. Raw --weights are renormalised;
/// `warning` receives a message when that happens.
SchmidtSpec spec_from_flags(const WeightFlags& flags, std::string* warning = nullptr);

struct Grid {
    double start = 0.0;
    double stop = 1.0;
    int steps = 100;  // intervals; steps + 1 points, endpoints included
};

/// "start:stop:steps"
Grid parse_grid(const std::string& text);

struct SweepRequest {
    int d1 = 2;
    int d2 = 3;
    double p2 = 0.0;
    Grid p1_grid;
};

struct SweepRow {
    double p1;
    double upper_one_minus_p;  // 1 - (exact white-noise bound on p)
    double lower_one_minus_p;  // trace-distance criterion, as 1 - p
};

struct SkippedPoint {
    double p1;
    std::string reason;
};

struct SweepResult {
    SweepRequest request;
    std::vector<SweepRow> rows;
    std::vector<SkippedPoint> skipped;
};

/// Grid points violating p1 > 0, p1^2 + p2^2 <= 1 or p1 != p2 are skipped
/// and recorded. Throws InvalidArgument on an empty grid.
SweepResult run_sweep(const SweepRequest& request);

inline constexpr const char* kSweepCsvHeader = "p1,upper_one_minus_p,lower_one_minus_p";

std::string render_sweep_csv(const SweepResult& result, std::optional<int> digits);
/// JSON numbers always carry full double precision.
std::string render_sweep_json(const SweepResult& result);

/// %.17g, or fixed with `digits` decimals.
std::string format_number(double value, std::optional<int> digits);

}  // namespace hardy::cli
