#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "hardy/cli.hpp"
#include "hardy/error.hpp"
#include "hardy/thresholds.hpp"

namespace hardy::cli {

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace

SchmidtSpec spec_from_flags(const WeightFlags& flags, std::string* warning) {
    const int sources = static_cast<int>(flags.hardy_max) + static_cast<int>(flags.p1sq.has_value()) +
                        static_cast<int>(!flags.weights.empty());
    if (sources == 0) {
        invalid("no weights given: use --p1sq, --weights or --hardy-max");
    }
    if (sources > 1) {
        invalid("--p1sq, --weights and --hardy-max are mutually exclusive");
    }
    if (flags.p2sq && !flags.p1sq) {
        invalid("--p2sq requires --p1sq");
    }

    if (flags.hardy_max) {
        const auto preset = SchmidtSpec::hardy_max();
        return SchmidtSpec::create(flags.d1, flags.d2, {preset.p1(), preset.p2()});
    }
    if (flags.p1sq) {
        const double p1sq = *flags.p1sq;
        const double p2sq = flags.p2sq.value_or(1.0 - p1sq);
        if (!(p1sq > 0.0) || !(p2sq > 0.0)) {
            throw Error(ErrorKind::InvalidSpec, "squared weights must be strictly positive");
        }
        return SchmidtSpec::create(flags.d1, flags.d2, {std::sqrt(p1sq), std::sqrt(p2sq)});
    }

    double sum_sq = 0.0;
    for (double w : flags.weights) {
        sum_sq += w * w;
    }
    std::vector<double> weights = flags.weights;
    if (std::abs(sum_sq - 1.0) > 1e-12 && sum_sq > 0.0 && std::isfinite(sum_sq)) {
        const double scale = 1.0 / std::sqrt(sum_sq);
        for (double& w : weights) {
            w *= scale;
        }
        if (warning != nullptr) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "weights renormalized (sum of squares was " << sum_sq << ")";
            *warning = msg.str();
        }
    }
    return SchmidtSpec::create(flags.d1, flags.d2, std::move(weights));
}

Grid parse_grid(const std::string& text) {
    Grid g;
    char sep1 = 0, sep2 = 0;
    std::istringstream in(text);
    if (!(in >> g.start >> sep1 >> g.stop >> sep2 >> g.steps) || sep1 != ':' || sep2 != ':') {
        invalid("grid must look like start:stop:steps, got '" + text + "'");
    }
    in >> std::ws;
    if (!in.eof()) {
        invalid("trailing characters in grid '" + text + "'");
    }
    return g;
}

std::string format_number(double value, std::optional<int> digits) {
    char buf[64];
    if (digits) {
        std::snprintf(buf, sizeof buf, "%.*f", *digits, value);
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", value);
    }
    return buf;
}

SweepResult run_sweep(const SweepRequest& request) {
    const Grid& g = request.p1_grid;
    if (g.steps < 1 || !std::isfinite(g.start) || !std::isfinite(g.stop) || g.start > g.stop) {
        invalid("empty grid: need finite start <= stop and steps >= 1");
    }
    if (request.d1 < 2 || request.d2 < 2) {
        invalid("local dimensions must be >= 2");
    }
    if (!(request.p2 > 0.0 && request.p2 <= 1.0)) {
        invalid("p2 must lie in (0, 1]");
    }

    const int dims = request.d1 * request.d2;
    const double p2 = request.p2;
    SweepResult result{request, {}, {}};
    for (int i = 0; i <= g.steps; ++i) {
        const double p1 = i == g.steps ? g.stop
                                       : g.start + (g.stop - g.start) * static_cast<double>(i) /
                                                       static_cast<double>(g.steps);
        if (!(p1 > 0.0)) {
            result.skipped.push_back({p1, "p1 <= 0"});
        } else if (p1 * p1 + p2 * p2 > 1.0 + 1e-12) {
            result.skipped.push_back({p1, "p1^2 + p2^2 > 1"});
        } else if (std::abs(p1 - p2) < SchmidtSpec::kDegeneracyTol) {
            result.skipped.push_back({p1, "p1 = p2"});
        } else {
            result.rows.push_back({p1, 1.0 - formula::white_highdim_bound(p1, p2, dims),
                                   1.0 - formula::tracedist_p_equivalent(p1, p2, dims)});
        }
    }
    return result;
}

std::string render_sweep_csv(const SweepResult& result, std::optional<int> digits) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const auto& row : result.rows) {
        out += format_number(row.p1, digits) + ',' + format_number(row.upper_one_minus_p, digits) +
               ',' + format_number(row.lower_one_minus_p, digits) + '\n';
    }
    for (const auto& s : result.skipped) {
        out += "# skipped p1=" + format_number(s.p1, digits) + " reason=" + s.reason + '\n';
    }
    return out;
}

std::string render_sweep_json(const SweepResult& result) {
    using nlohmann::ordered_json;
    const auto& r = result.request;
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["request"] = {{"command", "sweep"},
                      {"d1", r.d1},
                      {"d2", r.d2},
                      {"dim_product", r.d1 * r.d2},
                      {"p2", r.p2},
                      {"grid", {{"start", r.p1_grid.start}, {"stop", r.p1_grid.stop}, {"steps", r.p1_grid.steps}}}};
    doc["rows"] = ordered_json::array();
    for (const auto& row : result.rows) {
        doc["rows"].push_back({{"p1", row.p1},
                               {"upper_one_minus_p", row.upper_one_minus_p},
                               {"lower_one_minus_p", row.lower_one_minus_p}});
    }
    doc["skipped"] = ordered_json::array();
    for (const auto& s : result.skipped) {
        doc["skipped"].push_back({{"p1", s.p1}, {"reason", s.reason}});
    }
    return doc.dump(2) + '\n';
}

}  // namespace hardy::cli
