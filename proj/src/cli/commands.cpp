#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardy/cli.hpp"
#include "hardy/error.hpp"
#include "hardy/joint_prob.hpp"
#include "hardy/lhv.hpp"
#include "hardy/thresholds.hpp"

namespace hardy::cli {

namespace {

using nlohmann::ordered_json;

struct CommonFlags {
    WeightFlags weights;
    std::string noise = "white";
    double p = 1.0;
    std::string format = "text";
    std::optional<int> digits;
};

void add_weight_flags(CLI::App& cmd, WeightFlags& w) {
    cmd.add_option("--d1", w.d1, "local dimension of party 1")->capture_default_str();
    cmd.add_option("--d2", w.d2, "local dimension of party 2")->capture_default_str();
    cmd.add_option("--p1sq", w.p1sq, "squared first Schmidt weight");
    cmd.add_option("--p2sq", w.p2sq, "squared second Schmidt weight (default 1 - p1sq)");
    cmd.add_option("--weights", w.weights, "raw Schmidt weights (renormalized)")->delimiter(',');
    cmd.add_flag("--hardy-max", w.hardy_max, "preset p1 p2 = (3 - sqrt 5)/2, p1^2 + p2^2 = 1");
}

void add_format_flags(CLI::App& cmd, CommonFlags& f, const char* default_format) {
    f.format = default_format;
    cmd.add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd.add_option("--digits", f.digits, "fixed decimals for printed numbers")
        ->check(CLI::Range(0, 17));
}

void add_noise_flags(CLI::App& cmd, CommonFlags& f) {
    cmd.add_option("--noise", f.noise, "noise family")
        ->check(CLI::IsMember({"white", "colored"}))
        ->capture_default_str();
    cmd.add_option("--p", f.p, "mixing parameter in [0, 1]")->capture_default_str();
}

Format parse_format(const std::string& s) {
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "json") {
        return Format::Json;
    }
    return Format::Text;
}

NoiseKind parse_noise(const std::string& s) {
    return s == "colored" ? NoiseKind::Colored : NoiseKind::White;
}

ordered_json spec_json(const SchmidtSpec& spec) {
    return {{"d1", spec.d1()},
            {"d2", spec.d2()},
            {"weights", std::vector<double>(spec.weights().begin(), spec.weights().end())}};
}

std::string num(double v, const std::optional<int>& digits) { return format_number(v, digits); }

// ---------------------------------------------------------------- probs

int cmd_probs(const CommonFlags& f, std::ostream& out, std::ostream& err) {
    std::string warning;
    const auto spec = spec_from_flags(f.weights, &warning);
    if (!warning.empty()) {
        err << "warning: " << warning << '\n';
    }
    const auto state = mix(spec, parse_noise(f.noise), f.p);
    const auto quartet = closed_form_quartet(state);
    const auto rows = compare_with_born(state);

    double worst = 0.0;
    for (const auto& r : rows) {
        worst = std::max(worst, std::abs(r.closed_form - r.born));
    }

    switch (parse_format(f.format)) {
        case Format::Json: {
            ordered_json doc;
            doc["schema"] = kSchemaVersion;
            doc["request"] = {{"command", "probs"}, {"spec", spec_json(spec)},
                              {"noise", f.noise}, {"p", f.p}};
            doc["family"] = to_string(quartet.variant);
            doc["rows"] = ordered_json::array();
            for (const auto& r : rows) {
                doc["rows"].push_back({{"entry", describe(r.pair)},
                                       {"closed_form", r.closed_form},
                                       {"born_rule", r.born},
                                       {"difference", r.closed_form - r.born}});
            }
            doc["max_abs_difference"] = worst;
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "entry,closed_form,born_rule,difference\n";
            for (const auto& r : rows) {
                out << '"' << describe(r.pair) << "\"," << num(r.closed_form, f.digits) << ','
                    << num(r.born, f.digits) << ',' << num(r.closed_form - r.born, f.digits) << '\n';
            }
            break;
        case Format::Text:
            out << "family: " << to_string(quartet.variant) << "  d1=" << spec.d1()
                << " d2=" << spec.d2() << "  noise=" << f.noise << "  p=" << num(f.p, std::nullopt)
                << '\n';
            if (quartet.variant == QuartetVariant::Colored2x2) {
                out << "eps1 = " << num(quartet.eps1, f.digits) << "  eps2 = " << num(quartet.eps2, f.digits)
                    << "  eps3 = " << num(quartet.eps3, f.digits) << '\n';
            } else {
                out << "eps = " << num(quartet.eps, f.digits) << "  a = " << num(quartet.a, f.digits)
                    << '\n';
            }
            out << std::left << std::setw(20) << "entry" << std::setw(26) << "closed_form"
                << std::setw(26) << "born_rule" << "difference\n";
            for (const auto& r : rows) {
                out << std::setw(20) << describe(r.pair) << std::setw(26) << num(r.closed_form, f.digits)
                    << std::setw(26) << num(r.born, f.digits) << num(r.closed_form - r.born, f.digits)
                    << '\n';
            }
            break;
    }

    if (worst > kClosedFormTol) {
        std::ostringstream msg;
        msg.precision(3);
        msg << "closed form and Born rule disagree by " << std::scientific << worst;
        throw Error(ErrorKind::InternalConsistency, msg.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------- thresholds

int cmd_thresholds(const CommonFlags& f, std::ostream& out, std::ostream& err) {
    std::string warning;
    const auto spec = spec_from_flags(f.weights, &warning);
    if (!warning.empty()) {
        err << "warning: " << warning << '\n';
    }
    const auto r = report(spec);
    constexpr const char* kNeeds2x2 = "n/a (requires 2x2)";

    auto opt_json = [](const std::optional<double>& v) -> ordered_json {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };

    switch (parse_format(f.format)) {
        case Format::Json: {
            ordered_json doc;
            doc["schema"] = kSchemaVersion;
            doc["request"] = {{"command", "thresholds"}, {"spec", spec_json(spec)}};
            doc["thresholds"] = {{"t_white", opt_json(r.t_white)},
                                 {"t_colored", opt_json(r.t_colored)},
                                 {"t_chsh", opt_json(r.t_chsh)},
                                 {"t_highdim", r.t_highdim},
                                 {"t_tracedist", r.t_tracedist},
                                 {"eta_bound", r.eta_bound}};
            doc["orderings"] = ordered_json::array();
            for (const auto& o : r.orderings) {
                doc["orderings"].push_back({{"relation", o.relation}, {"lhs", o.lhs}, {"rhs", o.rhs}});
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            out << "name,value\n";
            auto row = [&](const char* name, const std::optional<double>& v) {
                out << name << ',' << (v ? num(*v, f.digits) : std::string()) << '\n';
            };
            row("t_white", r.t_white);
            row("t_colored", r.t_colored);
            row("t_chsh", r.t_chsh);
            row("t_highdim", r.t_highdim);
            row("t_tracedist", r.t_tracedist);
            row("eta_bound", r.eta_bound);
            break;
        }
        case Format::Text: {
            auto row = [&](const char* name, const std::optional<double>& v) {
                out << std::left << std::setw(14) << name << (v ? num(*v, f.digits) : kNeeds2x2) << '\n';
            };
            out << "d1=" << spec.d1() << " d2=" << spec.d2() << " p1=" << num(spec.p1(), std::nullopt)
                << " p2=" << num(spec.p2(), std::nullopt) << '\n';
            row("t_white", r.t_white);
            row("t_colored", r.t_colored);
            row("t_chsh", r.t_chsh);
            row("t_highdim", r.t_highdim);
            row("t_tracedist", r.t_tracedist);
            row("eta_bound", r.eta_bound);
            out << "orderings:\n";
            for (const auto& o : r.orderings) {
                out << "  " << o.relation << "  (" << num(o.lhs, f.digits) << " < " << num(o.rhs, f.digits)
                    << ")\n";
            }
            break;
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------ lhv-check

int cmd_lhv_check(const CommonFlags& f, bool full_behavior, std::ostream& out, std::ostream& err) {
    std::string warning;
    const auto spec = spec_from_flags(f.weights, &warning);
    if (!warning.empty()) {
        err << "warning: " << warning << '\n';
    }
    const auto state = mix(spec, parse_noise(f.noise), f.p);
    const auto quartet = closed_form_quartet(state);
    const auto ineq = hardy_inequality(quartet);
    const auto slack_verdict = classify_slack(ineq.slack);
    const auto o1 = outcome_set_for_dim(spec.d1());
    const auto o2 = outcome_set_for_dim(spec.d2());
    const auto lp = lhv_feasible(constraints_from(quartet), o1, o2);

    std::optional<FeasibilityResult> full;
    if (full_behavior) {
        full = lhv_feasible(build_full_behavior(state), o1, o2);
    }

    const bool boundary = slack_verdict == SlackVerdict::Boundary;
    const bool agree = boundary || (slack_verdict == SlackVerdict::Violated) == !lp.feasible;
    const char* lp_word = lp.feasible ? "feasible" : "infeasible";
    std::string verdict = lp_word;
    if (slack_verdict == SlackVerdict::Violated) {
        verdict += ", slack < 0";
    } else if (slack_verdict == SlackVerdict::Satisfied) {
        verdict += ", slack > 0";
    } else {
        verdict += ", slack at boundary";
    }

    if (parse_format(f.format) == Format::Json) {
        ordered_json doc;
        doc["schema"] = kSchemaVersion;
        doc["request"] = {{"command", "lhv-check"}, {"spec", spec_json(spec)},
                          {"noise", f.noise}, {"p", f.p}};
        doc["family"] = to_string(quartet.variant);
        doc["slack"] = ineq.slack;
        doc["inequality"] = to_string(slack_verdict);
        doc["lp_feasible"] = lp.feasible;
        doc["lp_max_violation"] = lp.max_violation;
        doc["agreement"] = boundary ? ordered_json("boundary") : ordered_json(agree);
        if (full) {
            doc["full_behavior_lp_feasible"] = full->feasible;
        }
        doc["verdict"] = verdict;
        out << doc.dump(2) << '\n';
    } else {
        out << "family: " << to_string(quartet.variant) << "  noise=" << f.noise
            << "  p=" << num(f.p, std::nullopt) << '\n';
        out << "slack: " << num(ineq.slack, f.digits) << " (" << to_string(slack_verdict) << ")\n";
        out << "lp: " << lp_word << " (max_violation " << num(lp.max_violation, f.digits) << ")\n";
        if (full) {
            out << "full_behavior_lp: " << (full->feasible ? "feasible" : "infeasible") << '\n';
        }
        out << "verdict: " << verdict << '\n';
        out << "agreement: " << (boundary ? "boundary" : (agree ? "yes" : "no")) << '\n';
    }
    if (!agree) {
        throw Error(ErrorKind::InternalConsistency,
                    "LP feasibility disagrees with the sign of the inequality slack");
    }
    return kExitOk;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const CommonFlags& f, const std::optional<double>& p2, const std::string& grid,
              const std::string& output, std::ostream& out) {
    SweepRequest req;
    req.d1 = f.weights.d1;
    req.d2 = f.weights.d2;
    if (p2 && f.weights.p2sq) {
        throw Error(ErrorKind::InvalidArgument, "--p2 and --p2sq are mutually exclusive");
    }
    if (p2) {
        req.p2 = *p2;
    } else if (f.weights.p2sq) {
        req.p2 = std::sqrt(*f.weights.p2sq);
    } else {
        throw Error(ErrorKind::InvalidArgument, "sweep needs --p2 or --p2sq");
    }
    req.p1_grid = parse_grid(grid);
    const auto result = run_sweep(req);
    const std::string text = parse_format(f.format) == Format::Json ? render_sweep_json(result)
                                                                    : render_sweep_csv(result, f.digits);
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            throw Error(ErrorKind::InvalidArgument, "cannot open output file '" + output + "'");
        }
        file << text;
    }
    return kExitOk;
}

std::string single_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hardy-state nonlocality under white and colored noise"};
    app.name("hardy");
    app.require_subcommand(1);

    CommonFlags probs_f, thr_f, lhv_f, sweep_f;
    bool full_behavior = false;
    std::optional<double> sweep_p2;
    std::string sweep_grid = "0:1:100";
    std::string sweep_output;

    auto* probs = app.add_subcommand("probs", "closed-form vs Born-rule joint probabilities");
    add_weight_flags(*probs, probs_f.weights);
    add_noise_flags(*probs, probs_f);
    add_format_flags(*probs, probs_f, "text");

    auto* thr = app.add_subcommand("thresholds", "all noise thresholds and their orderings");
    add_weight_flags(*thr, thr_f.weights);
    add_format_flags(*thr, thr_f, "text");

    auto* lhv = app.add_subcommand("lhv-check", "inequality slack vs LP feasibility");
    add_weight_flags(*lhv, lhv_f.weights);
    add_noise_flags(*lhv, lhv_f);
    add_format_flags(*lhv, lhv_f, "text");
    lhv->add_flag("--full-behavior", full_behavior, "also test the full behavior table");

    auto* sweep = app.add_subcommand("sweep", "1 - p curves versus p1 (CSV or JSON)");
    sweep->add_option("--d1", sweep_f.weights.d1, "local dimension of party 1")->capture_default_str();
    sweep->add_option("--d2", sweep_f.weights.d2, "local dimension of party 2")->capture_default_str();
    sweep->add_option("--p2", sweep_p2, "fixed second Schmidt weight");
    sweep->add_option("--p2sq", sweep_f.weights.p2sq, "fixed squared second Schmidt weight");
    sweep->add_option("--grid", sweep_grid, "p1 grid start:stop:steps")->capture_default_str();
    sweep->add_option("-o,--output", sweep_output, "write to file instead of stdout");
    sweep_f.weights.d2 = 3;
    add_format_flags(*sweep, sweep_f, "csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: invalid_argument: " << single_line(e.what()) << '\n';
        return kExitInvalidInput;
    }

    try {
        if (probs->parsed()) {
            return cmd_probs(probs_f, out, err);
        }
        if (thr->parsed()) {
            return cmd_thresholds(thr_f, out, err);
        }
        if (lhv->parsed()) {
            return cmd_lhv_check(lhv_f, full_behavior, out, err);
        }
        return cmd_sweep(sweep_f, sweep_p2, sweep_grid, sweep_output, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << single_line(e.what()) << '\n';
        return e.kind() == ErrorKind::InternalConsistency ? kExitInternal : kExitInvalidInput;
    }
}

}  // namespace hardy::cli
