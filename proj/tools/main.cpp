// nullflat: command-line surface for null curve generation, inversion,
// round-trip checking, endpoint planning, and the verification suites.
//
// Exit codes: 0 success, 1 validation/user error, 2 mathematical degeneracy
// (reported as a JSON object {code, message, tau} on standard error).

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nullflat/curve_spec.hpp"
#include "nullflat/errors.hpp"
#include "nullflat/flat_maps.hpp"
#include "nullflat/jet.hpp"
#include "nullflat/json_out.hpp"
#include "nullflat/planner.hpp"
#include "nullflat/sampling.hpp"
#include "nullflat/suites.hpp"

namespace {

using namespace nullflat;

// ---------------------------------------------------------------------------
// environment

int env_jet_order() {
    const char* raw = std::getenv("NULLFLAT_JET_ORDER");
    if (raw == nullptr || *raw == '\0') return kDefaultJetOrder;
    const std::string text(raw);
    int value = 0;
    try {
        std::size_t pos = 0;
        value = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("NULLFLAT_JET_ORDER: expected an integer, got '" + text + "'");
    }
    if (value < 1 || value > 12)
        throw std::invalid_argument("NULLFLAT_JET_ORDER: must be between 1 and 12, got " + text);
    return value;
}

double env_eps_den() {
    const char* raw = std::getenv("NULLFLAT_EPS_DEN");
    if (raw == nullptr || *raw == '\0') return kDefaultEpsDen;
    const std::string text(raw);
    double value = 0.0;
    try {
        std::size_t pos = 0;
        value = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("NULLFLAT_EPS_DEN: expected a number, got '" + text + "'");
    }
    if (!std::isfinite(value) || value <= 0.0)
        throw std::invalid_argument("NULLFLAT_EPS_DEN: must be a positive finite number, got " + text);
    return value;
}

// ---------------------------------------------------------------------------
// small parsers for comma-separated flag values

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) parts.push_back(token);
    return parts;
}

double parse_double_token(const std::string& token, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": not a number: '" + token + "'");
    }
}

int parse_int_token(const std::string& token, const std::string& context) {
    try {
        std::size_t pos = 0;
        const int value = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": not an integer: '" + token + "'");
    }
}

GridSpec parse_grid(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 3)
        throw std::invalid_argument("--grid expects t0,t1,count, got '" + text + "'");
    GridSpec grid;
    grid.t0 = parse_double_token(parts[0], "--grid");
    grid.t1 = parse_double_token(parts[1], "--grid");
    grid.count = parse_int_token(parts[2], "--grid");
    return grid;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& context) {
    std::vector<double> values;
    for (const auto& token : split_commas(text))
        values.push_back(parse_double_token(token, context));
    if (values.empty()) throw std::invalid_argument(context + ": empty list");
    return values;
}

// ---------------------------------------------------------------------------
// output

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

// DegeneracyError::what() is "<code>: <message>"; the error object carries
// the two halves separately.
std::string degeneracy_json(const DegeneracyError& e) {
    std::string message = e.what();
    const std::string prefix = std::string(e.code()) + ": ";
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    JsonOut json;
    json.begin_object();
    json.key("code").value(e.code());
    json.key("message").value(message);
    if (e.tau())
        json.key("tau").value(*e.tau());
    else
        json.key("tau").null_value();
    json.end_object();
    return json.str();
}

// ---------------------------------------------------------------------------
// flat input assembly shared by generate and roundtrip

struct CurveFlags {
    std::string space;
    std::string f_text;
    std::string g_text;
    std::vector<std::string> extras_text;
    std::string sigma_text;
    std::string grid_text;
    std::string format = "json";
    std::string out_path;
};

FlatInput make_flat_input(const CurveFlags& flags) {
    const SpaceTag tag = space_from_name(flags.space);
    std::optional<CurveSpec> sigma;
    if (!flags.sigma_text.empty()) sigma = CurveSpec::parse(flags.sigma_text);

    if (tag == SpaceTag::R22) {
        if (flags.g_text.empty())
            throw std::invalid_argument("--space r22 requires --g");
        if (!flags.extras_text.empty())
            throw std::invalid_argument("--extras applies to r2n, not r22");
        FlatInputR22 input;
        input.f = CurveSpec::parse(flags.f_text);
        input.g = CurveSpec::parse(flags.g_text);
        input.sigma = sigma;
        return input;
    }

    if (!flags.g_text.empty())
        throw std::invalid_argument("--g applies to r22 only");
    FlatInputR21 input;
    input.f = CurveSpec::parse(flags.f_text);
    input.sigma = sigma;
    if (tag == SpaceTag::R21) {
        if (!flags.extras_text.empty())
            throw std::invalid_argument("--extras applies to r2n, not r21");
    } else {
        if (flags.extras_text.empty())
            throw std::invalid_argument("--space r2n requires at least one --extras");
        for (const auto& text : flags.extras_text)
            input.extras.push_back(CurveSpec::parse(text));
    }
    return input;
}

// ---------------------------------------------------------------------------
// subcommands

int run_generate(const CurveFlags& flags) {
    const FlatInput input = make_flat_input(flags);
    const GridSpec grid = parse_grid(flags.grid_text);
    const SampledCurve curve = generate(input, grid, env_jet_order());
    const std::string text = flags.format == "csv" ? to_csv(curve) : to_json(curve);
    write_output(text, flags.out_path);
    return 0;
}

struct InvertFlags {
    std::string curve_path;
    int index = -1;  // -1: every sample
    std::string out_path;
};

int run_invert(const InvertFlags& flags) {
    const SampledCurve curve = load_curve(flags.curve_path);
    const double eps = env_eps_den();

    std::vector<int> indices;
    if (flags.index >= 0) {
        if (flags.index >= static_cast<int>(curve.samples.size()))
            throw std::invalid_argument("--index " + std::to_string(flags.index) +
                                        " out of range (curve has " +
                                        std::to_string(curve.samples.size()) + " samples)");
        indices.push_back(flags.index);
    } else {
        for (int i = 0; i < static_cast<int>(curve.samples.size()); ++i) indices.push_back(i);
    }

    JsonOut json;
    json.begin_object();
    json.key("space").value(space_name(curve.space));
    json.key("n").value(curve.n);
    json.key("eps_den").value(eps);
    json.key("results").begin_array();
    for (int i : indices) {
        const VecJet germ = curve.germ_at(i);
        InversionResult result;
        try {
            if (curve.space == SpaceTag::R22)
                result = invert_r22(germ, eps);
            else
                result = invert_r21(germ, germ_delta(germ), eps);
        } catch (const DegeneracyError& e) {
            if (e.tau()) throw;
            throw e.at_tau(curve.samples[i].tau);
        }
        json.begin_object();
        json.key("index").value(i);
        json.key("tau").value(curve.samples[i].tau);
        json.key("tau_hat").value(result.tau_hat);
        json.key("f_hat").value(result.f_hat);
        if (result.g_hat) json.key("g_hat").value(*result.g_hat);
        json.key("denominators").number_array(result.denominators);
        json.end_object();
    }
    json.end_array();
    json.end_object();
    write_output(json.str(), flags.out_path);
    return 0;
}

int run_roundtrip(const CurveFlags& flags) {
    const FlatInput input = make_flat_input(flags);
    const GridSpec grid = parse_grid(flags.grid_text);
    const int order = env_jet_order();
    const double eps = env_eps_den();
    const SampledCurve curve = generate(input, grid, order);

    const bool is_r22 = curve.space == SpaceTag::R22;
    const CurveSpec* f_spec = nullptr;
    const CurveSpec* g_spec = nullptr;
    const std::optional<CurveSpec>* sigma = nullptr;
    if (const auto* r21 = std::get_if<FlatInputR21>(&input)) {
        f_spec = &r21->f;
        sigma = &r21->sigma;
    } else {
        const auto& r22 = std::get<FlatInputR22>(input);
        f_spec = &r22.f;
        g_spec = &r22.g;
        sigma = &r22.sigma;
    }

    int checked = 0;
    int skipped = 0;
    double max_tau_err = 0.0;
    double max_f_err = 0.0;
    double max_g_err = 0.0;
    const double tolerance = 1e-9;

    for (int i = 0; i < static_cast<int>(curve.samples.size()); ++i) {
        const CurveSample& sample = curve.samples[i];
        double vel2 = 0.0;
        for (double d : sample.xdot) vel2 += d * d;
        // Margin above which the inversion divisor is trusted; below it the
        // sample is skipped as near-degenerate rather than failed.
        const double margin = std::max(eps, 1e-5 * std::max(1.0, std::sqrt(vel2)));

        const VecJet germ = curve.germ_at(i);
        InversionResult result;
        try {
            if (is_r22)
                result = invert_r22(germ, margin);
            else
                result = invert_r21(germ, germ_delta(germ), margin);
        } catch (const DegeneracyError&) {
            ++skipped;
            continue;
        }
        ++checked;

        const double s = *sigma ? (*sigma)->eval(sample.tau) : sample.tau;
        max_tau_err = std::max(max_tau_err, std::abs(result.tau_hat - s));
        max_f_err = std::max(max_f_err, std::abs(result.f_hat - f_spec->eval(s)));
        if (is_r22 && result.g_hat)
            max_g_err = std::max(max_g_err, std::abs(*result.g_hat - g_spec->eval(s)));
    }

    const bool passed = checked > 0 && max_tau_err <= tolerance &&
                        max_f_err <= tolerance && (!is_r22 || max_g_err <= tolerance);

    JsonOut json;
    json.begin_object();
    json.key("space").value(space_name(curve.space));
    json.key("n").value(curve.n);
    json.key("grid").number_array({grid.t0, grid.t1, static_cast<double>(grid.count)});
    json.key("samples").value(static_cast<int>(curve.samples.size()));
    json.key("checked").value(checked);
    json.key("skipped_degenerate").value(skipped);
    json.key("max_tau_error").value(max_tau_err);
    json.key("max_f_error").value(max_f_err);
    if (is_r22) json.key("max_g_error").value(max_g_err);
    json.key("tolerance").value(tolerance);
    json.key("passed").value(passed);
    json.end_object();
    write_output(json.str(), flags.out_path);
    return 0;
}

struct PlanFlags {
    std::string space;
    std::string from_text;
    std::string to_text;
    std::string interval_text;
    int samples = kDefaultPlanSamples;
    std::string format = "json";
    std::string out_path;
};

int run_plan(const PlanFlags& flags) {
    BoundaryProblem problem;
    problem.space = space_from_name(flags.space);

    const std::vector<double> from = parse_number_list(flags.from_text, "--from");
    const std::vector<double> to = parse_number_list(flags.to_text, "--to");
    const int n = static_cast<int>(from.size()) - 2;
    if (n < 1)
        throw std::invalid_argument("--from: expected at least 3 components");
    problem.from = PseudoVec{from, sig_r2n(n)};
    problem.to = PseudoVec{to, sig_r2n(static_cast<int>(to.size()) - 2)};

    const auto interval = split_commas(flags.interval_text);
    if (interval.size() != 2)
        throw std::invalid_argument("--interval expects t0,t1, got '" + flags.interval_text + "'");
    problem.t0 = parse_double_token(interval[0], "--interval");
    problem.t1 = parse_double_token(interval[1], "--interval");

    const PlanResult result = plan(problem, flags.samples);

    if (flags.format == "csv") {
        write_output(to_csv(result.curve), flags.out_path);
        return 0;
    }

    std::string curve_json = to_json(result.curve);
    while (!curve_json.empty() && (curve_json.back() == '\n' || curve_json.back() == '\r'))
        curve_json.pop_back();

    JsonOut json;
    json.begin_object();
    json.key("space").value(space_name(result.problem.space));
    json.key("from").number_array(result.problem.from.components);
    json.key("to").number_array(result.problem.to.components);
    json.key("interval").number_array({result.problem.t0, result.problem.t1});
    json.key("samples").value(static_cast<int>(result.curve.samples.size()));
    // f (and g) live on the normalized interval: the curve is the flat map of
    // f composed with t -> (t - t0)/(t1 - t0), shifted by `shift`.
    json.key("f").value(result.f.to_string());
    if (result.g) json.key("g").value(result.g->to_string());
    json.key("shift").number_array(result.shift.components);
    json.key("endpoint_error_start").value(result.endpoint_error_start);
    json.key("endpoint_error_end").value(result.endpoint_error_end);
    json.key("curve").raw_value(curve_json);
    json.end_object();
    write_output(json.str(), flags.out_path);
    return 0;
}

struct VerifyFlags {
    std::string suite;
    std::string out_path;
};

int run_verify(const VerifyFlags& flags) {
    std::vector<SuiteResult> results;
    if (!flags.suite.empty()) {
        const auto result = run_verification_suite(flags.suite);
        if (!result) {
            std::string names;
            for (const auto& name : verification_suite_names()) {
                if (!names.empty()) names += ", ";
                names += name;
            }
            throw std::invalid_argument("unknown suite '" + flags.suite +
                                        "'; available: " + names);
        }
        results.push_back(*result);
    } else {
        results = run_verification_suites();
    }

    JsonOut json;
    json.begin_array();
    for (const auto& result : results) {
        json.begin_object();
        json.key("suite").value(result.suite);
        json.key("cases").value(result.cases);
        json.key("passed").value(result.passed);
        json.key("failed").value(result.failed);
        json.key("details").begin_array();
        for (const auto& line : result.details) json.value(line);
        json.end_array();
        json.end_object();
    }
    json.end_array();
    write_output(json.str(), flags.out_path);

    for (const auto& result : results)
        if (result.failed != 0) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Null curves in R^{2,n}: generation, inversion, planning, verification",
                 "nullflat"};
    app.require_subcommand(1);

    CurveFlags gen_flags;
    auto* gen = app.add_subcommand("generate", "Sample a null curve from flat data");
    gen->add_option("--space", gen_flags.space, "Target space: r21, r22, or r2n")
        ->required()
        ->check(CLI::IsMember({"r21", "r22", "r2n"}));
    gen->add_option("--f", gen_flags.f_text, "Flat function f (e.g. \"poly:0,0,0,1\")")->required();
    gen->add_option("--g", gen_flags.g_text, "Second flat function (r22 only)");
    gen->add_option("--extras", gen_flags.extras_text,
                    "Extra coordinate function (r2n; repeat for each coordinate)");
    gen->add_option("--sigma", gen_flags.sigma_text, "Reparametrization of tau");
    gen->add_option("--grid", gen_flags.grid_text, "Sampling grid t0,t1,count")->required();
    gen->add_option("--format", gen_flags.format, "Output format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    gen->add_option("--out", gen_flags.out_path, "Output file (stdout when omitted)");

    InvertFlags invert_flags;
    auto* inv = app.add_subcommand("invert", "Recover flat data from a sampled curve");
    inv->add_option("--curve", invert_flags.curve_path, "Curve file (JSON with velocities)")
        ->required();
    inv->add_option("--index", invert_flags.index, "Invert a single sample (default: all)")
        ->check(CLI::NonNegativeNumber);
    inv->add_option("--out", invert_flags.out_path, "Output file (stdout when omitted)");

    CurveFlags round_flags;
    round_flags.grid_text = "-1,1,201";
    auto* rt = app.add_subcommand("roundtrip",
                                  "Generate, invert every sample, and report the errors");
    rt->add_option("--space", round_flags.space, "Target space: r21, r22, or r2n")
        ->required()
        ->check(CLI::IsMember({"r21", "r22", "r2n"}));
    rt->add_option("--f", round_flags.f_text, "Flat function f")->required();
    rt->add_option("--g", round_flags.g_text, "Second flat function (r22 only)");
    rt->add_option("--extras", round_flags.extras_text,
                   "Extra coordinate function (r2n; repeat for each coordinate)");
    rt->add_option("--sigma", round_flags.sigma_text, "Reparametrization of tau");
    rt->add_option("--grid", round_flags.grid_text, "Sampling grid t0,t1,count (default -1,1,201)");
    rt->add_option("--out", round_flags.out_path, "Output file (stdout when omitted)");

    PlanFlags plan_flags;
    auto* pl = app.add_subcommand("plan", "Null curve through two endpoints");
    pl->add_option("--space", plan_flags.space, "Target space: r21 or r22")
        ->required()
        ->check(CLI::IsMember({"r21", "r22", "r2n"}));
    pl->add_option("--from", plan_flags.from_text, "Start point, comma-separated")->required();
    pl->add_option("--to", plan_flags.to_text, "End point, comma-separated")->required();
    pl->add_option("--interval", plan_flags.interval_text, "Time interval t0,t1")->required();
    pl->add_option("--samples", plan_flags.samples, "Sample count (default 101)");
    pl->add_option("--format", plan_flags.format, "Output format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    pl->add_option("--out", plan_flags.out_path, "Output file (stdout when omitted)");

    VerifyFlags verify_flags;
    auto* ver = app.add_subcommand("verify", "Run the verification suites");
    ver->add_option("--suite", verify_flags.suite, "Run one suite by name (default: all)");
    ver->add_option("--out", verify_flags.out_path, "Output file (stdout when omitted)");

    int exit_code = 0;
    gen->callback([&] { exit_code = run_generate(gen_flags); });
    inv->callback([&] { exit_code = run_invert(invert_flags); });
    rt->callback([&] { exit_code = run_roundtrip(round_flags); });
    pl->callback([&] { exit_code = run_plan(plan_flags); });
    ver->callback([&] { exit_code = run_verify(verify_flags); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11's own exit codes are >= 100; the contract is 0 for --help,
        // 1 for every argument error.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const DegeneracyError& e) {
        std::cerr << degeneracy_json(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
