#include "floordyn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "floordyn/classifier.hpp"
#include "floordyn/region_map.hpp"
#include "floordyn/verifier.hpp"

namespace floordyn::cli {

namespace {

constexpr std::size_t kMinMaxSteps = 8;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
    }
    return std::stoull(text);
}

std::size_t resolve_budget(std::size_t requested, std::size_t fallback) {
    return requested == 0 ? fallback : std::max(requested, kMinMaxSteps);
}

nlohmann::ordered_json lattice_json(const LatticePoint& p) {
    return nlohmann::ordered_json::array({p.x.str(), p.y.str()});
}

nlohmann::ordered_json parity_json(const ParityLimits& p) {
    return nlohmann::ordered_json::array({p.even.str(), p.odd.str()});
}

nlohmann::ordered_json verdict_json(const OrbitTrace& trace) {
    nlohmann::ordered_json j;
    if (const auto* v = std::get_if<FixedPointVerdict>(&trace.verdict)) {
        j["verdict"] = "fixed_point";
        j["point"] = lattice_json(v->point);
        j["entry_step"] = v->entry_step;
    } else if (const auto* v = std::get_if<TwoCycleVerdict>(&trace.verdict)) {
        j["verdict"] = "two_cycle";
        j["p"] = lattice_json(v->p);
        j["q"] = lattice_json(v->q);
        j["entry_step"] = v->entry_step;
    } else if (const auto* v = std::get_if<DivergentVerdict>(&trace.verdict)) {
        j["verdict"] = "divergent";
        j["x_parity"] = parity_json(v->x_parity);
        j["y_parity"] = parity_json(v->y_parity);
    } else {
        j["verdict"] = "budget_exhausted";
    }
    j["steps_used"] = trace.steps_used;
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

// ------------------------------------------------------------- subcommands

int cmd_fixed_points(const std::string& lambda_text, std::ostream& out) {
    const Rational lambda = parse_rational(lambda_text);
    out << fixed_points(lambda).str() << '\n';
    out << "regime: " << classify_lambda(lambda).str() << '\n';
    return kOk;
}

int cmd_orbit(const std::string& lambda_text, const std::string& point_text,
              std::size_t max_steps, const std::string& format, std::ostream& out) {
    const Rational lambda = parse_rational(lambda_text);
    const Point z = parse_point(point_text);
    const OrbitTrace trace =
        iterate_orbit(lambda, z, resolve_budget(max_steps, default_budget(lambda, z)));

    if (format == "jsonl") {
        using nlohmann::ordered_json;
        out << ordered_json{{"step", 0}, {"x", z.x.str()}, {"y", z.y.str()}}.dump() << '\n';
        for (std::size_t s = 0; s < trace.steps.size(); ++s) {
            const auto& p = trace.steps[s];
            out << ordered_json{{"step", s + 1}, {"x", p.x.str()}, {"y", p.y.str()}}.dump() << '\n';
        }
        out << verdict_json(trace).dump() << '\n';
        return kOk;
    }

    out << "lambda: " << lambda.str() << " (" << classify_lambda(lambda).str() << ")\n";
    out << "step 0: (" << z.x.str() << "," << z.y.str() << ")\n";
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        out << "step " << s + 1 << ": " << trace.steps[s].str() << '\n';
    }
    out << "verdict: " << describe(trace.verdict) << '\n';
    return kOk;
}

int cmd_omega(const std::string& lambda_text, const std::string& point_text,
              const std::string& method, std::size_t max_steps, std::ostream& out) {
    const Rational lambda = parse_rational(lambda_text);
    const Point z = parse_point(point_text);
    if (method == "theorem") {
        const auto verdict = theorem_omega(lambda, z);
        if (!verdict) {
            out << "uncovered\n";
        } else {
            out << verdict->omega.str() << '\n' << "case " << verdict->case_id << '\n';
        }
        return kOk;
    }
    if (method == "simulate") {
        const std::size_t budget = resolve_budget(max_steps, default_budget(lambda, z));
        out << omega(lambda, z, OmegaMethod::Simulate, budget).str() << '\n';
    } else {
        out << omega(lambda, z, OmegaMethod::Analytic).str() << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& lambdas_text, const std::string& window_text,
               const std::string& step_text, std::size_t fixed_window, std::size_t max_steps,
               const std::string& out_path, std::ostream& out) {
    GridSpec grid;
    grid.lambdas = parse_rational_list(lambdas_text);
    std::tie(grid.lo, grid.hi) = parse_range(window_text);
    grid.step = parse_rational(step_text);
    try {
        grid.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (fixed_window < 1) throw UsageError("--fixed-window must be at least 1");

    DiscrepancyReport report =
        verify_omega(grid, max_steps == 0 ? 0 : std::max(max_steps, kMinMaxSteps));
    bool has_minus_one = false;
    for (const auto& lambda : grid.lambdas) {
        report.merge(verify_fixed_points(lambda, fixed_window));
        has_minus_one = has_minus_one || lambda == Rational(-1);
    }
    if (has_minus_one) report.merge(verify_period2(fixed_window));

    const std::string text = report.serialize();
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
        out << text.substr(text.find("[summary]"));
    }
    return report.count(Tag::Mismatch) > 0 ? kMismatch : kOk;
}

int cmd_region_map(const std::string& lambda_text, const std::string& window_text,
                   const std::string& resolution_text, const std::string& format,
                   const std::string& prefix, std::ostream& out) {
    RegionMapSpec spec;
    spec.lambda = parse_rational(lambda_text);

    const auto axes = split(window_text, ',');
    if (axes.size() != 2) throw UsageError("--window expects \"XLO:XHI,YLO:YHI\"");
    std::tie(spec.x_lo, spec.x_hi) = parse_range(axes[0]);
    std::tie(spec.y_lo, spec.y_hi) = parse_range(axes[1]);

    const auto dims = split(resolution_text, 'x');
    if (dims.size() != 2) throw UsageError("--resolution expects NXxNY, e.g. 200x200");
    spec.nx = parse_count(dims[0], "resolution");
    spec.ny = parse_count(dims[1], "resolution");
    spec.format = format == "pgm" ? RasterFormat::Pgm : RasterFormat::Csv;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const RegionMap map = render_region_map(spec);
    const std::string raster_path = prefix + (spec.format == RasterFormat::Pgm ? ".pgm" : ".csv");
    const std::string legend_path = prefix + ".legend.csv";
    write_file(raster_path, map.raster);
    write_file(legend_path, map.legend);
    out << "wrote " << raster_path << " and " << legend_path << " (" << map.class_count
        << " classes)\n";
    return kOk;
}

}  // namespace

Point parse_point(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw UsageError("point must be \"X,Y\", got '" + text + "'");
    return Point{parse_rational(parts[0]), parse_rational(parts[1])};
}

std::pair<Rational, Rational> parse_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw UsageError("range must be \"LO:HI\", got '" + text + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    for (const auto& part : split(text, ',')) values.push_back(parse_rational(part));
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact simulation and verification of A(x,y) = (floor(lambda y), floor(lambda x))",
                 "floordyn"};
    app.require_subcommand(1);

    std::string lambda, point, format = "text", method = "analytic";
    std::string lambdas, window, step, out_path, resolution, raster = "csv", prefix = "region_map";
    std::size_t max_steps = 0, fixed_window = 100;

    auto* fixed = app.add_subcommand("fixed-points", "List Fix(A) and the regime of lambda");
    fixed->add_option("--lambda", lambda, "Parameter (p/q, integer or decimal)")->required();

    auto* orbit = app.add_subcommand("orbit", "Trace the orbit of a point to its verdict");
    orbit->add_option("--lambda", lambda, "Parameter")->required();
    orbit->add_option("--point", point, "Start point \"X,Y\"")->required();
    orbit->add_option("--max-steps", max_steps, "Step budget (at least 8)");
    orbit->add_option("--format", format, "text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));

    auto* omega_cmd = app.add_subcommand("omega", "Omega-limit set of a point");
    omega_cmd->add_option("--lambda", lambda, "Parameter")->required();
    omega_cmd->add_option("--point", point, "Point \"X,Y\"")->required();
    omega_cmd->add_option("--method", method, "analytic, simulate or theorem")
        ->check(CLI::IsMember({"analytic", "simulate", "theorem"}));
    omega_cmd->add_option("--max-steps", max_steps, "Step budget for simulate (at least 8)");

    auto* verify = app.add_subcommand("verify", "Cross-check simulation, closed form and theorems");
    verify->add_option("--lambdas", lambdas, "Comma-separated parameters")->required();
    verify->add_option("--window", window, "Grid range \"LO:HI\" for both axes")->required();
    verify->add_option("--step", step, "Grid step")->required();
    verify->add_option("--fixed-window", fixed_window, "Radius of the lattice fixed-point scan");
    verify->add_option("--max-steps", max_steps, "Step budget per orbit (at least 8)");
    verify->add_option("--out", out_path, "Write the full report here");

    auto* region = app.add_subcommand("region-map", "Rasterize omega classes over a window");
    region->add_option("--lambda", lambda, "Parameter")->required();
    region->add_option("--window", window, "\"XLO:XHI,YLO:YHI\"")->required();
    region->add_option("--resolution", resolution, "NXxNY")->required();
    region->add_option("--out", raster, "csv or pgm")->check(CLI::IsMember({"csv", "pgm"}));
    region->add_option("--output", prefix, "Output path prefix");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (app.get_subcommands().empty()) err << app.help();
        return kUsageError;
    }

    try {
        if (fixed->parsed()) return cmd_fixed_points(lambda, out);
        if (orbit->parsed()) return cmd_orbit(lambda, point, max_steps, format, out);
        if (omega_cmd->parsed()) return cmd_omega(lambda, point, method, max_steps, out);
        if (verify->parsed())
            return cmd_verify(lambdas, window, step, fixed_window, max_steps, out_path, out);
        if (region->parsed()) return cmd_region_map(lambda, window, resolution, raster, prefix, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace floordyn::cli
