#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "chordarea/area.hpp"
#include "chordarea/error.hpp"
#include "chordarea/families.hpp"
#include "chordarea/io.hpp"
#include "chordarea/report.hpp"
#include "chordarea/svg.hpp"

using namespace chordarea;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedVerdict = 1;
constexpr int kExitInputError = 2;

struct Common {
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    std::size_t n_samples = 4096;
    std::string output;
    std::string calib;
};

void add_common(CLI::App* cmd, Common& c, bool with_budget) {
    cmd->add_option("--seed", c.seed, "Master seed for all randomness")->capture_default_str();
    if (with_budget) {
        cmd->add_option("--budget", c.budget, "Monte-Carlo samples per estimate")->capture_default_str();
    }
    cmd->add_option("--n-samples", c.n_samples, "Vertices per curve (even, >= 8)")->capture_default_str();
}

std::optional<CroftonCalibration> load_calib(const std::string& path) {
    if (path.empty()) {
        return std::nullopt;
    }
    return read_calibration(path);
}

void emit(const std::string& output, const std::string& text) {
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        write_text(output, text);
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw GeometryError(ErrorCode::ParseError, "bad integer list '" + text + "'");
        }
        out.push_back(v);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total diameter, enclosed area and their inequalities for closed curves and surfaces"};
    app.require_subcommand(1);
    app.footer("Environment: CHORDAREA_THREADS sets the worker count (0 or unset = all cores).\n"
               "Exit status: 0 ok, 1 an applicable inequality failed, 2 bad input.");

    Common common;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a curve (JSON) or mesh (OFF + antipode sidecar)");
    std::string kind;
    std::string params_text;
    std::optional<double> radius, a, b, c, modes, subdiv;
    std::optional<int> hs_n;
    bool odd_only = false;
    gen->add_option("--kind", kind, "circle, ellipse, fourier_random, support_convex, horseshoe, trefoil, "
                                    "doubled_segment, figure_eight, sphere_mesh, symmetric_mesh")
        ->required();
    gen->add_option("--params", params_text, "Extra parameters as \"key=value;key=value\"");
    gen->add_option("--radius", radius, "circle / sphere_mesh radius");
    gen->add_option("--a", a, "ellipse or ellipsoid semi-axis a");
    gen->add_option("--b", b, "ellipse or ellipsoid semi-axis b");
    gen->add_option("--c", c, "ellipsoid semi-axis c");
    gen->add_option("--n", hs_n, "horseshoe index n (>= 2)");
    gen->add_option("--modes", modes, "Fourier modes");
    gen->add_option("--subdiv", subdiv, "mesh subdivision level");
    gen->add_flag("--odd-only", odd_only, "fourier_random with odd harmonics only (centrally symmetric)");
    gen->add_option("-o,--output", common.output, "Output path")->required();
    add_common(gen, common, false);

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Print the metrics report of a curve (.json) or mesh (.off)");
    std::string input;
    bool as_3d = false;
    metrics->add_option("input", input, "Curve JSON or mesh OFF")->required();
    metrics->add_flag("--as-3d", as_3d, "Treat a planar curve as a space curve (needs --calib)");
    metrics->add_option("--calib", common.calib, "Calibration JSON from `calibrate`");
    metrics->add_option("-o,--output", common.output, "Write the JSON here instead of stdout");
    add_common(metrics, common, true);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Horseshoe convergence table (CSV)");
    std::string family = "horseshoe";
    std::string n_list = "4,8,16,32";
    sweep->add_option("--family", family, "Only horseshoe is supported")->capture_default_str();
    sweep->add_option("--n", n_list, "Comma-separated horseshoe indices")->capture_default_str();
    sweep->add_option("-o,--output", common.output, "CSV path (stdout if omitted)");
    add_common(sweep, common, true);

    // corpus
    auto* corpus = app.add_subcommand("corpus", "Run the report over many generated inputs (CSV)");
    std::string specs_path;
    std::string preset;
    corpus->add_option("specs", specs_path, "JSON list of {kind, params, n_samples, seed}");
    corpus->add_option("--preset", preset, "Built-in corpus: standard (200 curves)");
    corpus->add_option("--calib", common.calib, "Calibration JSON, needed for space curves");
    corpus->add_option("-o,--output", common.output, "CSV path (stdout if omitted)");
    add_common(corpus, common, true);

    // calibrate
    auto* calibrate = app.add_subcommand("calibrate", "Calibrate the line measure against a flat unit disk");
    calibrate->add_option("-o,--output", common.output, "Calibration JSON path")->required();
    add_common(calibrate, common, true);

    // plot
    auto* plot = app.add_subcommand("plot", "Render an SVG");
    std::string plot_kind = "curve_with_chords";
    std::size_t stride = 64;
    plot->add_option("--kind", plot_kind, "curve_with_chords, ratio_vs_n or margin_bars")->capture_default_str();
    plot->add_option("input", input, "Curve JSON, sweep CSV or metrics JSON")->required();
    plot->add_option("--stride", stride, "Draw every stride-th antipodal chord")->capture_default_str();
    plot->add_option("-o,--output", common.output, "SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*gen) {
            FamilySpec spec;
            spec.kind = parse_family_kind(kind);
            spec.params = parse_params(params_text);
            spec.n_samples = common.n_samples;
            spec.seed = common.seed;
            auto set = [&](const char* key, const std::optional<double>& v) {
                if (v) {
                    spec.params[key] = *v;
                }
            };
            set("radius", radius);
            set("a", a);
            set("b", b);
            set("c", c);
            set("modes", modes);
            set("subdiv", subdiv);
            if (hs_n) {
                spec.params["n"] = *hs_n;
            }
            if (odd_only) {
                spec.params["odd_only"] = 1.0;
            }
            const Shape shape = generate(spec);
            if (const auto* curve = std::get_if<ClosedCurve>(&shape)) {
                write_curve(common.output, *curve);
            } else {
                write_off(common.output, std::get<SurfaceMesh>(shape));
            }
            return kExitOk;
        }
        if (*metrics) {
            const std::filesystem::path path(input);
            MetricsReport report;
            if (path.extension() == ".off") {
                report = run_report(read_off(path));
            } else {
                ClosedCurve curve = load_curve(path, common.n_samples);
                if (as_3d) {
                    curve = as_space_curve(curve);
                }
                report = run_report(curve, common.budget, common.seed, load_calib(common.calib));
            }
            emit(common.output, report_json(report) + "\n");
            return report.all_hold() ? kExitOk : kExitFailedVerdict;
        }
        if (*sweep) {
            if (family != "horseshoe") {
                throw GeometryError(ErrorCode::InvalidSpec, "sweep supports only --family horseshoe");
            }
            const SweepResult result = horseshoe_sweep(parse_int_list(n_list), common.n_samples, common.budget,
                                                       common.seed);
            emit(common.output, sweep_csv(result));
            return result.passed() ? kExitOk : kExitFailedVerdict;
        }
        if (*corpus) {
            std::vector<FamilySpec> specs;
            if (!preset.empty()) {
                if (preset != "standard") {
                    throw GeometryError(ErrorCode::InvalidSpec, "unknown preset '" + preset + "'");
                }
                specs = standard_corpus(common.n_samples);
            }
            if (!specs_path.empty()) {
                const auto more = read_corpus_specs(specs_path);
                specs.insert(specs.end(), more.begin(), more.end());
            }
            if (specs.empty()) {
                throw GeometryError(ErrorCode::InvalidSpec, "give a specs file or --preset");
            }
            const auto rows = corpus_run(specs, common.budget, common.seed, load_calib(common.calib));
            emit(common.output, corpus_csv(rows));
            return corpus_passed(rows) ? kExitOk : kExitFailedVerdict;
        }
        if (*calibrate) {
            write_calibration(common.output, calibrate_crofton(common.budget, common.seed));
            return kExitOk;
        }
        if (*plot) {
            PlotSpec spec;
            spec.kind = parse_plot_kind(plot_kind);
            spec.inputs = {input};
            spec.output = common.output;
            spec.chord_stride = stride;
            render_svg(spec);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "chordarea: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
