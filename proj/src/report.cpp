#include "chordarea/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chordarea/chords.hpp"
#include "chordarea/error.hpp"
#include "chordarea/parallel.hpp"
#include "chordarea/random.hpp"

namespace chordarea {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSigmas = 3.0;

Verdict lower_bound(double lhs, double rhs, double slack) {
    return {true, lhs - rhs + slack >= 0.0, lhs - rhs};
}

Verdict upper_bound(double lhs, double rhs, double slack) {
    return {true, lhs - rhs - slack <= 0.0, lhs - rhs};
}

double ratio_of(double td, double area) {
    return area > 0.0 ? td / area : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

bool MetricsReport::all_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const auto& kv) { return !kv.second.applicable || kv.second.holds; });
}

MetricsReport run_report(const ClosedCurve& curve, std::uint64_t budget, std::uint64_t seed,
                         const std::optional<CroftonCalibration>& calib) {
    MetricsReport r;
    r.dim = curve.dim();
    r.samples = curve.size();
    r.length_L = curve.length();
    r.diameter_D = diameter(curve);
    r.td = total_diameter(curve);
    if (curve.dim() == 2) {
        r.area = area_planar(curve, budget, seed);
    } else {
        if (!calib) {
            throw GeometryError(ErrorCode::MissingCalibration, "space curves need a line-measure calibration");
        }
        r.area = area_space_curve(curve, *calib, budget, seed);
    }
    r.ratio_td_over_area = ratio_of(r.td, r.area.value);
    r.shape = classify(curve);

    const double L = r.length_L;
    const double A = r.area.value;
    const double band = kSigmas * r.area.std_error;
    const bool eq2_hypothesis = r.shape.convex || r.shape.centrally_symmetric;

    r.verdicts["eq0_upper"] = upper_bound(r.td, L * L / kPi, r.td - total_diameter_polygon(curve));
    r.verdicts["eq1_lower"] = lower_bound(r.td, 2.0 * A, 2.0 * band);
    r.verdicts["isoperimetric"] = upper_bound(A, L * L / (4.0 * kPi), band);
    Verdict eq2 = lower_bound(r.td, 4.0 * A, 4.0 * band);
    Verdict hayashi = lower_bound(L * r.diameter_D, 4.0 * A, 4.0 * band);
    eq2.applicable = hayashi.applicable = eq2_hypothesis;
    r.verdicts["eq2_lower"] = eq2;
    r.verdicts["hayashi"] = hayashi;
    return r;
}

MetricsReport run_report(const SurfaceMesh& mesh) {
    require_closed(mesh);
    MetricsReport r;
    r.mesh = true;
    r.dim = 3;
    r.samples = mesh.vertices().size();
    r.length_L = mesh.total_area();
    r.td = total_diameter_surface(mesh);
    r.area = volume_mesh_divergence(mesh);
    r.ratio_td_over_area = ratio_of(r.td, r.area.value);

    const auto v = mesh.vertices();
    double d2 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            d2 = std::max(d2, norm2(v[j] - v[i]));
        }
    }
    r.diameter_D = std::sqrt(d2);

    const auto& anti = *mesh.antipode();
    Vec3 center{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        center += 0.5 * (v[i] + v[anti[i]]);
    }
    center = center / static_cast<double>(v.size());
    const double tol = 1e-6 * mesh.scale();
    r.shape.tolerance_used = tol;
    r.shape.centrally_symmetric = std::all_of(anti.begin(), anti.end(), [&, i = std::size_t{0}](std::size_t j) mutable {
        return norm(v[i++] + v[j] - 2.0 * center) <= tol;
    });
    if (r.shape.centrally_symmetric) {
        r.shape.symmetry_center = center;
    }

    const double V = r.area.value;
    r.verdicts["eq0_upper"] = {};
    r.verdicts["isoperimetric"] = {};
    r.verdicts["hayashi"] = {};
    r.verdicts["eq1_lower"] = lower_bound(r.td, 2.0 * V, 0.0);
    Verdict eq2 = lower_bound(r.td, 6.0 * V, 0.0);
    eq2.applicable = r.shape.centrally_symmetric;
    r.verdicts["eq2_lower"] = eq2;
    return r;
}

SweepResult horseshoe_sweep(const std::vector<int>& n_values, std::size_t n_samples, std::uint64_t budget,
                            std::uint64_t seed) {
    SweepResult out;
    for (std::size_t k = 0; k < n_values.size(); ++k) {
        const int n = n_values[k];
        const HorseshoeGeometry g = horseshoe_geometry(n);
        const ClosedCurve curve =
            generate_curve({FamilyKind::horseshoe, {{"n", static_cast<double>(n)}}, n_samples, seed});
        const AreaEstimate area = area_planar(curve, budget, seed + k);
        SweepRow row;
        row.n = n;
        row.td = total_diameter(curve);
        row.area = area.value;
        row.area_stderr = area.std_error;
        row.ratio = ratio_of(row.td, row.area);
        row.ratio_stderr = row.ratio * area.std_error / area.value;
        row.bound = 2.0 + 47.0 / n;
        row.area_floor = g.lower_bound_area;

        out.within_bound = out.within_bound && row.ratio <= row.bound + kSigmas * row.ratio_stderr;
        out.above_floor = out.above_floor && row.area >= row.area_floor - kSigmas * row.area_stderr;
        out.above_two = out.above_two && row.ratio > 2.0;
        if (!out.rows.empty()) {
            const SweepRow& prev = out.rows.back();
            const double sigma = std::hypot(prev.ratio_stderr, row.ratio_stderr);
            if (n > prev.n) {
                out.non_increasing = out.non_increasing && row.ratio <= prev.ratio + kSigmas * sigma;
            }
        }
        out.rows.push_back(row);
    }
    return out;
}

std::vector<CorpusRow> corpus_run(const std::vector<FamilySpec>& specs, std::uint64_t budget, std::uint64_t seed,
                                  const std::optional<CroftonCalibration>& calib) {
    std::vector<CorpusRow> rows(specs.size());
    parallel_for(specs.size(), [&](std::size_t k) {
        CorpusRow& row = rows[k];
        row.spec = specs[k];
        try {
            const Shape shape = generate(specs[k]);
            if (const auto* curve = std::get_if<ClosedCurve>(&shape)) {
                row.report = run_report(*curve, budget, mix64(seed + k), calib);
            } else {
                row.report = run_report(std::get<SurfaceMesh>(shape));
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });
    return rows;
}

bool corpus_passed(const std::vector<CorpusRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const CorpusRow& r) { return r.error.empty() && r.report && r.report->all_hold(); });
}

}  // namespace chordarea
