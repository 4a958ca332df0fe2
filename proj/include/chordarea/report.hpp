#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chordarea/area.hpp"
#include "chordarea/curve.hpp"
#include "chordarea/families.hpp"
#include "chordarea/mesh.hpp"

namespace chordarea {

/// Outcome of one inequality. margin is LHS - RHS of the inequality as
/// written, from point estimates: >= 0 is good for lower bounds and <= 0 for
/// upper bounds. holds allows 3 standard errors of area noise in favor of the
/// inequality, plus the trapezoid-rule excess of td for the upper bound.
struct Verdict {
    bool applicable = false;
    bool holds = true;
    double margin = 0.0;
};

/// Check names: eq0_upper (TD <= L^2/pi), eq1_lower (TD >= 2A),
/// eq2_lower (TD >= 2(m+1)A), isoperimetric (A <= L^2/(4 pi)), hayashi (LD >= 4A).
/// For meshes, length_L is the surface area and area is the enclosed volume.
struct MetricsReport {
    bool mesh = false;
    int dim = 2;
    std::size_t samples = 0;
    double length_L = 0.0;
    double diameter_D = 0.0;
    double td = 0.0;
    AreaEstimate area;
    /// td / area.value, or NaN when the area estimate is zero.
    double ratio_td_over_area = 0.0;
    ShapeClass shape;
    std::map<std::string, Verdict> verdicts;

    /// True unless some applicable verdict fails.
    bool all_hold() const;
};

/// Planar curves use area_planar; space curves need calib (MissingCalibration otherwise).
MetricsReport run_report(const ClosedCurve& curve, std::uint64_t budget, std::uint64_t seed,
                         const std::optional<CroftonCalibration>& calib = std::nullopt);
/// Closed mesh with an antipode map; volume from the divergence theorem.
MetricsReport run_report(const SurfaceMesh& mesh);

struct SweepRow {
    int n = 0;
    double td = 0.0;
    double area = 0.0;
    double area_stderr = 0.0;
    double ratio = 0.0;
    double ratio_stderr = 0.0;
    /// 2 + 47/n.
    double bound = 0.0;
    /// 2/n.
    double area_floor = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool within_bound = true;
    bool non_increasing = true;
    bool above_floor = true;
    bool above_two = true;

    bool passed() const { return within_bound && non_increasing && above_floor && above_two; }
};

/// Horseshoe curves for each n (N samples each). Row k uses seed + k. The
/// checks allow 3 standard errors (combined in quadrature for neighbours).
SweepResult horseshoe_sweep(const std::vector<int>& n_values, std::size_t n_samples, std::uint64_t budget,
                            std::uint64_t seed);

/// One CSV record; report is empty when generation or measurement failed.
struct CorpusRow {
    FamilySpec spec;
    std::optional<MetricsReport> report;
    std::string error;
};

/// Rows in input order. Row k is measured with seed mix64(seed + k).
std::vector<CorpusRow> corpus_run(const std::vector<FamilySpec>& specs, std::uint64_t budget, std::uint64_t seed,
                                  const std::optional<CroftonCalibration>& calib = std::nullopt);

/// True unless some row has an applicable failing verdict or an error.
bool corpus_passed(const std::vector<CorpusRow>& rows);

}  // namespace chordarea
