#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chordarea/area.hpp"
#include "chordarea/curve.hpp"
#include "chordarea/families.hpp"
#include "chordarea/mesh.hpp"
#include "chordarea/report.hpp"

namespace chordarea {

/// Raw polyline as stored on disk.
struct CurveFile {
    int dim = 2;
    std::vector<Vec3> points;
};

/// {"dim": 2|3, "closed": true, "points": [[x, y(, z)], ...]}. Throws ParseError.
CurveFile read_curve_file(const std::filesystem::path& path);
void write_curve(const std::filesystem::path& path, const ClosedCurve& curve);

/// Reads a curve file and returns it unchanged when it already is a valid
/// uniform curve; otherwise resamples it to n_samples equal chords.
ClosedCurve load_curve(const std::filesystem::path& path, std::size_t n_samples);

/// ASCII OFF (triangles only). The antipode map, if any, goes to the sidecar
/// antipode_sidecar(path) as {"antipode": [...]}.
void write_off(const std::filesystem::path& path, const SurfaceMesh& mesh);
SurfaceMesh read_off(const std::filesystem::path& path);
std::filesystem::path antipode_sidecar(const std::filesystem::path& off_path);

/// {"c": ..., "samples": ..., "reference_area": ...}
void write_calibration(const std::filesystem::path& path, const CroftonCalibration& calib);
CroftonCalibration read_calibration(const std::filesystem::path& path);

/// Report as a JSON document (non-finite numbers become null).
std::string report_json(const MetricsReport& report, int indent = 2);

/// List of {"kind": ..., "params": {...}, "n_samples": ..., "seed": ...}.
std::vector<FamilySpec> read_corpus_specs(const std::filesystem::path& path);

/// Shortest decimal that round-trips; "nan"/"inf" spelled out.
std::string format_number(double v);
/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

std::string corpus_csv(const std::vector<CorpusRow>& rows);
std::string sweep_csv(const SweepResult& sweep);
/// Parses the table written by sweep_csv. Throws ParseError.
std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace chordarea
