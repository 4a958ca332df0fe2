#include "chordarea/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chordarea/error.hpp"

namespace chordarea {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& path, const std::string& what) {
    throw GeometryError(ErrorCode::ParseError, path.string() + ": " + what);
}

json parse_json_file(const std::filesystem::path& path) {
    const std::string text = read_text(path);
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(path, e.what());
    }
}

std::string verdict_cell(const MetricsReport& r, const std::string& name) {
    const auto it = r.verdicts.find(name);
    if (it == r.verdicts.end() || !it->second.applicable) {
        return "na";
    }
    return it->second.holds ? "pass" : "fail";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw GeometryError(ErrorCode::ParseError, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw GeometryError(ErrorCode::ParseError, "cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw GeometryError(ErrorCode::ParseError, "write failed for " + path.string());
    }
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

CurveFile read_curve_file(const std::filesystem::path& path) {
    const json doc = parse_json_file(path);
    CurveFile out;
    try {
        if (doc.contains("closed") && !doc.at("closed").get<bool>()) {
            parse_fail(path, "only closed curves are supported");
        }
        const auto& pts = doc.at("points");
        if (!pts.is_array() || pts.empty()) {
            parse_fail(path, "points must be a non-empty array");
        }
        out.dim = doc.contains("dim") ? doc.at("dim").get<int>() : static_cast<int>(pts.front().size());
        if (out.dim != 2 && out.dim != 3) {
            parse_fail(path, "dim must be 2 or 3");
        }
        out.points.reserve(pts.size());
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != static_cast<std::size_t>(out.dim)) {
                parse_fail(path, "every point needs " + std::to_string(out.dim) + " coordinates");
            }
            Vec3 v{p[0].get<double>(), p[1].get<double>(), 0.0};
            if (out.dim == 3) {
                v.z = p[2].get<double>();
            }
            out.points.push_back(v);
        }
    } catch (const json::exception& e) {
        parse_fail(path, e.what());
    }
    return out;
}

void write_curve(const std::filesystem::path& path, const ClosedCurve& curve) {
    ordered_json doc;
    doc["dim"] = curve.dim();
    doc["closed"] = true;
    json pts = json::array();
    for (const auto& p : curve.points()) {
        if (curve.dim() == 2) {
            pts.push_back({p.x, p.y});
        } else {
            pts.push_back({p.x, p.y, p.z});
        }
    }
    doc["points"] = std::move(pts);
    write_text(path, doc.dump() + "\n");
}

ClosedCurve load_curve(const std::filesystem::path& path, std::size_t n_samples) {
    CurveFile file = read_curve_file(path);
    if (file.points.size() >= 8 && file.points.size() % 2 == 0) {
        try {
            ClosedCurve curve(file.dim, file.points);
            if (curve.uniform()) {
                return curve;
            }
        } catch (const GeometryError&) {
        }
    }
    return resample_arclength(file.points, n_samples, file.dim);
}

std::filesystem::path antipode_sidecar(const std::filesystem::path& off_path) {
    std::filesystem::path p = off_path;
    p.replace_extension(".antipode.json");
    return p;
}

void write_off(const std::filesystem::path& path, const SurfaceMesh& mesh) {
    std::string text = "OFF\n";
    text += std::to_string(mesh.vertices().size()) + " " + std::to_string(mesh.triangles().size()) + " 0\n";
    for (const auto& v : mesh.vertices()) {
        text += format_number(v.x) + " " + format_number(v.y) + " " + format_number(v.z) + "\n";
    }
    for (const auto& t : mesh.triangles()) {
        text += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
    }
    write_text(path, text);
    if (mesh.antipode()) {
        json doc;
        doc["antipode"] = *mesh.antipode();
        write_text(antipode_sidecar(path), doc.dump() + "\n");
    }
}

SurfaceMesh read_off(const std::filesystem::path& path) {
    std::istringstream in(read_text(path));
    std::string magic;
    in >> magic;
    if (magic != "OFF") {
        parse_fail(path, "missing OFF header");
    }
    std::size_t nv = 0, nf = 0, ne = 0;
    if (!(in >> nv >> nf >> ne)) {
        parse_fail(path, "bad OFF counts");
    }
    std::vector<Vec3> vertices(nv);
    for (auto& v : vertices) {
        if (!(in >> v.x >> v.y >> v.z)) {
            parse_fail(path, "truncated vertex list");
        }
    }
    std::vector<TriangleIndices> triangles(nf);
    for (auto& t : triangles) {
        std::size_t k = 0;
        if (!(in >> k >> t[0] >> t[1] >> t[2]) || k != 3) {
            parse_fail(path, "only triangular faces are supported");
        }
    }
    std::optional<std::vector<std::size_t>> antipode;
    const auto sidecar = antipode_sidecar(path);
    if (std::filesystem::exists(sidecar)) {
        try {
            antipode = parse_json_file(sidecar).at("antipode").get<std::vector<std::size_t>>();
        } catch (const json::exception& e) {
            parse_fail(sidecar, e.what());
        }
    }
    return SurfaceMesh(std::move(vertices), std::move(triangles), std::move(antipode));
}

void write_calibration(const std::filesystem::path& path, const CroftonCalibration& calib) {
    ordered_json doc;
    doc["c"] = calib.constant_c;
    doc["samples"] = calib.samples;
    doc["reference_area"] = calib.reference_area;
    write_text(path, doc.dump(2) + "\n");
}

CroftonCalibration read_calibration(const std::filesystem::path& path) {
    const json doc = parse_json_file(path);
    CroftonCalibration out;
    try {
        out.constant_c = doc.at("c").get<double>();
        out.samples = doc.at("samples").get<std::uint64_t>();
        out.reference_area = doc.at("reference_area").get<double>();
    } catch (const json::exception& e) {
        parse_fail(path, e.what());
    }
    if (!(out.constant_c > 0.0) || !std::isfinite(out.constant_c)) {
        parse_fail(path, "calibration constant must be positive");
    }
    return out;
}

std::string report_json(const MetricsReport& r, int indent) {
    ordered_json doc;
    doc["kind"] = r.mesh ? "mesh" : "curve";
    doc["dim"] = r.dim;
    doc["samples"] = r.samples;
    doc["length"] = r.length_L;
    doc["diameter"] = r.diameter_D;
    doc["td"] = r.td;
    doc["area"] = {{"value", r.area.value},
                   {"std_error", r.area.std_error},
                   {"samples_used", r.area.samples_used},
                   {"method", std::string(to_string(r.area.method))}};
    doc["ratio"] = r.ratio_td_over_area;
    ordered_json shape;
    shape["convex"] = r.shape.convex;
    shape["symmetric"] = r.shape.centrally_symmetric;
    if (r.shape.symmetry_center) {
        const Vec3& c = *r.shape.symmetry_center;
        shape["symmetry_center"] = {c.x, c.y, c.z};
    } else {
        shape["symmetry_center"] = nullptr;
    }
    shape["tolerance"] = r.shape.tolerance_used;
    doc["shape"] = std::move(shape);
    ordered_json verdicts = ordered_json::object();
    for (const auto& [name, v] : r.verdicts) {
        verdicts[name] = {{"applicable", v.applicable}, {"holds", v.holds}, {"margin", v.margin}};
    }
    doc["verdicts"] = std::move(verdicts);
    doc["all_hold"] = r.all_hold();
    return doc.dump(indent);
}

std::vector<FamilySpec> read_corpus_specs(const std::filesystem::path& path) {
    const json doc = parse_json_file(path);
    std::vector<FamilySpec> out;
    try {
        for (const auto& item : doc) {
            FamilySpec spec;
            spec.kind = parse_family_kind(item.at("kind").get<std::string>());
            if (item.contains("params")) {
                spec.params = item.at("params").get<std::map<std::string, double>>();
            }
            spec.n_samples = item.value("n_samples", std::size_t{4096});
            spec.seed = item.value("seed", std::uint64_t{0});
            out.push_back(std::move(spec));
        }
    } catch (const json::exception& e) {
        parse_fail(path, e.what());
    }
    return out;
}

std::string corpus_csv(const std::vector<CorpusRow>& rows) {
    std::string out =
        "kind,params,n_samples,seed,length,diameter,td,area,area_stderr,ratio,convex,symmetric,eq0,eq1,eq2,"
        "isoperimetric,hayashi,error\n";
    for (const auto& row : rows) {
        out += std::string(to_string(row.spec.kind)) + ",";
        out += csv_field(format_params(row.spec.params)) + ",";
        out += std::to_string(row.spec.n_samples) + "," + std::to_string(row.spec.seed) + ",";
        if (row.report) {
            const MetricsReport& r = *row.report;
            for (double v : {r.length_L, r.diameter_D, r.td, r.area.value, r.area.std_error, r.ratio_td_over_area}) {
                out += format_number(v) + ",";
            }
            out += std::string(r.shape.convex ? "true" : "false") + ",";
            out += std::string(r.shape.centrally_symmetric ? "true" : "false") + ",";
            for (const char* name : {"eq0_upper", "eq1_lower", "eq2_lower", "isoperimetric", "hayashi"}) {
                out += verdict_cell(r, name) + ",";
            }
        } else {
            out += ",,,,,,,,,,,,,";
        }
        out += csv_field(row.error) + "\n";
    }
    return out;
}

std::string sweep_csv(const SweepResult& sweep) {
    std::string out = "n,td,area,area_stderr,ratio,bound\n";
    for (const auto& row : sweep.rows) {
        out += std::to_string(row.n) + "," + format_number(row.td) + "," + format_number(row.area) + "," +
               format_number(row.area_stderr) + "," + format_number(row.ratio) + "," + format_number(row.bound) +
               "\n";
    }
    return out;
}

std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path) {
    std::istringstream in(read_text(path));
    std::string line;
    if (!std::getline(in, line)) {
        parse_fail(path, "empty file");
    }
    const auto header = split_csv_line(line);
    auto column = [&](const std::string& name) -> std::size_t {
        for (std::size_t k = 0; k < header.size(); ++k) {
            if (header[k] == name) {
                return k;
            }
        }
        parse_fail(path, "missing column " + name);
    };
    const std::size_t cn = column("n"), ctd = column("td"), ca = column("area"), cse = column("area_stderr"),
                      cr = column("ratio"), cb = column("bound");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            parse_fail(path, "ragged row");
        }
        try {
            SweepRow row;
            row.n = std::stoi(cells[cn]);
            row.td = std::stod(cells[ctd]);
            row.area = std::stod(cells[ca]);
            row.area_stderr = std::stod(cells[cse]);
            row.ratio = std::stod(cells[cr]);
            row.bound = std::stod(cells[cb]);
            rows.push_back(row);
        } catch (const std::exception&) {
            parse_fail(path, "bad number in row '" + line + "'");
        }
    }
    return rows;
}

}  // namespace chordarea
