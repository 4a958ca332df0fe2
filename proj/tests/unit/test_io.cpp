#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include "chordarea/error.hpp"
#include "chordarea/io.hpp"
#include "chordarea/svg.hpp"

using namespace chordarea;
namespace fs = std::filesystem;

namespace {

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("chordarea_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path path(const std::string& name) const { return dir_ / name; }

    fs::path dir_;
};

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no GeometryError thrown";
    return ErrorCode::InvalidSpec;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

}  // namespace

using CurveIo = TempDir;
using MeshIo = TempDir;
using Svg = TempDir;

TEST_F(CurveIo, RoundTripIsExact) {
    for (auto kind : {FamilyKind::fourier_random, FamilyKind::trefoil}) {
        const ClosedCurve c = generate_curve({kind, {}, 512, 5});
        write_curve(path("c.json"), c);
        const ClosedCurve back = load_curve(path("c.json"), 4096);
        ASSERT_EQ(back.size(), c.size());
        EXPECT_EQ(back.dim(), c.dim());
        for (std::size_t i = 0; i < c.size(); ++i) {
            ASSERT_EQ(back[i], c[i]);
        }
    }
}

TEST_F(CurveIo, NonUniformInputIsResampled) {
    write_text(path("sq.json"), R"({"dim":2,"closed":true,"points":[[0,0],[3,0],[3,1],[0,1]]})");
    const ClosedCurve c = load_curve(path("sq.json"), 256);
    EXPECT_EQ(c.size(), 256u);
    EXPECT_TRUE(c.uniform());
    EXPECT_NEAR(c.length(), 8.0, 1e-3);
}

TEST_F(CurveIo, MalformedFiles) {
    write_text(path("bad.json"), "{not json");
    EXPECT_EQ(code_of([&] { read_curve_file(path("bad.json")); }), ErrorCode::ParseError);
    write_text(path("nopts.json"), R"({"dim":2})");
    EXPECT_EQ(code_of([&] { read_curve_file(path("nopts.json")); }), ErrorCode::ParseError);
    write_text(path("dims.json"), R"({"dim":3,"points":[[0,0],[1,0],[0,1]]})");
    EXPECT_EQ(code_of([&] { read_curve_file(path("dims.json")); }), ErrorCode::ParseError);
    write_text(path("open.json"), R"({"closed":false,"points":[[0,0],[1,0],[0,1]]})");
    EXPECT_EQ(code_of([&] { read_curve_file(path("open.json")); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([&] { read_curve_file(path("missing.json")); }), ErrorCode::ParseError);
}

TEST_F(MeshIo, OffRoundTripWithSidecar) {
    const SurfaceMesh s = icosphere(2);
    write_off(path("s.off"), s);
    EXPECT_TRUE(fs::exists(path("s.antipode.json")));
    const SurfaceMesh back = read_off(path("s.off"));
    ASSERT_EQ(back.vertices().size(), s.vertices().size());
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        ASSERT_EQ(back.vertices()[i], s.vertices()[i]);
    }
    ASSERT_TRUE(back.antipode().has_value());
    EXPECT_EQ(*back.antipode(), *s.antipode());
    EXPECT_EQ(report_json(run_report(back)), report_json(run_report(s)));

    fs::remove(path("s.antipode.json"));
    EXPECT_FALSE(read_off(path("s.off")).antipode().has_value());
    write_text(path("quad.off"), "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n");
    EXPECT_EQ(code_of([&] { read_off(path("quad.off")); }), ErrorCode::ParseError);
}

TEST_F(MeshIo, CalibrationRoundTrip) {
    CroftonCalibration c;
    c.constant_c = 2.0013;
    c.samples = 1000;
    c.reference_area = 3.14;
    write_calibration(path("cal.json"), c);
    const CroftonCalibration back = read_calibration(path("cal.json"));
    EXPECT_EQ(back.constant_c, c.constant_c);
    EXPECT_EQ(back.samples, c.samples);
    EXPECT_EQ(back.reference_area, c.reference_area);
    write_text(path("zero.json"), R"({"c":0,"samples":1,"reference_area":1})");
    EXPECT_EQ(code_of([&] { read_calibration(path("zero.json")); }), ErrorCode::ParseError);
}

TEST(Csv, FieldQuotingAndNumbers) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(2.0), "2");
    EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST_F(Svg, CurveWithChordsIsDeterministic) {
    const ClosedCurve c = generate_curve({FamilyKind::circle, {}, 4096, 0});
    const std::string a = svg_curve_with_chords(c, 64);
    EXPECT_EQ(a, svg_curve_with_chords(c, 64));
    EXPECT_EQ(count(a, "<line "), 64u);
    EXPECT_EQ(count(a, "<polygon "), 1u);
    // Every chord of the circle is a diameter: its midpoint is the center.
    const std::regex line_re(R"re(<line x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re");
    for (auto it = std::sregex_iterator(a.begin(), a.end(), line_re); it != std::sregex_iterator(); ++it) {
        const double mx = 0.5 * (std::stod((*it)[1]) + std::stod((*it)[3]));
        const double my = 0.5 * (std::stod((*it)[2]) + std::stod((*it)[4]));
        EXPECT_NEAR(mx, 0.0, 1e-5);
        EXPECT_NEAR(my, 0.0, 1e-5);
    }
    EXPECT_EQ(code_of([&] { svg_curve_with_chords(c, 0); }), ErrorCode::InvalidSpec);
}

TEST_F(Svg, RenderFromFiles) {
    SweepResult sweep;
    for (int n : {4, 8, 16}) {
        SweepRow r;
        r.n = n;
        r.ratio = 2.0 + 10.0 / n;
        r.bound = 2.0 + 47.0 / n;
        sweep.rows.push_back(r);
    }
    write_text(path("sweep.csv"), sweep_csv(sweep));
    const auto rows = read_sweep_csv(path("sweep.csv"));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1].n, 8);
    EXPECT_DOUBLE_EQ(rows[1].ratio, 2.0 + 10.0 / 8);

    PlotSpec spec{PlotKind::ratio_vs_n, {path("sweep.csv")}, path("r.svg"), 1};
    render_svg(spec);
    const std::string svg = read_text(path("r.svg"));
    EXPECT_EQ(count(svg, "<circle "), 3u);
    render_svg(spec);
    EXPECT_EQ(read_text(path("r.svg")), svg);

    const ClosedCurve c = generate_curve({FamilyKind::circle, {}, 256, 0});
    write_text(path("m.json"), report_json(run_report(c, 10'000, 0)));
    render_svg({PlotKind::margin_bars, {path("m.json")}, path("m.svg"), 1});
    EXPECT_EQ(count(read_text(path("m.svg")), "<rect "), 5u);

    EXPECT_EQ(code_of([&] { render_svg({PlotKind::curve_with_chords, {path("nope.json")}, path("x.svg"), 4}); }),
              ErrorCode::InvalidSpec);
    EXPECT_EQ(code_of([] { parse_plot_kind("pie"); }), ErrorCode::InvalidSpec);
}
