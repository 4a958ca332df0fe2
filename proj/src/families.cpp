#include "chordarea/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "chordarea/error.hpp"
#include "chordarea/random.hpp"

namespace chordarea {

namespace {

constexpr double kPi = std::numbers::pi;

struct KindName {
    FamilyKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::circle, "circle"},
    {FamilyKind::ellipse, "ellipse"},
    {FamilyKind::fourier_random, "fourier_random"},
    {FamilyKind::support_convex, "support_convex"},
    {FamilyKind::horseshoe, "horseshoe"},
    {FamilyKind::trefoil, "trefoil"},
    {FamilyKind::doubled_segment, "doubled_segment"},
    {FamilyKind::figure_eight, "figure_eight"},
    {FamilyKind::sphere_mesh, "sphere_mesh"},
    {FamilyKind::symmetric_mesh, "symmetric_mesh"},
};

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw GeometryError(ErrorCode::InvalidSpec, what);
    }
}

int integer_param(const FamilySpec& spec, const std::string& name, double fallback) {
    const double v = spec.param(name, fallback);
    require(std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e9, name + " must be an integer");
    return static_cast<int>(v);
}

/// Dense samples of a periodic parametrization over [0, 2 pi).
template <typename F>
std::vector<Vec3> dense_samples(std::size_t count, F&& f) {
    std::vector<Vec3> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        out.push_back(f(2.0 * kPi * static_cast<double>(j) / static_cast<double>(count)));
    }
    return out;
}

std::size_t dense_count(std::size_t n) { return std::max<std::size_t>(16 * n, 16384); }

ClosedCurve make_circle(const FamilySpec& spec) {
    const double radius = spec.param("radius", 1.0);
    require(radius > 0.0 && std::isfinite(radius), "radius must be positive");
    const std::size_t n = spec.n_samples;
    std::vector<Vec3> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        pts.push_back({radius * std::cos(t), radius * std::sin(t), 0.0});
    }
    return ClosedCurve(2, std::move(pts));
}

ClosedCurve make_ellipse(const FamilySpec& spec) {
    const double a = spec.param("a", 2.0);
    const double b = spec.param("b", 1.0);
    require(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b), "semi-axes must be positive");
    const auto dense = dense_samples(dense_count(spec.n_samples), [&](double t) {
        return Vec3{a * std::cos(t), b * std::sin(t), 0.0};
    });
    return resample_arclength(dense, spec.n_samples, 2);
}

ClosedCurve make_fourier(const FamilySpec& spec) {
    const int modes = integer_param(spec, "modes", 5);
    const double amplitude = spec.param("amplitude", 0.6);
    const bool odd_only = spec.param("odd_only", 0.0) != 0.0;
    require(modes >= 1 && modes <= 64, "modes must be in [1, 64]");
    require(std::isfinite(amplitude) && amplitude >= 0.0, "amplitude must be finite and non-negative");

    Rng rng(spec.seed, 0x46);
    struct Harmonic {
        double k, xc, xs, yc, ys;
    };
    std::vector<Harmonic> harmonics;
    for (int k = 1; k <= modes; ++k) {
        const double w = amplitude / (static_cast<double>(k) * k);
        Harmonic h{static_cast<double>(k), 0, 0, 0, 0};
        h.xc = w * rng.uniform(-1.0, 1.0);
        h.xs = w * rng.uniform(-1.0, 1.0);
        h.yc = w * rng.uniform(-1.0, 1.0);
        h.ys = w * rng.uniform(-1.0, 1.0);
        if (!odd_only || k % 2 == 1) {
            harmonics.push_back(h);
        }
    }
    auto eval = [&](double t) {
        Vec3 p{std::cos(t), std::sin(t), 0.0};
        for (const auto& h : harmonics) {
            const double c = std::cos(h.k * t);
            const double s = std::sin(h.k * t);
            p.x += h.xc * c + h.xs * s;
            p.y += h.yc * c + h.ys * s;
        }
        return p;
    };
    const std::size_t m = dense_count(spec.n_samples);
    std::vector<Vec3> dense = dense_samples(m, eval);
    if (odd_only) {
        // Only odd harmonics: f(t + pi) = -f(t); make it exact in the samples.
        for (std::size_t j = m / 2; j < m; ++j) {
            dense[j] = -dense[j - m / 2];
        }
    }
    return resample_arclength(dense, spec.n_samples, 2);
}

ClosedCurve make_support_convex(const FamilySpec& spec) {
    const int modes = integer_param(spec, "modes", 4);
    require(modes >= 2 && modes <= 32, "modes must be in [2, 32]");
    Rng rng(spec.seed, 0x53);
    std::vector<double> ca(modes + 1, 0.0), cb(modes + 1, 0.0);
    double weight = 0.0;
    for (int k = 2; k <= modes; ++k) {
        ca[k] = rng.uniform(-1.0, 1.0);
        cb[k] = rng.uniform(-1.0, 1.0);
        weight += (k * k - 1.0) * (std::abs(ca[k]) + std::abs(cb[k]));
    }
    // Radius of curvature h + h'' stays >= 1 - budget >= 0.2.
    const double budget = 0.8 * rng.uniform(0.25, 1.0);
    const double scale = weight > 0.0 ? budget / weight : 0.0;
    for (int k = 2; k <= modes; ++k) {
        ca[k] *= scale;
        cb[k] *= scale;
    }
    const auto dense = dense_samples(dense_count(spec.n_samples), [&](double t) {
        double h = 1.0;
        double dh = 0.0;
        for (int k = 2; k <= modes; ++k) {
            const double c = std::cos(k * t);
            const double s = std::sin(k * t);
            h += ca[k] * c + cb[k] * s;
            dh += k * (cb[k] * c - ca[k] * s);
        }
        const double c = std::cos(t);
        const double s = std::sin(t);
        return Vec3{h * c - dh * s, h * s + dh * c, 0.0};
    });
    return resample_arclength(dense, spec.n_samples, 2);
}

ClosedCurve make_trefoil(const FamilySpec& spec) {
    const double scale = spec.param("scale", 1.0);
    require(scale > 0.0 && std::isfinite(scale), "scale must be positive");
    const auto dense = dense_samples(dense_count(spec.n_samples), [&](double t) {
        const double rho = 2.0 + std::cos(2.0 * t);
        return Vec3{scale * rho * std::cos(3.0 * t), scale * rho * std::sin(3.0 * t), scale * std::sin(2.0 * t)};
    });
    return resample_arclength(dense, spec.n_samples, 3);
}

ClosedCurve make_figure_eight(const FamilySpec& spec) {
    const double scale = spec.param("scale", 1.0);
    require(scale > 0.0 && std::isfinite(scale), "scale must be positive");
    const auto dense = dense_samples(dense_count(spec.n_samples), [&](double t) {
        return Vec3{scale * std::sin(t), scale * std::sin(t) * std::cos(t), 0.0};
    });
    return resample_arclength(dense, spec.n_samples, 2);
}

ClosedCurve make_doubled_segment(const FamilySpec& spec) {
    const double length = spec.param("length", 1.0);
    require(length > 0.0 && std::isfinite(length), "length must be positive");
    const std::size_t n = spec.n_samples;
    require(n % 4 == 0, "doubled_segment needs n_samples divisible by 4");
    const std::size_t half = n / 2;
    const std::size_t quarter = n / 4;
    std::vector<Vec3> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i % half;
        const std::size_t k = j <= quarter ? j : half - j;
        pts.push_back({length * static_cast<double>(k) / static_cast<double>(quarter), 0.0, 0.0});
    }
    return ClosedCurve(2, std::move(pts));
}

ClosedCurve make_horseshoe(const FamilySpec& spec) {
    const int n = integer_param(spec, "n", 4);
    return resample_arclength(horseshoe_outline(n), spec.n_samples, 2);
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
    for (const auto& kn : kKindNames) {
        if (kn.kind == kind) {
            return kn.name;
        }
    }
    return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
    for (const auto& kn : kKindNames) {
        if (kn.name == name) {
            return kn.kind;
        }
    }
    throw GeometryError(ErrorCode::InvalidSpec, "unknown family kind '" + std::string(name) + "'");
}

bool is_mesh_kind(FamilyKind kind) { return kind == FamilyKind::sphere_mesh || kind == FamilyKind::symmetric_mesh; }

double FamilySpec::param(const std::string& name, double fallback) const {
    const auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

std::string format_params(const std::map<std::string, double>& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) {
            out += ';';
        }
        out += key;
        out += '=';
        out += format_double(value);
    }
    return out;
}

std::map<std::string, double> parse_params(std::string_view text) {
    std::map<std::string, double> out;
    while (!text.empty()) {
        const auto semi = text.find(';');
        const std::string_view item = trim(text.substr(0, semi));
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw GeometryError(ErrorCode::ParseError, "expected key=value, got '" + std::string(item) + "'");
        }
        const std::string_view key = trim(item.substr(0, eq));
        const std::string_view val = trim(item.substr(eq + 1));
        double v = 0.0;
        const auto res = std::from_chars(val.data(), val.data() + val.size(), v);
        if (key.empty() || res.ec != std::errc{} || res.ptr != val.data() + val.size()) {
            throw GeometryError(ErrorCode::ParseError, "bad parameter '" + std::string(item) + "'");
        }
        out[std::string(key)] = v;
    }
    return out;
}

HorseshoeGeometry horseshoe_geometry(int n) {
    require(n >= 2, "horseshoe needs n >= 2");
    const double dn = n;
    HorseshoeGeometry g;
    g.n = n;
    g.outer_radius = 1.0 / dn + 1.0 / (2.0 * dn * dn);
    g.inner_radius = (kPi * g.outer_radius + 1.0 / (dn * dn)) / (kPi + 2.0);
    g.length = 4.0 + 2.0 / dn + 2.0 * kPi * g.outer_radius;
    g.lower_bound_area = 2.0 / dn;
    g.area = g.lower_bound_area +
             0.5 * kPi * (g.outer_radius * g.outer_radius - g.inner_radius * g.inner_radius);
    g.bar_chord = 1.0 / dn + 1.0 / (dn * dn);
    return g;
}

std::vector<Vec3> horseshoe_outline(int n, std::size_t arc_samples) {
    const HorseshoeGeometry g = horseshoe_geometry(n);
    const double R = g.outer_radius;
    const double r = g.inner_radius;
    const double gap = 0.5 / (static_cast<double>(n) * n);
    const Vec3 center{1.0, 0.0, 0.0};

    std::vector<Vec3> out;
    double arc = 0.0;
    auto line = [&](const Vec3& from, const Vec3& to) {
        out.push_back(from);
        arc += distance(from, to);
    };
    auto semicircle = [&](double radius, double from_angle, double to_angle) {
        for (std::size_t j = 0; j < arc_samples; ++j) {
            const double t = from_angle + (to_angle - from_angle) * static_cast<double>(j) / arc_samples;
            out.push_back(center + Vec3{radius * std::cos(t), radius * std::sin(t), 0.0});
        }
        arc += kPi * radius;
    };

    const Vec3 a{0.0, R, 0.0}, b{1.0, R, 0.0}, c{0.0, gap, 0.0}, d{1.0, gap, 0.0};
    const Vec3 as{0.0, -gap, 0.0}, bs{1.0, -gap, 0.0}, cs{0.0, -R, 0.0}, ds{1.0, -R, 0.0};
    double s_a = 0, s_b = 0, s_c = 0, s_d = 0, s_as = 0, s_bs = 0, s_cs = 0, s_ds = 0;

    s_a = arc;
    line(a, b);
    s_b = arc;
    semicircle(R, 0.5 * kPi, -0.5 * kPi);
    s_ds = arc;
    line(ds, cs);
    s_cs = arc;
    line(cs, as);
    s_as = arc;
    line(as, bs);
    s_bs = arc;
    line(bs, {1.0, -r, 0.0});
    semicircle(r, -0.5 * kPi, 0.5 * kPi);
    line({1.0, r, 0.0}, d);
    s_d = arc;
    line(d, c);
    s_c = arc;
    line(c, a);

    const double half = 0.5 * arc;
    const double tol = 1e-9 * arc;
    const bool paired = std::abs(s_as - s_a - half) <= tol && std::abs(s_bs - s_b - half) <= tol &&
                        std::abs(s_d - s_ds - half) <= tol && std::abs(s_c - s_cs - half) <= tol &&
                        std::abs(arc - g.length) <= tol;
    if (!paired) {
        throw GeometryError(ErrorCode::AntipodeMismatch, "horseshoe corners are not half a length apart");
    }
    return out;
}

ClosedCurve generate_curve(const FamilySpec& spec) {
    require(spec.n_samples >= 8 && spec.n_samples % 2 == 0, "n_samples must be even and >= 8");
    for (const auto& [key, value] : spec.params) {
        require(std::isfinite(value), "parameter " + key + " is not finite");
    }
    switch (spec.kind) {
        case FamilyKind::circle:
            return make_circle(spec);
        case FamilyKind::ellipse:
            return make_ellipse(spec);
        case FamilyKind::fourier_random:
            return make_fourier(spec);
        case FamilyKind::support_convex:
            return make_support_convex(spec);
        case FamilyKind::horseshoe:
            return make_horseshoe(spec);
        case FamilyKind::trefoil:
            return make_trefoil(spec);
        case FamilyKind::doubled_segment:
            return make_doubled_segment(spec);
        case FamilyKind::figure_eight:
            return make_figure_eight(spec);
        default:
            break;
    }
    throw GeometryError(ErrorCode::InvalidSpec, std::string(to_string(spec.kind)) + " is not a curve family");
}

SurfaceMesh generate_mesh(const FamilySpec& spec) {
    const int subdiv = integer_param(spec, "subdiv", spec.kind == FamilyKind::sphere_mesh ? 4 : 3);
    require(subdiv >= 0 && subdiv <= 8, "subdiv must be in [0, 8]");
    if (spec.kind == FamilyKind::sphere_mesh) {
        const double radius = spec.param("radius", 1.0);
        require(radius > 0.0 && std::isfinite(radius), "radius must be positive");
        return icosphere(subdiv, radius);
    }
    if (spec.kind == FamilyKind::symmetric_mesh) {
        const double a = spec.param("a", 1.0);
        const double b = spec.param("b", 0.8);
        const double c = spec.param("c", 0.6);
        const double amp = spec.param("amp", 0.0);
        require(a > 0.0 && b > 0.0 && c > 0.0, "semi-axes must be positive");
        require(amp >= 0.0 && amp < 1.0 / 6.0, "amp must be in [0, 1/6)");
        double q[6] = {};
        Rng rng(spec.seed, 0x4d);
        for (double& v : q) {
            v = rng.uniform(-1.0, 1.0);
        }
        // Ellipsoid radius times an even (quadratic) modulation, so r(u) = r(-u).
        return make_symmetric_mesh(
            [=](const Vec3& u) {
                const double e = 1.0 / std::sqrt(u.x * u.x / (a * a) + u.y * u.y / (b * b) + u.z * u.z / (c * c));
                const double w = q[0] * u.x * u.x + q[1] * u.y * u.y + q[2] * u.z * u.z + q[3] * u.x * u.y +
                                 q[4] * u.y * u.z + q[5] * u.z * u.x;
                return e * (1.0 + amp * w);
            },
            subdiv);
    }
    throw GeometryError(ErrorCode::InvalidSpec, std::string(to_string(spec.kind)) + " is not a mesh family");
}

Shape generate(const FamilySpec& spec) {
    if (is_mesh_kind(spec.kind)) {
        return generate_mesh(spec);
    }
    return generate_curve(spec);
}

std::vector<FamilySpec> standard_corpus(std::size_t n_samples) {
    std::vector<FamilySpec> out;
    for (std::uint64_t s = 0; s < 100; ++s) {
        out.push_back({FamilyKind::fourier_random, {{"modes", 5}}, n_samples, s});
    }
    for (std::uint64_t s = 0; s < 50; ++s) {
        out.push_back({FamilyKind::support_convex, {{"modes", 4}}, n_samples, s});
    }
    for (std::uint64_t s = 0; s < 50; ++s) {
        out.push_back({FamilyKind::fourier_random, {{"modes", 5}, {"odd_only", 1}}, n_samples, s});
    }
    return out;
}

}  // namespace chordarea
