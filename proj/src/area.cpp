#include "chordarea/area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "chordarea/error.hpp"
#include "chordarea/parallel.hpp"
#include "chordarea/planar_index.hpp"
#include "chordarea/random.hpp"
#include "chordarea/surface_index.hpp"

namespace chordarea {

std::string_view to_string(AreaMethod method) {
    switch (method) {
        case AreaMethod::grid: return "grid";
        case AreaMethod::monte_carlo: return "monte_carlo";
        case AreaMethod::crofton_lines: return "crofton_lines";
        case AreaMethod::shoelace: return "shoelace";
        case AreaMethod::divergence: return "divergence";
    }
    return "unknown";
}

namespace {

void require_budget(std::uint64_t budget) {
    if (budget == 0) {
        throw GeometryError(ErrorCode::InsufficientSamples, "sample budget must be positive");
    }
}

/// Binomial standard error of a hit fraction. The Laplace-smoothed rate keeps
/// the error positive when every sample agrees.
double binomial_std_error(std::uint64_t hits, std::uint64_t n) {
    const double p = (static_cast<double>(hits) + 1.0) / (static_cast<double>(n) + 2.0);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

/// Runs ceil(budget / kShardSize) shards; shard s draws `count` accepted samples
/// from Rng(seed, s) and returns its hit count. Totals do not depend on threading.
template <class Shard>
std::uint64_t run_shards(std::uint64_t budget, std::uint64_t seed, Shard&& shard) {
    const std::uint64_t shards = (budget + kShardSize - 1) / kShardSize;
    std::vector<std::uint64_t> hits(shards, 0);
    parallel_for(shards, [&](std::size_t s) {
        const std::uint64_t begin = s * kShardSize;
        const std::uint64_t count = std::min(kShardSize, budget - begin);
        Rng rng(seed, s);
        hits[s] = shard(rng, count);
    });
    std::uint64_t total = 0;
    for (auto h : hits) {
        total += h;
    }
    return total;
}

}  // namespace

AreaEstimate area_planar(const ClosedCurve& curve, std::uint64_t budget, std::uint64_t seed) {
    require_budget(budget);
    const PlanarWindingIndex index({curve.points().begin(), curve.points().end()}, 1e-12 * curve.length());
    const double pad = 1e-6 * curve.length();
    const Vec3 lo = index.lower() - Vec3{pad, pad, 0.0};
    const Vec3 hi = index.upper() + Vec3{pad, pad, 0.0};
    const double box = (hi.x - lo.x) * (hi.y - lo.y);

    const std::uint64_t hits = run_shards(budget, seed, [&](Rng& rng, std::uint64_t count) {
        std::uint64_t odd = 0;
        for (std::uint64_t k = 0; k < count;) {
            const double x = rng.uniform(lo.x, hi.x);
            const double y = rng.uniform(lo.y, hi.y);
            const auto w = index.winding(x, y);
            if (!w) {
                continue;
            }
            odd += static_cast<std::uint64_t>(std::abs(*w) % 2);
            ++k;
        }
        return odd;
    });
    AreaEstimate out;
    out.value = box * static_cast<double>(hits) / static_cast<double>(budget);
    out.std_error = box * binomial_std_error(hits, budget);
    out.samples_used = budget;
    out.method = AreaMethod::monte_carlo;
    return out;
}

AreaEstimate area_planar_exact_simple(const ClosedCurve& curve) {
    const auto pts = curve.points();
    const Vec3 origin = pts[0];
    double twice = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        twice += cross2(pts[i] - origin, pts[(i + 1) % pts.size()] - origin);
    }
    AreaEstimate out;
    out.value = 0.5 * std::abs(twice);
    out.method = AreaMethod::shoelace;
    return out;
}

double CroftonCalibration::relative_std_error() const {
    if (samples == 0 || !(constant_c > 0.0)) {
        return 0.0;
    }
    const double p = 1.0 / (constant_c * kCroftonPadding * kCroftonPadding);
    if (!(p > 0.0 && p < 1.0)) {
        return 0.0;
    }
    return std::sqrt((1.0 - p) / (p * static_cast<double>(samples)));
}

CroftonCalibration calibrate_crofton(std::uint64_t budget, std::uint64_t seed, double disk_radius) {
    require_budget(budget);
    if (!(disk_radius > 0.0)) {
        throw GeometryError(ErrorCode::NonPositiveInput, "calibration disk radius must be positive");
    }
    const double rho = kCroftonPadding * disk_radius;
    const double r2 = disk_radius * disk_radius;
    const std::uint64_t hits = run_shards(budget, seed, [&](Rng& rng, std::uint64_t count) {
        std::uint64_t n = 0;
        for (std::uint64_t k = 0; k < count; ++k) {
            const Vec3 d = rng.unit_vector();
            Vec3 e1, e2;
            orthonormal_frame(d, e1, e2);
            double u = 0.0, v = 0.0;
            rng.disk(rho, u, v);
            const Vec3 base = u * e1 + v * e2;
            if (d.z == 0.0) {
                continue;
            }
            const Vec3 x = base - (base.z / d.z) * d;
            if (x.x * x.x + x.y * x.y <= r2) {
                ++n;
            }
        }
        return n;
    });
    if (hits == 0) {
        throw GeometryError(ErrorCode::InsufficientSamples, "no calibration line met the disk");
    }
    CroftonCalibration out;
    out.reference_area = std::numbers::pi * r2;
    const double mean = static_cast<double>(hits) / static_cast<double>(budget);
    out.constant_c = out.reference_area / (mean * std::numbers::pi * rho * rho);
    out.samples = budget;
    return out;
}

AreaEstimate area_space_curve(const ClosedCurve& curve, const CroftonCalibration& calib, std::uint64_t budget,
                              std::uint64_t seed) {
    require_budget(budget);
    if (!(calib.constant_c > 0.0)) {
        throw GeometryError(ErrorCode::MissingCalibration, "calibration constant must be positive");
    }
    const auto pts = curve.points();
    Vec3 lo = pts[0], hi = pts[0];
    for (const auto& p : pts) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    const Vec3 center = 0.5 * (lo + hi);
    double radius = 0.0;
    for (const auto& p : pts) {
        radius = std::max(radius, distance(p, center));
    }
    const double rho = kCroftonPadding * radius;
    const double region = std::numbers::pi * rho * rho;
    const double on_tol = 1e-12 * curve.length();

    const std::uint64_t groups = (budget + kLinesPerDirection - 1) / kLinesPerDirection;
    std::vector<std::uint64_t> odd(groups, 0);
    parallel_for(groups, [&](std::size_t g) {
        Rng rng(seed, g);
        const Vec3 d = rng.unit_vector();
        Vec3 e1, e2;
        orthonormal_frame(d, e1, e2);
        std::vector<Vec3> flat(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            flat[i] = {dot(pts[i], e1), dot(pts[i], e2), 0.0};
        }
        const PlanarWindingIndex index(std::move(flat), on_tol);
        const double cu = dot(center, e1), cv = dot(center, e2);
        std::uint64_t n = 0;
        for (std::uint64_t k = 0; k < kLinesPerDirection;) {
            double u = 0.0, v = 0.0;
            rng.disk(rho, u, v);
            const auto w = index.winding(cu + u, cv + v);
            if (!w) {
                continue;  // line meets the curve; redraw
            }
            n += static_cast<std::uint64_t>(std::abs(*w) % 2);
            ++k;
        }
        odd[g] = n;
    });

    const double scale = calib.constant_c * region / static_cast<double>(kLinesPerDirection);
    double sum = 0.0, sum2 = 0.0;
    std::uint64_t total = 0;
    for (auto n : odd) {
        const double y = scale * static_cast<double>(n);
        sum += y;
        sum2 += y * y;
        total += n;
    }
    const double g = static_cast<double>(groups);
    const std::uint64_t used = groups * kLinesPerDirection;
    AreaEstimate out;
    out.value = sum / g;
    double se = calib.constant_c * region * binomial_std_error(total, used);
    if (groups > 1) {
        const double var = std::max(0.0, (sum2 - sum * sum / g) / (g - 1.0));
        se = std::sqrt(var / g);
    }
    const double calib_se = out.value * calib.relative_std_error();
    out.std_error = std::sqrt(se * se + calib_se * calib_se);
    out.samples_used = used;
    out.method = AreaMethod::crofton_lines;
    return out;
}

AreaEstimate volume_mesh_divergence(const SurfaceMesh& mesh) {
    require_closed(mesh);
    const auto v = mesh.vertices();
    // Signed tetrahedra against the first vertex keep the sum translation invariant.
    const Vec3 origin = v[0];
    double six = 0.0;
    for (const auto& t : mesh.triangles()) {
        six += dot(v[t[0]] - origin, cross(v[t[1]] - origin, v[t[2]] - origin));
    }
    AreaEstimate out;
    out.value = std::abs(six) / 6.0;
    out.method = AreaMethod::divergence;
    return out;
}

AreaEstimate volume_mesh_parity(const SurfaceMesh& mesh, std::uint64_t budget, std::uint64_t seed) {
    require_budget(budget);
    const SurfaceParityIndex index(mesh);
    const auto v = mesh.vertices();
    Vec3 lo = v[0], hi = v[0];
    for (const auto& p : v) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    const double pad = 1e-6 * mesh.scale();
    lo -= Vec3{pad, pad, pad};
    hi += Vec3{pad, pad, pad};
    const double box = (hi.x - lo.x) * (hi.y - lo.y) * (hi.z - lo.z);

    const std::uint64_t hits = run_shards(budget, seed, [&](Rng& rng, std::uint64_t count) {
        std::uint64_t odd = 0;
        for (std::uint64_t k = 0; k < count;) {
            const Vec3 q{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y), rng.uniform(lo.z, hi.z)};
            const auto p = index.parity(q);
            if (!p) {
                continue;
            }
            odd += static_cast<std::uint64_t>(*p);
            ++k;
        }
        return odd;
    });
    AreaEstimate out;
    out.value = box * static_cast<double>(hits) / static_cast<double>(budget);
    out.std_error = box * binomial_std_error(hits, budget);
    out.samples_used = budget;
    out.method = AreaMethod::monte_carlo;
    return out;
}

}  // namespace chordarea
