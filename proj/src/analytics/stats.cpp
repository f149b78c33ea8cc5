#include "gcrop/analytics/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "gcrop/analytics/geometry.hpp"

namespace gcrop::analytics {

void Scene::validate() const {
    if (objects.empty())
        throw std::invalid_argument("scene: object list must be non-empty");
    for (const Rect& r : objects)
        if (!r.in_bounds(dims))
            throw std::invalid_argument("scene: object box out of bounds");
}

GeometryStats geometry_stats(const CropperConfig& config, ImageDims dims,
                             int n_samples, int grid, RngStream& rng) {
    config.validate();
    if (n_samples < 1)
        throw std::invalid_argument("geometry_stats: n_samples must be >= 1");
    if (grid < 1)
        throw std::invalid_argument("geometry_stats: grid must be >= 1");

    GeometryStats stats;
    stats.grid = grid;
    stats.coverage.assign(static_cast<std::size_t>(grid) * grid, 0.0);

    double iou_sum = 0.0;
    double dist_sum = 0.0;
    double oob_sum = 0.0;
    long long pair_count = 0;
    long long view_count = 0;

    for (int s = 0; s < n_samples; ++s) {
        const ViewRects vr = sample_view_rects(config, dims, rng);
        const auto& rects = vr.rects;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            for (std::size_t j = i + 1; j < rects.size(); ++j) {
                iou_sum += iou(rects[i], rects[j]);
                const double dx = rects[i].center_x() - rects[j].center_x();
                const double dy = rects[i].center_y() - rects[j].center_y();
                dist_sum += std::sqrt(dx * dx + dy * dy);
                ++pair_count;
            }
        }
        for (const Rect& r : rects) {
            oob_sum += oob_fraction(r, dims);
            ++view_count;
            // A cell is visited when its center falls inside the rect.
            for (int gy = 0; gy < grid; ++gy) {
                const double py = (gy + 0.5) * dims.height / grid;
                if (py < r.top || py >= r.bottom()) continue;
                for (int gx = 0; gx < grid; ++gx) {
                    const double px = (gx + 0.5) * dims.width / grid;
                    if (px >= r.left && px < r.right())
                        stats.coverage[static_cast<std::size_t>(gy) * grid + gx] += 1.0;
                }
            }
        }
    }

    stats.mean_pair_iou = iou_sum / static_cast<double>(pair_count);
    stats.mean_center_distance = dist_sum / static_cast<double>(pair_count);
    stats.oob_area_fraction = oob_sum / static_cast<double>(view_count);
    for (double& cell : stats.coverage) cell /= static_cast<double>(view_count);
    return stats;
}

namespace {

// True when some object covers every rect of the pair with per-view
// overlap ratio >= tau.
bool pair_is_related(const Rect& a, const Rect& b,
                     std::span<const Rect> objects, double tau) {
    const double area_a = static_cast<double>(a.area());
    const double area_b = static_cast<double>(b.area());
    for (const Rect& obj : objects) {
        const double ra = static_cast<double>(intersection_area(obj, a)) / area_a;
        if (ra < tau) continue;
        const double rb = static_cast<double>(intersection_area(obj, b)) / area_b;
        if (rb >= tau) return true;
    }
    return false;
}

}  // namespace

FpEstimate estimate_fp_rate(const CropperConfig& config, const Scene& scene,
                            double tau, long long n_samples, RngStream& rng) {
    config.validate();
    scene.validate();
    if (!(tau > 0.0) || !(tau < 1.0))
        throw std::invalid_argument("estimate_fp_rate: tau must lie in (0, 1)");
    if (n_samples < 1)
        throw std::invalid_argument("estimate_fp_rate: n_samples must be >= 1");

    long long trials = 0;
    long long false_positives = 0;
    for (long long s = 0; s < n_samples; ++s) {
        const ViewRects vr = sample_view_rects(config, scene.dims, rng);
        const auto& rects = vr.rects;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            for (std::size_t j = i + 1; j < rects.size(); ++j) {
                ++trials;
                if (!pair_is_related(rects[i], rects[j], scene.objects, tau))
                    ++false_positives;
            }
        }
    }

    FpEstimate est;
    est.tau = tau;
    est.n_samples = trials;
    est.fp_rate = static_cast<double>(false_positives) / static_cast<double>(trials);
    est.standard_error =
        std::sqrt(est.fp_rate * (1.0 - est.fp_rate) / static_cast<double>(trials));
    return est;
}

FpEstimate estimate_fp_rate_scenes(const CropperConfig& config,
                                   std::span<const Scene> scenes, double tau,
                                   long long n_samples, RngStream& rng) {
    if (scenes.empty())
        throw std::invalid_argument("estimate_fp_rate_scenes: no scenes");
    config.validate();
    if (!(tau > 0.0) || !(tau < 1.0))
        throw std::invalid_argument("estimate_fp_rate_scenes: tau must lie in (0, 1)");
    if (n_samples < 1)
        throw std::invalid_argument("estimate_fp_rate_scenes: n_samples must be >= 1");

    long long trials = 0;
    long long false_positives = 0;
    for (long long s = 0; s < n_samples; ++s) {
        const Scene& scene = scenes[static_cast<std::size_t>(s % scenes.size())];
        scene.validate();
        const ViewRects vr = sample_view_rects(config, scene.dims, rng);
        const auto& rects = vr.rects;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            for (std::size_t j = i + 1; j < rects.size(); ++j) {
                ++trials;
                if (!pair_is_related(rects[i], rects[j], scene.objects, tau))
                    ++false_positives;
            }
        }
    }

    FpEstimate est;
    est.tau = tau;
    est.n_samples = trials;
    est.fp_rate = static_cast<double>(false_positives) / static_cast<double>(trials);
    est.standard_error =
        std::sqrt(est.fp_rate * (1.0 - est.fp_rate) / static_cast<double>(trials));
    return est;
}

}  // namespace gcrop::analytics
