#pragma once

#include <span>
#include <vector>

#include "gcrop/analytics/scene.hpp"
#include "gcrop/core/cropper.hpp"

namespace gcrop::analytics {

// Aggregate crop geometry over many independent view-set draws.
struct GeometryStats {
    double mean_pair_iou = 0.0;
    double mean_center_distance = 0.0;  // pixels
    double oob_area_fraction = 0.0;
    int grid = 0;
    // grid x grid visit frequencies, row-major; each entry is the fraction
    // of sampled views covering that cell's center, so entries lie in
    // [0, 1] and the grid total is at most grid^2.
    std::vector<double> coverage;

    double coverage_at(int gx, int gy) const {
        return coverage[static_cast<std::size_t>(gy) * grid + gx];
    }
};

GeometryStats geometry_stats(const CropperConfig& config, ImageDims dims,
                             int n_samples, int grid, RngStream& rng);

struct FpEstimate {
    double fp_rate = 0.0;
    long long n_samples = 0;  // number of Bernoulli trials (view pairs)
    double tau = 0.0;
    double standard_error = 0.0;
};

// A view pair is a false positive when no single object overlaps both
// views with intersection/view-area >= tau. With n_views > 2 every
// unordered pair of the draw counts as one trial.
FpEstimate estimate_fp_rate(const CropperConfig& config, const Scene& scene,
                            double tau, long long n_samples, RngStream& rng);

// Pools trials round-robin across several scenes.
FpEstimate estimate_fp_rate_scenes(const CropperConfig& config,
                                   std::span<const Scene> scenes, double tau,
                                   long long n_samples, RngStream& rng);

}  // namespace gcrop::analytics
