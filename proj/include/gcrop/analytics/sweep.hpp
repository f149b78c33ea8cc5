#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcrop/analytics/stats.hpp"

namespace gcrop::analytics {

struct SweepRecord {
    CropMethod method = CropMethod::Gcc;
    double alpha = 0.0;
    double crop_size = 0.0;
    std::uint64_t seed = 0;
    double fp_rate = 0.0;
    GeometryStats geometry;
    std::optional<double> lep_accuracy;
};

struct SweepFailure {
    CropMethod method;
    double alpha;
    double crop_size;
    std::uint64_t seed;
    std::string message;
};

struct SweepOptions {
    int n_geometry_samples = 10000;
    long long n_fp_samples = 10000;
    double tau = 0.2;       // overlap threshold for the FP criterion
    int grid = 16;
    int n_views = 2;
    std::pair<double, double> uniform_bounds{0.25, 0.75};
    PadPolicy pad_policy = PadPolicy::Zero;
    // Optional hook filling lep_accuracy; wired up by the CLI so the
    // analytics layer stays independent of the training kernel.
    std::function<double(const CropperConfig&, std::uint64_t seed)> lep_runner;
};

struct SweepResult {
    std::vector<SweepRecord> records;
    std::vector<SweepFailure> failures;
};

// One record per (method, alpha, crop_size, seed) cell, in grid order.
// Each cell forks its stream from (master_seed, cell index); failures are
// recorded and the sweep continues.
SweepResult run_sweep(const std::vector<CropMethod>& methods,
                      const std::vector<double>& alphas,
                      const std::vector<double>& crop_sizes,
                      const std::vector<std::uint64_t>& seeds,
                      std::span<const Scene> scenes, const SweepOptions& options,
                      std::uint64_t master_seed);

}  // namespace gcrop::analytics
