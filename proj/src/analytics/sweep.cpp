#include "gcrop/analytics/sweep.hpp"

#include <exception>
#include <stdexcept>

namespace gcrop::analytics {

SweepResult run_sweep(const std::vector<CropMethod>& methods,
                      const std::vector<double>& alphas,
                      const std::vector<double>& crop_sizes,
                      const std::vector<std::uint64_t>& seeds,
                      std::span<const Scene> scenes, const SweepOptions& options,
                      std::uint64_t master_seed) {
    if (methods.empty() || alphas.empty() || crop_sizes.empty() || seeds.empty())
        throw std::invalid_argument("run_sweep: grid must be non-empty");
    if (scenes.empty())
        throw std::invalid_argument("run_sweep: scene list must be non-empty");

    const RngStream master(master_seed);
    SweepResult result;
    std::uint64_t cell_index = 0;

    for (const CropMethod method : methods) {
        for (const double alpha : alphas) {
            for (const double crop_size : crop_sizes) {
                for (const std::uint64_t seed : seeds) {
                    CropperConfig config;
                    config.method = method;
                    config.alpha = alpha;
                    config.crop_size = crop_size;
                    config.uniform_bounds = options.uniform_bounds;
                    config.n_views = options.n_views;
                    config.pad_policy = options.pad_policy;

                    RngStream cell_rng = master.fork(cell_index).fork(seed);
                    ++cell_index;
                    try {
                        SweepRecord record;
                        record.method = method;
                        record.alpha = alpha;
                        record.crop_size = crop_size;
                        record.seed = seed;

                        RngStream geom_rng = cell_rng.fork(0);
                        record.geometry =
                            geometry_stats(config, scenes.front().dims,
                                           options.n_geometry_samples,
                                           options.grid, geom_rng);

                        RngStream fp_rng = cell_rng.fork(1);
                        record.fp_rate =
                            estimate_fp_rate_scenes(config, scenes, options.tau,
                                                    options.n_fp_samples, fp_rng)
                                .fp_rate;

                        if (options.lep_runner)
                            record.lep_accuracy = options.lep_runner(config, seed);

                        result.records.push_back(std::move(record));
                    } catch (const std::exception& e) {
                        result.failures.push_back(
                            {method, alpha, crop_size, seed, e.what()});
                    }
                }
            }
        }
    }
    return result;
}

}  // namespace gcrop::analytics
