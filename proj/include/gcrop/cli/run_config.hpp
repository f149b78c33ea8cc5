#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gcrop/analytics/sweep.hpp"
#include "gcrop/core/cropper.hpp"
#include "gcrop/io/synthetic.hpp"
#include "gcrop/train/trainer.hpp"

namespace gcrop::cli {

// Declarative run configuration. A JSON document populates it; scalar CLI
// flags override individual fields afterwards.
struct RunConfig {
    std::uint64_t seed = 42;
    std::filesystem::path out_dir = "out";

    CropperConfig cropper;

    double flip_probability = 0.5;
    double blur_sigma = 1.0;

    // training hyperparameters
    double tau = 0.5;
    double lr = 0.05;
    int epochs = 10;
    int batch_size = 64;
    int embedding_dim = 32;
    std::vector<int> hidden{64};
    int lep_epochs = 40;
    double lep_lr = 0.1;
    int lep_batch_size = 32;

    // dataset source
    enum class Source { Synthetic, Cifar10 };
    Source source = Source::Synthetic;
    std::filesystem::path cifar10_path;
    int train_count = 2000;
    int test_count = 500;
    io::SyntheticSceneSpec synthetic;

    // stats command
    int stats_n_samples = 10000;
    long long stats_n_fp_samples = 10000;
    int stats_grid = 16;
    double tau_overlap = 0.2;

    // sweep command
    std::vector<CropMethod> sweep_methods{CropMethod::Gcc, CropMethod::RandomCrop};
    std::vector<double> sweep_alphas{0.25, 0.5, 1.0, 2.0};
    std::vector<double> sweep_crop_sizes{0.2, 0.4, 0.6, 0.8};
    std::vector<std::uint64_t> sweep_seeds{0, 1, 2, 3};
    int sweep_n_geometry_samples = 2000;
    long long sweep_n_fp_samples = 2000;
    int sweep_n_scenes = 64;
    bool sweep_with_lep = false;

    // demo command
    std::filesystem::path demo_image;  // empty = render a synthetic sample

    // Every problem becomes one named diagnostic; an empty result means the
    // config is runnable.
    std::vector<std::string> validate() const;
};

// Parses the JSON document; structural problems (bad types, unknown keys)
// come back as diagnostics rather than exceptions.
RunConfig parse_run_config(const std::string& json_text,
                           std::vector<std::string>& diagnostics);

RunConfig load_run_config(const std::filesystem::path& path,
                          std::vector<std::string>& diagnostics);

}  // namespace gcrop::cli
