#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcrop/cli/commands.hpp"
#include "gcrop/cli/run_config.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gcrop: parameterized Gaussian crop sampling, crop analytics and a "
        "desk-scale contrastive pretraining kernel"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "JSON run configuration")
        ->envname("GCROP_CONFIG");

    std::string out_dir;
    std::uint64_t seed = 0;
    double alpha = 0.0, crop_size = 0.0, tau = 0.0;
    int epochs = 0;
    std::string method;
    auto* seed_opt = app.add_option("--seed", seed, "master seed override");
    auto* out_opt = app.add_option("--out", out_dir, "output directory override");
    auto* alpha_opt = app.add_option("--alpha", alpha, "cropper alpha override");
    auto* crop_opt =
        app.add_option("--crop-size", crop_size, "crop area fraction override");
    auto* method_opt = app.add_option(
        "--method", method, "cropper method (RandomCrop|GCC|CGCC|MGCC|MCGCC)");
    auto* tau_opt = app.add_option("--tau", tau, "NT-Xent temperature override");
    auto* epochs_opt =
        app.add_option("--epochs", epochs, "pretraining epochs override");

    CLI::App* demo = app.add_subcommand(
        "demo-crops", "sample one view set; write rect JSON and view PPMs");
    std::string demo_image;
    demo->add_option("--image", demo_image, "input PPM (default: synthetic)");

    CLI::App* stats = app.add_subcommand(
        "stats", "Monte Carlo geometry and false-positive report");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "grid sweep over methods x alpha x crop size x seeds");
    CLI::App* pretrain = app.add_subcommand(
        "pretrain", "contrastive pretraining; writes encoder checkpoint");
    CLI::App* linear_eval = app.add_subcommand(
        "linear-eval", "linear evaluation of a frozen encoder");
    std::string encoder_path;
    linear_eval->add_option(
        "--encoder", encoder_path,
        "encoder checkpoint (omit to evaluate the untrained baseline)");

    CLI11_PARSE(app, argc, argv);

    std::vector<std::string> diagnostics;
    gcrop::cli::RunConfig config;
    if (!config_path.empty())
        config = gcrop::cli::load_run_config(config_path, diagnostics);

    if (seed_opt->count() > 0) config.seed = seed;
    if (out_opt->count() > 0) config.out_dir = out_dir;
    if (alpha_opt->count() > 0) config.cropper.alpha = alpha;
    if (crop_opt->count() > 0) config.cropper.crop_size = crop_size;
    if (method_opt->count() > 0) {
        if (const auto parsed = gcrop::parse_crop_method(method))
            config.cropper.method = *parsed;
        else
            diagnostics.push_back("--method: unknown method '" + method + "'");
    }
    if (tau_opt->count() > 0) config.tau = tau;
    if (epochs_opt->count() > 0) config.epochs = epochs;
    if (!demo_image.empty()) config.demo_image = demo_image;

    for (const std::string& d : config.validate()) diagnostics.push_back(d);
    if (!diagnostics.empty()) {
        for (const std::string& d : diagnostics)
            std::cerr << "config error: " << d << "\n";
        return kExitConfig;
    }

    try {
        if (demo->parsed()) return gcrop::cli::cmd_demo_crops(config);
        if (stats->parsed()) return gcrop::cli::cmd_stats(config);
        if (sweep->parsed()) return gcrop::cli::cmd_sweep(config);
        if (pretrain->parsed()) return gcrop::cli::cmd_pretrain(config);
        if (linear_eval->parsed())
            return gcrop::cli::cmd_linear_eval(config, encoder_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitRuntime;
}
