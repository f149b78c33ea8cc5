#include "gcrop/cli/commands.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "gcrop/analytics/stats.hpp"
#include "gcrop/analytics/sweep.hpp"
#include "gcrop/io/cifar10.hpp"
#include "gcrop/io/encoder_io.hpp"
#include "gcrop/io/ppm.hpp"
#include "gcrop/io/results.hpp"
#include "gcrop/io/synthetic.hpp"
#include "gcrop/train/trainer.hpp"

namespace gcrop::cli {

namespace {

namespace fs = std::filesystem;

// Master-seed fork ids, one per independent source of randomness.
constexpr std::uint64_t kStreamTrainData = 1;
constexpr std::uint64_t kStreamTestData = 2;
constexpr std::uint64_t kStreamDemoImage = 3;
constexpr std::uint64_t kStreamDemoCrops = 4;
constexpr std::uint64_t kStreamScenes = 5;
constexpr std::uint64_t kStreamGeometry = 6;
constexpr std::uint64_t kStreamFp = 7;
constexpr std::uint64_t kStreamLep = 8;

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

struct BuiltData {
    io::LabeledDataset train;
    io::LabeledDataset test;
    std::vector<analytics::Scene> scenes;  // synthetic source only
};

// Deterministic dataset construction from the config and master seed.
BuiltData build_dataset(const RunConfig& config) {
    BuiltData data;
    if (config.source == RunConfig::Source::Synthetic) {
        RngStream rng = RngStream(config.seed).fork(kStreamTrainData);
        io::SyntheticData train =
            io::gen_synthetic(config.synthetic, config.train_count, rng);
        RngStream test_rng = RngStream(config.seed).fork(kStreamTestData);
        io::SyntheticData test =
            io::gen_synthetic(config.synthetic, config.test_count, test_rng);
        data.train = std::move(train.dataset);
        data.test = std::move(test.dataset);
        data.scenes = std::move(train.scenes);
    } else {
        io::LabeledDataset all = io::load_cifar10_file(config.cifar10_path);
        const std::size_t need =
            static_cast<std::size_t>(config.train_count) + config.test_count;
        if (all.images.size() < need)
            throw std::runtime_error("dataset: cifar10 file holds " +
                                     std::to_string(all.images.size()) +
                                     " records, need " + std::to_string(need));
        data.train.class_count = all.class_count;
        data.test.class_count = all.class_count;
        for (int i = 0; i < config.train_count; ++i) {
            data.train.images.push_back(std::move(all.images[i]));
            data.train.labels.push_back(all.labels[i]);
        }
        for (int i = 0; i < config.test_count; ++i) {
            const std::size_t j = static_cast<std::size_t>(config.train_count) + i;
            data.test.images.push_back(std::move(all.images[j]));
            data.test.labels.push_back(all.labels[j]);
        }
    }
    return data;
}

train::TrainConfig make_train_config(const RunConfig& config,
                                     const train::ChannelStats& stats) {
    train::TrainConfig tc;
    tc.cropper = config.cropper;
    tc.augment.flip_probability = config.flip_probability;
    tc.augment.blur_sigma = config.blur_sigma;
    tc.augment.stats = stats;
    tc.hidden = config.hidden;
    tc.embedding_dim = config.embedding_dim;
    tc.tau = config.tau;
    tc.lr = config.lr;
    tc.epochs = config.epochs;
    tc.batch_size = config.batch_size;
    return tc;
}

nlohmann::json geometry_to_json(const analytics::GeometryStats& geo) {
    nlohmann::json obj;
    obj["mean_pair_iou"] = geo.mean_pair_iou;
    obj["mean_center_distance"] = geo.mean_center_distance;
    obj["oob_area_fraction"] = geo.oob_area_fraction;
    obj["grid"] = geo.grid;
    obj["coverage"] = geo.coverage;
    return obj;
}

}  // namespace

int cmd_demo_crops(const RunConfig& config) {
    fs::create_directories(config.out_dir);
    Image source;
    if (!config.demo_image.empty()) {
        source = io::load_ppm_file(config.demo_image);
    } else {
        RngStream rng = RngStream(config.seed).fork(kStreamDemoImage);
        source = io::gen_synthetic(config.synthetic, 1, rng)
                     .dataset.images.front();
    }

    RngStream crop_rng = RngStream(config.seed).fork(kStreamDemoCrops);
    const ViewSet set = generate_views(source, config.cropper, crop_rng);

    nlohmann::json rects = nlohmann::json::array();
    for (const Rect& r : set.rects)
        rects.push_back({{"left", r.left},
                         {"top", r.top},
                         {"width", r.width},
                         {"height", r.height}});
    write_text_file(config.out_dir / "rects.json", rects.dump(2) + "\n");
    io::save_ppm_file(source, config.out_dir / "source.ppm");
    for (std::size_t v = 0; v < set.views.size(); ++v) {
        char name[32];
        std::snprintf(name, sizeof(name), "view_%02zu.ppm", v);
        io::save_ppm_file(set.views[v], config.out_dir / name);
    }
    std::cerr << "demo-crops: wrote " << set.views.size() << " views to "
              << config.out_dir.string() << "\n";
    return 0;
}

int cmd_stats(const RunConfig& config) {
    fs::create_directories(config.out_dir);

    RngStream scene_rng = RngStream(config.seed).fork(kStreamScenes);
    const io::SyntheticData scenes_data =
        io::gen_synthetic(config.synthetic, config.sweep_n_scenes, scene_rng);

    const ImageDims dims = config.synthetic.dims;
    RngStream geo_rng = RngStream(config.seed).fork(kStreamGeometry);
    const analytics::GeometryStats geo = analytics::geometry_stats(
        config.cropper, dims, config.stats_n_samples, config.stats_grid, geo_rng);

    RngStream fp_rng = RngStream(config.seed).fork(kStreamFp);
    const analytics::FpEstimate fp = analytics::estimate_fp_rate_scenes(
        config.cropper, scenes_data.scenes, config.tau_overlap,
        config.stats_n_fp_samples, fp_rng);

    nlohmann::json report;
    report["method"] = std::string(to_string(config.cropper.method));
    report["alpha"] = config.cropper.alpha;
    report["crop_size"] = config.cropper.crop_size;
    report["geometry"] = geometry_to_json(geo);
    report["fp"] = {{"fp_rate", fp.fp_rate},
                    {"n_samples", fp.n_samples},
                    {"tau", fp.tau},
                    {"standard_error", fp.standard_error}};
    write_text_file(config.out_dir / "stats.json", report.dump(2) + "\n");
    std::cerr << "stats: fp_rate=" << fp.fp_rate
              << " mean_pair_iou=" << geo.mean_pair_iou << "\n";
    return 0;
}

int cmd_sweep(const RunConfig& config) {
    fs::create_directories(config.out_dir);

    RngStream scene_rng = RngStream(config.seed).fork(kStreamScenes);
    const io::SyntheticData scenes_data =
        io::gen_synthetic(config.synthetic, config.sweep_n_scenes, scene_rng);

    analytics::SweepOptions options;
    options.n_geometry_samples = config.sweep_n_geometry_samples;
    options.n_fp_samples = config.sweep_n_fp_samples;
    options.tau = config.tau_overlap;
    options.grid = config.stats_grid;
    options.n_views = config.cropper.n_views;
    options.uniform_bounds = config.cropper.uniform_bounds;
    options.pad_policy = config.cropper.pad_policy;

    BuiltData data;
    train::ChannelStats stats;
    if (config.sweep_with_lep) {
        std::cerr << "sweep: building dataset for linear evaluation\n";
        data = build_dataset(config);
        stats = train::compute_channel_stats(data.train.images);
        options.lep_runner = [&](const CropperConfig& cropper,
                                 std::uint64_t seed) {
            RunConfig cell = config;
            cell.cropper = cropper;
            train::TrainConfig tc = make_train_config(cell, stats);
            const train::PretrainResult pre =
                train::pretrain(data.train.images, tc, seed);
            train::EvalConfig ec;
            ec.crop_size = cropper.crop_size;
            ec.epochs = config.lep_epochs;
            ec.lr = config.lep_lr;
            ec.batch_size = config.lep_batch_size;
            RngStream eval_rng = RngStream(seed).fork(kStreamLep);
            return train::linear_eval(pre.params, stats, data.train, data.test,
                                      ec, eval_rng);
        };
    }

    const analytics::SweepResult result = analytics::run_sweep(
        config.sweep_methods, config.sweep_alphas, config.sweep_crop_sizes,
        config.sweep_seeds, scenes_data.scenes, options, config.seed);

    write_text_file(config.out_dir / "sweep_records.csv",
                    io::write_records_csv(result.records));
    write_text_file(config.out_dir / "sweep_records.json",
                    io::write_records_json(result.records));
    write_text_file(config.out_dir / "sweep_summary.csv",
                    io::write_summary_csv(result.records));

    for (const auto& failure : result.failures)
        std::cerr << "sweep: cell (" << to_string(failure.method) << ", alpha="
                  << failure.alpha << ", crop_size=" << failure.crop_size
                  << ", seed=" << failure.seed << ") failed: " << failure.message
                  << "\n";
    std::cerr << "sweep: " << result.records.size() << " records, "
              << result.failures.size() << " failures\n";
    return result.failures.empty() ? 0 : 1;
}

int cmd_pretrain(const RunConfig& config) {
    fs::create_directories(config.out_dir);
    const BuiltData data = build_dataset(config);
    const train::ChannelStats stats =
        train::compute_channel_stats(data.train.images);
    const train::TrainConfig tc = make_train_config(config, stats);

    std::cerr << "pretrain: " << data.train.images.size() << " images, "
              << config.epochs << " epochs\n";
    const train::PretrainResult result =
        train::pretrain(data.train.images, tc, config.seed);

    io::EncoderFile file;
    file.params = result.params;
    file.stats = stats;
    file.crop_size = config.cropper.crop_size;
    file.channels = data.train.images.front().channels;
    io::save_encoder_file(file, config.out_dir / "encoder.json");

    std::string curve = "epoch,loss\n";
    for (std::size_t e = 0; e < result.epoch_loss.size(); ++e) {
        curve += std::to_string(e);
        curve += ',';
        curve += io::format_double(result.epoch_loss[e]);
        curve += '\n';
        std::cerr << "pretrain: epoch " << e << " loss " << result.epoch_loss[e]
                  << "\n";
    }
    write_text_file(config.out_dir / "loss_curve.csv", curve);
    return 0;
}

int cmd_linear_eval(const RunConfig& config,
                    const std::filesystem::path& encoder_path) {
    fs::create_directories(config.out_dir);
    const BuiltData data = build_dataset(config);

    io::EncoderFile file;
    bool pretrained = false;
    if (!encoder_path.empty()) {
        file = io::load_encoder_file(encoder_path);
        pretrained = true;
    } else {
        // Untrained baseline: same architecture and init distribution the
        // pretraining loop starts from.
        file.stats = train::compute_channel_stats(data.train.images);
        file.crop_size = config.cropper.crop_size;
        file.channels = data.train.images.front().channels;
        const ViewDims vd =
            compute_view_dims(config.cropper.crop_size, data.train.images.front().dims);
        train::EncoderConfig enc_cfg;
        enc_cfg.input_dim = vd.width * vd.height * file.channels;
        enc_cfg.hidden = config.hidden;
        enc_cfg.embedding_dim = config.embedding_dim;
        RngStream init_rng = RngStream(config.seed).fork(0);
        file.params = train::init_encoder(enc_cfg, init_rng);
    }

    train::EvalConfig ec;
    ec.crop_size = file.crop_size;
    ec.epochs = config.lep_epochs;
    ec.lr = config.lep_lr;
    ec.batch_size = config.lep_batch_size;
    RngStream eval_rng = RngStream(config.seed).fork(kStreamLep);
    const double accuracy = train::linear_eval(file.params, file.stats,
                                               data.train, data.test, ec,
                                               eval_rng);

    nlohmann::json report;
    report["accuracy"] = accuracy;
    report["pretrained"] = pretrained;
    report["classes"] = data.train.class_count;
    report["train_count"] = data.train.images.size();
    report["test_count"] = data.test.images.size();
    write_text_file(config.out_dir / "eval.json", report.dump(2) + "\n");
    std::cerr << "linear-eval: accuracy " << accuracy << "\n";
    return 0;
}

}  // namespace gcrop::cli
