#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gcrop/io/results.hpp"

namespace fs = std::filesystem;

namespace {

const char* cli_path() { return GCROP_CLI_PATH; }

int run_cli(const std::string& args) {
    const std::string command =
        std::string(cli_path()) + " " + args + " 2>/dev/null";
    return std::system(command.c_str());
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name)
        : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

}  // namespace

TEST_CASE("demo-crops: gcc alpha=0 emits two identical rects, byte-stable") {
    TempDir tmp("gcrop_cli_demo");
    const std::string out1 = (tmp.path / "a").string();
    const std::string out2 = (tmp.path / "b").string();

    const std::string base =
        "demo-crops --seed 7 --method GCC --alpha 0 --crop-size 0.25 --out ";
    REQUIRE(run_cli(base + out1) == 0);
    REQUIRE(run_cli(base + out2) == 0);

    const std::string rects_text = slurp(fs::path(out1) / "rects.json");
    const auto rects = nlohmann::json::parse(rects_text);
    REQUIRE(rects.size() == 2);
    CHECK(rects[0] == rects[1]);
    CHECK(rects[0].contains("left"));
    CHECK(rects[0].contains("top"));
    CHECK(rects[0].contains("width"));
    CHECK(rects[0].contains("height"));

    CHECK(rects_text == slurp(fs::path(out2) / "rects.json"));
    CHECK(slurp(fs::path(out1) / "view_00.ppm") ==
          slurp(fs::path(out2) / "view_00.ppm"));
    CHECK(slurp(fs::path(out1) / "view_00.ppm") ==
          slurp(fs::path(out1) / "view_01.ppm"));
}

TEST_CASE("demo-crops: corrected method keeps every rect in bounds") {
    TempDir tmp("gcrop_cli_cgcc");
    const std::string out = (tmp.path / "out").string();
    REQUIRE(run_cli("demo-crops --seed 3 --method CGCC --alpha 4 --crop-size 0.4 --out " +
                    out) == 0);
    const auto rects = nlohmann::json::parse(slurp(fs::path(out) / "rects.json"));
    for (const auto& r : rects) {
        CHECK(r["left"].get<int>() >= 0);
        CHECK(r["top"].get<int>() >= 0);
        CHECK(r["left"].get<int>() + r["width"].get<int>() <= 32);
        CHECK(r["top"].get<int>() + r["height"].get<int>() <= 32);
    }
}

TEST_CASE("invalid config fails fast with a nonzero exit and no outputs") {
    TempDir tmp("gcrop_cli_invalid");
    const std::string out = (tmp.path / "out").string();
    const int code =
        run_cli("demo-crops --alpha -0.5 --out " + out);
    CHECK(code != 0);
    CHECK(!fs::exists(fs::path(out)));

    // Bad config file: validation diagnostics, not a crash.
    const fs::path config = tmp.path / "bad.json";
    write_file(config, R"({"cropper": {"crop_size": 2.0}, "mystery": 1})");
    const int code2 = run_cli("stats --config " + config.string() + " --out " + out);
    CHECK(code2 != 0);
    CHECK(!fs::exists(fs::path(out)));
}

TEST_CASE("stats command writes a geometry and fp report") {
    TempDir tmp("gcrop_cli_stats");
    const std::string out = (tmp.path / "out").string();
    const fs::path config = tmp.path / "config.json";
    write_file(config, R"({
      "cropper": {"method": "cgcc", "alpha": 1.0, "crop_size": 0.4},
      "stats": {"n_samples": 500, "n_fp_samples": 500, "grid": 8},
      "sweep": {"n_scenes": 8}
    })");
    REQUIRE(run_cli("stats --config " + config.string() + " --seed 5 --out " + out) == 0);
    const auto report = nlohmann::json::parse(slurp(fs::path(out) / "stats.json"));
    CHECK(report["method"] == "CGCC");
    CHECK(report["geometry"]["oob_area_fraction"].get<double>() == 0.0);
    CHECK(report["geometry"]["coverage"].size() == 64);
    CHECK(report["fp"]["n_samples"].get<long long>() == 500);
}

TEST_CASE("sweep command emits records, json mirror and summary") {
    TempDir tmp("gcrop_cli_sweep");
    const std::string out1 = (tmp.path / "a").string();
    const std::string out2 = (tmp.path / "b").string();
    const fs::path config = tmp.path / "config.json";
    write_file(config, R"({
      "sweep": {
        "methods": ["GCC", "RandomCrop"],
        "alphas": [0.25, 1.0],
        "crop_sizes": [0.2, 0.6],
        "seeds": [0, 1, 2, 3],
        "n_geometry_samples": 200,
        "n_fp_samples": 200,
        "n_scenes": 4
      }
    })");

    REQUIRE(run_cli("sweep --config " + config.string() + " --seed 11 --out " + out1) == 0);
    REQUIRE(run_cli("sweep --config " + config.string() + " --seed 11 --out " + out2) == 0);

    const std::string records_csv = slurp(fs::path(out1) / "sweep_records.csv");
    CHECK(records_csv == slurp(fs::path(out2) / "sweep_records.csv"));

    const auto records = gcrop::io::parse_records_csv(records_csv);
    CHECK(records.size() == 2 * 2 * 2 * 4);

    const std::string summary = slurp(fs::path(out1) / "sweep_summary.csv");
    CHECK(summary.find("fp_rate_mean") != std::string::npos);
    CHECK(summary.find("fp_rate_std") != std::string::npos);
    // 8 cells + header
    int lines = 0;
    for (const char c : summary)
        if (c == '\n') ++lines;
    CHECK(lines == 9);

    const auto json_records = gcrop::io::parse_records_json(
        slurp(fs::path(out1) / "sweep_records.json"));
    CHECK(json_records.size() == records.size());
}

TEST_CASE("pretrain then linear-eval round trip through the checkpoint") {
    TempDir tmp("gcrop_cli_train");
    const std::string out = (tmp.path / "out").string();
    const fs::path config = tmp.path / "config.json";
    write_file(config, R"({
      "cropper": {"method": "gcc", "alpha": 0.1, "crop_size": 0.5},
      "train": {"epochs": 1, "batch_size": 8, "embedding_dim": 8,
                 "hidden": [12], "lep_epochs": 4},
      "dataset": {"train_count": 24, "test_count": 8,
                   "synthetic": {"dims": [12, 12], "class_count": 2,
                                  "noise_level": 0.3}}
    })");

    REQUIRE(run_cli("pretrain --config " + config.string() + " --seed 1 --out " + out) == 0);
    CHECK(fs::exists(fs::path(out) / "encoder.json"));
    const std::string curve = slurp(fs::path(out) / "loss_curve.csv");
    CHECK(curve.find("epoch,loss") == 0);

    REQUIRE(run_cli("linear-eval --config " + config.string() + " --seed 1 --out " +
                    out + " --encoder " + out + "/encoder.json") == 0);
    const auto eval = nlohmann::json::parse(slurp(fs::path(out) / "eval.json"));
    CHECK(eval["pretrained"] == true);
    const double acc = eval["accuracy"].get<double>();
    CHECK(acc >= 0.0);
    CHECK(acc <= 1.0);

    // Re-running the evaluation reproduces the report byte-for-byte.
    const std::string eval_bytes = slurp(fs::path(out) / "eval.json");
    REQUIRE(run_cli("linear-eval --config " + config.string() + " --seed 1 --out " +
                    out + " --encoder " + out + "/encoder.json") == 0);
    CHECK(slurp(fs::path(out) / "eval.json") == eval_bytes);

    // Baseline path: no checkpoint.
    REQUIRE(run_cli("linear-eval --config " + config.string() + " --seed 1 --out " +
                    out) == 0);
    const auto baseline = nlohmann::json::parse(slurp(fs::path(out) / "eval.json"));
    CHECK(baseline["pretrained"] == false);
}
