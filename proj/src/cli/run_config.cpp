#include "gcrop/cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

namespace gcrop::cli {

namespace {

using nlohmann::json;

struct Reader {
    const json& obj;
    std::string path;
    std::vector<std::string>& diags;
    std::set<std::string> seen;

    Reader(const json& o, std::string p, std::vector<std::string>& d)
        : obj(o), path(std::move(p)), diags(d) {}

    ~Reader() {
        for (const auto& [key, value] : obj.items())
            if (!seen.contains(key))
                diags.push_back(path + key + ": unknown field");
    }

    const json* field(const std::string& key) {
        seen.insert(key);
        const auto it = obj.find(key);
        return it == obj.end() ? nullptr : &*it;
    }

    template <typename T>
    void number(const std::string& key, T& target) {
        const json* f = field(key);
        if (!f) return;
        if (!f->is_number())
            diags.push_back(path + key + ": expected a number");
        else
            target = f->get<T>();
    }

    void boolean(const std::string& key, bool& target) {
        const json* f = field(key);
        if (!f) return;
        if (!f->is_boolean())
            diags.push_back(path + key + ": expected a boolean");
        else
            target = f->get<bool>();
    }

    void string(const std::string& key, std::string& target) {
        const json* f = field(key);
        if (!f) return;
        if (!f->is_string())
            diags.push_back(path + key + ": expected a string");
        else
            target = f->get<std::string>();
    }

    template <typename T>
    void number_list(const std::string& key, std::vector<T>& target) {
        const json* f = field(key);
        if (!f) return;
        if (!f->is_array()) {
            diags.push_back(path + key + ": expected an array of numbers");
            return;
        }
        std::vector<T> values;
        for (const auto& item : *f) {
            if (!item.is_number()) {
                diags.push_back(path + key + ": expected an array of numbers");
                return;
            }
            values.push_back(item.get<T>());
        }
        target = std::move(values);
    }

    bool pair_of_numbers(const std::string& key, double& a, double& b) {
        const json* f = field(key);
        if (!f) return false;
        if (!f->is_array() || f->size() != 2 || !(*f)[0].is_number() ||
            !(*f)[1].is_number()) {
            diags.push_back(path + key + ": expected [lo, hi]");
            return false;
        }
        a = (*f)[0].get<double>();
        b = (*f)[1].get<double>();
        return true;
    }
};

void read_cropper(const json& obj, RunConfig& config,
                  std::vector<std::string>& diags) {
    Reader r(obj, "cropper.", diags);
    std::string method;
    r.string("method", method);
    if (!method.empty()) {
        if (const auto parsed = parse_crop_method(method))
            config.cropper.method = *parsed;
        else
            diags.push_back("cropper.method: unknown method '" + method + "'");
    }
    r.number("alpha", config.cropper.alpha);
    r.number("crop_size", config.cropper.crop_size);
    double a = config.cropper.uniform_bounds.first;
    double b = config.cropper.uniform_bounds.second;
    if (r.pair_of_numbers("uniform_bounds", a, b))
        config.cropper.uniform_bounds = {a, b};
    r.number("n_views", config.cropper.n_views);
    std::string pad;
    r.string("pad_policy", pad);
    if (!pad.empty()) {
        if (const auto parsed = parse_pad_policy(pad))
            config.cropper.pad_policy = *parsed;
        else
            diags.push_back("cropper.pad_policy: unknown policy '" + pad + "'");
    }
}

void read_augment(const json& obj, RunConfig& config,
                  std::vector<std::string>& diags) {
    Reader r(obj, "augment.", diags);
    r.number("flip_probability", config.flip_probability);
    r.number("blur_sigma", config.blur_sigma);
}

void read_train(const json& obj, RunConfig& config,
                std::vector<std::string>& diags) {
    Reader r(obj, "train.", diags);
    r.number("tau", config.tau);
    r.number("lr", config.lr);
    r.number("epochs", config.epochs);
    r.number("batch_size", config.batch_size);
    r.number("embedding_dim", config.embedding_dim);
    r.number_list("hidden", config.hidden);
    r.number("lep_epochs", config.lep_epochs);
    r.number("lep_lr", config.lep_lr);
    r.number("lep_batch_size", config.lep_batch_size);
}

void read_synthetic(const json& obj, RunConfig& config,
                    std::vector<std::string>& diags) {
    Reader r(obj, "dataset.synthetic.", diags);
    double w = config.synthetic.dims.width;
    double h = config.synthetic.dims.height;
    if (r.pair_of_numbers("dims", w, h))
        config.synthetic.dims = {static_cast<int>(w), static_cast<int>(h)};
    r.number("class_count", config.synthetic.class_count);
    double lo = config.synthetic.objects_per_image.first;
    double hi = config.synthetic.objects_per_image.second;
    if (r.pair_of_numbers("objects_per_image", lo, hi))
        config.synthetic.objects_per_image = {static_cast<int>(lo),
                                              static_cast<int>(hi)};
    double slo = config.synthetic.object_size_range.first;
    double shi = config.synthetic.object_size_range.second;
    if (r.pair_of_numbers("object_size_range", slo, shi))
        config.synthetic.object_size_range = {slo, shi};
    std::string placement;
    r.string("placement", placement);
    if (!placement.empty()) {
        if (placement == "centered")
            config.synthetic.placement = io::Placement::Centered;
        else if (placement == "uniform")
            config.synthetic.placement = io::Placement::UniformRandom;
        else
            diags.push_back(
                "dataset.synthetic.placement: expected 'centered' or 'uniform'");
    }
    r.number("noise_level", config.synthetic.noise_level);
}

void read_dataset(const json& obj, RunConfig& config,
                  std::vector<std::string>& diags) {
    Reader r(obj, "dataset.", diags);
    std::string source;
    r.string("source", source);
    if (!source.empty()) {
        if (source == "synthetic")
            config.source = RunConfig::Source::Synthetic;
        else if (source == "cifar10")
            config.source = RunConfig::Source::Cifar10;
        else
            diags.push_back("dataset.source: expected 'synthetic' or 'cifar10'");
    }
    std::string path;
    r.string("cifar10_path", path);
    if (!path.empty()) config.cifar10_path = path;
    r.number("train_count", config.train_count);
    r.number("test_count", config.test_count);
    if (const json* f = r.field("synthetic")) {
        if (!f->is_object())
            diags.push_back("dataset.synthetic: expected an object");
        else
            read_synthetic(*f, config, diags);
    }
}

void read_stats(const json& obj, RunConfig& config,
                std::vector<std::string>& diags) {
    Reader r(obj, "stats.", diags);
    r.number("n_samples", config.stats_n_samples);
    r.number("n_fp_samples", config.stats_n_fp_samples);
    r.number("grid", config.stats_grid);
    r.number("tau_overlap", config.tau_overlap);
}

void read_sweep(const json& obj, RunConfig& config,
                std::vector<std::string>& diags) {
    Reader r(obj, "sweep.", diags);
    if (const json* f = r.field("methods")) {
        if (!f->is_array()) {
            diags.push_back("sweep.methods: expected an array of method names");
        } else {
            std::vector<CropMethod> methods;
            for (const auto& item : *f) {
                if (!item.is_string()) {
                    diags.push_back("sweep.methods: expected method names");
                    break;
                }
                const auto parsed = parse_crop_method(item.get<std::string>());
                if (!parsed) {
                    diags.push_back("sweep.methods: unknown method '" +
                                    item.get<std::string>() + "'");
                    break;
                }
                methods.push_back(*parsed);
            }
            if (!methods.empty()) config.sweep_methods = std::move(methods);
        }
    }
    r.number_list("alphas", config.sweep_alphas);
    r.number_list("crop_sizes", config.sweep_crop_sizes);
    r.number_list("seeds", config.sweep_seeds);
    r.number("n_geometry_samples", config.sweep_n_geometry_samples);
    r.number("n_fp_samples", config.sweep_n_fp_samples);
    r.number("n_scenes", config.sweep_n_scenes);
    r.boolean("with_lep", config.sweep_with_lep);
}

void read_demo(const json& obj, RunConfig& config,
               std::vector<std::string>& diags) {
    Reader r(obj, "demo.", diags);
    std::string image;
    r.string("image", image);
    if (!image.empty()) config.demo_image = image;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text,
                           std::vector<std::string>& diagnostics) {
    RunConfig config;
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        diagnostics.push_back(std::string("config: JSON parse error: ") + e.what());
        return config;
    }
    if (!root.is_object()) {
        diagnostics.push_back("config: document root must be an object");
        return config;
    }

    Reader r(root, "", diagnostics);
    r.number("seed", config.seed);
    std::string out_dir;
    r.string("out_dir", out_dir);
    if (!out_dir.empty()) config.out_dir = out_dir;

    const struct {
        const char* key;
        void (*fn)(const json&, RunConfig&, std::vector<std::string>&);
    } sections[] = {
        {"cropper", read_cropper}, {"augment", read_augment},
        {"train", read_train},     {"dataset", read_dataset},
        {"stats", read_stats},     {"sweep", read_sweep},
        {"demo", read_demo},
    };
    for (const auto& section : sections) {
        if (const json* f = r.field(section.key)) {
            if (!f->is_object())
                diagnostics.push_back(std::string(section.key) +
                                      ": expected an object");
            else
                section.fn(*f, config, diagnostics);
        }
    }
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path,
                          std::vector<std::string>& diagnostics) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        diagnostics.push_back("config: cannot open " + path.string());
        return RunConfig{};
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_run_config(text, diagnostics);
}

namespace {

bool path_inside(const std::filesystem::path& p,
                 const std::filesystem::path& dir) {
    const auto pn = p.lexically_normal();
    const auto dn = dir.lexically_normal();
    auto dit = dn.begin();
    auto pit = pn.begin();
    for (; dit != dn.end() && pit != pn.end(); ++dit, ++pit)
        if (*dit != *pit) return false;
    return dit == dn.end();
}

}  // namespace

std::vector<std::string> RunConfig::validate() const {
    std::vector<std::string> diags;
    if (!cifar10_path.empty() && path_inside(cifar10_path, out_dir))
        diags.emplace_back("dataset.cifar10_path: must lie outside out_dir");
    if (!demo_image.empty() && path_inside(demo_image, out_dir))
        diags.emplace_back("demo.image: must lie outside out_dir");
    try {
        cropper.validate();
    } catch (const std::exception& e) {
        diags.emplace_back(e.what());
    }
    if (flip_probability < 0.0 || flip_probability > 1.0)
        diags.emplace_back("augment.flip_probability: must lie in [0, 1]");
    if (!(blur_sigma > 0.0))
        diags.emplace_back("augment.blur_sigma: must be > 0");
    if (!(tau > 0.0)) diags.emplace_back("train.tau: must be > 0");
    if (!(lr >= 0.0)) diags.emplace_back("train.lr: must be >= 0");
    if (epochs < 0) diags.emplace_back("train.epochs: must be >= 0");
    if (batch_size < 1) diags.emplace_back("train.batch_size: must be >= 1");
    if (embedding_dim < 1)
        diags.emplace_back("train.embedding_dim: must be >= 1");
    for (int h : hidden)
        if (h < 1) {
            diags.emplace_back("train.hidden: widths must be >= 1");
            break;
        }
    if (lep_epochs < 0) diags.emplace_back("train.lep_epochs: must be >= 0");
    if (!(lep_lr > 0.0)) diags.emplace_back("train.lep_lr: must be > 0");
    if (lep_batch_size < 1)
        diags.emplace_back("train.lep_batch_size: must be >= 1");
    if (train_count < 1) diags.emplace_back("dataset.train_count: must be >= 1");
    if (test_count < 1) diags.emplace_back("dataset.test_count: must be >= 1");
    if (source == Source::Cifar10 && cifar10_path.empty())
        diags.emplace_back("dataset.cifar10_path: required when source is cifar10");
    try {
        synthetic.validate();
    } catch (const std::exception& e) {
        diags.emplace_back(e.what());
    }
    if (stats_n_samples < 1) diags.emplace_back("stats.n_samples: must be >= 1");
    if (stats_n_fp_samples < 1)
        diags.emplace_back("stats.n_fp_samples: must be >= 1");
    if (stats_grid < 1) diags.emplace_back("stats.grid: must be >= 1");
    if (!(tau_overlap > 0.0) || !(tau_overlap < 1.0))
        diags.emplace_back("stats.tau_overlap: must lie in (0, 1)");
    if (sweep_methods.empty()) diags.emplace_back("sweep.methods: must be non-empty");
    if (sweep_alphas.empty()) diags.emplace_back("sweep.alphas: must be non-empty");
    for (double a : sweep_alphas)
        if (!(a >= 0.0) || !std::isfinite(a)) {
            diags.emplace_back("sweep.alphas: entries must be finite and >= 0");
            break;
        }
    if (sweep_crop_sizes.empty())
        diags.emplace_back("sweep.crop_sizes: must be non-empty");
    for (double c : sweep_crop_sizes)
        if (!(c > 0.0) || !(c <= 1.0)) {
            diags.emplace_back("sweep.crop_sizes: entries must lie in (0, 1]");
            break;
        }
    if (sweep_seeds.empty()) diags.emplace_back("sweep.seeds: must be non-empty");
    if (sweep_n_geometry_samples < 1)
        diags.emplace_back("sweep.n_geometry_samples: must be >= 1");
    if (sweep_n_fp_samples < 1)
        diags.emplace_back("sweep.n_fp_samples: must be >= 1");
    if (sweep_n_scenes < 1) diags.emplace_back("sweep.n_scenes: must be >= 1");
    return diags;
}

}  // namespace gcrop::cli
