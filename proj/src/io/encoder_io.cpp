#include "gcrop/io/encoder_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace gcrop::io {

std::string write_encoder_json(const EncoderFile& file) {
    nlohmann::json root;
    root["crop_size"] = file.crop_size;
    root["channels"] = file.channels;
    root["stats"]["mean"] = file.stats.mean;
    root["stats"]["std"] = file.stats.std;
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& layer : file.params.layers) {
        nlohmann::json obj;
        obj["out"] = layer.w.rows;
        obj["in"] = layer.w.cols;
        obj["w"] = layer.w.data;
        obj["b"] = layer.b;
        layers.push_back(std::move(obj));
    }
    root["layers"] = std::move(layers);
    return root.dump() + "\n";
}

namespace {

EncoderFile from_json(const nlohmann::json& root) {
    EncoderFile file;
    file.crop_size = root.at("crop_size").get<double>();
    file.channels = root.at("channels").get<int>();
    file.stats.mean = root.at("stats").at("mean").get<std::vector<double>>();
    file.stats.std = root.at("stats").at("std").get<std::vector<double>>();
    for (const auto& obj : root.at("layers")) {
        train::EncoderParams::Layer layer;
        const int out = obj.at("out").get<int>();
        const int in = obj.at("in").get<int>();
        layer.w = train::Matrix(out, in);
        layer.w.data = obj.at("w").get<std::vector<double>>();
        layer.b = obj.at("b").get<std::vector<double>>();
        if (layer.w.data.size() != static_cast<std::size_t>(out) * in ||
            layer.b.size() != static_cast<std::size_t>(out))
            throw std::runtime_error("encoder file: layer shape mismatch");
        file.params.layers.push_back(std::move(layer));
    }
    if (file.params.layers.empty())
        throw std::runtime_error("encoder file: no layers");
    return file;
}

}  // namespace

EncoderFile parse_encoder_json(const std::string& text) {
    return from_json(nlohmann::json::parse(text));
}

void save_encoder_file(const EncoderFile& file,
                       const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("encoder file: cannot write " + path.string());
    const std::string text = write_encoder_json(file);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

EncoderFile load_encoder_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("encoder file: cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_encoder_json(text);
}

}  // namespace gcrop::io
