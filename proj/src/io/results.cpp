#include "gcrop/io/results.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gcrop::io {

std::string format_double(double value) {
    if (!std::isfinite(value))
        throw std::invalid_argument("format_double: non-finite value");
    char buf[40];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) break;
    }
    return buf;
}

namespace {

constexpr const char* kHeader =
    "method,alpha,crop_size,seed,fp_rate,mean_pair_iou,mean_center_distance,"
    "oob_area_fraction,lep_accuracy";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

double parse_number(const std::string& text, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty())
        throw std::runtime_error(std::string("results: bad ") + what + " '" +
                                 text + "'");
    return v;
}

}  // namespace

std::string write_records_csv(const std::vector<analytics::SweepRecord>& records) {
    std::string out{kHeader};
    out += '\n';
    for (const auto& r : records) {
        out += to_string(r.method);
        out += ',';
        out += format_double(r.alpha);
        out += ',';
        out += format_double(r.crop_size);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += format_double(r.fp_rate);
        out += ',';
        out += format_double(r.geometry.mean_pair_iou);
        out += ',';
        out += format_double(r.geometry.mean_center_distance);
        out += ',';
        out += format_double(r.geometry.oob_area_fraction);
        out += ',';
        if (r.lep_accuracy) out += format_double(*r.lep_accuracy);
        out += '\n';
    }
    return out;
}

std::string write_records_json(const std::vector<analytics::SweepRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json obj;
        obj["method"] = std::string(to_string(r.method));
        obj["alpha"] = r.alpha;
        obj["crop_size"] = r.crop_size;
        obj["seed"] = r.seed;
        obj["fp_rate"] = r.fp_rate;
        obj["mean_pair_iou"] = r.geometry.mean_pair_iou;
        obj["mean_center_distance"] = r.geometry.mean_center_distance;
        obj["oob_area_fraction"] = r.geometry.oob_area_fraction;
        if (r.lep_accuracy)
            obj["lep_accuracy"] = *r.lep_accuracy;
        else
            obj["lep_accuracy"] = nullptr;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<analytics::SweepRecord> parse_records_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::runtime_error("results: unexpected CSV header");

    std::vector<analytics::SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 9)
            throw std::runtime_error("results: expected 9 fields, got " +
                                     std::to_string(fields.size()));
        analytics::SweepRecord r;
        const auto method = parse_crop_method(fields[0]);
        if (!method)
            throw std::runtime_error("results: unknown method '" + fields[0] + "'");
        r.method = *method;
        r.alpha = parse_number(fields[1], "alpha");
        r.crop_size = parse_number(fields[2], "crop_size");
        r.seed = static_cast<std::uint64_t>(
            std::strtoull(fields[3].c_str(), nullptr, 10));
        r.fp_rate = parse_number(fields[4], "fp_rate");
        r.geometry.mean_pair_iou = parse_number(fields[5], "mean_pair_iou");
        r.geometry.mean_center_distance =
            parse_number(fields[6], "mean_center_distance");
        r.geometry.oob_area_fraction =
            parse_number(fields[7], "oob_area_fraction");
        if (!fields[8].empty())
            r.lep_accuracy = parse_number(fields[8], "lep_accuracy");
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<analytics::SweepRecord> parse_records_json(const std::string& text) {
    const nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array())
        throw std::runtime_error("results: JSON root must be an array");
    std::vector<analytics::SweepRecord> records;
    for (const auto& obj : arr) {
        analytics::SweepRecord r;
        const auto method = parse_crop_method(obj.at("method").get<std::string>());
        if (!method) throw std::runtime_error("results: unknown method in JSON");
        r.method = *method;
        r.alpha = obj.at("alpha").get<double>();
        r.crop_size = obj.at("crop_size").get<double>();
        r.seed = obj.at("seed").get<std::uint64_t>();
        r.fp_rate = obj.at("fp_rate").get<double>();
        r.geometry.mean_pair_iou = obj.at("mean_pair_iou").get<double>();
        r.geometry.mean_center_distance =
            obj.at("mean_center_distance").get<double>();
        r.geometry.oob_area_fraction =
            obj.at("oob_area_fraction").get<double>();
        if (!obj.at("lep_accuracy").is_null())
            r.lep_accuracy = obj.at("lep_accuracy").get<double>();
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

struct Agg {
    std::vector<double> fp, iou, dist, oob, lep;
};

std::pair<double, double> mean_std(const std::vector<double>& v) {
    if (v.empty()) return {0.0, 0.0};
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    if (v.size() < 2) return {mean, 0.0};
    double sq = 0.0;
    for (double x : v) sq += (x - mean) * (x - mean);
    return {mean, std::sqrt(sq / static_cast<double>(v.size() - 1))};
}

void append_pair(std::string& out, const std::vector<double>& v) {
    const auto [m, s] = mean_std(v);
    out += ',';
    out += format_double(m);
    out += ',';
    out += format_double(s);
}

}  // namespace

std::string write_summary_csv(const std::vector<analytics::SweepRecord>& records) {
    std::vector<std::tuple<CropMethod, double, double>> order;
    std::map<std::tuple<int, double, double>, Agg> cells;
    for (const auto& r : records) {
        const auto key = std::make_tuple(static_cast<int>(r.method), r.alpha,
                                         r.crop_size);
        if (cells.find(key) == cells.end())
            order.emplace_back(r.method, r.alpha, r.crop_size);
        Agg& agg = cells[key];
        agg.fp.push_back(r.fp_rate);
        agg.iou.push_back(r.geometry.mean_pair_iou);
        agg.dist.push_back(r.geometry.mean_center_distance);
        agg.oob.push_back(r.geometry.oob_area_fraction);
        if (r.lep_accuracy) agg.lep.push_back(*r.lep_accuracy);
    }

    std::string out =
        "method,alpha,crop_size,n_seeds,fp_rate_mean,fp_rate_std,"
        "mean_pair_iou_mean,mean_pair_iou_std,mean_center_distance_mean,"
        "mean_center_distance_std,oob_area_fraction_mean,oob_area_fraction_std,"
        "lep_accuracy_mean,lep_accuracy_std\n";
    for (const auto& [method, alpha, crop_size] : order) {
        const Agg& agg =
            cells[std::make_tuple(static_cast<int>(method), alpha, crop_size)];
        out += to_string(method);
        out += ',';
        out += format_double(alpha);
        out += ',';
        out += format_double(crop_size);
        out += ',';
        out += std::to_string(agg.fp.size());
        append_pair(out, agg.fp);
        append_pair(out, agg.iou);
        append_pair(out, agg.dist);
        append_pair(out, agg.oob);
        if (agg.lep.empty()) {
            out += ",,";
        } else {
            append_pair(out, agg.lep);
        }
        out += '\n';
    }
    return out;
}

}  // namespace gcrop::io
