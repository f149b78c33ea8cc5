#include "gcrop/io/cifar10.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcrop::io {

namespace {
constexpr std::size_t kRecordBytes = 3073;  // 1 label + 3 * 1024 pixels
constexpr int kSide = 32;
constexpr int kClasses = 10;
}  // namespace

void LabeledDataset::validate() const {
    if (images.size() != labels.size())
        throw std::invalid_argument("dataset: image/label count mismatch");
    if (class_count < 1)
        throw std::invalid_argument("dataset: class_count must be >= 1");
    for (int label : labels)
        if (label < 0 || label >= class_count)
            throw std::invalid_argument("dataset: label out of range");
    for (const Image& img : images)
        if (!img.same_shape(images.front()))
            throw std::invalid_argument("dataset: non-uniform image shapes");
}

LabeledDataset load_cifar10(std::span<const std::uint8_t> bytes) {
    if (bytes.empty())
        throw std::runtime_error("cifar10: empty input");
    if (bytes.size() % kRecordBytes != 0)
        throw std::runtime_error(
            "cifar10: length " + std::to_string(bytes.size()) +
            " is not a multiple of " + std::to_string(kRecordBytes));

    const std::size_t n = bytes.size() / kRecordBytes;
    LabeledDataset ds;
    ds.class_count = kClasses;
    ds.images.reserve(n);
    ds.labels.reserve(n);

    for (std::size_t rec = 0; rec < n; ++rec) {
        const std::uint8_t* p = bytes.data() + rec * kRecordBytes;
        if (*p >= kClasses)
            throw std::runtime_error("cifar10: record " + std::to_string(rec) +
                                     " has label byte " + std::to_string(*p));
        ds.labels.push_back(*p);
        Image img = Image::filled({kSide, kSide}, 3);
        for (int c = 0; c < 3; ++c) {
            const std::uint8_t* plane = p + 1 + c * kSide * kSide;
            for (int y = 0; y < kSide; ++y)
                for (int x = 0; x < kSide; ++x)
                    img.at(x, y, c) = plane[y * kSide + x] / 255.0;
        }
        ds.images.push_back(std::move(img));
    }
    return ds;
}

LabeledDataset load_cifar10_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cifar10: cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return load_cifar10(bytes);
}

}  // namespace gcrop::io
