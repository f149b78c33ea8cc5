#include "gcrop/train/augment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcrop::train {

ChannelStats compute_channel_stats(std::span<const Image> images) {
    if (images.empty())
        throw std::invalid_argument("channel_stats: empty image list");
    const int channels = images.front().channels;
    std::vector<double> sum(static_cast<std::size_t>(channels), 0.0);
    std::vector<double> sum_sq(static_cast<std::size_t>(channels), 0.0);
    long long count = 0;
    for (const Image& img : images) {
        if (img.channels != channels)
            throw std::invalid_argument("channel_stats: mixed channel counts");
        const std::size_t n = img.pixels.size() / channels;
        for (std::size_t p = 0; p < n; ++p)
            for (int c = 0; c < channels; ++c) {
                const double v = img.pixels[p * channels + c];
                sum[static_cast<std::size_t>(c)] += v;
                sum_sq[static_cast<std::size_t>(c)] += v * v;
            }
        count += static_cast<long long>(n);
    }
    ChannelStats stats;
    stats.mean.resize(static_cast<std::size_t>(channels));
    stats.std.resize(static_cast<std::size_t>(channels));
    for (int c = 0; c < channels; ++c) {
        const double m = sum[static_cast<std::size_t>(c)] / count;
        const double var =
            std::max(0.0, sum_sq[static_cast<std::size_t>(c)] / count - m * m);
        const double sd = std::sqrt(var);
        if (!(sd > 1e-12))
            throw std::invalid_argument("channel_stats: zero-spread channel");
        stats.mean[static_cast<std::size_t>(c)] = m;
        stats.std[static_cast<std::size_t>(c)] = sd;
    }
    return stats;
}

Image flip_horizontal(const Image& image) {
    Image out = image;
    const int w = image.dims.width;
    for (int y = 0; y < image.dims.height; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < image.channels; ++c)
                out.at(x, y, c) = image.at(w - 1 - x, y, c);
    return out;
}

Image gaussian_blur_3x3(const Image& image, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("blur: sigma must be > 0");
    const double side = std::exp(-1.0 / (2.0 * sigma * sigma));
    const double diag = std::exp(-2.0 / (2.0 * sigma * sigma));
    const double kernel[3][3] = {
        {diag, side, diag}, {side, 1.0, side}, {diag, side, diag}};
    const double total = 4.0 * diag + 4.0 * side + 1.0;

    Image out = image;
    const int w = image.dims.width;
    const int h = image.dims.height;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < image.channels; ++c) {
                double acc = 0.0;
                for (int dy = -1; dy <= 1; ++dy) {
                    const int sy = std::clamp(y + dy, 0, h - 1);
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int sx = std::clamp(x + dx, 0, w - 1);
                        acc += kernel[dy + 1][dx + 1] * image.at(sx, sy, c);
                    }
                }
                out.at(x, y, c) = acc / total;
            }
    return out;
}

Image standardize(const Image& image, const ChannelStats& stats) {
    if (static_cast<int>(stats.mean.size()) != image.channels ||
        static_cast<int>(stats.std.size()) != image.channels)
        throw std::invalid_argument("standardize: stats channel mismatch");
    Image out = image;
    const std::size_t n = image.pixels.size() / image.channels;
    for (std::size_t p = 0; p < n; ++p)
        for (int c = 0; c < image.channels; ++c) {
            const std::size_t idx = p * image.channels + c;
            out.pixels[idx] = (image.pixels[idx] - stats.mean[static_cast<std::size_t>(c)]) /
                              stats.std[static_cast<std::size_t>(c)];
        }
    return out;
}

Image augment(const Image& image, const AugmentConfig& config, RngStream& rng) {
    if (config.flip_probability < 0.0 || config.flip_probability > 1.0)
        throw std::invalid_argument("augment: flip_probability must lie in [0, 1]");
    Image out =
        rng.uniform() < config.flip_probability ? flip_horizontal(image) : image;
    out = gaussian_blur_3x3(out, config.blur_sigma);
    return standardize(out, config.stats);
}

}  // namespace gcrop::train
