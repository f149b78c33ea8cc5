#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gcrop {

struct ImageDims {
    int width = 0;
    int height = 0;

    bool operator==(const ImageDims&) const = default;
};

// Owned pixel raster, row-major and channel-interleaved. Raster data is
// kept as reals in [0, 1]; standardized tensors reuse the same container
// and may leave that range.
struct Image {
    ImageDims dims;
    int channels = 0;
    std::vector<double> pixels;

    static Image filled(ImageDims d, int channels, double value = 0.0) {
        if (d.width < 1 || d.height < 1)
            throw std::invalid_argument("image: dims must be positive");
        if (channels != 1 && channels != 3)
            throw std::invalid_argument("image: channels must be 1 or 3");
        Image img;
        img.dims = d;
        img.channels = channels;
        img.pixels.assign(
            static_cast<std::size_t>(d.width) * d.height * channels, value);
        return img;
    }

    std::size_t index(int x, int y, int c) const noexcept {
        return (static_cast<std::size_t>(y) * dims.width + x) * channels + c;
    }

    double at(int x, int y, int c) const noexcept { return pixels[index(x, y, c)]; }
    double& at(int x, int y, int c) noexcept { return pixels[index(x, y, c)]; }

    bool same_shape(const Image& other) const noexcept {
        return dims == other.dims && channels == other.channels;
    }
};

}  // namespace gcrop
