#pragma once

#include "gcrop/core/image.hpp"

namespace gcrop {

// Crop rectangle in image coordinates. May extend beyond the image on any
// side; the uncorrected samplers produce such rects on purpose.
struct Rect {
    int left = 0;
    int top = 0;
    int width = 1;
    int height = 1;

    int right() const noexcept { return left + width; }    // exclusive
    int bottom() const noexcept { return top + height; }   // exclusive

    long long area() const noexcept {
        return static_cast<long long>(width) * height;
    }

    bool in_bounds(ImageDims dims) const noexcept {
        return left >= 0 && top >= 0 && right() <= dims.width &&
               bottom() <= dims.height;
    }

    double center_x() const noexcept { return left + width / 2.0; }
    double center_y() const noexcept { return top + height / 2.0; }

    bool operator==(const Rect&) const = default;
};

}  // namespace gcrop
