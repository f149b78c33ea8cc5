#pragma once

#include <vector>

#include "gcrop/core/image.hpp"
#include "gcrop/core/rect.hpp"

namespace gcrop::analytics {

// Ground-truth object layout of one image; every box is in-bounds.
struct Scene {
    ImageDims dims;
    std::vector<Rect> objects;

    // Throws std::invalid_argument on an empty object list or any
    // out-of-bounds box.
    void validate() const;
};

}  // namespace gcrop::analytics
