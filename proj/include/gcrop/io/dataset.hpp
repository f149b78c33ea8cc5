#pragma once

#include <vector>

#include "gcrop/core/image.hpp"

namespace gcrop::io {

struct LabeledDataset {
    std::vector<Image> images;  // uniform dims and channels
    std::vector<int> labels;    // class indices in [0, class_count)
    int class_count = 0;

    // Throws std::invalid_argument on any invariant violation.
    void validate() const;
};

}  // namespace gcrop::io
