#pragma once

#include <utility>
#include <vector>

#include "gcrop/analytics/scene.hpp"
#include "gcrop/core/rng.hpp"
#include "gcrop/io/dataset.hpp"

namespace gcrop::io {

enum class Placement { Centered, UniformRandom };

// Desk-scale scene generator. Every class owns a distinct hue and shape so
// both tiny and large crops carry class signal; ground-truth boxes come
// back alongside the rendered images.
struct SyntheticSceneSpec {
    ImageDims dims{32, 32};
    int class_count = 4;
    std::pair<int, int> objects_per_image{1, 1};
    // Object bounding-box side as a fraction of the smaller image side.
    std::pair<double, double> object_size_range{0.4, 0.6};
    Placement placement = Placement::Centered;
    double noise_level = 0.0;  // 0 = flat background, 1 = full-range noise

    void validate() const;
};

struct SyntheticData {
    LabeledDataset dataset;
    std::vector<analytics::Scene> scenes;  // one per image, boxes in-bounds
};

SyntheticData gen_synthetic(const SyntheticSceneSpec& spec, int n,
                            RngStream& rng);

}  // namespace gcrop::io
