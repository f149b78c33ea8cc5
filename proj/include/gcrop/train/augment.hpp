#pragma once

#include <span>
#include <vector>

#include "gcrop/core/image.hpp"
#include "gcrop/core/rng.hpp"

namespace gcrop::train {

struct ChannelStats {
    std::vector<double> mean;
    std::vector<double> std;
};

// Per-channel moments over a uniform-shape image collection. Throws when a
// channel has zero spread.
ChannelStats compute_channel_stats(std::span<const Image> images);

struct AugmentConfig {
    double flip_probability = 0.5;
    double blur_sigma = 1.0;  // kernel size is fixed at 3x3
    ChannelStats stats;
};

Image flip_horizontal(const Image& image);

// 3x3 Gaussian blur with replicated edges; constant images pass through
// unchanged.
Image gaussian_blur_3x3(const Image& image, double sigma);

Image standardize(const Image& image, const ChannelStats& stats);

// Flip with probability p, then blur, then standardize.
Image augment(const Image& image, const AugmentConfig& config, RngStream& rng);

}  // namespace gcrop::train
