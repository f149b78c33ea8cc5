#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gcrop/train/augment.hpp"

using namespace gcrop;
using namespace gcrop::train;

namespace {

Image noisy_image(ImageDims dims, int channels, RngStream& rng) {
    Image img = Image::filled(dims, channels);
    for (double& v : img.pixels) v = rng.uniform();
    return img;
}

}  // namespace

TEST_CASE("horizontal flip is an involution") {
    RngStream rng(1);
    const Image img = noisy_image({13, 9}, 3, rng);
    const Image twice = flip_horizontal(flip_horizontal(img));
    CHECK(twice.pixels == img.pixels);
    // And a single flip actually moves pixels.
    CHECK(flip_horizontal(img).pixels != img.pixels);
}

TEST_CASE("blur leaves constant images unchanged") {
    const Image img = Image::filled({8, 8}, 3, 0.37);
    const Image blurred = gaussian_blur_3x3(img, 1.0);
    for (const double v : blurred.pixels)
        CHECK(v == doctest::Approx(0.37).epsilon(1e-12));
    CHECK_THROWS_AS(gaussian_blur_3x3(img, 0.0), std::invalid_argument);
}

TEST_CASE("blur smooths an impulse symmetrically") {
    Image img = Image::filled({5, 5}, 1, 0.0);
    img.at(2, 2, 0) = 1.0;
    const Image blurred = gaussian_blur_3x3(img, 1.0);
    CHECK(blurred.at(2, 2, 0) > blurred.at(1, 2, 0));
    CHECK(blurred.at(1, 2, 0) == doctest::Approx(blurred.at(3, 2, 0)).epsilon(1e-12));
    CHECK(blurred.at(2, 1, 0) == doctest::Approx(blurred.at(2, 3, 0)).epsilon(1e-12));
    CHECK(blurred.at(1, 2, 0) > blurred.at(1, 1, 0));
    CHECK(blurred.at(0, 0, 0) == 0.0);
}

TEST_CASE("channel stats and standardization") {
    RngStream rng(2);
    std::vector<Image> images;
    for (int i = 0; i < 20; ++i) images.push_back(noisy_image({8, 8}, 3, rng));

    const ChannelStats stats = compute_channel_stats(images);
    REQUIRE(stats.mean.size() == 3);

    std::vector<Image> standardized;
    for (const Image& img : images) standardized.push_back(standardize(img, stats));
    const ChannelStats after = compute_channel_stats(standardized);
    for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(after.mean[c]) < 1e-9);
        CHECK(after.std[c] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("zero-spread channel is rejected at stats computation") {
    std::vector<Image> images{Image::filled({4, 4}, 3, 0.5),
                              Image::filled({4, 4}, 3, 0.5)};
    CHECK_THROWS_AS(compute_channel_stats(images), std::invalid_argument);
}

TEST_CASE("augment pipeline: flip probability extremes") {
    RngStream data_rng(3);
    const Image img = noisy_image({10, 10}, 3, data_rng);
    std::vector<Image> dataset{img};
    RngStream extra(4);
    dataset.push_back(noisy_image({10, 10}, 3, extra));
    const ChannelStats stats = compute_channel_stats(dataset);

    AugmentConfig config;
    config.blur_sigma = 1.0;
    config.stats = stats;

    config.flip_probability = 0.0;
    RngStream rng_a(5);
    const Image no_flip = augment(img, config, rng_a);
    config.flip_probability = 1.0;
    RngStream rng_b(5);
    const Image flipped = augment(flip_horizontal(img), config, rng_b);
    // flip(flip(x)) == x, so augmenting the pre-flipped image with p=1
    // matches augmenting the original with p=0.
    for (std::size_t i = 0; i < no_flip.pixels.size(); ++i)
        CHECK(no_flip.pixels[i] == doctest::Approx(flipped.pixels[i]).epsilon(1e-12));
}

TEST_CASE("augment is deterministic in the stream") {
    RngStream data_rng(6);
    const Image img = noisy_image({10, 10}, 3, data_rng);
    RngStream o(7);
    std::vector<Image> dataset{img, noisy_image({10, 10}, 3, o)};
    AugmentConfig config;
    config.stats = compute_channel_stats(dataset);

    RngStream a(99), b(99);
    CHECK(augment(img, config, a).pixels == augment(img, config, b).pixels);
}
