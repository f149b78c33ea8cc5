#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcrop/core/image.hpp"
#include "gcrop/core/rect.hpp"
#include "gcrop/core/rng.hpp"

namespace gcrop {

enum class CropMethod { RandomCrop, Gcc, Cgcc, Mgcc, Mcgcc };

enum class PadPolicy { Zero, ClampToEdge };

std::string_view to_string(CropMethod method);
std::string_view to_string(PadPolicy policy);
std::optional<CropMethod> parse_crop_method(std::string_view name);
std::optional<PadPolicy> parse_pad_policy(std::string_view name);

struct CropperConfig {
    CropMethod method = CropMethod::Gcc;
    double alpha = 1.0;                             // variance scale
    double crop_size = 0.5;                         // area fraction in (0, 1]
    std::pair<double, double> uniform_bounds{0.25, 0.75};  // mgcc/mcgcc mean bounds
    int n_views = 2;
    PadPolicy pad_policy = PadPolicy::Zero;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct ViewDims {
    int width = 1;
    int height = 1;

    bool operator==(const ViewDims&) const = default;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Side lengths scale with the square root of the area fraction, rounded to
// nearest with a floor of one pixel.
ViewDims compute_view_dims(double crop_size, ImageDims dims);

// Centers drawn i.i.d. from N(mu, diag(alpha*w, alpha*h)) with mu fixed at
// the image center.
std::vector<Vec2> sample_gcc_centers(RngStream& rng, ImageDims dims,
                                     double alpha, int n_views);

struct MgccDraw {
    Vec2 mu;
    std::vector<Vec2> centers;
};

// The Gaussian mean itself is sampled once per call, uniformly over
// [a*w, b*w] x [a*h, b*h]; all centers share that mean.
MgccDraw sample_mgcc_centers(RngStream& rng, ImageDims dims, double alpha,
                             std::pair<double, double> bounds, int n_views);

// Rounds half away from zero; the rect may land out of bounds.
Rect center_to_rect(Vec2 center, ViewDims view_dims);

// Per-axis clamp into the image. Idempotent; identity on in-bounds rects.
// Rejects rects larger than the image.
Rect correct_rect(Rect rect, ImageDims dims);

// Output dims always equal the rect dims; out-of-bounds pixels are filled
// per pad policy.
Image extract_view(const Image& image, Rect rect, PadPolicy pad);

// Uniform over all fully in-bounds positions.
Rect sample_random_crop(RngStream& rng, ImageDims dims, double crop_size);

struct ViewRects {
    Vec2 sampled_mean;
    std::vector<Rect> rects;
};

// Rect-only sampling path shared by generate_views and the Monte Carlo
// estimators; corrected methods return in-bounds rects.
ViewRects sample_view_rects(const CropperConfig& config, ImageDims dims,
                            RngStream& rng);

struct ViewSet {
    Vec2 sampled_mean;
    std::vector<Rect> rects;
    std::vector<Image> views;
};

ViewSet generate_views(const Image& image, const CropperConfig& config,
                       RngStream& rng);

}  // namespace gcrop
