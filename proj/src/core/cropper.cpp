#include "gcrop/core/cropper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcrop {

std::string_view to_string(CropMethod method) {
    switch (method) {
        case CropMethod::RandomCrop: return "RandomCrop";
        case CropMethod::Gcc: return "GCC";
        case CropMethod::Cgcc: return "CGCC";
        case CropMethod::Mgcc: return "MGCC";
        case CropMethod::Mcgcc: return "MCGCC";
    }
    return "?";
}

std::string_view to_string(PadPolicy policy) {
    return policy == PadPolicy::Zero ? "zero" : "clamp";
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::optional<CropMethod> parse_crop_method(std::string_view name) {
    const std::string n = lower(name);
    if (n == "randomcrop" || n == "random") return CropMethod::RandomCrop;
    if (n == "gcc") return CropMethod::Gcc;
    if (n == "cgcc") return CropMethod::Cgcc;
    if (n == "mgcc") return CropMethod::Mgcc;
    if (n == "mcgcc") return CropMethod::Mcgcc;
    return std::nullopt;
}

std::optional<PadPolicy> parse_pad_policy(std::string_view name) {
    const std::string n = lower(name);
    if (n == "zero") return PadPolicy::Zero;
    if (n == "clamp" || n == "clamp-to-edge" || n == "edge") return PadPolicy::ClampToEdge;
    return std::nullopt;
}

void CropperConfig::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("cropper.alpha: must be a finite value >= 0");
    if (!(crop_size > 0.0) || !(crop_size <= 1.0))
        throw std::invalid_argument("cropper.crop_size: must lie in (0, 1]");
    if (!(uniform_bounds.first >= 0.0) || !(uniform_bounds.second <= 1.0) ||
        !(uniform_bounds.first <= uniform_bounds.second))
        throw std::invalid_argument(
            "cropper.uniform_bounds: require 0 <= a <= b <= 1");
    if (n_views < 2)
        throw std::invalid_argument("cropper.n_views: must be >= 2");
}

ViewDims compute_view_dims(double crop_size, ImageDims dims) {
    if (!(crop_size > 0.0) || !(crop_size <= 1.0))
        throw std::invalid_argument("compute_view_dims: crop_size must lie in (0, 1]");
    if (dims.width < 1 || dims.height < 1)
        throw std::invalid_argument("compute_view_dims: image dims must be positive");
    const double side = std::sqrt(crop_size);
    const int w = std::max(1, static_cast<int>(std::lround(side * dims.width)));
    const int h = std::max(1, static_cast<int>(std::lround(side * dims.height)));
    return {w, h};
}

std::vector<Vec2> sample_gcc_centers(RngStream& rng, ImageDims dims,
                                     double alpha, int n_views) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("sample_gcc_centers: alpha must be >= 0");
    const Vec2 mu{dims.width / 2.0, dims.height / 2.0};
    const double sx = std::sqrt(alpha * dims.width);
    const double sy = std::sqrt(alpha * dims.height);
    std::vector<Vec2> centers;
    centers.reserve(static_cast<std::size_t>(n_views));
    for (int i = 0; i < n_views; ++i) {
        const auto [nx, ny] = rng.normal_pair();
        centers.push_back({mu.x + sx * nx, mu.y + sy * ny});
    }
    return centers;
}

MgccDraw sample_mgcc_centers(RngStream& rng, ImageDims dims, double alpha,
                             std::pair<double, double> bounds, int n_views) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("sample_mgcc_centers: alpha must be >= 0");
    if (!(bounds.first <= bounds.second))
        throw std::invalid_argument("sample_mgcc_centers: require a <= b");
    MgccDraw draw;
    draw.mu.x = rng.uniform(bounds.first * dims.width, bounds.second * dims.width);
    draw.mu.y = rng.uniform(bounds.first * dims.height, bounds.second * dims.height);
    const double sx = std::sqrt(alpha * dims.width);
    const double sy = std::sqrt(alpha * dims.height);
    draw.centers.reserve(static_cast<std::size_t>(n_views));
    for (int i = 0; i < n_views; ++i) {
        const auto [nx, ny] = rng.normal_pair();
        draw.centers.push_back({draw.mu.x + sx * nx, draw.mu.y + sy * ny});
    }
    return draw;
}

Rect center_to_rect(Vec2 center, ViewDims view_dims) {
    if (view_dims.width < 1 || view_dims.height < 1)
        throw std::invalid_argument("center_to_rect: view dims must be positive");
    Rect r;
    r.left = static_cast<int>(std::lround(center.x - view_dims.width / 2.0));
    r.top = static_cast<int>(std::lround(center.y - view_dims.height / 2.0));
    r.width = view_dims.width;
    r.height = view_dims.height;
    return r;
}

Rect correct_rect(Rect rect, ImageDims dims) {
    if (rect.width > dims.width || rect.height > dims.height)
        throw std::invalid_argument("correct_rect: rect larger than image");
    rect.left = std::clamp(rect.left, 0, dims.width - rect.width);
    rect.top = std::clamp(rect.top, 0, dims.height - rect.height);
    return rect;
}

Image extract_view(const Image& image, Rect rect, PadPolicy pad) {
    if (rect.width > image.dims.width || rect.height > image.dims.height)
        throw std::invalid_argument("extract_view: rect larger than image");
    Image out = Image::filled({rect.width, rect.height}, image.channels);
    const int W = image.dims.width;
    const int H = image.dims.height;
    const int C = image.channels;
    for (int vy = 0; vy < rect.height; ++vy) {
        const int sy = rect.top + vy;
        for (int vx = 0; vx < rect.width; ++vx) {
            const int sx = rect.left + vx;
            const bool inside = sx >= 0 && sx < W && sy >= 0 && sy < H;
            if (inside) {
                for (int c = 0; c < C; ++c) out.at(vx, vy, c) = image.at(sx, sy, c);
            } else if (pad == PadPolicy::ClampToEdge) {
                const int cx = std::clamp(sx, 0, W - 1);
                const int cy = std::clamp(sy, 0, H - 1);
                for (int c = 0; c < C; ++c) out.at(vx, vy, c) = image.at(cx, cy, c);
            }
            // PadPolicy::Zero leaves the fill value in place.
        }
    }
    return out;
}

Rect sample_random_crop(RngStream& rng, ImageDims dims, double crop_size) {
    const ViewDims vd = compute_view_dims(crop_size, dims);
    Rect r;
    r.left = static_cast<int>(rng.uniform_int(0, dims.width - vd.width));
    r.top = static_cast<int>(rng.uniform_int(0, dims.height - vd.height));
    r.width = vd.width;
    r.height = vd.height;
    return r;
}

ViewRects sample_view_rects(const CropperConfig& config, ImageDims dims,
                            RngStream& rng) {
    config.validate();
    const ViewDims vd = compute_view_dims(config.crop_size, dims);
    ViewRects out;
    out.rects.reserve(static_cast<std::size_t>(config.n_views));
    switch (config.method) {
        case CropMethod::RandomCrop: {
            out.sampled_mean = {dims.width / 2.0, dims.height / 2.0};
            for (int i = 0; i < config.n_views; ++i)
                out.rects.push_back(sample_random_crop(rng, dims, config.crop_size));
            break;
        }
        case CropMethod::Gcc:
        case CropMethod::Cgcc: {
            out.sampled_mean = {dims.width / 2.0, dims.height / 2.0};
            const auto centers =
                sample_gcc_centers(rng, dims, config.alpha, config.n_views);
            for (const Vec2& c : centers) {
                Rect r = center_to_rect(c, vd);
                if (config.method == CropMethod::Cgcc) r = correct_rect(r, dims);
                out.rects.push_back(r);
            }
            break;
        }
        case CropMethod::Mgcc:
        case CropMethod::Mcgcc: {
            const MgccDraw draw = sample_mgcc_centers(
                rng, dims, config.alpha, config.uniform_bounds, config.n_views);
            out.sampled_mean = draw.mu;
            for (const Vec2& c : draw.centers) {
                Rect r = center_to_rect(c, vd);
                if (config.method == CropMethod::Mcgcc) r = correct_rect(r, dims);
                out.rects.push_back(r);
            }
            break;
        }
    }
    return out;
}

ViewSet generate_views(const Image& image, const CropperConfig& config,
                       RngStream& rng) {
    ViewRects vr = sample_view_rects(config, image.dims, rng);
    ViewSet set;
    set.sampled_mean = vr.sampled_mean;
    set.views.reserve(vr.rects.size());
    for (const Rect& r : vr.rects)
        set.views.push_back(extract_view(image, r, config.pad_policy));
    set.rects = std::move(vr.rects);
    return set;
}

}  // namespace gcrop
