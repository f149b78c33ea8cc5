#include "gcrop/io/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcrop::io {

namespace {

struct Rgb {
    double r, g, b;
};

Rgb hue_to_rgb(double h6) {
    const int sector = static_cast<int>(h6) % 6;
    const double f = h6 - std::floor(h6);
    switch (sector) {
        case 0: return {1.0, f, 0.0};
        case 1: return {1.0 - f, 1.0, 0.0};
        case 2: return {0.0, 1.0, f};
        case 3: return {0.0, 1.0 - f, 1.0};
        case 4: return {f, 0.0, 1.0};
        default: return {1.0, 0.0, 1.0 - f};
    }
}

// Classes come in hue pairs: evenly spaced base hues identify the pair,
// and the odd class of each pair is desaturated a notch. Every class keeps
// a distinct color, but the within-pair gap is small enough that the
// contrasting shape has to carry part of the signal.
Rgb class_color(int cls, int class_count) {
    const int pairs = (class_count + 1) / 2;
    const Rgb base = hue_to_rgb(6.0 * (cls / 2) / pairs);
    if (cls % 2 == 0) return base;
    const double blend = 0.82;
    return {blend * base.r + (1.0 - blend) * 0.5,
            blend * base.g + (1.0 - blend) * 0.5,
            blend * base.b + (1.0 - blend) * 0.5};
}

// Shape masks are centered in the box and touch all four box edges, so the
// box is exactly the bounding box of the painted pixels. Paired classes get
// strongly contrasting masks (square vs cross, disc vs diamond).
constexpr int kShapeOrder[4] = {0, 3, 1, 2};

bool shape_covers(int shape, int px, int py, const Rect& box) {
    const double cx = box.left + box.width / 2.0;
    const double cy = box.top + box.height / 2.0;
    const double dx = px + 0.5 - cx;
    const double dy = py + 0.5 - cy;
    const double half = box.width / 2.0;
    switch (kShapeOrder[shape % 4]) {
        case 0:  // square
            return true;
        case 1:  // disc
            return dx * dx + dy * dy <= half * half;
        case 2:  // diamond
            return std::abs(dx) + std::abs(dy) <= half;
        default:  // cross; degenerates to a square below 3px so it stays visible
            if (box.width < 3 || box.height < 3) return true;
            return std::abs(dx) <= box.width / 6.0 ||
                   std::abs(dy) <= box.height / 6.0;
    }
}

void paint_object(Image& img, int cls, int class_count, const Rect& box) {
    const Rgb color = class_color(cls, class_count);
    for (int y = box.top; y < box.bottom(); ++y)
        for (int x = box.left; x < box.right(); ++x)
            if (shape_covers(cls, x, y, box)) {
                img.at(x, y, 0) = color.r;
                img.at(x, y, 1) = color.g;
                img.at(x, y, 2) = color.b;
            }
}

}  // namespace

void SyntheticSceneSpec::validate() const {
    if (dims.width < 1 || dims.height < 1)
        throw std::invalid_argument("synthetic.dims: must be positive");
    if (class_count < 2)
        throw std::invalid_argument("synthetic.class_count: must be >= 2");
    if (objects_per_image.first < 1 ||
        objects_per_image.first > objects_per_image.second)
        throw std::invalid_argument(
            "synthetic.objects_per_image: require 1 <= lo <= hi");
    if (!(object_size_range.first > 0.0) ||
        !(object_size_range.first <= object_size_range.second) ||
        !(object_size_range.second <= 1.0))
        throw std::invalid_argument(
            "synthetic.object_size_range: require 0 < lo <= hi <= 1");
    if (noise_level < 0.0 || noise_level > 1.0)
        throw std::invalid_argument("synthetic.noise_level: must lie in [0, 1]");
}

SyntheticData gen_synthetic(const SyntheticSceneSpec& spec, int n,
                            RngStream& rng) {
    spec.validate();
    if (n < 1)
        throw std::invalid_argument("gen_synthetic: n must be >= 1");

    const int min_side = std::min(spec.dims.width, spec.dims.height);
    SyntheticData out;
    out.dataset.class_count = spec.class_count;
    out.dataset.images.reserve(static_cast<std::size_t>(n));
    out.dataset.labels.reserve(static_cast<std::size_t>(n));
    out.scenes.reserve(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i) {
        RngStream img_rng = rng.fork(static_cast<std::uint64_t>(i));
        const int cls =
            static_cast<int>(img_rng.uniform_int(0, spec.class_count - 1));
        const int count = static_cast<int>(img_rng.uniform_int(
            spec.objects_per_image.first, spec.objects_per_image.second));

        std::vector<Rect> boxes;
        boxes.reserve(static_cast<std::size_t>(count));
        for (int o = 0; o < count; ++o) {
            const double frac = img_rng.uniform(spec.object_size_range.first,
                                                spec.object_size_range.second);
            const int side =
                std::max(1, static_cast<int>(std::lround(frac * min_side)));
            Rect box{0, 0, side, side};
            if (spec.placement == Placement::Centered) {
                box.left = static_cast<int>(
                    std::lround((spec.dims.width - side) / 2.0));
                box.top = static_cast<int>(
                    std::lround((spec.dims.height - side) / 2.0));
            } else {
                box.left = static_cast<int>(
                    img_rng.uniform_int(0, spec.dims.width - side));
                box.top = static_cast<int>(
                    img_rng.uniform_int(0, spec.dims.height - side));
            }
            boxes.push_back(box);
        }

        Image img = Image::filled(spec.dims, 3, 0.5);
        if (spec.noise_level > 0.0) {
            for (double& v : img.pixels)
                v = (1.0 - spec.noise_level) * 0.5 +
                    spec.noise_level * img_rng.uniform();
        }
        for (const Rect& box : boxes)
            paint_object(img, cls, spec.class_count, box);

        out.dataset.images.push_back(std::move(img));
        out.dataset.labels.push_back(cls);
        out.scenes.push_back({spec.dims, boxes});
    }
    return out;
}

}  // namespace gcrop::io
