#pragma once

// Test-only oracle for the false-positive rate of pairwise view sampling.
//
// Views of RandomCrop and GCC are i.i.d. given the config, and both
// samplers factor into independent per-axis position distributions, so the
// exact FP probability can be computed by enumerating the discrete
// crop-position lattice:
//
//   P(not FP) = sum over mask pairs (A, B), A intersect B nonempty of q[A] q[B]
//
// where q[A] is the probability that a single view qualifies exactly the
// object subset A (per-view overlap ratio >= tau). Positions outside the
// enumerated window qualify nothing and land in the empty mask. This path
// shares no code with the Monte Carlo estimator under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gcrop/analytics/geometry.hpp"
#include "gcrop/analytics/scene.hpp"
#include "gcrop/core/cropper.hpp"

namespace gcrop::testing {

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// P(lround(x - half) = v) for x ~ N(mean, sd^2): the rounding cell is the
// unit interval centered on v (half-open boundaries have measure zero).
inline double rounded_normal_mass(int v, double mean, double half, double sd) {
    const double center = mean - half;
    if (sd == 0.0) return std::lround(center) == v ? 1.0 : 0.0;
    return normal_cdf((v + 0.5 - center) / sd) - normal_cdf((v - 0.5 - center) / sd);
}

struct AxisDistribution {
    std::vector<int> positions;
    std::vector<double> mass;  // may sum to < 1; the rest qualifies nothing
};

inline AxisDistribution random_crop_axis(int image_side, int view_side) {
    AxisDistribution dist;
    const int count = image_side - view_side + 1;
    for (int v = 0; v < count; ++v) {
        dist.positions.push_back(v);
        dist.mass.push_back(1.0 / count);
    }
    return dist;
}

// Enumerates every position whose view could touch any object; [lo, hi]
// covers all overlap, so omitted tail mass has an empty mask by
// construction.
inline AxisDistribution gcc_axis(int image_side, int view_side, double alpha,
                                 int lo, int hi) {
    AxisDistribution dist;
    const double sd = std::sqrt(alpha * image_side);
    const double mean = image_side / 2.0;
    const double half = view_side / 2.0;
    for (int v = lo; v <= hi; ++v) {
        dist.positions.push_back(v);
        dist.mass.push_back(rounded_normal_mass(v, mean, half, sd));
    }
    return dist;
}

// Exact FP probability for an i.i.d. two-view sampler with independent
// axes. Supports RandomCrop and GCC.
inline double exact_fp_rate(const CropperConfig& config,
                            const analytics::Scene& scene, double tau) {
    const ViewDims vd = compute_view_dims(config.crop_size, scene.dims);

    AxisDistribution xs, ys;
    if (config.method == CropMethod::RandomCrop) {
        xs = random_crop_axis(scene.dims.width, vd.width);
        ys = random_crop_axis(scene.dims.height, vd.height);
    } else if (config.method == CropMethod::Gcc) {
        int xlo = scene.dims.width, xhi = -scene.dims.width;
        int ylo = scene.dims.height, yhi = -scene.dims.height;
        for (const Rect& obj : scene.objects) {
            xlo = std::min(xlo, obj.left - vd.width);
            xhi = std::max(xhi, obj.right());
            ylo = std::min(ylo, obj.top - vd.height);
            yhi = std::max(yhi, obj.bottom());
        }
        xs = gcc_axis(scene.dims.width, vd.width, config.alpha, xlo, xhi);
        ys = gcc_axis(scene.dims.height, vd.height, config.alpha, ylo, yhi);
    } else {
        throw std::invalid_argument("exact_fp_rate: unsupported method");
    }

    const double view_area = static_cast<double>(vd.width) * vd.height;
    std::map<std::uint64_t, double> mask_mass;
    double enumerated = 0.0;
    for (std::size_t yi = 0; yi < ys.positions.size(); ++yi) {
        for (std::size_t xi = 0; xi < xs.positions.size(); ++xi) {
            const Rect view{xs.positions[xi], ys.positions[yi], vd.width,
                            vd.height};
            std::uint64_t mask = 0;
            for (std::size_t o = 0; o < scene.objects.size(); ++o) {
                const double ratio =
                    static_cast<double>(
                        analytics::intersection_area(scene.objects[o], view)) /
                    view_area;
                if (ratio >= tau) mask |= std::uint64_t{1} << o;
            }
            const double p = xs.mass[xi] * ys.mass[yi];
            enumerated += p;
            if (mask != 0) mask_mass[mask] += p;
        }
    }
    // Everything not enumerated (plus enumerated empty-mask cells) fails to
    // qualify any object.
    double qualified = 0.0;
    for (const auto& [mask, p] : mask_mass) qualified += p;
    mask_mass[0] += 1.0 - qualified;

    double not_fp = 0.0;
    for (const auto& [ma, pa] : mask_mass)
        for (const auto& [mb, pb] : mask_mass)
            if ((ma & mb) != 0) not_fp += pa * pb;
    return 1.0 - not_fp;
}

// Literal pair enumeration for small uniform lattices; used to cross-check
// the factored oracle above.
inline double brute_force_fp_rate_random_crop(const CropperConfig& config,
                                              const analytics::Scene& scene,
                                              double tau) {
    const ViewDims vd = compute_view_dims(config.crop_size, scene.dims);
    const int nx = scene.dims.width - vd.width + 1;
    const int ny = scene.dims.height - vd.height + 1;
    const double view_area = static_cast<double>(vd.width) * vd.height;

    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(nx) * ny);
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) {
            const Rect view{x, y, vd.width, vd.height};
            std::uint64_t mask = 0;
            for (std::size_t o = 0; o < scene.objects.size(); ++o) {
                const double ratio =
                    static_cast<double>(
                        analytics::intersection_area(scene.objects[o], view)) /
                    view_area;
                if (ratio >= tau) mask |= std::uint64_t{1} << o;
            }
            masks.push_back(mask);
        }

    long long fp = 0;
    for (const std::uint64_t a : masks)
        for (const std::uint64_t b : masks)
            if ((a & b) == 0) ++fp;
    return static_cast<double>(fp) /
           (static_cast<double>(masks.size()) * static_cast<double>(masks.size()));
}

}  // namespace gcrop::testing
