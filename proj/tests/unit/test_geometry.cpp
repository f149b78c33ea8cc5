#include <doctest.h>

#include "gcrop/analytics/geometry.hpp"
#include "gcrop/core/rng.hpp"

using namespace gcrop;
using analytics::iou;
using analytics::oob_fraction;

TEST_CASE("iou basics") {
    const Rect a{0, 0, 10, 10};
    CHECK(iou(a, a) == 1.0);
    CHECK(iou(a, {20, 20, 5, 5}) == 0.0);
    CHECK(iou(a, {5, 0, 10, 10}) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // Touching edges do not intersect.
    CHECK(iou(a, {10, 0, 10, 10}) == 0.0);
}

TEST_CASE("iou is symmetric, bounded, and 1 only on identity") {
    RngStream rng(17);
    for (int i = 0; i < 5000; ++i) {
        const Rect a{static_cast<int>(rng.uniform_int(-20, 20)),
                     static_cast<int>(rng.uniform_int(-20, 20)),
                     static_cast<int>(rng.uniform_int(1, 30)),
                     static_cast<int>(rng.uniform_int(1, 30))};
        const Rect b{static_cast<int>(rng.uniform_int(-20, 20)),
                     static_cast<int>(rng.uniform_int(-20, 20)),
                     static_cast<int>(rng.uniform_int(1, 30)),
                     static_cast<int>(rng.uniform_int(1, 30))};
        const double ab = iou(a, b);
        CHECK(ab == iou(b, a));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(iou(a, a) == 1.0);
        if (ab == 1.0) CHECK(a == b);
    }
}

TEST_CASE("oob_fraction") {
    const ImageDims dims{32, 32};
    CHECK(oob_fraction({4, 4, 8, 8}, dims) == 0.0);
    CHECK(oob_fraction({-8, -8, 16, 16}, dims) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(oob_fraction({100, 100, 4, 4}, dims) == 1.0);
    // Exactly flush with the border.
    CHECK(oob_fraction({16, 16, 16, 16}, dims) == 0.0);
    CHECK(oob_fraction({24, 0, 16, 16}, dims) == doctest::Approx(0.5).epsilon(1e-12));
}
