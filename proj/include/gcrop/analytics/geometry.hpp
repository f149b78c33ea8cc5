#pragma once

#include "gcrop/core/image.hpp"
#include "gcrop/core/rect.hpp"

namespace gcrop::analytics {

long long intersection_area(const Rect& a, const Rect& b);

// Intersection over union, in [0, 1]. Symmetric.
double iou(const Rect& a, const Rect& b);

// Fraction of the rect's area lying outside the image.
double oob_fraction(const Rect& rect, ImageDims dims);

}  // namespace gcrop::analytics
