#include "gcrop/analytics/geometry.hpp"

#include <algorithm>

namespace gcrop::analytics {

long long intersection_area(const Rect& a, const Rect& b) {
    const long long iw = std::min<long long>(a.right(), b.right()) -
                         std::max<long long>(a.left, b.left);
    if (iw <= 0) return 0;
    const long long ih = std::min<long long>(a.bottom(), b.bottom()) -
                         std::max<long long>(a.top, b.top);
    if (ih <= 0) return 0;
    return iw * ih;
}

double iou(const Rect& a, const Rect& b) {
    const long long inter = intersection_area(a, b);
    const long long uni = a.area() + b.area() - inter;
    return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

double oob_fraction(const Rect& rect, ImageDims dims) {
    const Rect frame{0, 0, dims.width, dims.height};
    const long long inside = intersection_area(rect, frame);
    return 1.0 - static_cast<double>(inside) / static_cast<double>(rect.area());
}

}  // namespace gcrop::analytics
