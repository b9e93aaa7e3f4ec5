#include "mira/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mira {

double box_area(const BoundingBox& b) {
    return (b.x2 - b.x1) * (b.y2 - b.y1);
}

double box_intersection(const BoundingBox& a, const BoundingBox& b) {
    const double w = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
    const double h = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
    if (w <= 0 || h <= 0) return 0.0;
    return w * h;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

BoxValidation validate_box(double x1, double y1, double x2, double y2, int image_width,
                           int image_height) {
    BoxValidation result;
    const struct {
        const char* name;
        double value;
    } coords[] = {{"x1", x1}, {"y1", y1}, {"x2", x2}, {"y2", y2}};
    for (const auto& c : coords) {
        if (std::isnan(c.value)) {
            result.violations.push_back(std::string(c.name) + " is NaN");
        }
    }
    if (!result.violations.empty()) return result;

    if (x1 >= x2) result.violations.push_back("ordering violated: x1 must be < x2");
    if (y1 >= y2) result.violations.push_back("ordering violated: y1 must be < y2");
    if (!result.violations.empty()) return result;

    const double w = image_width;
    const double h = image_height;
    auto clamp_coord = [&result](const char* name, double v, double hi) {
        const double clamped = std::clamp(v, 0.0, hi);
        if (clamped != v) {
            result.warnings.push_back(std::string(name) + " clamped from " + fmt(v) + " to " +
                                      fmt(clamped));
        }
        return clamped;
    };
    const double cx1 = clamp_coord("x1", x1, w);
    const double cy1 = clamp_coord("y1", y1, h);
    const double cx2 = clamp_coord("x2", x2, w);
    const double cy2 = clamp_coord("y2", y2, h);

    // A box entirely outside the frame collapses under clamping.
    if (cx1 >= cx2 || cy1 >= cy2) {
        result.violations.push_back("box lies outside the image frame");
        return result;
    }
    result.box = BoundingBox{cx1, cy1, cx2, cy2};
    return result;
}

}  // namespace mira
