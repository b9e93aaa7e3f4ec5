#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mira {

/// Axis-aligned box in absolute pixel coordinates, corner convention.
/// Coordinates are interpreted in the original image frame for scoring.
struct BoundingBox {
    double x1 = 0;
    double y1 = 0;
    double x2 = 0;
    double y2 = 0;

    bool valid() const { return x1 >= 0 && y1 >= 0 && x1 < x2 && y1 < y2; }
    bool operator==(const BoundingBox&) const = default;
};

double box_area(const BoundingBox& b);
double box_intersection(const BoundingBox& a, const BoundingBox& b);

struct BoxValidation {
    std::optional<BoundingBox> box;       // set iff no fatal violation
    std::vector<std::string> violations;  // fatal constraint failures
    std::vector<std::string> warnings;    // clamps and other repairs
    bool ok() const { return box.has_value(); }
};

/// Checks raw coordinates against an image frame. Ordering violations and NaN
/// are fatal; out-of-bounds coordinates are clamped to [0,width]x[0,height]
/// and reported as warnings. Validating an already-valid box is a no-op.
BoxValidation validate_box(double x1, double y1, double x2, double y2, int image_width,
                           int image_height);

}  // namespace mira
