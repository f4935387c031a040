#pragma once

#include <optional>
#include <string_view>

#include "markar/math.hpp"

namespace markar {

// Marker orientation relative to the viewer, quantized to quarter turns.
enum class Quadrant { Deg0 = 0, Deg90 = 1, Deg180 = 2, Deg270 = 3 };

std::string_view to_string(Quadrant q);
std::optional<Quadrant> quadrant_from_string(std::string_view s);
constexpr double quadrant_degrees(Quadrant q) { return 90.0 * static_cast<int>(q); }

// Orientation memory for one session. Used when the camera sits on the
// marker normal and no angle can be derived from the pose.
struct OrientationState {
    std::optional<double> last_angle_deg;
    Quadrant last_quadrant = Quadrant::Deg0;
};

// Camera position expressed in the marker (object) frame. Computed the way the
// original tracker sample did it: invert the pose, transpose it, and read the
// position from the row-vector translation slot. For a rigid pose [R t] this
// equals -R^T t. Throws SingularMatrix.
Vec3 camera_position_object_space(const Mat4& pose);

// Angle in [0, 360) between the viewer and the marker's "up" axis (0,1,0).
//
// The camera position is projected onto the marker's X/Y plane and normalized
// (v). The unsigned angle w = acos(v . up) is signed by the z component of
// v x up (zero counts as positive) and shifted by 180 degrees, so a camera
// on the marker's +Y side reads 180 and one on the -Y side reads 0.
//
// If the projection is shorter than 1e-9 the previous angle from `state` is
// returned (0 when there is none). Otherwise `state` is updated.
double marker_orientation_deg(const Mat4& pose, OrientationState& state);

// (315, 360) and [0, 45] -> Deg0, (45, 135] -> Deg90, (135, 225] -> Deg180,
// (225, 315] -> Deg270. Throws OutOfRange outside [0, 360).
Quadrant quantize_orientation(double angle_deg);

// Re-expresses a drag delta so that screen-right keeps moving the model to the
// viewer's right whatever side of the marker the viewer stands on. The y
// component (height above the marker) is never touched.
Vec3 remap_translation(const Vec3& user_delta, Quadrant q);

}  // namespace markar
