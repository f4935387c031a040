#include "markar/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "markar/errors.hpp"

namespace markar {

std::string_view to_string(Quadrant q) {
    switch (q) {
        case Quadrant::Deg0: return "DEG0";
        case Quadrant::Deg90: return "DEG90";
        case Quadrant::Deg180: return "DEG180";
        case Quadrant::Deg270: return "DEG270";
    }
    return "DEG0";
}

std::optional<Quadrant> quadrant_from_string(std::string_view s) {
    if (s == "DEG0") return Quadrant::Deg0;
    if (s == "DEG90") return Quadrant::Deg90;
    if (s == "DEG180") return Quadrant::Deg180;
    if (s == "DEG270") return Quadrant::Deg270;
    return std::nullopt;
}

Vec3 camera_position_object_space(const Mat4& pose) {
    // In row-vector layout the position is the last column of the transposed
    // inverse; in our column-major storage that slot is row 3.
    const Mat4 inv_t = transpose(inverse(pose));
    return {inv_t(3, 0), inv_t(3, 1), inv_t(3, 2)};
}

double marker_orientation_deg(const Mat4& pose, OrientationState& state) {
    const Vec3 p = camera_position_object_space(pose);
    const Vec3 projected{p.x, p.y, 0.0};
    if (length(projected) < 1e-9) return state.last_angle_deg.value_or(0.0);

    const Vec3 v_proj = normalize(projected);
    constexpr Vec3 up{0.0, 1.0, 0.0};
    const double s = std::clamp(dot(v_proj, up), -1.0, 1.0);
    const double w = rad_to_deg(std::acos(s));
    const double sign = cross(v_proj, up).z >= 0.0 ? 1.0 : -1.0;

    double angle = 180.0 + sign * w;
    if (angle >= 360.0) angle -= 360.0;
    if (angle < 0.0) angle += 360.0;

    state.last_angle_deg = angle;
    state.last_quadrant = quantize_orientation(angle);
    return angle;
}

Quadrant quantize_orientation(double angle_deg) {
    if (!(angle_deg >= 0.0 && angle_deg < 360.0))
        throw OutOfRange("orientation angle outside [0, 360): " + std::to_string(angle_deg));
    if (angle_deg <= 45.0 || angle_deg > 315.0) return Quadrant::Deg0;
    if (angle_deg <= 135.0) return Quadrant::Deg90;
    if (angle_deg <= 225.0) return Quadrant::Deg180;
    return Quadrant::Deg270;
}

Vec3 remap_translation(const Vec3& d, Quadrant q) {
    switch (q) {
        case Quadrant::Deg0: return d;
        case Quadrant::Deg90: return {d.z, d.y, -d.x};
        case Quadrant::Deg180: return {-d.x, d.y, -d.z};
        case Quadrant::Deg270: return {-d.z, d.y, d.x};
    }
    return d;
}

}  // namespace markar
