#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "markar/engine.hpp"
#include "markar/math.hpp"

namespace markar {

// One tracker reading. `matrix` is only meaningful when visible.
struct PoseSample {
    std::int64_t timestamp_ms = 0;
    bool visible = false;
    Mat4 matrix = Mat4::identity();

    MarkerPose as_marker_pose() const { return {matrix, visible, timestamp_ms}; }
    friend bool operator==(const PoseSample&, const PoseSample&) = default;
};

// A camera circling the marker origin. Azimuth phi(t) = angular_speed * t;
// at phi the camera sits at (r sin phi, r cos phi, height) in the marker
// frame, looking at the origin with the marker normal as its up reference.
// phi = 0 is therefore on the marker's +Y side, which reads as 180 degrees
// of marker orientation, and the angle then grows with phi.
struct OrbitScript {
    double radius = 400.0;
    double height = 250.0;
    double angular_speed_deg_s = 45.0;
    double fps = 30.0;
    double duration_s = 8.0;
    std::vector<std::pair<std::int64_t, std::int64_t>> dropout_intervals;  // [start, end) ms

    // Throws OutOfRange on radius <= 0, fps <= 0, negative duration, or a
    // dropout interval outside [0, duration].
    void validate() const;
    std::int64_t duration_ms() const;
};

// Object->camera pose for an OpenGL-style camera (looking down -Z, +Y up)
// placed at `eye` in marker coordinates and aimed at the marker origin.
Mat4 look_at_origin_pose(const Vec3& eye, const Vec3& up_reference = {0.0, 0.0, 1.0});

// Throws OutOfRange unless 0 <= t_ms <= duration.
PoseSample orbit_pose(const OrbitScript& script, std::int64_t t_ms);

// Frame timestamps round(k * 1000 / fps) for every k with t < duration.
std::vector<std::int64_t> orbit_timestamps(const OrbitScript& script);
std::vector<PoseSample> orbit_samples(const OrbitScript& script);

// Line format: `<timestamp_ms> POSE <16 scalars, column-major>` or
// `<timestamp_ms> LOST`. Scalars are written with 17 significant digits so
// save followed by load is lossless. Loading throws ParseError(line) for
// malformed lines, decreasing timestamps, non-rigid visible poses or a file
// with no samples.
std::vector<PoseSample> parse_pose_trace(std::istream& in, const std::string& source);
std::vector<PoseSample> load_pose_trace(const std::string& path);
void write_pose_trace(std::ostream& out, const std::vector<PoseSample>& samples);
void save_pose_trace(const std::string& path, const std::vector<PoseSample>& samples);

}  // namespace markar
