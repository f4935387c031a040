#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "markar/math.hpp"
#include "markar/model.hpp"
#include "markar/parts_registry.hpp"

namespace markar {

// Virtual pinhole camera used to turn touch points into rays. view_matrix
// maps world to camera space (camera looks down -Z, +Y up); screen y grows
// downwards. For the engine, world space is the tracker's camera space, so
// the defaults (origin, identity view) are what the frame loop uses.
struct PickCamera {
    double viewport_w = 1280.0;
    double viewport_h = 768.0;
    double fov_y_deg = 45.0;
    Vec3 position{};
    Mat4 view_matrix = Mat4::identity();
};

struct Ray {
    Vec3 origin;
    Vec3 dir;  // unit length
};

// Ray from the camera through screen point (x, y), with (0,0) the top-left
// corner and (w/2, h/2) on the view axis. Throws OutOfViewport unless
// 0 <= x <= w and 0 <= y <= h.
Ray screen_to_world_ray(const PickCamera& cam, double x, double y);

inline constexpr double kPickEpsilon = 1e-9;
inline constexpr double kDefaultPickDistance = 10000.0;

// Moller-Trumbore. Both faces count and edge hits count. Returns the ray
// parameter t of the hit (distance, since dir is unit length) when
// t > kPickEpsilon.
std::optional<double> intersect_triangle(const Ray& ray, const Vec3& a, const Vec3& b,
                                         const Vec3& c);

struct PickHit {
    std::string part_name;
    double distance = 0.0;
};

// Nearest hit over every pickable part, each part's triangles placed by
// model_matrix * T(effective highlight offset). Hits closer than 1e-9 to the
// current best are treated as ties and keep the earlier part.
std::optional<PickHit> pick(const Ray& ray, std::span<const Part> parts, const Mat4& model_matrix,
                            double max_dist = kDefaultPickDistance);

struct UiMessage {
    enum class Kind { Cancel, Info };
    Kind kind = Kind::Cancel;
    std::string text;

    static UiMessage cancel() { return {Kind::Cancel, {}}; }
    static UiMessage info(std::string t) { return {Kind::Info, std::move(t)}; }

    friend bool operator==(const UiMessage&, const UiMessage&) = default;
};

// Highlights `name`: clears the offset of every other part, applies the
// registry offset to `name` (zero for unregistered parts) and returns
// [CANCEL, INFO(text)] when the registry has text for it, nothing otherwise.
// Throws UnknownPart.
std::vector<UiMessage> select_part(std::span<Part> parts, const PartsRegistry& registry,
                                   const std::string& name);

}  // namespace markar
