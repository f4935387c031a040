#include "markar/picking.hpp"

#include <cmath>

#include "markar/errors.hpp"

namespace markar {

Ray screen_to_world_ray(const PickCamera& cam, double x, double y) {
    if (!(x >= 0.0 && x <= cam.viewport_w && y >= 0.0 && y <= cam.viewport_h)) throw OutOfViewport();

    const double half_h = cam.viewport_h / 2.0;
    const double tan_half = std::tan(deg_to_rad(cam.fov_y_deg) / 2.0);
    const Vec3 dir_cam{(x - cam.viewport_w / 2.0) / half_h * tan_half,
                       -(y - half_h) / half_h * tan_half, -1.0};

    // Camera -> world rotation is the transpose of the view rotation.
    const Vec3 dir_world = transform_direction(transpose(cam.view_matrix), dir_cam);
    return {cam.position, normalize(dir_world)};
}

std::optional<double> intersect_triangle(const Ray& ray, const Vec3& a, const Vec3& b,
                                         const Vec3& c) {
    const Vec3 edge1 = b - a;
    const Vec3 edge2 = c - a;
    const Vec3 p = cross(ray.dir, edge2);
    const double det = dot(edge1, p);
    if (std::abs(det) < kPickEpsilon) return std::nullopt;
    const double inv_det = 1.0 / det;

    const Vec3 s = ray.origin - a;
    const double u = dot(s, p) * inv_det;
    if (u < 0.0 || u > 1.0) return std::nullopt;

    const Vec3 q = cross(s, edge1);
    const double v = dot(ray.dir, q) * inv_det;
    if (v < 0.0 || u + v > 1.0) return std::nullopt;

    const double t = dot(edge2, q) * inv_det;
    if (t <= kPickEpsilon) return std::nullopt;
    return t;
}

std::optional<PickHit> pick(const Ray& ray, std::span<const Part> parts, const Mat4& model_matrix,
                            double max_dist) {
    const Part* best_part = nullptr;
    double best = max_dist;
    for (const Part& part : parts) {
        if (!part.pickable) continue;
        const Vec3 off = part.effective_offset();
        const Mat4 to_world = translate_pose(model_matrix, off.x, off.y, off.z);
        for (const Triangle& tri : part.triangles) {
            const auto t = intersect_triangle(ray, transform_point(to_world, tri.a),
                                              transform_point(to_world, tri.b),
                                              transform_point(to_world, tri.c));
            if (!t || *t > max_dist) continue;
            if (best_part == nullptr ? *t <= best : *t < best - kPickEpsilon) {
                best = *t;
                best_part = &part;
            }
        }
    }
    if (best_part == nullptr) return std::nullopt;
    return PickHit{best_part->name, best};
}

std::vector<UiMessage> select_part(std::span<Part> parts, const PartsRegistry& registry,
                                   const std::string& name) {
    Part* target = nullptr;
    for (Part& p : parts)
        if (p.name == name) target = &p;
    if (target == nullptr) throw UnknownPart(name);

    for (Part& p : parts) {
        p.offset_applied = false;
        p.highlight_offset = {};
    }

    const PartInfo info = registry.lookup(name);
    target->highlight_offset = info.offset;
    target->offset_applied = true;

    if (info.is_none()) return {};
    return {UiMessage::cancel(), UiMessage::info(info.info_text)};
}

}  // namespace markar
