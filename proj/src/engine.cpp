#include "markar/engine.hpp"

#include <algorithm>
#include <cmath>

#include "markar/errors.hpp"

namespace markar {

std::string_view to_string(InteractionMode m) {
    return m == InteractionMode::Translate ? "TRANSLATE" : "ROTATE";
}

std::string_view to_string(ViewMode m) { return m == ViewMode::Tracking ? "TRACKING" : "INSPECTION"; }

std::string_view to_string(Axis a) {
    switch (a) {
        case Axis::X: return "X";
        case Axis::Y: return "Y";
        case Axis::Z: return "Z";
    }
    return "X";
}

double clamp_scale(double factor) { return std::clamp(factor, kMinScale, kMaxScale); }

Vec3 axis_vector(Axis a) {
    switch (a) {
        case Axis::X: return {1.0, 0.0, 0.0};
        case Axis::Y: return {0.0, 1.0, 0.0};
        case Axis::Z: return {0.0, 0.0, 1.0};
    }
    return {};
}

TransformState apply_touch_delta(const TransformState& state, const SessionModes& modes,
                                 Quadrant quadrant, double dx_px, double dy_px,
                                 const EngineConfig& config) {
    TransformState next = state;
    const int axis = static_cast<int>(modes.axis);
    if (modes.interaction == InteractionMode::Translate) {
        const double amount = modes.axis == Axis::Y ? -dy_px : dx_px;
        const Vec3 delta = axis_vector(modes.axis) * (amount * config.translate_gain);
        next.cum_translation += remap_translation(delta, quadrant);
    } else {
        next.cum_rotation_deg[axis] += dx_px * config.rotate_gain;
    }
    return next;
}

Mat4 compose_model_matrix(const Mat4& pose, const TransformState& s) {
    const Vec3& t = s.cum_translation;
    const Vec3& r = s.cum_rotation_deg;
    Mat4 m = translate_pose(pose, t.x, 0.0, 0.0);
    m = translate_pose(m, 0.0, t.z, 0.0);
    m = translate_pose(m, 0.0, 0.0, t.y);
    m = rotate_pose(m, 90.0, {1.0, 0.0, 0.0});
    m = rotate_pose(m, r.x, {1.0, 0.0, 0.0});
    m = rotate_pose(m, r.y, {0.0, 1.0, 0.0});
    m = rotate_pose(m, r.z, {0.0, 0.0, 1.0});
    return scale_pose(m, s.scale);
}

Mat4 frame_conversion(const Mat4& pose) { return rotate_pose(pose, 90.0, {1.0, 0.0, 0.0}); }

Session::Session(std::vector<Part> parts, std::shared_ptr<const PartsRegistry> registry,
                 EngineConfig config)
    : parts_(std::move(parts)),
      registry_(registry ? std::move(registry) : std::make_shared<const PartsRegistry>()),
      config_(std::move(config)) {}

void Session::enqueue_event(const InputEvent& e) {
    switch (e.kind) {
        case EventKind::TouchDown:
        case EventKind::TouchMove:
        case EventKind::Tap:
            if (!(e.x >= 0.0 && e.x <= config_.camera.viewport_w && e.y >= 0.0 &&
                  e.y <= config_.camera.viewport_h))
                throw InvalidEvent("touch point outside the viewport");
            break;
        case EventKind::PinchScale:
            if (!(e.scale_factor > 0.0) || !std::isfinite(e.scale_factor))
                throw InvalidEvent("pinch factor must be positive");
            break;
        case EventKind::TouchUp:
        case EventKind::Command:
            break;
    }
    queue_->push(e);
}

void Session::set_view_mode(ViewMode mode) {
    if (mode == modes_.view) return;
    if (mode == ViewMode::Inspection) {
        if (!last_visible_pose_) throw NoPoseYet();
        frozen_pose_ = last_visible_pose_;
    } else {
        frozen_pose_.reset();
    }
    modes_.view = mode;
}

std::optional<std::string> Session::selected_part() const {
    for (const Part& p : parts_)
        if (p.offset_applied) return p.name;
    return std::nullopt;
}

void Session::apply_command(Command c, bool transforms_allowed) {
    switch (c) {
        case Command::SetModeTranslate: modes_.interaction = InteractionMode::Translate; break;
        case Command::SetModeRotate: modes_.interaction = InteractionMode::Rotate; break;
        case Command::SetAxisX: modes_.axis = Axis::X; break;
        case Command::SetAxisY: modes_.axis = Axis::Y; break;
        case Command::SetAxisZ: modes_.axis = Axis::Z; break;
        case Command::Reset:
            if (transforms_allowed) transform_ = TransformState{};
            break;
        case Command::ToggleViewMode:
            try {
                set_view_mode(modes_.view == ViewMode::Tracking ? ViewMode::Inspection
                                                                : ViewMode::Tracking);
            } catch (const NoPoseYet&) {
                // Nothing to freeze yet; stay in tracking.
            }
            break;
        case Command::ToggleGizmo: modes_.gizmo_visible = !modes_.gizmo_visible; break;
    }
}

void Session::apply_event(const InputEvent& e, bool transforms_allowed,
                          std::vector<InputEvent>& taps) {
    switch (e.kind) {
        case EventKind::TouchDown: last_touch_ = TouchPoint{e.x, e.y}; break;
        case EventKind::TouchMove:
            if (last_touch_ && transforms_allowed) {
                transform_ = apply_touch_delta(transform_, modes_, orientation_.last_quadrant,
                                               e.x - last_touch_->x, e.y - last_touch_->y,
                                               config_);
            }
            last_touch_ = TouchPoint{e.x, e.y};
            break;
        case EventKind::TouchUp: last_touch_.reset(); break;
        case EventKind::Tap: taps.push_back(e); break;
        case EventKind::PinchScale:
            if (transforms_allowed) transform_.scale = clamp_scale(e.scale_factor);
            break;
        case EventKind::Command: apply_command(e.command, transforms_allowed); break;
    }
}

FrameOutput Session::step_frame(const MarkerPose& pose) {
    const bool usable = pose.visible && is_finite(pose.matrix) &&
                        std::abs(determinant(pose.matrix)) > 1e-12;
    if (modes_.view == ViewMode::Tracking && usable) {
        last_visible_pose_ = pose.matrix;
        last_angle_ = marker_orientation_deg(pose.matrix, orientation_);
    }

    std::vector<InputEvent> taps;
    for (const InputEvent& e : queue_->drain()) {
        // A lost marker in tracking mode freezes the transform state.
        const bool allowed = modes_.view == ViewMode::Inspection || usable;
        apply_event(e, allowed, taps);
    }

    FrameOutput out;
    out.timestamp_ms = pose.timestamp_ms;
    out.angle_deg = last_angle_;
    out.orientation = orientation_.last_quadrant;
    out.quantized_angle_deg = quadrant_degrees(orientation_.last_quadrant);

    std::optional<Mat4> base;
    if (modes_.view == ViewMode::Inspection)
        base = frozen_pose_;
    else if (usable)
        base = pose.matrix;

    if (base) {
        out.marker_visible = true;
        out.model_matrix = compose_model_matrix(*base, transform_);
        for (const InputEvent& tap : taps) {
            const Ray ray = screen_to_world_ray(config_.camera, tap.x, tap.y);
            const auto hit = pick(ray, parts_, out.model_matrix, config_.max_pick_distance);
            if (!hit) continue;
            auto msgs = select_part(parts_, *registry_, hit->part_name);
            out.events.insert(out.events.end(), msgs.begin(), msgs.end());
        }
    }
    out.transform = transform_;
    return out;
}

}  // namespace markar
