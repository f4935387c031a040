#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "markar/event_queue.hpp"
#include "markar/input_event.hpp"
#include "markar/math.hpp"
#include "markar/model.hpp"
#include "markar/orientation.hpp"
#include "markar/parts_registry.hpp"
#include "markar/picking.hpp"

namespace markar {

inline constexpr double kMinScale = 0.3;
inline constexpr double kMaxScale = 5.0;

// User transforms accumulated over the session. Translations are in world
// units with y meaning "up" (away from the marker); rotations are degrees
// about the model's X/Y/Z axes. Scale is absolute.
struct TransformState {
    Vec3 cum_translation{};
    Vec3 cum_rotation_deg{};
    double scale = 1.0;

    friend bool operator==(const TransformState&, const TransformState&) = default;
};

enum class InteractionMode { Translate, Rotate };
enum class ViewMode { Tracking, Inspection };
enum class Axis { X = 0, Y = 1, Z = 2 };

std::string_view to_string(InteractionMode m);
std::string_view to_string(ViewMode m);
std::string_view to_string(Axis a);

struct SessionModes {
    InteractionMode interaction = InteractionMode::Translate;
    ViewMode view = ViewMode::Tracking;
    Axis axis = Axis::X;
    bool gizmo_visible = true;

    friend bool operator==(const SessionModes&, const SessionModes&) = default;
};

struct MarkerPose {
    Mat4 matrix = Mat4::identity();
    bool visible = false;
    std::int64_t timestamp_ms = 0;
};

struct FrameOutput {
    std::int64_t timestamp_ms = 0;
    // Identity whenever marker_visible is false.
    Mat4 model_matrix = Mat4::identity();
    bool marker_visible = false;
    double angle_deg = 0.0;
    Quadrant orientation = Quadrant::Deg0;
    double quantized_angle_deg = 0.0;
    TransformState transform;
    std::vector<UiMessage> events;
};

struct EngineConfig {
    double translate_gain = 0.5;  // world units per pixel
    double rotate_gain = 0.5;     // degrees per pixel
    PickCamera camera;
    double max_pick_distance = kDefaultPickDistance;
};

double clamp_scale(double factor);

Vec3 axis_vector(Axis a);

// One drag step. Translation: horizontal drag drives X and Z, vertical drag
// (screen-up positive) drives Y, and the result is remapped for the marker
// quadrant. Rotation: horizontal drag turns about the active axis, no remap.
TransformState apply_touch_delta(const TransformState& state, const SessionModes& modes,
                                 Quadrant quadrant, double dx_px, double dy_px,
                                 const EngineConfig& config = {});

// pose * T(tx, tz, ty) * R(90, X) * R(rx, X) * R(ry, Y) * R(rz, Z) * S(scale).
// The y/z swap and the fixed 90 degree turn map the model's up axis (+Y)
// onto the marker normal (+Z).
Mat4 compose_model_matrix(const Mat4& pose, const TransformState& state);

// The composition with an all-zero transform state: pose * R(90, X).
Mat4 frame_conversion(const Mat4& pose);

// One interaction session: owns the input queue, modes, transforms, selection
// and orientation memory. enqueue_event may be called from one producer
// thread while a single consumer thread calls step_frame; every other member
// belongs to the consumer.
class Session {
public:
    Session(std::vector<Part> parts, std::shared_ptr<const PartsRegistry> registry,
            EngineConfig config = {});

    // Throws QueueFull when 1024 events are pending and InvalidEvent for
    // coordinates outside the viewport or a non-positive pinch factor.
    void enqueue_event(const InputEvent& e);

    FrameOutput step_frame(const MarkerPose& pose);

    // Throws NoPoseYet when entering inspection before any visible pose.
    void set_view_mode(ViewMode mode);

    const TransformState& transform() const { return transform_; }
    const SessionModes& modes() const { return modes_; }
    const OrientationState& orientation() const { return orientation_; }
    const std::vector<Part>& parts() const { return parts_; }
    const EngineConfig& config() const { return config_; }
    std::optional<std::string> selected_part() const;
    std::size_t pending_events() const { return queue_->size(); }

private:
    void apply_event(const InputEvent& e, bool transforms_allowed, std::vector<InputEvent>& taps);
    void apply_command(Command c, bool transforms_allowed);

    std::vector<Part> parts_;
    std::shared_ptr<const PartsRegistry> registry_;
    EngineConfig config_;

    struct TouchPoint {
        double x, y;
    };

    std::unique_ptr<EventQueue> queue_ = std::make_unique<EventQueue>();

    TransformState transform_;
    SessionModes modes_;
    OrientationState orientation_;
    std::optional<Mat4> last_visible_pose_;
    std::optional<Mat4> frozen_pose_;
    std::optional<TouchPoint> last_touch_;
    double last_angle_ = 0.0;
};

}  // namespace markar
