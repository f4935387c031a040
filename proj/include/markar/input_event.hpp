#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace markar {

enum class EventKind { TouchDown, TouchMove, TouchUp, Tap, PinchScale, Command };

enum class Command {
    SetModeTranslate,
    SetModeRotate,
    SetAxisX,
    SetAxisY,
    SetAxisZ,
    Reset,
    ToggleViewMode,
    ToggleGizmo,
};

std::string_view to_string(EventKind k);
std::string_view to_string(Command c);
std::optional<EventKind> event_kind_from_string(std::string_view s);
std::optional<Command> command_from_string(std::string_view s);

// One UI input as delivered to the frame loop. Only the fields relevant to
// `kind` are meaningful: x/y for touch and tap, scale_factor for pinch
// (absolute, 1.0 = original size), command for COMMAND.
struct InputEvent {
    EventKind kind = EventKind::TouchMove;
    double x = 0.0;
    double y = 0.0;
    double scale_factor = 1.0;
    Command command = Command::Reset;
    std::int64_t timestamp_ms = 0;

    static InputEvent touch(EventKind kind, double x, double y, std::int64_t ts = 0) {
        InputEvent e;
        e.kind = kind;
        e.x = x;
        e.y = y;
        e.timestamp_ms = ts;
        return e;
    }
    static InputEvent pinch(double factor, std::int64_t ts = 0) {
        InputEvent e;
        e.kind = EventKind::PinchScale;
        e.scale_factor = factor;
        e.timestamp_ms = ts;
        return e;
    }
    static InputEvent cmd(Command c, std::int64_t ts = 0) {
        InputEvent e;
        e.kind = EventKind::Command;
        e.command = c;
        e.timestamp_ms = ts;
        return e;
    }

    friend bool operator==(const InputEvent&, const InputEvent&) = default;
};

// Parses the body of an event line, i.e. everything after the timestamp:
//   TOUCH_DOWN|TOUCH_MOVE|TAP <x> <y>
//   TOUCH_UP [<x> <y>]
//   PINCH_SCALE <factor>
//   COMMAND <name>
// Returns an error message on failure.
struct EventParseResult {
    std::optional<InputEvent> event;
    std::string error;
};
EventParseResult parse_event_body(std::string_view body);

// Formats the body of an event line (no timestamp). Inverse of
// parse_event_body.
std::string format_event_body(const InputEvent& e);

// Reads an event trace: one `<timestamp_ms> <KIND> [args...]` per line, blank
// lines and lines starting with '#' ignored, timestamps non-decreasing.
// Throws ParseError naming `source` and the line.
std::vector<InputEvent> parse_event_trace(std::istream& in, const std::string& source);
std::vector<InputEvent> load_event_trace(const std::string& path);

}  // namespace markar
