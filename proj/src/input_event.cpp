#include "markar/input_event.hpp"

#include <array>
#include <fstream>
#include <utility>

#include "markar/errors.hpp"
#include "markar/text.hpp"

namespace markar {

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 6> kKindNames{{
    {EventKind::TouchDown, "TOUCH_DOWN"},
    {EventKind::TouchMove, "TOUCH_MOVE"},
    {EventKind::TouchUp, "TOUCH_UP"},
    {EventKind::Tap, "TAP"},
    {EventKind::PinchScale, "PINCH_SCALE"},
    {EventKind::Command, "COMMAND"},
}};

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommandNames{{
    {Command::SetModeTranslate, "SET_MODE_TRANSLATE"},
    {Command::SetModeRotate, "SET_MODE_ROTATE"},
    {Command::SetAxisX, "SET_AXIS_X"},
    {Command::SetAxisY, "SET_AXIS_Y"},
    {Command::SetAxisZ, "SET_AXIS_Z"},
    {Command::Reset, "RESET"},
    {Command::ToggleViewMode, "TOGGLE_VIEW_MODE"},
    {Command::ToggleGizmo, "TOGGLE_GIZMO"},
}};

EventParseResult fail(std::string msg) { return {std::nullopt, std::move(msg)}; }

}  // namespace

std::string_view to_string(EventKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "?";
}

std::string_view to_string(Command c) {
    for (const auto& [cmd, name] : kCommandNames)
        if (cmd == c) return name;
    return "?";
}

std::optional<EventKind> event_kind_from_string(std::string_view s) {
    for (const auto& [kind, name] : kKindNames)
        if (name == s) return kind;
    return std::nullopt;
}

std::optional<Command> command_from_string(std::string_view s) {
    for (const auto& [cmd, name] : kCommandNames)
        if (name == s) return cmd;
    return std::nullopt;
}

EventParseResult parse_event_body(std::string_view body) {
    const auto tok = text::split_ws(body);
    if (tok.empty()) return fail("missing event kind");
    const auto kind = event_kind_from_string(tok[0]);
    if (!kind) return fail("unknown event kind '" + std::string(tok[0]) + "'");

    InputEvent e;
    e.kind = *kind;
    const std::size_t nargs = tok.size() - 1;
    switch (*kind) {
        case EventKind::TouchDown:
        case EventKind::TouchMove:
        case EventKind::Tap:
        case EventKind::TouchUp: {
            if (*kind == EventKind::TouchUp && nargs == 0) break;
            if (nargs != 2) return fail(std::string(tok[0]) + " expects <x> <y>");
            const auto x = text::parse_double(tok[1]);
            const auto y = text::parse_double(tok[2]);
            if (!x || !y) return fail("bad touch coordinate");
            e.x = *x;
            e.y = *y;
            break;
        }
        case EventKind::PinchScale: {
            if (nargs != 1) return fail("PINCH_SCALE expects <factor>");
            const auto f = text::parse_double(tok[1]);
            if (!f || *f <= 0.0) return fail("PINCH_SCALE factor must be a positive number");
            e.scale_factor = *f;
            break;
        }
        case EventKind::Command: {
            if (nargs != 1) return fail("COMMAND expects <name>");
            const auto c = command_from_string(tok[1]);
            if (!c) return fail("unknown command '" + std::string(tok[1]) + "'");
            e.command = *c;
            break;
        }
    }
    return {e, {}};
}

std::string format_event_body(const InputEvent& e) {
    std::string out(to_string(e.kind));
    switch (e.kind) {
        case EventKind::TouchDown:
        case EventKind::TouchMove:
        case EventKind::TouchUp:
        case EventKind::Tap:
            out += ' ' + text::format_double(e.x) + ' ' + text::format_double(e.y);
            break;
        case EventKind::PinchScale:
            out += ' ' + text::format_double(e.scale_factor);
            break;
        case EventKind::Command:
            out += ' ';
            out += to_string(e.command);
            break;
    }
    return out;
}

std::vector<InputEvent> parse_event_trace(std::istream& in, const std::string& source) {
    std::vector<InputEvent> events;
    std::string line;
    std::size_t lineno = 0;
    std::int64_t last_ts = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = text::trim(line);
        if (body.empty() || body.front() == '#') continue;

        const auto space = body.find_first_of(" \t");
        if (space == std::string_view::npos) throw ParseError(source, lineno, "missing event kind");
        const auto ts = text::parse_int(body.substr(0, space));
        if (!ts || *ts < 0) throw ParseError(source, lineno, "bad timestamp");
        if (!events.empty() && *ts < last_ts)
            throw ParseError(source, lineno, "timestamps must be non-decreasing");

        auto parsed = parse_event_body(body.substr(space + 1));
        if (!parsed.event) throw ParseError(source, lineno, parsed.error);
        parsed.event->timestamp_ms = *ts;
        last_ts = *ts;
        events.push_back(*parsed.event);
    }
    return events;
}

std::vector<InputEvent> load_event_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_event_trace(in, path);
}

}  // namespace markar
