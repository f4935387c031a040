#include "markar/wire_protocol.hpp"

#include "markar/text.hpp"

namespace markar::wire {

using text::format_double;

std::vector<std::string> model_preamble(std::span<const Part> parts, const PickCamera& camera) {
    std::vector<std::string> lines;
    lines.push_back("MODEL " + std::to_string(parts.size()));
    lines.push_back("CAMERA " + format_double(camera.viewport_w) + ' ' +
                    format_double(camera.viewport_h) + ' ' + format_double(camera.fov_y_deg));
    for (const Part& p : parts) {
        lines.push_back("PART " + p.name + ' ' + std::to_string(p.triangles.size()));
        for (const Triangle& t : p.triangles) {
            std::string line = "TRI";
            for (const Vec3* v : {&t.a, &t.b, &t.c})
                for (int i = 0; i < 3; ++i) line += ' ' + format_double((*v)[i]);
            lines.push_back(std::move(line));
        }
    }
    lines.push_back("END_MODEL");
    return lines;
}

std::string frame_message(const FrameOutput& f) {
    std::string line = "FRAME " + std::to_string(f.timestamp_ms) + (f.marker_visible ? " 1 " : " 0 ") +
                       std::string(to_string(f.orientation));
    for (double v : f.model_matrix.m) line += ' ' + format_double(v);
    line += ' ' + format_double(f.transform.scale);
    return line;
}

std::string ui_message(const UiMessage& msg) {
    return msg.kind == UiMessage::Kind::Cancel ? "MSG CANCEL" : "MSG INFO " + msg.text;
}

std::string offset_message(const Part& part) {
    const Vec3 o = part.effective_offset();
    return "OFFSET " + format_double(o.x) + ' ' + format_double(o.y) + ' ' + format_double(o.z) +
           ' ' + part.name;
}

EventParseResult parse_client_line(std::string_view line) {
    return parse_event_body(text::trim(line));
}

}  // namespace markar::wire
