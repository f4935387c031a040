#include "markar/frame_log.hpp"

#include "markar/text.hpp"

namespace markar {

std::string frame_log_header() {
    std::string h = "# frame,t_ms,visible,angle_deg,quantized_deg,quadrant";
    for (int i = 0; i < 16; ++i) h += ",m" + std::to_string(i);
    h += ",tx,ty,tz,rx,ry,rz,scale,view,messages";
    return h;
}

std::string format_frame_log_line(std::size_t frame_index, const FrameOutput& f, ViewMode view) {
    using text::format_double;
    std::string line = std::to_string(frame_index) + ',' + std::to_string(f.timestamp_ms) + ',' +
                       (f.marker_visible ? "1" : "0") + ',' + format_double(f.angle_deg) + ',' +
                       format_double(f.quantized_angle_deg) + ',' +
                       std::string(to_string(f.orientation));
    for (double v : f.model_matrix.m) line += ',' + format_double(v);
    const TransformState& t = f.transform;
    for (int i = 0; i < 3; ++i) line += ',' + format_double(t.cum_translation[i]);
    for (int i = 0; i < 3; ++i) line += ',' + format_double(t.cum_rotation_deg[i]);
    line += ',' + format_double(t.scale);
    line += ',';
    line += to_string(view);
    line += ',';
    for (std::size_t i = 0; i < f.events.size(); ++i) {
        if (i) line += ';';
        const UiMessage& m = f.events[i];
        line += m.kind == UiMessage::Kind::Cancel ? "CANCEL" : "INFO=" + m.text;
    }
    return line;
}

void run_replay(Session& session, const std::vector<PoseSample>& poses,
                const std::vector<InputEvent>& events, std::ostream& log) {
    log << frame_log_header() << '\n';
    std::size_t next_event = 0;
    for (std::size_t i = 0; i < poses.size(); ++i) {
        const PoseSample& sample = poses[i];
        while (next_event < events.size() && events[next_event].timestamp_ms <= sample.timestamp_ms)
            session.enqueue_event(events[next_event++]);
        const FrameOutput out = session.step_frame(sample.as_marker_pose());
        log << format_frame_log_line(i, out, session.modes().view) << '\n';
    }
}

}  // namespace markar
