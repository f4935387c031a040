#include "markar/tracker_sim.hpp"

#include <cmath>
#include <fstream>

#include "markar/errors.hpp"
#include "markar/text.hpp"

namespace markar {

std::int64_t OrbitScript::duration_ms() const { return std::llround(duration_s * 1000.0); }

void OrbitScript::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw OutOfRange("orbit radius must be positive");
    if (!(fps > 0.0) || !std::isfinite(fps)) throw OutOfRange("fps must be positive");
    if (!(duration_s >= 0.0) || !std::isfinite(duration_s))
        throw OutOfRange("duration must be non-negative");
    if (!std::isfinite(height) || !std::isfinite(angular_speed_deg_s))
        throw OutOfRange("orbit height and speed must be finite");
    for (const auto& [start, end] : dropout_intervals)
        if (start < 0 || end < start || end > duration_ms())
            throw OutOfRange("dropout interval outside the orbit duration");
}

Mat4 look_at_origin_pose(const Vec3& eye, const Vec3& up_reference) {
    const Vec3 forward = normalize(-eye);
    const Vec3 right = normalize(cross(forward, up_reference));
    const Vec3 up = cross(right, forward);

    // Rows of the rotation are the camera axes expressed in marker space.
    Mat4 pose = Mat4::identity();
    const Vec3 rows[3] = {right, up, -forward};
    for (int r = 0; r < 3; ++r) {
        pose(r, 0) = rows[r].x;
        pose(r, 1) = rows[r].y;
        pose(r, 2) = rows[r].z;
        pose(r, 3) = -dot(rows[r], eye);
    }
    return pose;
}

PoseSample orbit_pose(const OrbitScript& script, std::int64_t t_ms) {
    if (t_ms < 0 || t_ms > script.duration_ms()) throw OutOfRange("time outside the orbit script");

    PoseSample sample;
    sample.timestamp_ms = t_ms;
    for (const auto& [start, end] : script.dropout_intervals)
        if (t_ms >= start && t_ms < end) return sample;

    const double phi = deg_to_rad(script.angular_speed_deg_s * static_cast<double>(t_ms) / 1000.0);
    const Vec3 eye{script.radius * std::sin(phi), script.radius * std::cos(phi), script.height};
    sample.visible = true;
    sample.matrix = look_at_origin_pose(eye);
    return sample;
}

std::vector<std::int64_t> orbit_timestamps(const OrbitScript& script) {
    script.validate();
    std::vector<std::int64_t> out;
    const std::int64_t end = script.duration_ms();
    for (std::int64_t k = 0;; ++k) {
        const auto t = std::llround(static_cast<double>(k) * 1000.0 / script.fps);
        if (t >= end) break;
        out.push_back(t);
    }
    return out;
}

std::vector<PoseSample> orbit_samples(const OrbitScript& script) {
    std::vector<PoseSample> out;
    for (const auto t : orbit_timestamps(script)) out.push_back(orbit_pose(script, t));
    return out;
}

std::vector<PoseSample> parse_pose_trace(std::istream& in, const std::string& source) {
    std::vector<PoseSample> samples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = text::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto tok = text::split_ws(body);

        PoseSample s;
        const auto ts = text::parse_int(tok[0]);
        if (!ts || *ts < 0) throw ParseError(source, lineno, "bad timestamp");
        if (!samples.empty() && *ts < samples.back().timestamp_ms)
            throw ParseError(source, lineno, "timestamps must be non-decreasing");
        s.timestamp_ms = *ts;

        if (tok.size() == 2 && tok[1] == "LOST") {
            s.visible = false;
        } else if (tok.size() == 18 && tok[1] == "POSE") {
            s.visible = true;
            for (std::size_t i = 0; i < 16; ++i) {
                const auto v = text::parse_double(tok[i + 2]);
                if (!v) throw ParseError(source, lineno, "bad matrix value");
                s.matrix.m[i] = *v;
            }
            if (!is_rigid(s.matrix)) throw ParseError(source, lineno, "pose is not rigid");
        } else {
            throw ParseError(source, lineno, "expected POSE with 16 values or LOST");
        }
        samples.push_back(s);
    }
    if (samples.empty()) throw ParseError(source, 0, "pose trace has no samples");
    return samples;
}

std::vector<PoseSample> load_pose_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_pose_trace(in, path);
}

void write_pose_trace(std::ostream& out, const std::vector<PoseSample>& samples) {
    if (samples.empty()) throw Error("refusing to write an empty pose trace");
    for (const PoseSample& s : samples) {
        out << s.timestamp_ms;
        if (!s.visible) {
            out << " LOST\n";
            continue;
        }
        out << " POSE";
        for (double v : s.matrix.m) out << ' ' << text::format_double(v);
        out << '\n';
    }
}

void save_pose_trace(const std::string& path, const std::vector<PoseSample>& samples) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_pose_trace(out, samples);
}

}  // namespace markar
