// Command-line front end: replay, orient, trace and serve.
//
// Exit codes: 0 success, 2 bad flags or unparsable input, 3 engine error,
// 4 port already in use.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "markar/engine.hpp"
#include "markar/errors.hpp"
#include "markar/frame_log.hpp"
#include "markar/model.hpp"
#include "markar/orientation.hpp"
#include "markar/parts_registry.hpp"
#include "markar/serve.hpp"
#include "markar/text.hpp"
#include "markar/tracker_sim.hpp"

namespace {

using namespace markar;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitEngine = 3;
constexpr int kExitPortInUse = 4;

struct OrbitFlags {
    double radius = 400.0;
    double height = 250.0;
    double fps = 30.0;
    double duration = 8.0;
    std::optional<double> angular_speed;
    std::vector<std::string> dropouts;

    void add_to(CLI::App* app) {
        app->add_option("--orbit-radius", radius, "Orbit radius (world units)")->capture_default_str();
        app->add_option("--orbit-height", height, "Camera height above the marker")->capture_default_str();
        app->add_option("--fps", fps, "Pose samples per second")->capture_default_str();
        app->add_option("--duration", duration, "Orbit duration in seconds")->capture_default_str();
        app->add_option("--angular-speed", angular_speed,
                        "Orbit speed in deg/s (default: one full turn over --duration)");
        app->add_option("--dropout", dropouts, "Tracking loss interval START_MS:END_MS (repeatable)");
    }

    OrbitScript script() const {
        OrbitScript s;
        s.radius = radius;
        s.height = height;
        s.fps = fps;
        s.duration_s = duration;
        s.angular_speed_deg_s = angular_speed.value_or(duration > 0.0 ? 360.0 / duration : 0.0);
        for (const auto& d : dropouts) {
            const auto colon = d.find(':');
            const auto a = text::parse_int(std::string_view(d).substr(0, colon));
            const auto b = colon == std::string::npos
                               ? std::nullopt
                               : text::parse_int(std::string_view(d).substr(colon + 1));
            if (!a || !b) throw OutOfRange("bad --dropout '" + d + "', expected START_MS:END_MS");
            s.dropout_intervals.emplace_back(*a, *b);
        }
        s.validate();
        return s;
    }
};

struct EngineFlags {
    double translate_gain = 0.5;
    double rotate_gain = 0.5;
    std::string viewport = "1280x768";
    double fov = 45.0;

    void add_to(CLI::App* app) {
        app->add_option("--translate-gain", translate_gain, "World units per dragged pixel")
            ->capture_default_str();
        app->add_option("--rotate-gain", rotate_gain, "Degrees per dragged pixel")->capture_default_str();
        app->add_option("--viewport", viewport, "Viewport size WxH in pixels")->capture_default_str();
        app->add_option("--fov", fov, "Vertical field of view in degrees")->capture_default_str();
    }

    EngineConfig config() const {
        EngineConfig c;
        c.translate_gain = translate_gain;
        c.rotate_gain = rotate_gain;
        const auto x = viewport.find('x');
        const auto w = text::parse_double(std::string_view(viewport).substr(0, x));
        const auto h = x == std::string::npos ? std::nullopt
                                              : text::parse_double(std::string_view(viewport).substr(x + 1));
        if (!w || !h || *w <= 0 || *h <= 0) throw OutOfRange("bad --viewport '" + viewport + "'");
        if (!(fov > 0.0 && fov < 180.0)) throw OutOfRange("--fov must be in (0, 180)");
        c.camera.viewport_w = *w;
        c.camera.viewport_h = *h;
        c.camera.fov_y_deg = fov;
        return c;
    }
};

std::shared_ptr<const PartsRegistry> registry_from(const std::string& path) {
    if (path.empty()) return std::make_shared<const PartsRegistry>();
    auto reg = std::make_shared<const PartsRegistry>(load_registry(path));
    for (const auto& w : reg->warnings()) std::cerr << "warning: " << w << '\n';
    return reg;
}

// Writes to `path`, or stdout when empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw OutOfRange("cannot write " + path);
    fn(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Marker AR interaction engine"};
    app.require_subcommand(1);

    std::string model_path, registry_path, pose_trace_path, events_path, out_path;
    OrbitFlags orbit;
    EngineFlags engine;
    unsigned short port = 8080;

    auto* replay = app.add_subcommand("replay", "Replay a pose trace and an event trace into a frame log");
    replay->add_option("--model", model_path, "OBJ model")->required();
    replay->add_option("--registry", registry_path, "Parts registry file");
    replay->add_option("--pose-trace", pose_trace_path, "Pose trace (default: synthetic orbit)");
    replay->add_option("--events", events_path, "Event trace");
    replay->add_option("--out", out_path, "Frame log (default: stdout)");
    orbit.add_to(replay);
    engine.add_to(replay);

    auto* orient = app.add_subcommand("orient", "Tabulate marker orientation over an orbit");
    orient->add_option("--out", out_path, "Output table (default: stdout)");
    orbit.add_to(orient);

    auto* trace = app.add_subcommand("trace", "Write an orbit as a pose trace file");
    trace->add_option("--out", out_path, "Pose trace (default: stdout)");
    orbit.add_to(trace);

    auto* serve = app.add_subcommand("serve", "Serve live sessions to the browser viewer");
    serve->add_option("--model", model_path, "OBJ model")->required();
    serve->add_option("--registry", registry_path, "Parts registry file");
    serve->add_option("--pose-trace", pose_trace_path, "Pose trace to loop (default: synthetic orbit)");
    serve->add_option("--port", port, "TCP port")->capture_default_str();
    orbit.add_to(serve);
    engine.add_to(serve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*orient) {
            const OrbitScript script = orbit.script();
            with_output(out_path, [&](std::ostream& out) {
                out << "# t_ms,angle_deg,quadrant\n";
                OrientationState state;
                for (const PoseSample& s : orbit_samples(script)) {
                    if (!s.visible) {
                        out << s.timestamp_ms << ",lost," << to_string(state.last_quadrant) << '\n';
                        continue;
                    }
                    const double angle = marker_orientation_deg(s.matrix, state);
                    out << s.timestamp_ms << ',' << text::format_double(angle) << ','
                        << to_string(quantize_orientation(angle)) << '\n';
                }
            });
            return kExitOk;
        }

        if (*trace) {
            const auto samples = orbit_samples(orbit.script());
            with_output(out_path, [&](std::ostream& out) { write_pose_trace(out, samples); });
            return kExitOk;
        }

        // replay / serve share the model + registry + pose source setup.
        auto parts = load_model(model_path);
        auto registry = registry_from(registry_path);
        const EngineConfig config = engine.config();

        if (*replay) {
            const auto poses =
                pose_trace_path.empty() ? orbit_samples(orbit.script()) : load_pose_trace(pose_trace_path);
            const auto events =
                events_path.empty() ? std::vector<InputEvent>{} : load_event_trace(events_path);
            Session session(std::move(parts), std::move(registry), config);
            try {
                with_output(out_path, [&](std::ostream& out) { run_replay(session, poses, events, out); });
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                std::cerr << "engine error: " << e.what() << '\n';
                return kExitEngine;
            }
            return kExitOk;
        }

        ServeOptions opts;
        opts.port = port;
        opts.parts = std::move(parts);
        opts.registry = std::move(registry);
        opts.config = config;
        opts.orbit = orbit.script();
        if (!pose_trace_path.empty()) opts.trace = load_pose_trace(pose_trace_path);
        Server server(std::move(opts));
        std::cerr << "serving on port " << server.port() << '\n';
        server.run(/*handle_signals=*/true);
        return kExitOk;
    } catch (const PortInUse& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPortInUse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const EmptyModel& e) {
        std::cerr << "error: " << model_path << ": " << e.what() << '\n';
        return kExitBadInput;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "engine error: " << e.what() << '\n';
        return kExitEngine;
    }
}
