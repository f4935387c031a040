#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "markar/engine.hpp"
#include "markar/errors.hpp"
#include "markar/model.hpp"
#include "markar/parts_registry.hpp"
#include "markar/tracker_sim.hpp"

namespace markar {

class PortInUse : public Error {
public:
    using Error::Error;
};

// Endless pose feed for a live session: either an orbit script or a recorded
// trace, replayed in a loop with timestamps continuing across laps.
class PoseSource {
public:
    static PoseSource from_orbit(const OrbitScript& script);
    static PoseSource from_trace(std::vector<PoseSample> trace, double fps);

    PoseSample next();
    double fps() const { return fps_; }

private:
    PoseSource(std::vector<PoseSample> lap, std::int64_t lap_ms, double fps);

    std::vector<PoseSample> lap_;
    std::int64_t lap_ms_ = 0;
    double fps_ = 30.0;
    std::size_t index_ = 0;
    std::int64_t offset_ms_ = 0;
};

struct ServeOptions {
    std::string bind_address = "0.0.0.0";
    unsigned short port = 8080;  // 0 picks a free port
    std::vector<Part> parts;
    std::shared_ptr<const PartsRegistry> registry;
    EngineConfig config;
    OrbitScript orbit;
    std::vector<PoseSample> trace;  // used instead of the orbit when non-empty
};

// WebSocket server hosting one engine session per connection. The network
// thread reads viewer lines and enqueues them; a per-connection ticker thread
// steps the session at the pose source's fps and pushes FRAME/MSG/OFFSET
// lines back. See wire_protocol.hpp for the message grammar.
class Server {
public:
    // Binds immediately; throws PortInUse when the port is taken.
    explicit Server(ServeOptions options);
    ~Server();

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    unsigned short port() const;

    // Serves on the calling thread until stop(). With handle_signals, SIGINT
    // and SIGTERM also stop it.
    void run(bool handle_signals = false);

    // Thread-safe.
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace markar
