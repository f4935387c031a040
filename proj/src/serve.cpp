#include "markar/serve.hpp"

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include <chrono>
#include <condition_variable>
#include <deque>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include "markar/text.hpp"
#include "markar/wire_protocol.hpp"

namespace markar {

namespace net = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = net::ip::tcp;

PoseSource::PoseSource(std::vector<PoseSample> lap, std::int64_t lap_ms, double fps)
    : lap_(std::move(lap)), lap_ms_(lap_ms), fps_(fps) {
    if (lap_.empty()) throw OutOfRange("pose source has no samples");
    if (!(fps_ > 0.0)) throw OutOfRange("fps must be positive");
}

PoseSource PoseSource::from_orbit(const OrbitScript& script) {
    return PoseSource(orbit_samples(script), script.duration_ms(), script.fps);
}

PoseSource PoseSource::from_trace(std::vector<PoseSample> trace, double fps) {
    if (trace.empty()) throw OutOfRange("pose trace has no samples");
    const auto period = std::llround(1000.0 / fps);
    const std::int64_t lap_ms =
        trace.back().timestamp_ms - trace.front().timestamp_ms + std::max<std::int64_t>(period, 1);
    return PoseSource(std::move(trace), lap_ms, fps);
}

PoseSample PoseSource::next() {
    PoseSample s = lap_[index_];
    s.timestamp_ms += offset_ms_ - lap_.front().timestamp_ms;
    if (++index_ == lap_.size()) {
        index_ = 0;
        offset_ms_ += lap_ms_;
    }
    return s;
}

namespace {

constexpr std::size_t kMaxPendingWrites = 256;

class Connection : public std::enable_shared_from_this<Connection> {
public:
    Connection(tcp::socket socket, const ServeOptions& opts, PoseSource source)
        : ws_(std::move(socket)),
          engine_(opts.parts, opts.registry, opts.config),
          source_(std::move(source)),
          camera_(opts.config.camera),
          started_(std::chrono::steady_clock::now()) {}

    ~Connection() { stop_ticker(); }

    template <typename OnClose>
    void start(OnClose on_close) {
        on_close_ = std::move(on_close);
        ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
        ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
            if (ec) return self->close();
            self->on_open();
        });
    }

    // Network thread only.
    void close() {
        if (closed_) return;
        closed_ = true;
        stop_ticker();
        beast::error_code ignored;
        beast::get_lowest_layer(ws_).socket().shutdown(tcp::socket::shutdown_both, ignored);
        beast::get_lowest_layer(ws_).socket().close(ignored);
        if (on_close_) on_close_(this);
    }

private:
    void on_open() {
        std::string preamble;
        for (const auto& line : wire::model_preamble(engine_.parts(), camera_)) preamble += line + '\n';
        send(std::move(preamble));
        ticker_ = std::thread([this] { tick_loop(); });
        do_read();
    }

    void do_read() {
        ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
            if (ec) return self->close();
            self->on_message(beast::buffers_to_string(self->buffer_.data()));
            self->buffer_.consume(self->buffer_.size());
            self->do_read();
        });
    }

    void on_message(const std::string& payload) {
        std::size_t pos = 0;
        while (pos <= payload.size()) {
            const auto end = std::min(payload.find('\n', pos), payload.size());
            const std::string_view line = text::trim(std::string_view(payload).substr(pos, end - pos));
            pos = end + 1;
            if (line.empty()) continue;
            auto parsed = wire::parse_client_line(line);
            if (!parsed.event) {
                send("ERROR " + parsed.error);
                continue;
            }
            parsed.event->timestamp_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                             std::chrono::steady_clock::now() - started_)
                                             .count();
            try {
                engine_.enqueue_event(*parsed.event);
            } catch (const Error& e) {
                send(std::string("ERROR ") + e.what());
            }
        }
    }

    void tick_loop() {
        const auto period = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(1.0 / source_.fps()));
        auto next_tick = std::chrono::steady_clock::now();
        std::optional<std::string> selected;
        while (true) {
            const FrameOutput frame = engine_.step_frame(source_.next().as_marker_pose());

            std::string out;
            const auto now_selected = engine_.selected_part();
            if (now_selected != selected) {
                for (const Part& p : engine_.parts())
                    if (p.name == selected || p.name == now_selected)
                        out += wire::offset_message(p) + '\n';
                selected = now_selected;
            }
            for (const UiMessage& m : frame.events) out += wire::ui_message(m) + '\n';
            out += wire::frame_message(frame);

            net::post(ws_.get_executor(), [weak = weak_from_this(), out = std::move(out)]() mutable {
                if (auto self = weak.lock()) self->send(std::move(out));
            });

            next_tick += period;
            std::unique_lock lock(tick_mutex_);
            if (tick_cv_.wait_until(lock, next_tick, [this] { return stop_requested_; })) return;
        }
    }

    void stop_ticker() {
        {
            std::lock_guard lock(tick_mutex_);
            stop_requested_ = true;
        }
        tick_cv_.notify_all();
        if (ticker_.joinable() && ticker_.get_id() != std::this_thread::get_id()) ticker_.join();
    }

    // Network thread only.
    void send(std::string msg) {
        if (closed_) return;
        const bool frame_only = msg.rfind("FRAME ", 0) == 0 && msg.find('\n') == std::string::npos;
        if (frame_only && outbox_.size() >= kMaxPendingWrites) return;  // viewer is behind
        outbox_.push_back(std::move(msg));
        if (outbox_.size() == 1) do_write();
    }

    void do_write() {
        ws_.text(true);
        ws_.async_write(net::buffer(outbox_.front()),
                        [self = shared_from_this()](beast::error_code ec, std::size_t) {
                            if (ec) return self->close();
                            self->outbox_.pop_front();
                            if (!self->outbox_.empty()) self->do_write();
                        });
    }

    websocket::stream<beast::tcp_stream> ws_;
    beast::flat_buffer buffer_;
    std::deque<std::string> outbox_;
    bool closed_ = false;
    std::function<void(Connection*)> on_close_;

    Session engine_;
    PoseSource source_;
    PickCamera camera_;
    std::chrono::steady_clock::time_point started_;

    std::thread ticker_;
    std::mutex tick_mutex_;
    std::condition_variable tick_cv_;
    bool stop_requested_ = false;
};

}  // namespace

struct Server::Impl {
    ServeOptions options;
    net::io_context ioc;
    tcp::acceptor acceptor{ioc};
    std::set<std::shared_ptr<Connection>> connections;

    explicit Impl(ServeOptions opts) : options(std::move(opts)) {
        // Fail early on unusable sources rather than per connection.
        make_source();
        beast::error_code ec;
        const tcp::endpoint endpoint(net::ip::make_address(options.bind_address, ec), options.port);
        if (ec) throw Error("bad bind address: " + options.bind_address);
        acceptor.open(endpoint.protocol(), ec);
        if (!ec) acceptor.set_option(net::socket_base::reuse_address(true), ec);
        if (!ec) acceptor.bind(endpoint, ec);
        if (!ec) acceptor.listen(net::socket_base::max_listen_connections, ec);
        if (ec)
            throw PortInUse("cannot listen on " + options.bind_address + ":" +
                            std::to_string(options.port) + ": " + ec.message());
    }

    PoseSource make_source() const {
        if (!options.trace.empty()) return PoseSource::from_trace(options.trace, options.orbit.fps);
        return PoseSource::from_orbit(options.orbit);
    }

    void do_accept() {
        acceptor.async_accept(net::make_strand(ioc), [this](beast::error_code ec, tcp::socket socket) {
            if (ec) return;  // acceptor closed
            auto conn = std::make_shared<Connection>(std::move(socket), options, make_source());
            connections.insert(conn);
            conn->start([this](Connection* c) {
                std::erase_if(connections, [c](const auto& p) { return p.get() == c; });
            });
            do_accept();
        });
    }

    void shutdown() {
        beast::error_code ignored;
        acceptor.close(ignored);
        auto live = connections;
        for (const auto& c : live) c->close();
        connections.clear();
    }
};

Server::Server(ServeOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}

Server::~Server() {
    stop();
    // Ensure tickers are joined before the io_context goes away.
    impl_->ioc.restart();
    net::post(impl_->ioc, [this] { impl_->shutdown(); });
    impl_->ioc.poll();
}

unsigned short Server::port() const { return impl_->acceptor.local_endpoint().port(); }

void Server::run(bool handle_signals) {
    std::optional<net::signal_set> signals;
    if (handle_signals) {
        signals.emplace(impl_->ioc, SIGINT, SIGTERM);
        signals->async_wait([this](beast::error_code ec, int) {
            if (!ec) stop();
        });
    }
    impl_->do_accept();
    impl_->ioc.run();
}

void Server::stop() {
    net::post(impl_->ioc, [this] {
        impl_->shutdown();
        impl_->ioc.stop();
    });
}

}  // namespace markar
