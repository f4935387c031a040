#include <doctest.h>

#include <random>
#include <sstream>
#include <thread>

#include "markar/errors.hpp"
#include "markar/event_queue.hpp"
#include "markar/input_event.hpp"

using namespace markar;

TEST_CASE("event trace parsing") {
    std::istringstream in(
        "# comment\n"
        "120 TOUCH_MOVE 412 305\n"
        "\n"
        "400 PINCH_SCALE 1.25\n"
        "900 COMMAND SET_AXIS_Z\n"
        "950 TOUCH_UP\n"
        "960 TAP 10.5 20\n");
    const auto events = parse_event_trace(in, "trace.txt");
    REQUIRE(events.size() == 5);
    CHECK(events[0] == InputEvent::touch(EventKind::TouchMove, 412, 305, 120));
    CHECK(events[1] == InputEvent::pinch(1.25, 400));
    CHECK(events[2] == InputEvent::cmd(Command::SetAxisZ, 900));
    CHECK(events[3].kind == EventKind::TouchUp);
    CHECK(events[4] == InputEvent::touch(EventKind::Tap, 10.5, 20, 960));
}

TEST_CASE("event trace errors carry the line number") {
    const char* bad[] = {
        "1 TOUCH_MOVE 1 2\n2 SWIPE 3 4\n",          // unknown kind
        "1 TOUCH_MOVE 1 2\n2 TOUCH_MOVE 3\n",       // arity
        "1 TOUCH_MOVE 1 2\n2 COMMAND FLY\n",        // unknown command
        "1 TOUCH_MOVE 1 2\n2 PINCH_SCALE 0\n",      // non-positive factor
        "1 TOUCH_MOVE 1 2\nabc TAP 1 1\n",          // bad timestamp
        "5 TOUCH_MOVE 1 2\n2 TAP 1 1\n",            // decreasing
        "1 TOUCH_MOVE 1 2\n2\n",                    // no kind
    };
    for (const char* text : bad) {
        std::istringstream in(text);
        try {
            parse_event_trace(in, "ev.txt");
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.source() == "ev.txt");
            CHECK(std::string(e.what()).find("ev.txt:2") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(load_event_trace("/nonexistent/events.txt"), ParseError);
}

TEST_CASE("property: format/parse round trip") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> coord(0, 2000);
    std::uniform_real_distribution<double> factor(0.01, 10);
    std::uniform_int_distribution<int> kind(0, 5), cmd(0, 7);
    for (int n = 0; n < 500; ++n) {
        InputEvent e;
        e.kind = EventKind(kind(rng));
        if (e.kind == EventKind::PinchScale) e.scale_factor = factor(rng);
        else if (e.kind == EventKind::Command) e.command = Command(cmd(rng));
        else {
            e.x = coord(rng);
            e.y = coord(rng);
        }
        const auto parsed = parse_event_body(format_event_body(e));
        REQUIRE(parsed.event);
        CHECK(*parsed.event == e);
    }
}

TEST_CASE("queue is FIFO and bounded") {
    EventQueue q;
    q.push(InputEvent::touch(EventKind::TouchMove, 100, 200));
    auto drained = q.drain();
    REQUIRE(drained.size() == 1);
    CHECK(drained[0] == InputEvent::touch(EventKind::TouchMove, 100, 200));
    CHECK(q.drain().empty());

    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0, 500);
    std::vector<InputEvent> sent;
    for (int i = 0; i < 100; ++i) {
        sent.push_back(InputEvent::touch(EventKind::TouchMove, u(rng), u(rng), i));
        q.push(sent.back());
    }
    CHECK(q.drain() == sent);

    for (std::size_t i = 0; i < EventQueue::capacity(); ++i) q.push(InputEvent::pinch(1.0));
    CHECK(q.size() == 1024);
    CHECK_THROWS_AS(q.push(InputEvent::pinch(1.0)), QueueFull);
    CHECK(q.pop().has_value());
    CHECK_NOTHROW(q.push(InputEvent::pinch(2.0)));
}

TEST_CASE("queue keeps order across a producer and a consumer thread") {
    EventQueue q;
    constexpr int kCount = 200000;
    std::thread producer([&] {
        for (int i = 0; i < kCount;) {
            try {
                q.push(InputEvent::touch(EventKind::TouchMove, i, 0, i));
                ++i;
            } catch (const QueueFull&) {
                std::this_thread::yield();
            }
        }
    });
    int expected = 0;
    bool ordered = true;
    while (expected < kCount) {
        for (const auto& e : q.drain()) {
            ordered = ordered && e.timestamp_ms == expected && e.x == expected;
            ++expected;
        }
    }
    producer.join();
    CHECK(ordered);
    CHECK(expected == kCount);
}
