#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "markar/text.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = MARKAR_CLI;
const std::string kData = MARKAR_TEST_DATA;

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / ("markar_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    const fs::path out = scratch_dir() / "stdout.txt";
    const std::string cmd = kCli + ' ' + args + " > " + out.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("cli exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("replay").code == 2);
    CHECK(run("replay --model /nonexistent.obj").code == 2);
    CHECK(run("orient --orbit-radius 0").code == 2);
    CHECK(run("orient --fps -1").code == 2);
    CHECK(run("orient --dropout 5:1").code == 2);
    CHECK(run("replay --model " + kData + "/car.obj --viewport 0x10").code == 2);

    const auto only_vertices = write_file("empty.obj", "v 0 0 0\nv 1 0 0\n");
    CHECK(run("replay --model " + only_vertices.string()).code == 2);

    const auto bad_events = write_file("bad_events.txt", "0 TAP 1 1\n10 SWIPE 2\n");
    CHECK(run("replay --model " + kData + "/car.obj --events " + bad_events.string()).code == 2);

    const auto off_screen = write_file("off_screen.txt", "0 TAP 5000 10\n");
    CHECK(run("replay --model " + kData + "/car.obj --duration 1 --events " + off_screen.string()).code == 3);

    CHECK(run("orient --duration 0").code == 0);
}

TEST_CASE("orient over a full circle shows four transitions") {
    const Result r = run("orient --duration 8 --fps 30");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 241);
    CHECK(lines[0] == "# t_ms,angle_deg,quadrant");
    CHECK(lines[1] == "0,180,DEG180");
    std::vector<std::string> seq;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string q = lines[i].substr(lines[i].rfind(',') + 1);
        if (seq.empty() || seq.back() != q) seq.push_back(q);
    }
    CHECK(seq == std::vector<std::string>{"DEG180", "DEG270", "DEG0", "DEG90", "DEG180"});

    const Result lost = run("orient --duration 1 --dropout 0:100");
    CHECK(lines_of(lost.out)[1] == "0,lost,DEG0");
}

TEST_CASE("trace then replay matches the in-process golden log") {
    const fs::path trace = scratch_dir() / "poses.txt";
    REQUIRE(run("trace --duration 8 --dropout 3000:3500 --out " + trace.string()).code == 0);
    std::ifstream a(trace, std::ios::binary), b(kData + "/golden_poses.txt", std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());

    const std::string args = "replay --model " + kData + "/car.obj --registry " + kData +
                             "/car_parts.txt --pose-trace " + trace.string() + " --events " + kData +
                             "/golden_events.txt";
    const Result first = run(args);
    const Result second = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    std::ifstream g(kData + "/golden_log.csv", std::ios::binary);
    std::stringstream sg;
    sg << g.rdbuf();
    CHECK(first.out == sg.str());
}

TEST_CASE("replay without events logs the frame conversion only") {
    const Result r = run("replay --model " + kData + "/two_cubes.obj --duration 1");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 31);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(lines[i].find(",0,0,0,0,0,0,1,TRACKING,") != std::string::npos);
        CHECK(lines[i].back() == ',');
    }
}
