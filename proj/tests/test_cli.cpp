#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>

#include "doctest.h"
#include "hspace/io.hpp"

// HSPACE_CLI_PATH is injected by the build: the freshly built binary.

using namespace hspace;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int rc = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HSPACE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[512];
    while (std::fgets(buf, sizeof(buf), pipe)) r.out += buf;
    const int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hspace-cli-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("dist computes hand values and the indexed route agrees") {
    TempDir tmp;
    write_text(tmp.file("a.json"), "[[0.0], [1.0]]");
    write_text(tmp.file("b.json"), "[[0.4]]");

    auto r = run_cli("dist " + tmp.file("a.json") + " " + tmp.file("b.json") + " --fast");
    CHECK(r.rc == 0);
    CHECK(r.out.find("|A| = 2, |B| = 1") != std::string::npos);
    CHECK(r.out.find("directed B->A = 0.4") != std::string::npos);
    // 17 significant digits: the double nearest 0.6 prints as below.
    CHECK(r.out.find("d_H = 0.59999999999999998") != std::string::npos);
    CHECK(r.out.find("[matches]") != std::string::npos);
}

TEST_CASE("dist honours the empty set conventions") {
    TempDir tmp;
    write_text(tmp.file("empty.json"), "[]");
    write_text(tmp.file("b.json"), "[[0.5]]");

    auto r = run_cli("dist " + tmp.file("empty.json") + " " + tmp.file("b.json"));
    CHECK(r.rc == 0);
    CHECK(r.out.find("directed A->B = 0\n") != std::string::npos);
    CHECK(r.out.find("directed B->A = 1\n") != std::string::npos);
    CHECK(r.out.find("d_H = 1\n") != std::string::npos);
}

TEST_CASE("verify runs a small seeded battery") {
    auto r = run_cli("verify metric --n 3 --k 5");
    CHECK(r.rc == 0);
    CHECK(r.out.find("seed: 424242") != std::string::npos);
    CHECK(r.out.find("verify metric: PASS") != std::string::npos);
}

TEST_CASE("verify rejects a space file for the continuity suite") {
    TempDir tmp;
    save_finite_space(FiniteSpace(2, {0.5}), tmp.file("s.json"));
    auto r = run_cli("verify continuity " + tmp.file("s.json"));
    CHECK(r.rc == 2);
}

TEST_CASE("quotient recovers rotation orbit classes from files") {
    TempDir tmp;
    std::vector<std::vector<double>> pts;
    for (int k = 0; k < 8; ++k) {
        double theta = 2.0 * std::numbers::pi * k / 8;
        pts.push_back({std::cos(theta), std::sin(theta)});
    }
    save_finite_space(FiniteSpace::from_points(pts, BoundedMetric::euclid_cutoff()), tmp.file("circle.json"));
    write_text(tmp.file("action.json"),
               R"({"generators": [{"type": "rotation", "k": 1, "n": 4}]})");

    auto out = tmp.file("q.json");
    auto r = run_cli("quotient " + tmp.file("circle.json") + " " + tmp.file("action.json") +
                     " --output " + out);
    CHECK(r.rc == 0);
    CHECK(r.out.find("classes: 2") != std::string::npos);

    json doc = json::parse(read_text(out));
    CHECK(doc["quotient"]["classes"] == 2);
    // The MDS plot lands next to the report.
    CHECK(fs::exists(tmp.file("q-plot.tsv")));
}

TEST_CASE("example subcommand reports pass") {
    auto r = run_cli("example halfline-scaling");
    CHECK(r.rc == 0);
    CHECK(r.out.find("example halfline-scaling: PASS") != std::string::npos);
    CHECK(r.out.find("(0,1)  stable=yes  semi-stable=yes") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    TempDir tmp;
    write_text(tmp.file("a.json"), "[[0.0, 0.0], [0.25, 0.5]]");
    write_text(tmp.file("b.json"), "[[0.75, 0.1]]");

    auto out1 = tmp.file("r1.json");
    auto out2 = tmp.file("r2.json");
    const std::string base =
        "dist " + tmp.file("a.json") + " " + tmp.file("b.json") + " --fast --output ";
    CHECK(run_cli(base + out1).rc == 0);
    CHECK(run_cli(base + out2).rc == 0);
    const std::string r1 = read_text(out1);
    CHECK(!r1.empty());
    CHECK(r1 == read_text(out2));
    // Timings stay on stdout, never in the report.
    CHECK(r1.find("elapsed") == std::string::npos);
}

TEST_CASE("usage failures exit with 2") {
    TempDir tmp;
    write_text(tmp.file("bad.json"), "{nope");
    write_text(tmp.file("ok.json"), "[[0.0]]");

    CHECK(run_cli("dist " + tmp.file("bad.json") + " " + tmp.file("ok.json")).rc == 2);
    CHECK(run_cli("dist " + tmp.file("ok.json") + " " + tmp.file("none.json")).rc == 2);
    CHECK(run_cli("frobnicate").rc == 2);
    CHECK(run_cli("dist").rc == 2);
    CHECK(run_cli("verify nosuchsuite").rc == 2);
    CHECK(run_cli("example nosuchexample").rc == 2);
    CHECK(run_cli("dist " + tmp.file("ok.json") + " " + tmp.file("ok.json") +
                  " --metric warp")
              .rc == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").rc == 0);
    CHECK(run_cli("dist --help").rc == 0);
}
