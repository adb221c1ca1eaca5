#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>

#include "doctest.h"
#include "hspace/generate.hpp"
#include "hspace/io.hpp"

using namespace hspace;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hspace-io-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path file(const std::string& name) const { return path / name; }
};

}  // namespace

TEST_CASE("format_real round trips doubles") {
    for (double x : {0.0, 1.0, 1.0 / 3.0, 0.1, 1e-17, 123456.789, 2e300}) {
        CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
        CHECK(std::strtod(format_real(-x).c_str(), nullptr) == -x);
    }
}

TEST_CASE("finite space documents round trip") {
    TempDir tmp;
    FiniteSpace fs3(3, {0.2, 0.4, 0.3}, {"a", "b", "c"});
    auto p = tmp.file("space.json");
    save_finite_space(fs3, p);

    FiniteSpace back = load_finite_space(p);
    REQUIRE(back.size() == 3);
    CHECK(back.labels() == std::vector<std::string>{"a", "b", "c"});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(back.dist(i, j) == fs3.dist(i, j));

    // Unlabelled spaces omit the labels field entirely.
    json j = finite_space_to_json(FiniteSpace(2, {0.5}));
    CHECK(!j.contains("labels"));
    CHECK(finite_space_from_json(j).dist(0, 1) == 0.5);
}

TEST_CASE("finite space documents are validated") {
    CHECK_THROWS_AS(finite_space_from_json(json::parse("[1,2]")), UsageError);
    CHECK_THROWS_AS(finite_space_from_json(json::parse(R"({"n": 2})")), UsageError);
    CHECK_THROWS_AS(finite_space_from_json(json::parse(R"({"n": -1, "dist": []})")),
                    UsageError);
    // Lower triangle of a 3-point space has 3 entries, not 2.
    CHECK_THROWS_AS(finite_space_from_json(json::parse(R"({"n": 3, "dist": [0.1, 0.2]})")),
                    UsageError);
    CHECK_THROWS_AS(
        finite_space_from_json(json::parse(R"({"n": 2, "dist": ["x"]})")), UsageError);
    CHECK_THROWS_AS(
        finite_space_from_json(json::parse(R"({"n": 2, "dist": [0.5], "labels": [1]})")),
        UsageError);
}

TEST_CASE("point clouds round trip on coordinate spaces") {
    TempDir tmp;
    auto s = Space::euclid_cutoff(2);
    auto p = tmp.file("cloud.json");
    write_text(p, R"([[0.0, 0.5], [1.0, 0.25]])");

    CompactSet set = load_point_cloud(p, s);
    REQUIRE(set.size() == 2);
    CHECK(set.member(1).coords()[0] == 1.0);

    json again = point_cloud_to_json(set);
    CHECK(point_cloud_from_json(again, s).size() == 2);
}

TEST_CASE("point clouds resolve ids and labels on matrix spaces") {
    auto s = Space::matrix(FiniteSpace(3, {0.2, 0.4, 0.3}, {"a", "b", "c"}));
    auto set = point_cloud_from_json(json::parse(R"([0, "c"])"), s);
    REQUIRE(set.size() == 2);
    CHECK(set.member(0).id() == 0);
    CHECK(set.member(1).id() == 2);
    CHECK(point_cloud_to_json(set) == json::parse("[0, 2]"));
}

TEST_CASE("point cloud validation") {
    auto coord = Space::euclid_cutoff(2);
    auto matrix = Space::matrix(FiniteSpace(2, {0.5}));

    CHECK_THROWS_AS(point_cloud_from_json(json::parse(R"({"a": 1})"), coord), UsageError);
    CHECK_THROWS_AS(point_cloud_from_json(json::parse("[[0.1]]"), coord), UsageError);
    CHECK_THROWS_AS(point_cloud_from_json(json::parse("[1]"), coord), UsageError);
    CHECK_THROWS_AS(point_cloud_from_json(json::parse("[[0.1, 0.2]]"), matrix), UsageError);
    CHECK_THROWS_AS(point_cloud_from_json(json::parse("[5]"), matrix), UsageError);
    CHECK_THROWS_AS(point_cloud_from_json(json::parse(R"(["a"])"), matrix), UsageError);
    CHECK_THROWS_AS(point_cloud_from_json(json::parse("[true]"), coord), UsageError);
}

TEST_CASE("empty files and empty arrays mean the empty set") {
    TempDir tmp;
    auto s = Space::euclid_cutoff(1);

    auto blank = tmp.file("blank.json");
    write_text(blank, "  \n\t ");
    CHECK(load_point_cloud(blank, s).is_empty());

    auto arr = tmp.file("empty.json");
    write_text(arr, "[]");
    CHECK(load_point_cloud(arr, s).is_empty());

    CHECK_THROWS_AS(load_point_cloud(tmp.file("missing.json"), s), UsageError);
}

TEST_CASE("action documents cover the builtin generator types") {
    std::vector<std::vector<double>> pts;
    for (int k = 0; k < 8; ++k) {
        double theta = 2.0 * std::numbers::pi * k / 8;
        pts.push_back({std::cos(theta), std::sin(theta)});
    }
    auto circle = Space::matrix(FiniteSpace::from_points(pts, BoundedMetric::euclid_cutoff()));

    auto rot = action_from_json(
        json::parse(R"({"generators": [{"type": "rotation", "k": 1, "n": 4}]})"), circle);
    CHECK(rot.apply(0, circle->point(0)).id() == 2);

    auto perm = action_from_json(
        json::parse(R"({"generators": [{"type": "permutation",
                                        "table": [1,2,3,4,5,6,7,0]}]})"),
        circle);
    CHECK(perm.apply(0, circle->point(7)).id() == 0);

    auto line = Space::euclid_cutoff(1);
    auto scale = action_from_json(
        json::parse(R"({"generators": [{"type": "scale", "c": 2.0}]})"), line);
    CHECK(scale.apply(0, Point::with_coords({0.5})).coords()[0] ==
          doctest::Approx(2.0 / 3.0));

    auto plane = Space::euclid_cutoff(2);
    auto flow = action_from_json(
        json::parse(R"({"generators": [{"type": "flow", "field": "circle-height",
                                        "dt": 1.0}]})"),
        plane);
    Point moved = flow.apply(0, Point::with_coords({1.0, 0.0}));
    CHECK(moved.coords()[1] < 0.0);  // downhill from the equator

    // Coordinate rotation on a plane keeps exact formula images.
    auto crot = action_from_json(
        json::parse(R"({"generators": [{"type": "rotation", "k": 1, "n": 2}]})"), plane);
    CHECK(crot.apply(0, Point::with_coords({0.25, 0.0})).coords()[0] ==
          doctest::Approx(-0.25));
}

TEST_CASE("action document validation") {
    auto line = Space::euclid_cutoff(1);
    auto check_throws = [&](const char* text) {
        CHECK_THROWS_AS(action_from_json(json::parse(text), line), UsageError);
    };
    check_throws(R"({"generators": []})");
    check_throws(R"({"no_generators": 1})");
    check_throws(R"({"generators": [{"type": "teleport"}]})");
    check_throws(R"({"generators": [{"type": "scale"}]})");
    check_throws(R"({"generators": [{"type": "scale", "c": -1.0}]})");
    check_throws(R"({"generators": [{"type": "flow", "field": "unknown"}]})");
    check_throws(R"({"generators": [{"type": "rotation", "k": 1, "n": 0}]})");
    check_throws(R"({"generators": [{"type": "permutation"}]})");

    // Rotation that does not map the cyclic sample to itself.
    auto circle5 = Space::matrix(FiniteSpace::from_points(
        {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}, {0.5, 0.5}},
        BoundedMetric::euclid_cutoff()));
    CHECK_THROWS_AS(
        action_from_json(
            json::parse(R"({"generators": [{"type": "rotation", "k": 1, "n": 3}]})"),
            circle5),
        UsageError);
}

TEST_CASE("snap override flows into the action") {
    auto line = Space::euclid_cutoff(1);
    auto a = action_from_json(
        json::parse(R"({"generators": [{"type": "scale", "c": 2.0}], "snap": 0.25})"),
        line);
    CHECK(a.snap_tol() == 0.25);
    auto b = action_from_json(
        json::parse(R"({"generators": [{"type": "scale", "c": 2.0}]})"), line);
    CHECK(b.snap_tol() == 1e-9);
}

TEST_CASE("report and quotient serialization") {
    Report r;
    r.add_pass("alpha", "", 0.0);
    r.add_fail("beta", "somewhere", 0.25);
    json j = report_to_json(r);
    CHECK(j["pass"] == false);
    CHECK(j["checks"] == 2);
    CHECK(j["failures"] == 1);
    CHECK(j["entries"][0] == json::parse(R"({"check": "alpha", "pass": true})"));
    CHECK(j["entries"][1]["witness"] == "somewhere");
    CHECK(j["entries"][1]["residual"] == 0.25);

    auto q = morse_flow_demo();
    json qj = quotient_to_json(q);
    CHECK(qj["classes"] == 2);
    CHECK(qj["class_sets"].size() == 2);
    CHECK(qj["dmat"].size() == 2);
    CHECK(qj["survivors"].size() == q.survivors().size());
    CHECK(qj["diagnostics"].size() == q.diagnostics().size());

    // Serialization is deterministic: same quotient, same bytes.
    CHECK(qj.dump(2) == quotient_to_json(morse_flow_demo()).dump(2));
}
