#include "hspace/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hspace/errors.hpp"

namespace hspace {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

json parse_document(const std::string& text, const std::filesystem::path& path) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError("failed to parse " + path.string() + ": " + e.what());
    }
}

double require_number(const json& j, const char* what) {
    if (!j.is_number()) throw UsageError(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw UsageError(std::string(what) + " must be finite");
    return v;
}

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw UsageError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

json finite_space_to_json(const FiniteSpace& s) {
    json j;
    j["n"] = s.size();
    if (s.has_labels()) j["labels"] = s.labels();
    j["dist"] = json::array();
    const int n = s.size();
    for (int i = 1; i < n; ++i)
        for (int k = 0; k < i; ++k) j["dist"].push_back(s.dist(i, k));
    return j;
}

FiniteSpace finite_space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("dist"))
        throw UsageError("finite space document needs fields \"n\" and \"dist\"");
    const int n = require_int(j.at("n"), "\"n\"");
    if (n < 0) throw UsageError("\"n\" must be >= 0");
    if (!j.at("dist").is_array()) throw UsageError("\"dist\" must be an array");

    std::vector<double> tri;
    tri.reserve(j.at("dist").size());
    for (const auto& e : j.at("dist")) tri.push_back(require_number(e, "\"dist\" entry"));

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array()) throw UsageError("\"labels\" must be an array");
        for (const auto& e : j.at("labels")) {
            if (!e.is_string()) throw UsageError("\"labels\" entries must be strings");
            labels.push_back(e.get<std::string>());
        }
    }
    return FiniteSpace(n, std::move(tri), std::move(labels));
}

FiniteSpace load_finite_space(const std::filesystem::path& path) {
    return finite_space_from_json(parse_document(read_text(path), path));
}

void save_finite_space(const FiniteSpace& s, const std::filesystem::path& path) {
    write_text(path, finite_space_to_json(s).dump(2) + "\n");
}

CompactSet point_cloud_from_json(const json& j, SpacePtr space) {
    if (!j.is_array()) throw UsageError("point cloud document must be a JSON array");
    if (j.empty()) return CompactSet::empty(std::move(space));

    std::vector<Point> members;
    const bool matrix = space->is_matrix();
    for (const auto& e : j) {
        if (e.is_array()) {
            if (matrix)
                throw UsageError("matrix-backed space expects point ids or labels, "
                                 "not coordinate vectors");
            std::vector<double> coords;
            for (const auto& c : e) coords.push_back(require_number(c, "coordinate"));
            if (static_cast<int>(coords.size()) != space->dim())
                throw UsageError("point has " + std::to_string(coords.size()) +
                                 " coordinates, space wants " +
                                 std::to_string(space->dim()));
            members.push_back(Point::with_coords(std::move(coords)));
        } else if (e.is_number_integer()) {
            if (!matrix) throw UsageError("coordinate space expects coordinate vectors");
            const int id = e.get<int>();
            if (id < 0 || id >= space->size())
                throw UsageError("point id " + std::to_string(id) + " out of range");
            members.push_back(space->point(id));
        } else if (e.is_string()) {
            if (!matrix || !space->finite().has_labels())
                throw UsageError("label lookup needs a labelled matrix space");
            const auto& labels = space->finite().labels();
            const auto it = std::find(labels.begin(), labels.end(), e.get<std::string>());
            if (it == labels.end())
                throw UsageError("unknown point label " + e.get<std::string>());
            members.push_back(space->point(static_cast<int>(it - labels.begin())));
        } else {
            throw UsageError("point cloud entries must be arrays, ids, or labels");
        }
    }
    return CompactSet(std::move(space), std::move(members));
}

CompactSet load_point_cloud(const std::filesystem::path& path, SpacePtr space) {
    const std::string text = read_text(path);
    // An empty or whitespace-only file is the empty set.
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        return CompactSet::empty(std::move(space));
    return point_cloud_from_json(parse_document(text, path), std::move(space));
}

json point_cloud_to_json(const CompactSet& s) {
    json j = json::array();
    for (const auto& p : s.members()) {
        if (p.has_coords()) {
            json c = json::array();
            for (double x : p.coords()) c.push_back(x);
            j.push_back(std::move(c));
        } else {
            j.push_back(p.id());
        }
    }
    return j;
}

namespace {

GroupAction::Generator generator_from_json(const json& g, const SpacePtr& space, int index) {
    if (!g.is_object() || !g.contains("type"))
        throw UsageError("generator " + std::to_string(index) + " needs a \"type\"");
    const std::string type = g.at("type").get<std::string>();
    GroupAction::Generator gen;
    gen.label = g.contains("label") ? g.at("label").get<std::string>()
                                    : type + "-" + std::to_string(index);

    if (type == "permutation") {
        if (!g.contains("table") || !g.at("table").is_array())
            throw UsageError("permutation generator needs a \"table\" array");
        for (const auto& e : g.at("table"))
            gen.permutation.push_back(require_int(e, "permutation entry"));
        return gen;
    }
    if (type == "rotation") {
        const int k = require_int(g.value("k", json(1)), "\"k\"");
        const int n = require_int(g.value("n", json(0)), "\"n\"");
        if (n <= 0) throw UsageError("rotation generator needs \"n\" > 0");
        if (space->is_matrix()) {
            // k/n of a full turn on an m-point cycle: must land on points.
            const long long m = space->size();
            if ((m * k) % n != 0)
                throw UsageError("rotation by " + std::to_string(k) + "/" +
                                 std::to_string(n) + " does not map " +
                                 std::to_string(m) + " cyclic points to themselves");
            gen.permutation =
                rotation_table(static_cast<int>(m), static_cast<int>(m * k / n));
            return gen;
        }
        if (space->dim() != 2)
            throw UsageError("coordinate rotation needs a 2-d space");
        const double angle = 2.0 * std::numbers::pi * k / n;
        const double c = std::cos(angle), s = std::sin(angle);
        gen.map = [c, s](const std::vector<double>& p) {
            return std::vector<double>{c * p[0] - s * p[1], s * p[0] + c * p[1]};
        };
        return gen;
    }
    if (type == "scale") {
        if (!g.contains("c")) throw UsageError("scale generator needs \"c\"");
        const double c = require_number(g.at("c"), "\"c\"");
        if (c <= 0.0) throw UsageError("scale factor must be positive");
        gen.map = halfline_scale(c);
        return gen;
    }
    if (type == "flow") {
        const std::string field = g.value("field", "");
        if (field != "circle-height")
            throw UsageError("unknown flow field \"" + field + "\"");
        const double dt = require_number(g.value("dt", json(1.0)), "\"dt\"");
        gen.map = circle_height_flow(dt);
        return gen;
    }
    throw UsageError("unknown generator type \"" + type + "\"");
}

}  // namespace

GroupAction action_from_json(const json& j, SpacePtr space) {
    if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array() ||
        j.at("generators").empty())
        throw UsageError("action document needs a nonempty \"generators\" array");
    std::vector<GroupAction::Generator> gens;
    int index = 0;
    for (const auto& g : j.at("generators"))
        gens.push_back(generator_from_json(g, space, index++));
    const double snap =
        j.contains("snap") ? require_number(j.at("snap"), "\"snap\"") : 1e-9;
    return GroupAction(std::move(space), std::move(gens), snap);
}

GroupAction load_action(const std::filesystem::path& path, SpacePtr space) {
    return action_from_json(parse_document(read_text(path), path), std::move(space));
}

json report_to_json(const Report& r) {
    json j;
    j["pass"] = r.all_pass();
    j["checks"] = static_cast<int>(r.entries().size());
    j["failures"] = r.failures();
    j["entries"] = json::array();
    for (const auto& e : r.entries()) {
        json row;
        row["check"] = e.check;
        row["pass"] = e.pass;
        if (!e.witness.empty()) row["witness"] = e.witness;
        if (e.residual != 0.0) row["residual"] = e.residual;
        j["entries"].push_back(std::move(row));
    }
    return j;
}

json witnesses_to_json(const std::vector<JumpWitness>& ws) {
    json j = json::array();
    for (const auto& w : ws) {
        json row;
        row["i"] = w.i;
        row["j"] = w.j;
        row["point_dist"] = w.point_dist;
        row["image_dist"] = w.image_dist;
        j.push_back(std::move(row));
    }
    return j;
}

json quotient_to_json(const QuotientApprox& q) {
    json j;
    j["classes"] = q.class_count();
    j["u_used"] = q.u_used();
    j["eps"] = q.eps();
    j["budget"] = q.budget();
    j["cluster_tol"] = q.cluster_tol();
    j["survivors"] = q.survivors();
    j["assignment"] = q.assignment();
    j["class_sets"] = json::array();
    for (const auto& c : q.classes()) {
        json row;
        row["size"] = c.size();
        row["points"] = point_cloud_to_json(c);
        j["class_sets"].push_back(std::move(row));
    }
    j["dmat"] = json::array();
    const int k = q.class_count();
    for (int a = 0; a < k; ++a) {
        json row = json::array();
        for (int b = 0; b < k; ++b) row.push_back(q.dh(a, b));
        j["dmat"].push_back(std::move(row));
    }
    j["diagnostics"] = witnesses_to_json(q.diagnostics());
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw UsageError("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace hspace
