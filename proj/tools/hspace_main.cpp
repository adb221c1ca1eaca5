// Command-line front end: distances between point clouds, verification
// batteries, quotient approximation, and the worked examples.
//
// Exit codes: 0 success / all checks pass, 1 a check or action failed,
// 2 bad usage or unparseable input.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hspace/demos.hpp"
#include "hspace/errors.hpp"
#include "hspace/generate.hpp"
#include "hspace/hausdorff.hpp"
#include "hspace/io.hpp"
#include "hspace/mds.hpp"
#include "hspace/quotient.hpp"
#include "hspace/suites.hpp"

namespace {

using hspace::json;

struct Options {
    std::string metric = "euclid-cutoff";
    double eps = 0.1;
    double tol = 1e-12;
    double cluster_tol = 0.2;
    int budget = 4096;
    double snap = -1.0;  // <0: keep the action file's value
    std::uint64_t seed = 424242;
    bool fast = false;
    std::string output;
    int n = 0;
    int k = 0;
};

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

// Timings go to stdout only, never into --output files, so reports stay
// byte-identical across runs.
void print_elapsed(const Timer& t) {
    std::printf("elapsed: %.3f s\n", t.seconds());
}

void write_report(const std::string& path, const json& j) {
    hspace::write_text(path, j.dump(2) + "\n");
    std::printf("report written to %s\n", path.c_str());
}

json parse_file(const std::string& path) {
    const std::string text = hspace::read_text(path);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::array();
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw hspace::UsageError("failed to parse " + path + ": " + e.what());
    }
}

int cloud_dim(const json& doc) {
    if (!doc.is_array()) throw hspace::UsageError("point cloud must be a JSON array");
    for (const auto& e : doc)
        if (e.is_array()) return static_cast<int>(e.size());
    return 0;
}

// Coordinate ambient named by --metric; dimension read off the data.
hspace::SpacePtr coordinate_space(const std::string& metric, int dim) {
    if (dim <= 0) dim = 1;  // empty clouds: any dimension serves
    if (metric == "euclid-cutoff") return hspace::Space::euclid_cutoff(dim);
    if (metric == "disk-pullback") return hspace::Space::disk_pullback(dim);
    throw hspace::UsageError("unknown metric \"" + metric +
                             "\" (euclid-cutoff, disk-pullback, matrix:<file>)");
}

int cmd_dist(const std::string& file_a, const std::string& file_b, const Options& opt) {
    const json doc_a = parse_file(file_a);
    const json doc_b = parse_file(file_b);

    hspace::SpacePtr space;
    if (opt.metric.rfind("matrix:", 0) == 0) {
        space = hspace::Space::matrix(hspace::load_finite_space(opt.metric.substr(7)));
    } else {
        space = coordinate_space(opt.metric, std::max(cloud_dim(doc_a), cloud_dim(doc_b)));
    }
    const hspace::CompactSet a = hspace::point_cloud_from_json(doc_a, space);
    const hspace::CompactSet b = hspace::point_cloud_from_json(doc_b, space);

    const double ab = hspace::directed_hausdorff(a, b);
    const double ba = hspace::directed_hausdorff(b, a);
    const double dh = hspace::hausdorff_distance(a, b);

    std::printf("metric: %s\n", space->name().c_str());
    std::printf("|A| = %d, |B| = %d\n", a.size(), b.size());
    std::printf("directed A->B = %s\n", hspace::format_real(ab).c_str());
    std::printf("directed B->A = %s\n", hspace::format_real(ba).c_str());
    std::printf("d_H = %s\n", hspace::format_real(dh).c_str());

    bool fast_matches = true;
    double dh_fast = dh;
    if (opt.fast) {
        const hspace::SpatialIndex ia(a), ib(b);
        dh_fast = hspace::hausdorff_distance_fast(a, b, ia, ib);
        fast_matches = dh_fast == dh;
        std::printf("d_H (indexed) = %s [%s]\n", hspace::format_real(dh_fast).c_str(),
                    fast_matches ? "matches" : "MISMATCH");
    }

    if (!opt.output.empty()) {
        json out;
        out["command"] = "dist";
        out["metric"] = opt.metric;
        out["a"] = file_a;
        out["b"] = file_b;
        out["directed_ab"] = ab;
        out["directed_ba"] = ba;
        out["hausdorff"] = dh;
        if (opt.fast) {
            out["hausdorff_fast"] = dh_fast;
            out["fast_matches"] = fast_matches;
        }
        write_report(opt.output, out);
    }
    return fast_matches ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& space_file,
               const Options& opt) {
    hspace::SuiteOptions so;
    so.seed = opt.seed;
    so.tol = opt.tol;
    so.eps = opt.eps;
    if (opt.n > 0) so.spaces = opt.n;
    if (opt.k > 0) so.max_points = opt.k;
    if (!space_file.empty()) {
        if (suite == "continuity")
            throw hspace::UsageError("the continuity suite takes no space file");
        so.extra = hspace::load_finite_space(space_file);
        so.extra_name = space_file;
    }

    std::printf("seed: %llu\n", static_cast<unsigned long long>(so.seed));
    Timer timer;
    hspace::Report report;
    if (suite == "metric")
        report = hspace::run_metric_suite(so);
    else if (suite == "universal")
        report = hspace::run_universal_suite(so);
    else if (suite == "continuity")
        report = hspace::run_continuity_suite(so);
    else if (suite == "compactness")
        report = hspace::run_compactness_suite(so);
    else
        throw hspace::UsageError("unknown suite \"" + suite +
                                 "\" (metric, universal, continuity, compactness)");

    for (const auto& e : report.entries()) {
        if (e.pass && report.entries().size() > 60) continue;  // keep stdout sane
        std::printf("%s  %s%s%s\n", e.pass ? "pass" : "FAIL", e.check.c_str(),
                    e.witness.empty() ? "" : ": ", e.witness.c_str());
    }
    std::printf("verify %s: %s (%zu checks, %d failures)\n", suite.c_str(),
                report.all_pass() ? "PASS" : "FAIL", report.entries().size(),
                report.failures());
    print_elapsed(timer);

    if (!opt.output.empty()) {
        json out;
        out["command"] = "verify";
        out["suite"] = suite;
        out["seed"] = so.seed;
        out["report"] = hspace::report_to_json(report);
        write_report(opt.output, out);
    }
    return report.all_pass() ? 0 : 1;
}

std::string plot_path(const std::string& output) {
    if (output.empty()) return "hspace-plot.tsv";
    std::filesystem::path p(output);
    p.replace_extension();
    return p.string() + "-plot.tsv";
}

void write_plot(const hspace::QuotientApprox& q, const std::string& path) {
    const auto xy = hspace::mds_embed_2d(q.dmat(), q.class_count());
    std::string text = "class\tx\ty\n";
    for (std::size_t i = 0; i < xy.size(); ++i)
        text += std::to_string(i) + "\t" + hspace::format_real(xy[i][0]) + "\t" +
                hspace::format_real(xy[i][1]) + "\n";
    hspace::write_text(path, text);
    std::printf("plot data written to %s\n", path.c_str());
}

void print_quotient(const hspace::QuotientApprox& q) {
    std::printf("classes: %d\n", q.class_count());
    std::printf("U used: %s\n", q.u_used().c_str());
    std::printf("survivors: %zu, jump witnesses: %zu\n", q.survivors().size(),
                q.diagnostics().size());
    for (int i = 0; i < q.class_count(); ++i) {
        const auto& c = q.classes()[i];
        std::printf("class %d: %d points, rep %s\n", i, c.size(),
                    c.member(0).describe().c_str());
    }
    if (q.class_count() > 1) {
        std::printf("class d_H matrix:\n");
        for (int i = 0; i < q.class_count(); ++i) {
            std::string row;
            for (int j = 0; j < q.class_count(); ++j)
                row += (j ? " " : "") + hspace::format_real(q.dh(i, j));
            std::printf("  %s\n", row.c_str());
        }
    }
    for (const auto& w : q.diagnostics())
        std::printf("witness: samples %d,%d at %s jump to %s\n", w.i, w.j,
                    hspace::format_real(w.point_dist).c_str(),
                    hspace::format_real(w.image_dist).c_str());
}

int cmd_quotient(const std::string& space_file, const std::string& action_file,
                 const Options& opt) {
    const json space_doc = parse_file(space_file);

    hspace::SpacePtr space;
    std::vector<hspace::Point> samples;
    if (space_doc.is_object()) {
        space = hspace::Space::matrix(hspace::finite_space_from_json(space_doc));
        for (int i = 0; i < space->size(); ++i) samples.push_back(space->point(i));
    } else {
        space = coordinate_space(opt.metric, cloud_dim(space_doc));
        const auto cloud = hspace::point_cloud_from_json(space_doc, space);
        samples = cloud.members();
    }

    json action_doc = parse_file(action_file);
    if (opt.snap >= 0.0) action_doc["snap"] = opt.snap;
    const hspace::GroupAction action = hspace::action_from_json(action_doc, space);

    Timer timer;
    // --tol doubles as the probe mesh: witnesses are sample pairs closer
    // than tol whose orbit closures jump apart.
    const double probe_delta = opt.tol > 0 && opt.tol < 1 ? opt.tol : 0.1;
    const hspace::QuotientApprox q = hspace::hausdorff_quotient(
        samples, action, opt.eps, opt.budget, opt.cluster_tol, nullptr, probe_delta);
    print_quotient(q);
    print_elapsed(timer);
    write_plot(q, plot_path(opt.output));

    if (!opt.output.empty()) {
        json out;
        out["command"] = "quotient";
        out["space"] = space_file;
        out["action"] = action_file;
        out["quotient"] = hspace::quotient_to_json(q);
        write_report(opt.output, out);
    }
    return 0;
}

int cmd_example(const std::string& name, const Options& opt) {
    Timer timer;
    json out;
    out["command"] = "example";
    out["name"] = name;
    bool pass = false;

    if (name == "example1-lines") {
        const auto r = hspace::demo_example1_lines();
        std::printf("claimed: cutoff metric cannot tell lines apart, d_C = 1 exactly\n");
        std::printf("computed: d_C(L1, L2) = %s\n", hspace::format_real(r.d_cutoff).c_str());
        std::printf("claimed: disk-pullback distances to the vertical axis strictly "
                    "decrease with slope, below 0.2 at slope 16\n");
        for (std::size_t i = 0; i < r.slopes.size(); ++i)
            std::printf("computed: d'(L%d, V) = %s\n", r.slopes[i],
                        hspace::format_real(r.d_disk[i]).c_str());
        out["d_cutoff"] = r.d_cutoff;
        out["slopes"] = r.slopes;
        out["d_disk"] = r.d_disk;
        pass = r.pass;
    } else if (name == "halfline-scaling") {
        const auto r = hspace::demo_halfline_scaling();
        std::printf("claimed: scaling collapses the ray to one class; of the four "
                    "invariant domains only the open interior is stable\n");
        std::printf("computed: %d class(es), U = %s\n", r.quotient.class_count(),
                    r.quotient.u_used().c_str());
        for (const auto& row : r.table)
            std::printf("computed: %s  stable=%s  semi-stable=%s\n", row.name.c_str(),
                        row.stable ? "yes" : "no", row.semi_stable ? "yes" : "no");
        std::printf("computed: topological comparison %s (%d orbit classes)%s%s\n",
                    r.topo.pass ? "matches" : "differs", r.topo.orbit_count,
                    r.topo.caveat.empty() ? "" : "; ", r.topo.caveat.c_str());
        out["classes"] = r.quotient.class_count();
        out["quotient"] = hspace::quotient_to_json(r.quotient);
        out["domains"] = json::array();
        for (const auto& row : r.table)
            out["domains"].push_back(
                {{"name", row.name}, {"stable", row.stable}, {"semi_stable", row.semi_stable}});
        out["topo_matches"] = r.topo.pass;
        pass = r.pass;
        if (!opt.output.empty()) write_plot(r.quotient, plot_path(opt.output));
    } else if (name == "circle-rotation") {
        const int n = opt.n > 0 ? opt.n : 64;
        const int k = opt.k > 0 ? opt.k : 4;
        const auto r = hspace::demo_circle_rotation(n, k);
        std::printf("claimed: quotient classes = brute-force rotation orbits\n");
        std::printf("computed: %d orbits, %d classes, min inter-orbit d_H = %s\n",
                    r.orbit_count, r.quotient.class_count(),
                    hspace::format_real(r.min_interorbit).c_str());
        std::printf("computed: topological comparison %s\n",
                    r.topo.pass ? "matches" : "differs");
        out["n"] = n;
        out["k"] = k;
        out["orbits"] = r.orbit_count;
        out["classes"] = r.quotient.class_count();
        out["min_interorbit"] = r.min_interorbit;
        out["quotient"] = hspace::quotient_to_json(r.quotient);
        pass = r.pass;
        if (!opt.output.empty()) write_plot(r.quotient, plot_path(opt.output));
    } else if (name == "morse-circle") {
        const int n = opt.n > 0 ? opt.n : 64;
        const auto r = hspace::demo_morse_circle(n);
        std::printf("claimed: downhill flow on the circle yields 2 classes (the two "
                    "open arcs), stable under 4x refinement within 2*eps\n");
        std::printf("computed: %d classes at n=%d, %d classes at n=%d\n",
                    r.quotient.class_count(), n, r.refined.class_count(), 4 * n);
        std::printf("computed: refinement gap = %s (bound %s)\n",
                    hspace::format_real(r.refinement_gap).c_str(),
                    hspace::format_real(2.0 * r.quotient.eps()).c_str());
        out["n"] = n;
        out["classes"] = r.quotient.class_count();
        out["classes_refined"] = r.refined.class_count();
        out["refinement_gap"] = r.refinement_gap;
        out["gap_bound"] = 2.0 * r.quotient.eps();
        out["quotient"] = hspace::quotient_to_json(r.quotient);
        pass = r.pass;
        if (!opt.output.empty()) write_plot(r.quotient, plot_path(opt.output));
    } else if (name == "collision-family") {
        const double eps = opt.eps;
        const auto r = hspace::demo_collision_family(eps);
        std::printf("claimed: two- and three-point collisions converge to the same "
                    "singleton with the same threshold%s\n",
                    eps == 0.1 ? ", N(0.1) = 11" : "");
        std::printf("computed: N_two = %d, N_three = %d, limit gap = %s\n",
                    r.threshold_two, r.threshold_three,
                    hspace::format_real(r.limit_gap).c_str());
        out["eps"] = eps;
        out["threshold_two"] = r.threshold_two;
        out["threshold_three"] = r.threshold_three;
        out["limit_gap"] = r.limit_gap;
        pass = r.pass && (eps != 0.1 || r.threshold_two == 11);
    } else {
        throw hspace::UsageError(
            "unknown example \"" + name +
            "\" (example1-lines, halfline-scaling, circle-rotation, morse-circle, "
            "collision-family)");
    }

    std::printf("example %s: %s\n", name.c_str(), pass ? "PASS" : "FAIL");
    print_elapsed(timer);
    out["pass"] = pass;
    if (!opt.output.empty()) write_report(opt.output, out);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Hausdorff-metric toolkit: distances, hyperspace "
                 "verification batteries, quotient approximation"};
    app.require_subcommand(1);

    // Separate option blocks per subcommand: the defaults differ.
    Options opt_dist, opt_verify, opt_quot, opt_example;
    opt_quot.eps = 0.01;  // orbit-closure resolution
    opt_quot.tol = 0.1;   // doubles as the stability-probe mesh

    auto* dist = app.add_subcommand("dist", "Hausdorff distance between two point clouds");
    std::string file_a, file_b;
    dist->add_option("a", file_a, "first point cloud (JSON)")->required();
    dist->add_option("b", file_b, "second point cloud (JSON)")->required();
    dist->add_option("--metric", opt_dist.metric,
                     "euclid-cutoff | disk-pullback | matrix:<file>");
    dist->add_flag("--fast", opt_dist.fast,
                   "also run the indexed route and require bitwise agreement");
    dist->add_option("--output", opt_dist.output, "write a JSON report here");

    auto* verify = app.add_subcommand("verify", "run a seeded verification battery");
    std::string suite, space_file;
    verify->add_option("suite", suite, "metric | universal | continuity | compactness")
        ->required();
    verify->add_option("space", space_file, "optional finite-space JSON to include");
    verify->add_option("--eps", opt_verify.eps, "covering radius (default 0.1)");
    verify->add_option("--tol", opt_verify.tol, "metric-axiom tolerance (default 1e-12)");
    verify->add_option("--seed", opt_verify.seed, "battery seed (default 424242)");
    verify->add_option("--n", opt_verify.n, "battery size (spaces or families)");
    verify->add_option("--k", opt_verify.k, "max ambient points per generated space");
    verify->add_option("--output", opt_verify.output, "write a JSON report here");

    auto* quot = app.add_subcommand("quotient", "approximate Hausdorff quotient of an action");
    std::string qspace_file, action_file;
    quot->add_option("space", qspace_file,
                     "finite-space JSON (object) or point cloud (array)")
        ->required();
    quot->add_option("action", action_file, "action JSON with generators")->required();
    quot->add_option("--metric", opt_quot.metric, "ambient metric for point-cloud input");
    quot->add_option("--eps", opt_quot.eps, "orbit-closure resolution (default 0.01)");
    quot->add_option("--budget", opt_quot.budget, "orbit-closure point budget");
    quot->add_option("--cluster-tol", opt_quot.cluster_tol, "class-joining d_H tolerance");
    quot->add_option("--tol", opt_quot.tol, "stability probe mesh (default 0.1)");
    quot->add_option("--snap", opt_quot.snap, "override the action's snap tolerance");
    quot->add_option("--output", opt_quot.output, "write a JSON report here");

    auto* example = app.add_subcommand("example", "run a built-in worked example");
    std::string example_name;
    example->add_option("name", example_name,
                        "example1-lines | halfline-scaling | circle-rotation | "
                        "morse-circle | collision-family")
        ->required();
    example->add_option("--n", opt_example.n, "sample count (circle-rotation, morse-circle)");
    example->add_option("--k", opt_example.k, "rotation order (circle-rotation)");
    example->add_option("--eps", opt_example.eps, "covering radius (collision-family)");
    example->add_option("--output", opt_example.output, "write a JSON report here");

    try {
        app.parse(argc, argv);
        if (dist->parsed()) return cmd_dist(file_a, file_b, opt_dist);
        if (verify->parsed()) return cmd_verify(suite, space_file, opt_verify);
        if (quot->parsed()) return cmd_quotient(qspace_file, action_file, opt_quot);
        if (example->parsed()) return cmd_example(example_name, opt_example);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const hspace::UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const hspace::CapacityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
