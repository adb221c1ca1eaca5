#include "hspace/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

namespace hspace {

namespace {

void check_orbit_params(double eps, int budget) {
    if (!(eps > 0.0)) throw UsageError("orbit closure: eps must be > 0");
    if (budget < 1) throw UsageError("orbit closure: budget must be >= 1");
}

std::vector<Point> snap_targets(const Space& space) {
    std::vector<Point> pts;
    const FiniteSpace& fs = space.finite();
    if (!fs.has_coords())
        throw UsageError(
            "formula generators on a matrix-backed space need stored coordinates to snap to");
    pts.reserve(fs.size());
    for (int i = 0; i < fs.size(); ++i) pts.push_back(Point::with_id_coords(i, fs.coords()[i]));
    return pts;
}

// Greedy clustering in input order: an image joins the first class whose
// representative is within tol, else founds a new class.
struct Clustering {
    std::vector<const CompactSet*> reps;
    std::vector<int> assign;
};

Clustering greedy_cluster(const std::vector<const CompactSet*>& images, double tol) {
    Clustering out;
    out.assign.reserve(images.size());
    for (const CompactSet* img : images) {
        int cls = -1;
        for (std::size_t c = 0; c < out.reps.size(); ++c) {
            if (hausdorff_distance(*img, *out.reps[c]) <= tol) {
                cls = static_cast<int>(c);
                break;
            }
        }
        if (cls < 0) {
            cls = static_cast<int>(out.reps.size());
            out.reps.push_back(img);
        }
        out.assign.push_back(cls);
    }
    return out;
}

// Kuhn's augmenting-path matching; class lists here have at most a few
// dozen entries.
bool try_augment(int u, const std::vector<std::vector<char>>& adj, std::vector<char>& used,
                 std::vector<int>& match) {
    for (std::size_t v = 0; v < adj[u].size(); ++v) {
        if (!adj[u][v] || used[v]) continue;
        used[v] = 1;
        if (match[v] < 0 || try_augment(match[v], adj, used, match)) {
            match[v] = u;
            return true;
        }
    }
    return false;
}

bool perfect_matching(const std::vector<std::vector<char>>& adj) {
    if (adj.empty()) return true;
    const std::size_t cols = adj[0].size();
    if (adj.size() != cols) return false;
    std::vector<int> match(cols, -1);
    for (std::size_t u = 0; u < adj.size(); ++u) {
        std::vector<char> used(cols, 0);
        if (!try_augment(static_cast<int>(u), adj, used, match)) return false;
    }
    return true;
}

/// One-to-one matching between two class lists with d_H <= tol per pair.
bool classes_biject(const std::vector<CompactSet>& a, const std::vector<CompactSet>& b,
                    double tol) {
    if (a.size() != b.size()) return false;
    std::vector<std::vector<char>> adj(a.size(), std::vector<char>(b.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            adj[i][j] = hausdorff_distance(a[i], b[j]) <= tol ? 1 : 0;
    return perfect_matching(adj);
}

}  // namespace

GroupAction::GroupAction(SpacePtr space, std::vector<Generator> generators, double snap_tol)
    : space_(std::move(space)), generators_(std::move(generators)), snap_tol_(snap_tol) {
    if (!space_) throw UsageError("group action needs an ambient space");
    if (!(snap_tol_ >= 0.0)) throw UsageError("snap tolerance must be >= 0");
    if (generators_.empty()) throw UsageError("group action needs at least one generator");
    int idx = 0;
    for (auto& g : generators_) {
        if (g.label.empty()) g.label = "g" + std::to_string(idx);
        ++idx;
        const bool table = !g.permutation.empty();
        if (table == static_cast<bool>(g.map))
            throw UsageError("generator '" + g.label +
                             "' needs exactly one of: permutation table, coordinate map");
        if (table) {
            if (!space_->is_matrix())
                throw UsageError("permutation generators need a matrix-backed space");
            const int n = space_->size();
            if (static_cast<int>(g.permutation.size()) != n)
                throw UsageError("generator '" + g.label + "': table size != space size");
            std::vector<char> seen(n, 0);
            for (int v : g.permutation) {
                if (v < 0 || v >= n || seen[v])
                    throw UsageError("generator '" + g.label + "': table is not a permutation");
                seen[v] = 1;
            }
        } else if (space_->is_matrix()) {
            snap_targets(*space_);  // fail fast when snapping is impossible
        }
    }
}

GroupAction GroupAction::permutation(SpacePtr space, std::vector<std::vector<int>> tables,
                                     std::vector<std::string> labels) {
    std::vector<Generator> gens;
    gens.reserve(tables.size());
    for (std::size_t i = 0; i < tables.size(); ++i) {
        Generator g;
        g.label = i < labels.size() ? labels[i] : "";
        g.permutation = std::move(tables[i]);
        gens.push_back(std::move(g));
    }
    return GroupAction(std::move(space), std::move(gens));
}

GroupAction GroupAction::formulas(SpacePtr space, std::vector<CoordMap> maps,
                                  std::vector<std::string> labels, double snap_tol) {
    std::vector<Generator> gens;
    gens.reserve(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        Generator g;
        g.label = i < labels.size() ? labels[i] : "";
        g.map = std::move(maps[i]);
        gens.push_back(std::move(g));
    }
    return GroupAction(std::move(space), std::move(gens), snap_tol);
}

Point GroupAction::apply(int g, const Point& x) const {
    if (g < 0 || g >= generator_count()) throw UsageError("generator index out of range");
    space_->require_member(x, "group action");
    const Generator& gen = generators_[g];
    if (!gen.permutation.empty()) return space_->point(gen.permutation[x.id()]);

    if (!x.has_coords())
        throw ActionError("generator '" + gen.label + "': point " + x.describe() +
                          " has no coordinates to map");
    std::vector<double> img = gen.map(x.coords());
    for (double c : img) {
        if (!std::isfinite(c))
            throw ActionError("generator '" + gen.label + "' produced a non-finite image of " +
                              x.describe());
    }

    if (!space_->is_matrix()) {
        Point out = Point::with_coords(std::move(img));
        if (!space_->admits(out))
            throw ActionError("generator '" + gen.label + "' left the ambient space at " +
                              x.describe());
        return out;
    }

    // Matrix-backed: snap to the nearest sample point (plain Euclidean
    // distance between raw coordinates).
    const FiniteSpace& fs = space_->finite();
    if (!fs.has_coords())
        throw ActionError("generator '" + gen.label + "': matrix space has no coordinates");
    Point image = Point::with_coords(img);
    int best = -1;
    double bestd = std::numeric_limits<double>::infinity();
    for (int i = 0; i < fs.size(); ++i) {
        double d = euclid(image, Point::with_coords(fs.coords()[i]));
        if (d < bestd) {
            bestd = d;
            best = i;
        }
    }
    if (best < 0 || bestd > snap_tol_)
        throw ActionError("generator '" + gen.label + "' image of " + x.describe() +
                          " is not within snap tolerance of any sample (nearest " +
                          std::to_string(bestd) + ")");
    return space_->point(best);
}

OrbitClosure orbit_closure(const Point& x, const GroupAction& a, double eps, int budget) {
    check_orbit_params(eps, budget);
    const Space& space = *a.space();
    space.require_member(x, "orbit_closure");

    std::vector<Point> collected{x};
    std::size_t frontier = 0;  // collected[frontier..] not yet expanded
    bool truncated = false;

    while (frontier < collected.size()) {
        const Point p = collected[frontier++];
        for (int g = 0; g < a.generator_count(); ++g) {
            Point img = a.apply(g, p);
            bool fresh = true;
            for (const auto& q : collected) {
                if (space.distance(img, q) <= eps) {
                    fresh = false;
                    break;
                }
            }
            if (!fresh) continue;
            if (static_cast<int>(collected.size()) >= budget) {
                truncated = true;
                break;
            }
            collected.push_back(std::move(img));
        }
        if (truncated) break;
    }

    return {x, CompactSet(a.space(), std::move(collected), eps), !truncated};
}

std::vector<OrbitClosure> e_image(const std::vector<Point>& samples, const GroupAction& a,
                                  double eps, int budget) {
    std::vector<OrbitClosure> out;
    out.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        try {
            out.push_back(orbit_closure(samples[i], a, eps, budget));
        } catch (const ActionError& err) {
            throw ActionError(std::string(err.what()) + " [sample " + std::to_string(i) + "]");
        }
    }
    return out;
}

namespace {

std::vector<JumpWitness> probe_images(const std::vector<Point>& samples,
                                      const std::vector<OrbitClosure>& images,
                                      const std::vector<int>& active, const Space& space,
                                      double delta, double jump_factor) {
    std::vector<JumpWitness> out;
    for (std::size_t a = 0; a < active.size(); ++a) {
        for (std::size_t b = a + 1; b < active.size(); ++b) {
            const int i = active[a], j = active[b];
            double d = space.distance(samples[i], samples[j]);
            if (!(d < delta)) continue;
            double dh = hausdorff_distance(images[i].points, images[j].points);
            if (dh >= jump_factor * delta) out.push_back({i, j, d, dh});
        }
    }
    return out;
}

}  // namespace

std::vector<JumpWitness> stability_probe(const std::vector<Point>& samples,
                                         const GroupAction& a, double eps, int budget,
                                         double delta, double jump_factor) {
    if (!(delta > 0.0)) throw UsageError("stability_probe: delta must be > 0");
    if (!(jump_factor > 0.0)) throw UsageError("stability_probe: jump factor must be > 0");
    std::vector<OrbitClosure> images = e_image(samples, a, eps, budget);
    std::vector<int> active(samples.size());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);
    return probe_images(samples, images, active, *a.space(), delta, jump_factor);
}

QuotientApprox::QuotientApprox(std::vector<CompactSet> classes, std::vector<double> dmat,
                               std::string u_used, std::vector<JumpWitness> diagnostics,
                               std::vector<int> survivors, std::vector<int> assignment,
                               double eps, int budget, double cluster_tol)
    : classes_(std::move(classes)), dmat_(std::move(dmat)), u_used_(std::move(u_used)),
      diagnostics_(std::move(diagnostics)), survivors_(std::move(survivors)),
      assignment_(std::move(assignment)), eps_(eps), budget_(budget),
      cluster_tol_(cluster_tol) {
    const std::size_t k = classes_.size();
    if (dmat_.size() != k * k) throw UsageError("quotient: distance matrix size mismatch");
    if (survivors_.size() != assignment_.size())
        throw UsageError("quotient: assignment size mismatch");
}

double QuotientApprox::dh(int i, int j) const {
    if (i < 0 || j < 0 || i >= class_count() || j >= class_count())
        throw UsageError("quotient: class index out of range");
    return dmat_[static_cast<std::size_t>(i) * class_count() + j];
}

QuotientApprox hausdorff_quotient(const std::vector<Point>& samples, const GroupAction& a,
                                  double eps, int budget, double cluster_tol,
                                  const std::function<bool(const Point&)>& u_spec,
                                  double probe_delta, double jump_factor) {
    check_orbit_params(eps, budget);
    if (!(cluster_tol > 0.0)) throw UsageError("hausdorff_quotient: cluster_tol must be > 0");
    if (samples.empty()) throw DegenerateQuotientError("no samples to quotient");

    std::vector<OrbitClosure> images = e_image(samples, a, eps, budget);
    std::vector<int> active;
    std::vector<JumpWitness> discarded;
    std::string u_used;

    if (u_spec) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (u_spec(samples[i])) active.push_back(static_cast<int>(i));
        }
        u_used = "u_spec (" + std::to_string(active.size()) + " of " +
                 std::to_string(samples.size()) + " samples)";
    } else {
        // Approximate the intersection over invariant opens: drop every
        // sample implicated in a jump witness, then look again.
        for (std::size_t i = 0; i < samples.size(); ++i) active.push_back(static_cast<int>(i));
        int rounds = 0;
        while (!active.empty()) {
            auto witnesses =
                probe_images(samples, images, active, *a.space(), probe_delta, jump_factor);
            if (witnesses.empty()) break;
            ++rounds;
            std::set<int> drop;
            for (const auto& w : witnesses) {
                drop.insert(w.i);
                drop.insert(w.j);
                discarded.push_back(w);
            }
            std::vector<int> next;
            next.reserve(active.size());
            for (int i : active) {
                if (!drop.count(i)) next.push_back(i);
            }
            active = std::move(next);
        }
        u_used = "witness-removal fixpoint (rounds: " + std::to_string(rounds) +
                 ", kept " + std::to_string(active.size()) + " of " +
                 std::to_string(samples.size()) + " samples)";
    }

    if (active.empty())
        throw DegenerateQuotientError(
            "every sample was discarded; no invariant open region left to quotient");

    std::vector<const CompactSet*> survivors_images;
    survivors_images.reserve(active.size());
    for (int i : active) survivors_images.push_back(&images[i].points);
    Clustering clusters = greedy_cluster(survivors_images, cluster_tol);

    std::vector<CompactSet> classes;
    classes.reserve(clusters.reps.size());
    for (const CompactSet* rep : clusters.reps) classes.push_back(*rep);

    const std::size_t k = classes.size();
    std::vector<double> dmat(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            double d = hausdorff_distance(classes[i], classes[j]);
            dmat[i * k + j] = d;
            dmat[j * k + i] = d;
        }

    return QuotientApprox(std::move(classes), std::move(dmat), std::move(u_used),
                          std::move(discarded), std::move(active),
                          std::move(clusters.assign), eps, budget, cluster_tol);
}

bool semi_stability_check(const QuotientApprox& q, const std::vector<Point>& u_samples,
                          const GroupAction& a, double eps, int budget, double tol) {
    if (!(tol > 0.0)) throw UsageError("semi_stability_check: tol must be > 0");
    if (u_samples.empty()) return q.class_count() == 0;
    std::vector<OrbitClosure> images = e_image(u_samples, a, eps, budget);
    std::vector<const CompactSet*> ptrs;
    ptrs.reserve(images.size());
    for (const auto& oc : images) ptrs.push_back(&oc.points);
    Clustering clusters = greedy_cluster(ptrs, q.cluster_tol());

    std::vector<CompactSet> u_classes;
    u_classes.reserve(clusters.reps.size());
    for (const CompactSet* rep : clusters.reps) u_classes.push_back(*rep);
    return classes_biject(u_classes, q.classes(), tol);
}

QuotientComparison compare_topological_quotient(const std::vector<Point>& samples,
                                                const GroupAction& a,
                                                const QuotientApprox& q, double tol,
                                                bool assert_hypothesis) {
    if (!(tol > 0.0)) throw UsageError("compare_topological_quotient: tol must be > 0");
    QuotientComparison out;
    std::vector<OrbitClosure> images = e_image(samples, a, q.eps(), q.budget());

    bool saturated = true;
    for (const auto& oc : images) saturated = saturated && oc.saturated;
    if (!assert_hypothesis) {
        out.caveat = "compactness hypothesis not asserted by caller; result is informational";
    } else if (!saturated) {
        out.caveat = "orbit closures hit the budget before saturating; "
                     "hypothesis could not be checked on the samples";
    }

    // Orbit equivalence, coarsened to an equivalence relation by
    // union-find over the pairwise relation.
    std::vector<int> parent(samples.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            double dh = hausdorff_distance(images[i].points, images[j].points);
            if (!(dh < tol)) continue;
            if (images[j].points.min_distance(samples[i]) > tol) continue;
            if (images[i].points.min_distance(samples[j]) > tol) continue;
            int ri = find(static_cast<int>(i)), rj = find(static_cast<int>(j));
            if (ri != rj) parent[rj] = ri;
        }
    }

    std::vector<int> roots;
    std::vector<CompactSet> orbit_classes;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (find(static_cast<int>(i)) == static_cast<int>(i)) {
            roots.push_back(static_cast<int>(i));
            orbit_classes.push_back(images[i].points);
        }
    }
    out.orbit_count = static_cast<int>(orbit_classes.size());
    out.pass = classes_biject(orbit_classes, q.classes(), tol);
    out.detail = std::to_string(out.orbit_count) + " orbit classes vs " +
                 std::to_string(q.class_count()) + " quotient classes";
    return out;
}

FiberCheckResult fiber_embedding_check(const CompactSet& x_samples,
                                       const CompactSet& y_samples,
                                       const std::vector<int>& qmap, double tol) {
    if (!(tol > 0.0)) throw UsageError("fiber_embedding_check: tol must be > 0");
    if (static_cast<int>(qmap.size()) != x_samples.size())
        throw UsageError("fiber_embedding_check: qmap must assign every x sample");
    const int ny = y_samples.size();
    if (ny == 0) throw UsageError("fiber_embedding_check: no y samples");

    std::vector<std::vector<Point>> members(ny);
    for (std::size_t i = 0; i < qmap.size(); ++i) {
        int y = qmap[i];
        if (y < 0 || y >= ny)
            throw UsageError("fiber_embedding_check: qmap value out of range");
        members[y].push_back(x_samples.member(static_cast<int>(i)));
    }
    for (int y = 0; y < ny; ++y) {
        if (members[y].empty())
            throw UsageError("fiber_embedding_check: qmap misses y sample " +
                             std::to_string(y) + " (not surjective)");
    }

    FiberCheckResult out;
    out.fibers.reserve(ny);
    for (int y = 0; y < ny; ++y) out.fibers.emplace_back(x_samples.space(), members[y]);

    const Space& yspace = *y_samples.space();
    for (int i = 0; i < ny; ++i) {
        for (int j = i + 1; j < ny; ++j) {
            double base = yspace.distance(y_samples.member(i), y_samples.member(j));
            double fiber = hausdorff_distance(out.fibers[i], out.fibers[j]);
            if (base >= tol) {
                out.separation_modulus = std::min(out.separation_modulus, fiber);
                if (fiber < tol) out.violations.push_back({i, j, base, fiber});
            } else {
                out.continuity_modulus = std::max(out.continuity_modulus, fiber);
            }
        }
    }
    out.pass = out.violations.empty();
    return out;
}

GroupAction::CoordMap circle_height_flow(double dt) {
    // Downhill flow of the height y on the unit circle: in the angle
    // coordinate, theta' = -cos(theta). Classic RK4 with fixed substeps;
    // plenty below the orbit dedup scales used here.
    return [dt](const std::vector<double>& c) {
        if (c.size() != 2) throw UsageError("circle flow expects points in the plane");
        double theta = std::atan2(c[1], c[0]);
        const int steps = 64;
        const double h = dt / steps;
        auto f = [](double t) { return -std::cos(t); };
        for (int s = 0; s < steps; ++s) {
            double k1 = f(theta);
            double k2 = f(theta + 0.5 * h * k1);
            double k3 = f(theta + 0.5 * h * k2);
            double k4 = f(theta + h * k3);
            theta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        return std::vector<double>{std::cos(theta), std::sin(theta)};
    };
}

GroupAction::CoordMap halfline_scale(double c) {
    if (!(c > 0.0)) throw UsageError("halfline scaling needs c > 0");
    // u = t/(1+t) maps [0,inf] onto [0,1]; t -> c*t reads as below in u.
    // Both endpoints are exact fixed points.
    return [c](const std::vector<double>& p) {
        if (p.size() != 1) throw UsageError("halfline scaling expects 1-d points");
        double u = p[0];
        return std::vector<double>{c * u / (1.0 + (c - 1.0) * u)};
    };
}

std::vector<int> rotation_table(int n, int k) {
    if (n <= 0) throw UsageError("rotation table needs n >= 1");
    int shift = ((k % n) + n) % n;
    std::vector<int> table(n);
    for (int i = 0; i < n; ++i) table[i] = (i + shift) % n;
    return table;
}

QuotientApprox morse_flow_quotient(int n) {
    if (n < 8) throw UsageError("morse demo needs at least 8 samples");
    auto space = Space::euclid_cutoff(2);
    std::vector<Point> samples;
    samples.reserve(n);
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * std::numbers::pi * k / n;
        samples.push_back(Point::with_coords({std::cos(theta), std::sin(theta)}));
    }
    GroupAction flow = GroupAction::formulas(
        space, {circle_height_flow(1.0), circle_height_flow(-1.0)}, {"flow+1", "flow-1"});

    // eps must sit below the time-1 hop of every noncritical sample, or
    // the orbit walk cannot escape its own dedup ball and near-critical
    // samples freeze into spurious singleton classes. The slowest
    // noncritical sample (one step off a critical point at n = 64) hops
    // ~0.167 in chord, so 0.15 frees everything except the two exact
    // critical samples; those two surface as jump witnesses (closure
    // d_H ~ 1 against any flowing neighbour, well over 6*delta = 0.708,
    // while same-arc pairs stay under ~0.3). cluster_tol 0.7 then joins
    // same-arc closures and keeps the two arcs (capped d_H 1) apart.
    const double eps = 0.15;
    const int budget = 512;
    const double cluster_tol = 0.7;
    const double delta = 0.118;
    const double jump_factor = 6.0;
    return hausdorff_quotient(samples, flow, eps, budget, cluster_tol, nullptr, delta,
                              jump_factor);
}

QuotientApprox morse_flow_demo() { return morse_flow_quotient(64); }

}  // namespace hspace
