#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hspace/hausdorff.hpp"
#include "hspace/space.hpp"

namespace hspace {

/// Finitely many self-maps of an ambient space, standing in for a group
/// of homeomorphisms. Matrix-backed spaces take permutation tables or
/// coordinate formulas snapped to the sample within snap_tol; coordinate
/// spaces keep exact images (dedup happens later, in orbit closures).
class GroupAction {
  public:
    using CoordMap = std::function<std::vector<double>(const std::vector<double>&)>;

    struct Generator {
        std::string label;
        std::vector<int> permutation;  // empty unless table-backed
        CoordMap map;                  // null unless formula-backed
    };

    GroupAction(SpacePtr space, std::vector<Generator> generators, double snap_tol = 1e-9);

    static GroupAction permutation(SpacePtr space, std::vector<std::vector<int>> tables,
                                   std::vector<std::string> labels = {});
    static GroupAction formulas(SpacePtr space, std::vector<CoordMap> maps,
                                std::vector<std::string> labels = {},
                                double snap_tol = 1e-9);

    const SpacePtr& space() const { return space_; }
    int generator_count() const { return static_cast<int>(generators_.size()); }
    const std::string& label(int g) const { return generators_.at(g).label; }
    double snap_tol() const { return snap_tol_; }

    /// Image of x under generator g. ActionError when the image is not
    /// finite or (matrix space) not within snap_tol of any sample point.
    Point apply(int g, const Point& x) const;

  private:
    SpacePtr space_;
    std::vector<Generator> generators_;
    double snap_tol_;
};

/// Finite stand-in for the closure of a group orbit: points reachable
/// from base by generator words, thinned to an eps-separated sample.
/// saturated means the walk stabilized before the point budget ran out.
struct OrbitClosure {
    Point base;
    CompactSet points;
    bool saturated = false;
};

/// Breadth-first orbit walk: apply every generator to every frontier
/// point, keep images farther than eps from everything collected so far,
/// stop when a sweep adds nothing (saturated) or the budget is hit.
OrbitClosure orbit_closure(const Point& x, const GroupAction& a, double eps, int budget);

/// orbit_closure for each sample in order.
std::vector<OrbitClosure> e_image(const std::vector<Point>& samples, const GroupAction& a,
                                  double eps, int budget);

/// A pair of nearby samples whose orbit closures are far apart: empirical
/// evidence that x -> closure(orbit x) jumps between them.
struct JumpWitness {
    int i = -1, j = -1;       // sample indices
    double point_dist = 0.0;  // d(x_i, x_j), < delta
    double image_dist = 0.0;  // d_H of the orbit closures, >= factor*delta
};

/// All sample pairs with d(x, x') < delta whose orbit closures sit at
/// Hausdorff distance >= jump_factor * delta. Empty output is evidence
/// (not proof) of stability on the sampled region.
std::vector<JumpWitness> stability_probe(const std::vector<Point>& samples,
                                         const GroupAction& a, double eps, int budget,
                                         double delta, double jump_factor = 10.0);

class QuotientApprox {
  public:
    QuotientApprox(std::vector<CompactSet> classes, std::vector<double> dmat,
                   std::string u_used, std::vector<JumpWitness> diagnostics,
                   std::vector<int> survivors, std::vector<int> assignment,
                   double eps, int budget, double cluster_tol);

    const std::vector<CompactSet>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    double dh(int i, int j) const;
    const std::vector<double>& dmat() const { return dmat_; }
    const std::string& u_used() const { return u_used_; }
    const std::vector<JumpWitness>& diagnostics() const { return diagnostics_; }

    /// Indices of samples that survived U-selection, in input order.
    const std::vector<int>& survivors() const { return survivors_; }
    /// Class index per survivor (parallel to survivors()).
    const std::vector<int>& assignment() const { return assignment_; }

    double eps() const { return eps_; }
    int budget() const { return budget_; }
    double cluster_tol() const { return cluster_tol_; }

  private:
    std::vector<CompactSet> classes_;
    std::vector<double> dmat_;
    std::string u_used_;
    std::vector<JumpWitness> diagnostics_;
    std::vector<int> survivors_;
    std::vector<int> assignment_;
    double eps_;
    int budget_;
    double cluster_tol_;
};

/// Approximate Hausdorff quotient of the sampled action. With u_spec,
/// samples failing the predicate are dropped up front. Without it, the
/// probe-and-remove loop discards every sample implicated in a jump
/// witness and repeats until no witnesses remain, approximating the
/// intersection over shrinking invariant opens. Surviving orbit closures
/// are then clustered greedily in input order: a closure joins the first
/// class whose representative is within cluster_tol in d_H, else founds a
/// new class. DegenerateQuotientError when nothing survives.
QuotientApprox hausdorff_quotient(const std::vector<Point>& samples, const GroupAction& a,
                                  double eps, int budget, double cluster_tol,
                                  const std::function<bool(const Point&)>& u_spec = nullptr,
                                  double probe_delta = 0.1, double jump_factor = 10.0);

/// Does U reproduce the quotient? Clusters the orbit closures of
/// u_samples at q's cluster tolerance and requires a perfect one-to-one
/// matching between the resulting classes and q.classes() with d_H <= tol.
bool semi_stability_check(const QuotientApprox& q, const std::vector<Point>& u_samples,
                          const GroupAction& a, double eps, int budget, double tol);

struct QuotientComparison {
    bool pass = false;
    int orbit_count = 0;
    std::string caveat;  // set when the compactness hypothesis was not asserted
    std::string detail;
};

/// Compare q against the plain topological quotient of the samples:
/// group samples by orbit equivalence (closures within tol in d_H and
/// each base inside the other's closure within tol), then match orbit
/// classes to q.classes() one-to-one within tol. Valid when group and
/// space are compact-like; assert_hypothesis=false records a caveat
/// instead of treating mismatch as an error.
QuotientComparison compare_topological_quotient(const std::vector<Point>& samples,
                                                const GroupAction& a,
                                                const QuotientApprox& q, double tol,
                                                bool assert_hypothesis = true);

struct FiberViolation {
    int yi = -1, yj = -1;
    double base_dist = 0.0;
    double fiber_dist = 0.0;
};

struct FiberCheckResult {
    bool pass = false;
    std::vector<CompactSet> fibers;  // one per y sample, in order
    /// min d_H between fibers over y-pairs at base distance >= tol
    double separation_modulus = 1.0;
    /// max d_H between fibers over y-pairs at base distance < tol
    double continuity_modulus = 0.0;
    std::vector<FiberViolation> violations;
};

/// Treat qmap as a quotient map from x samples onto y samples and check
/// that y -> fiber(y) embeds: whenever two base points are >= tol apart,
/// their fibers must be >= tol apart in d_H. qmap[i] is the y index of
/// x sample i; it must be total and surjective (UsageError otherwise).
/// Both moduli are reported so the caller can judge continuity as well.
FiberCheckResult fiber_embedding_check(const CompactSet& x_samples,
                                       const CompactSet& y_samples,
                                       const std::vector<int>& qmap, double tol);

/// Built-in gradient-flow demo: height function on a 64-point circle,
/// generators the time-+1 and time--1 flow maps. Two critical points, so
/// the probe removes them and the quotient has exactly two classes, the
/// closures of the two open arcs.
QuotientApprox morse_flow_demo();

/// Same construction with a chosen sample count, for refinement studies.
QuotientApprox morse_flow_quotient(int n);

/// Time-dt map of the downhill flow of the height function y on the unit
/// circle, as a coordinate formula (points snap back to the circle).
GroupAction::CoordMap circle_height_flow(double dt);

/// Scaling u -> c*u/(1 + (c-1)*u) of the bounded model u = t/(1+t) of the
/// ray [0, infinity]; fixes both endpoints, multiplies t by c.
GroupAction::CoordMap halfline_scale(double c);

/// Rotation by k steps of an n-point cyclic sample, as a permutation.
std::vector<int> rotation_table(int n, int k);

}  // namespace hspace
