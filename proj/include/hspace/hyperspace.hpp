#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hspace/hausdorff.hpp"
#include "hspace/report.hpp"
#include "hspace/space.hpp"

namespace hspace {

/// Exhaustive model of the hyperspace of a finite ambient space: all 2^n
/// subsets (including the empty set, at mask 0) with their pairwise
/// Hausdorff distances. Enumeration is guarded at n <= 16; the dense
/// distance matrix is only materialised up to n <= 11 (beyond that it
/// would dwarf memory), dh() computes on demand either way.
class HSpaceEnum {
  public:
    static constexpr int kMaxPoints = 16;
    static constexpr int kDensePoints = 11;

    explicit HSpaceEnum(FiniteSpace fs);

    const SpacePtr& ambient() const { return ambient_; }
    int points() const { return n_; }
    std::uint32_t count() const { return static_cast<std::uint32_t>(elements_.size()); }

    /// Subset with member i present iff bit i of mask is set.
    const CompactSet& element(std::uint32_t mask) const { return elements_.at(mask); }

    double dh(std::uint32_t a, std::uint32_t b) const;
    bool dense() const { return !dmat_.empty(); }

    /// The hyperspace itself as a finite metric space (n <= kDensePoints).
    FiniteSpace as_finite_space() const;

  private:
    SpacePtr ambient_;
    int n_;
    std::vector<CompactSet> elements_;
    std::vector<double> dmat_;  // full square, row-major, when dense
};

HSpaceEnum enumerate_h(FiniteSpace fs);

/// The pairs (Z, x) with x a member of Z, over an enumerated hyperspace.
struct UniversalFamily {
    struct Pair {
        std::uint32_t set_mask;
        int point;
    };
    std::vector<Pair> pairs;

    static UniversalFamily over(const HSpaceEnum& e);
};

/// A sequence Z_1, ..., Z_N of sets together with a candidate limit.
/// Terms are indexed from 1 to match the usual subscripts.
class SequentialFamily {
  public:
    SequentialFamily(std::vector<CompactSet> terms, CompactSet limit);

    int length() const { return static_cast<int>(terms_.size()); }
    const CompactSet& term(int n) const;
    const CompactSet& limit() const { return limit_; }
    const SpacePtr& space() const { return limit_.space(); }

  private:
    std::vector<CompactSet> terms_;
    CompactSet limit_;
};

/// The pairs (Z, x) with x in Z form a closed subset of the product.
/// Witness construction: around any pair (Z', x') with x' NOT in Z', take
/// eps = half the distance from x' to Z' (1 when Z' is empty); the open
/// product ball of radius eps/2 must contain no member pair. Violations
/// are reported; empty report means the family is closed.
Report verify_universal_closed(const HSpaceEnum& e, const UniversalFamily& u);

/// For each member pair (Z, x) and each radius eps from eps_list, check
/// the exact set identity
///   { Z' : product dist((Z,x),(Z',x')) < eps for some x' in Z' }
///     == { Z' : dh(Z, Z') < eps }.
/// This is the statement that projecting the family onto its first factor
/// sends basic open balls onto open balls.
Report verify_projection_open(const HSpaceEnum& e, const UniversalFamily& u,
                              const std::vector<double>& eps_list);

struct ProperResult {
    enum class Status { Ok, HypothesisFailed, ConclusionFailed };
    Status status = Status::Ok;
    std::string detail;
    std::optional<Point> accumulation;  // the limit member the picks crowd
    double residual = 0.0;

    bool ok() const { return status == Status::Ok; }
};

/// Given Z_n -> Z_inf and one marked point x_n in each Z_n, look for a
/// member of Z_inf that at least half of the tail picks approach within
/// tol. Hypothesis (checked first): the terms really converge, i.e.
/// dh(Z_n, Z_inf) <= tol for the tail. A hypothesis failure is reported
/// as such, distinct from the marked points genuinely failing to
/// accumulate.
ProperResult verify_projection_proper(const SequentialFamily& f,
                                      const std::vector<Point>& picks, double tol);

struct ContinuityResult {
    struct Row {
        int n;
        double dh;        // Hausdorff distance term <-> limit
        bool cover_into;  // every point of Z_n within eps of Z_inf
        bool cover_onto;  // every point of Z_inf within eps of Z_n
    };

    bool converged = false;
    int first_index = -1;     // least n with both covers (and all later n too)
    double residual = 0.0;    // max dh over the tail when not converged
    bool equivalence_ok = true;  // covers(n) <=> dh < eps, at every n
    std::vector<Row> table;
};

/// Two-sided eps-covering along a sequence: find the least N such that
/// both covering conditions hold for every n >= N, and check at every
/// index that the pair of covering conditions holds iff dh(Z_n, Z_inf)
/// < eps (they are the same statement, point by point).
ContinuityResult verify_family_continuity(const SequentialFamily& f, double eps);

/// Every nonempty subset of the ambient sample must admit a subset of the
/// net within Hausdorff distance eps. Exhaustive over the enumeration;
/// the witness subset is the set of nearest net points. net must live in
/// the enumeration's ambient space.
Report verify_compactness_net(const HSpaceEnum& e, double eps, const CompactSet& net);

}  // namespace hspace
