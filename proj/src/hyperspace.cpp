#include "hspace/hyperspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace hspace {

namespace {

std::string mask_to_string(std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (mask & (1u << i)) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
    }
    out += "}";
    return out;
}

std::string pair_to_string(std::uint32_t mask, int x) {
    return "(Z=" + mask_to_string(mask) + ", x=" + std::to_string(x) + ")";
}

void check_family(const HSpaceEnum& e, const UniversalFamily& u) {
    for (const auto& p : u.pairs) {
        if (p.set_mask >= e.count() || p.point < 0 || p.point >= e.points() ||
            !(p.set_mask & (1u << p.point)))
            throw UsageError("universal family was not built over this enumeration");
    }
}

}  // namespace

HSpaceEnum::HSpaceEnum(FiniteSpace fs) : n_(fs.size()) {
    if (n_ > kMaxPoints)
        throw CapacityError("hyperspace enumeration is capped at n = " +
                            std::to_string(kMaxPoints) + " ambient points (got " +
                            std::to_string(n_) + ")");
    ambient_ = Space::matrix(std::move(fs));
    const std::uint32_t count = 1u << n_;
    elements_.reserve(count);
    std::vector<int> ids;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        ids.clear();
        for (int i = 0; i < n_; ++i) {
            if (mask & (1u << i)) ids.push_back(i);
        }
        elements_.push_back(CompactSet::from_ids(ambient_, ids));
    }

    if (n_ <= kDensePoints) {
        dmat_.assign(static_cast<std::size_t>(count) * count, 0.0);
        for (std::uint32_t i = 0; i < count; ++i) {
            for (std::uint32_t j = 0; j < i; ++j) {
                double d = hausdorff_distance(elements_[i], elements_[j]);
                dmat_[static_cast<std::size_t>(i) * count + j] = d;
                dmat_[static_cast<std::size_t>(j) * count + i] = d;
            }
        }
    }
}

double HSpaceEnum::dh(std::uint32_t a, std::uint32_t b) const {
    if (a >= count() || b >= count()) throw UsageError("subset mask out of range");
    if (dense()) return dmat_[static_cast<std::size_t>(a) * count() + b];
    return hausdorff_distance(elements_[a], elements_[b]);
}

FiniteSpace HSpaceEnum::as_finite_space() const {
    if (!dense())
        throw CapacityError("dense hyperspace matrix is only kept up to n = " +
                            std::to_string(kDensePoints));
    const std::uint32_t count_ = count();
    std::vector<double> tri;
    tri.reserve(static_cast<std::size_t>(count_) * (count_ - 1) / 2);
    for (std::uint32_t i = 1; i < count_; ++i)
        for (std::uint32_t j = 0; j < i; ++j)
            tri.push_back(dmat_[static_cast<std::size_t>(i) * count_ + j]);
    return FiniteSpace(static_cast<int>(count_), std::move(tri));
}

HSpaceEnum enumerate_h(FiniteSpace fs) { return HSpaceEnum(std::move(fs)); }

UniversalFamily UniversalFamily::over(const HSpaceEnum& e) {
    UniversalFamily u;
    for (std::uint32_t mask = 0; mask < e.count(); ++mask) {
        for (int i = 0; i < e.points(); ++i) {
            if (mask & (1u << i)) u.pairs.push_back({mask, i});
        }
    }
    return u;
}

SequentialFamily::SequentialFamily(std::vector<CompactSet> terms, CompactSet limit)
    : terms_(std::move(terms)), limit_(std::move(limit)) {
    if (terms_.empty()) throw UsageError("sequential family needs at least one term");
    for (const auto& t : terms_) require_same_space(t, limit_, "sequential family");
}

const CompactSet& SequentialFamily::term(int n) const {
    if (n < 1 || n > length()) throw UsageError("family index runs from 1 to N");
    return terms_[n - 1];
}

Report verify_universal_closed(const HSpaceEnum& e, const UniversalFamily& u) {
    check_family(e, u);
    Report report;
    const FiniteSpace& fs = e.ambient()->finite();
    for (std::uint32_t mask = 0; mask < e.count(); ++mask) {
        for (int x = 0; x < e.points(); ++x) {
            if (mask & (1u << x)) continue;  // member pairs are the family itself

            // Witness radius: half the gap from x to Z (1 when Z is empty).
            double gap = 1.0;
            if (mask != 0) {
                gap = 2.0;
                for (int z = 0; z < e.points(); ++z) {
                    if (!(mask & (1u << z))) continue;
                    gap = std::min(gap, fs.dist(x, z));
                }
            }
            double eps = gap / 2.0;
            if (!(eps > 0.0)) {
                report.add_fail("closed-witness-positive", pair_to_string(mask, x), -eps);
                continue;
            }

            // The product ball of radius eps/2 around (Z, x) must miss
            // every member pair.
            for (const auto& p : u.pairs) {
                double rho = std::max(e.dh(mask, p.set_mask), fs.dist(x, p.point));
                if (rho < eps / 2.0) {
                    report.add_fail("closed-ball-misses-family",
                                    pair_to_string(mask, x) + " vs " +
                                        pair_to_string(p.set_mask, p.point),
                                    eps / 2.0 - rho);
                }
            }
        }
    }
    return report;
}

Report verify_projection_open(const HSpaceEnum& e, const UniversalFamily& u,
                              const std::vector<double>& eps_list) {
    check_family(e, u);
    for (double eps : eps_list) {
        if (!(eps > 0.0) || eps > 1.0)
            throw UsageError("verify_projection_open: eps values must lie in (0,1]");
    }

    Report report;
    const FiniteSpace& fs = e.ambient()->finite();
    std::vector<char> lhs(e.count()), rhs(e.count());
    for (const auto& base : u.pairs) {
        for (double eps : eps_list) {
            // Left side: sets reachable as first coordinates of family
            // pairs inside the product ball around (Z, x).
            std::fill(lhs.begin(), lhs.end(), 0);
            for (const auto& p : u.pairs) {
                if (lhs[p.set_mask]) continue;
                double rho =
                    std::max(e.dh(base.set_mask, p.set_mask), fs.dist(base.point, p.point));
                if (rho < eps) lhs[p.set_mask] = 1;
            }
            // Right side: the plain Hausdorff ball around Z.
            for (std::uint32_t m = 0; m < e.count(); ++m)
                rhs[m] = e.dh(base.set_mask, m) < eps ? 1 : 0;

            for (std::uint32_t m = 0; m < e.count(); ++m) {
                if (lhs[m] == rhs[m]) continue;
                report.add_fail("projection-ball-identity",
                                pair_to_string(base.set_mask, base.point) + " eps=" +
                                    std::to_string(eps) + " set=" + mask_to_string(m) +
                                    (rhs[m] ? " missing from projection" : " extra in projection"),
                                std::abs(e.dh(base.set_mask, m) - eps));
            }
        }
    }
    return report;
}

ProperResult verify_projection_proper(const SequentialFamily& f,
                                      const std::vector<Point>& picks, double tol) {
    if (!(tol > 0.0)) throw UsageError("verify_projection_proper: tol must be > 0");
    if (static_cast<int>(picks.size()) != f.length())
        throw UsageError("verify_projection_proper: one pick per family term required");
    for (int n = 1; n <= f.length(); ++n) {
        if (f.term(n).is_empty())
            throw UsageError("verify_projection_proper: all terms must be nonempty");
        if (!f.term(n).contains(picks[n - 1]))
            throw UsageError("verify_projection_proper: pick " + std::to_string(n) +
                             " is not a member of its term");
    }

    ProperResult result;
    const CompactSet& limit = f.limit();
    if (limit.is_empty()) {
        result.status = ProperResult::Status::HypothesisFailed;
        result.detail = "limit set is empty";
        result.residual = 1.0;
        return result;
    }

    // Hypothesis: Hausdorff convergence on the available tail. Take the
    // longest suffix staying within tol.
    int tail_begin = f.length() + 1;
    for (int n = f.length(); n >= 1; --n) {
        if (hausdorff_distance(f.term(n), limit) <= tol)
            tail_begin = n;
        else
            break;
    }
    if (tail_begin > f.length()) {
        result.status = ProperResult::Status::HypothesisFailed;
        result.residual = hausdorff_distance(f.term(f.length()), limit);
        result.detail = "terms do not approach the limit within tol";
        return result;
    }

    const int tail = f.length() - tail_begin + 1;
    const Space& space = *limit.space();
    double best_needed = 2.0;
    for (const auto& cand : limit.members()) {
        std::vector<double> dists;
        dists.reserve(tail);
        for (int n = tail_begin; n <= f.length(); ++n)
            dists.push_back(space.distance(picks[n - 1], cand));
        std::sort(dists.begin(), dists.end());
        const int need = (tail + 1) / 2;  // at least half the tail
        double reach = dists[need - 1];
        if (reach <= tol) {
            result.status = ProperResult::Status::Ok;
            result.accumulation = cand;
            result.residual = reach;
            result.detail = "tail of " + std::to_string(tail) + " picks accumulates at " +
                            cand.describe();
            return result;
        }
        best_needed = std::min(best_needed, reach);
    }
    result.status = ProperResult::Status::ConclusionFailed;
    result.residual = best_needed;
    result.detail = "no limit member collects half the tail within tol";
    return result;
}

ContinuityResult verify_family_continuity(const SequentialFamily& f, double eps) {
    if (!(eps > 0.0) || eps > 1.0)
        throw UsageError("verify_family_continuity: eps must lie in (0,1]");

    ContinuityResult result;
    result.table.reserve(f.length());
    const Space& space = *f.space();
    const CompactSet& limit = f.limit();

    for (int n = 1; n <= f.length(); ++n) {
        const CompactSet& term = f.term(n);

        // Covering conditions spelled out pointwise: every point of one
        // set lies in some strict eps-ball around the other. Evaluated
        // by direct scan, independently of d_H.
        auto covered = [&](const CompactSet& from, const CompactSet& to) {
            for (const auto& p : from.members()) {
                bool inside = false;
                for (const auto& q : to.members()) {
                    if (space.distance(p, q) < eps) {
                        inside = true;
                        break;
                    }
                }
                if (!inside) return false;
            }
            return true;
        };
        ContinuityResult::Row row;
        row.n = n;
        row.cover_into = covered(term, limit);
        row.cover_onto = covered(limit, term);
        row.dh = hausdorff_distance(term, limit);
        if ((row.cover_into && row.cover_onto) != (row.dh < eps))
            result.equivalence_ok = false;
        result.table.push_back(row);
    }

    int last_bad = 0;
    for (const auto& row : result.table) {
        if (!(row.cover_into && row.cover_onto)) last_bad = row.n;
    }
    if (last_bad < f.length()) {
        result.converged = true;
        result.first_index = last_bad + 1;
        result.residual = 0.0;
    } else {
        result.converged = false;
        result.first_index = -1;
        result.residual = result.table.back().dh;
    }
    return result;
}

Report verify_compactness_net(const HSpaceEnum& e, double eps, const CompactSet& net) {
    if (!(eps > 0.0)) throw UsageError("verify_compactness_net: eps must be > 0");
    if (net.space().get() != e.ambient().get())
        throw UsageError("verify_compactness_net: net must live in the enumerated space");
    if (net.is_empty()) throw UsageError("verify_compactness_net: net is empty");

    Report report;
    const FiniteSpace& fs = e.ambient()->finite();
    for (std::uint32_t mask = 1; mask < e.count(); ++mask) {
        // Witness subset: nearest net point to each member (first wins on
        // ties, so the subset is deterministic).
        std::uint32_t witness = 0;
        for (int z = 0; z < e.points(); ++z) {
            if (!(mask & (1u << z))) continue;
            int best = -1;
            double bestd = 2.0;
            for (const auto& s : net.members()) {
                double d = fs.dist(z, s.id());
                if (d < bestd) {
                    bestd = d;
                    best = s.id();
                }
            }
            witness |= 1u << best;
        }
        double d = e.dh(mask, witness);
        if (!(d <= eps)) {
            report.add_fail("net-covers-subset",
                            mask_to_string(mask) + " nearest net subset " +
                                mask_to_string(witness),
                            d - eps);
        }
    }
    return report;
}

}  // namespace hspace
