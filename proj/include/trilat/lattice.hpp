#pragma once

#include <compare>
#include <functional>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "trilat/error.hpp"
#include "trilat/rings.hpp"

namespace trilat::lattice {

using series::Int;

/// Sublattice tag. For the triangle model (d=2) tag A marks the directed
/// sublattice {(1,0,-1),(-1,1,0),(0,-1,1)} (weight alpha) and tag B its
/// reversal {(1,-1,0),(-1,0,1),(0,1,-1)} (weight beta). Other dimensions
/// carry no partition; every step is tagged A.
enum class Tag { A, B };

/// Simplex slice of Z^{d+1}: points with non-negative coordinates summing to L.
struct DomainSpec {
    int d;
    int L;

    DomainSpec(int d_, int L_) : d(d_), L(L_) {
        require(d >= 1, ErrorCode::InvalidArgument, "dimension must be >= 1");
        require(L >= 0, ErrorCode::InvalidArgument, "side length must be >= 0");
    }

    bool contains(const std::vector<int>& coords) const {
        if (static_cast<int>(coords.size()) != d + 1) return false;
        int sum = 0;
        for (int c : coords) {
            if (c < 0) return false;
            sum += c;
        }
        return sum == L;
    }

    /// binomial(L+d, d)
    Int point_count() const;

    bool operator==(const DomainSpec&) const = default;
};

/// A lattice point: d+1 non-negative coordinates. The coordinate sum fixes the
/// simplex the point lives on.
class SimplexPoint {
public:
    explicit SimplexPoint(std::vector<int> coords) : coords_(std::move(coords)) {
        require(coords_.size() >= 2, ErrorCode::InvalidArgument, "point needs at least 2 coordinates");
        for (int c : coords_)
            require(c >= 0, ErrorCode::InvalidArgument, "point coordinates must be non-negative");
    }

    const std::vector<int>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    int sum() const {
        int s = 0;
        for (int c : coords_) s += c;
        return s;
    }

    bool operator==(const SimplexPoint&) const = default;
    auto operator<=>(const SimplexPoint&) const = default;

private:
    std::vector<int> coords_;
};

struct Step {
    std::vector<int> delta;  // exactly one +1, one -1, rest 0
    Tag tag;

    bool operator==(const Step&) const = default;
};

/// The (d+1)d moves of the model, in descending lexicographic order of the
/// step vectors so enumeration is deterministic.
class StepSet {
public:
    static StepSet standard(int d);

    /// Tags A and B exchanged; steps unchanged. Only meaningful for d=2.
    StepSet swapped_tags() const;

    int d() const { return d_; }
    const std::vector<Step>& steps() const { return steps_; }

private:
    StepSet(int d, std::vector<Step> steps) : d_(d), steps_(std::move(steps)) {}

    int d_;
    std::vector<Step> steps_;
};

/// In-domain images of `point` under each step, in step-list order. The
/// coordinate sum is preserved by every step, so membership reduces to
/// non-negativity.
std::vector<std::pair<SimplexPoint, Tag>> neighbors(const SimplexPoint& point, const StepSet& stepset);

/// Exact counts of n-step walks indexed by (length n, endpoint, number p of
/// tag-A steps).
class CountTable {
public:
    using Key = std::tuple<int, std::vector<int>, int>;  // (n, endpoint, p)

    CountTable(DomainSpec domain, SimplexPoint start, int n_max)
        : domain_(domain), start_(std::move(start)), n_max_(n_max) {}

    const DomainSpec& domain() const { return domain_; }
    const SimplexPoint& start() const { return start_; }
    int n_max() const { return n_max_; }
    const std::map<Key, Int>& entries() const { return entries_; }

    /// 0 when no walk realizes the key.
    Int at(int n, const std::vector<int>& end, int p) const;
    /// Sum over endpoints and p.
    Int total(int n) const;
    /// Sum over endpoints at fixed p.
    Int total_by_tag(int n, int p) const;
    /// Sum over endpoints whose coordinate `coord_index` is 0, all p.
    Int side_total(int n, int coord_index) const;
    /// Same restricted to fixed p.
    Int side_total_by_tag(int n, int coord_index, int p) const;

    void add(int n, const std::vector<int>& end, int p, const Int& c);

private:
    DomainSpec domain_;
    SimplexPoint start_;
    int n_max_;
    std::map<Key, Int> entries_;
};

/// Dynamic program over (position, tag-A count) layers; entry (n,e,p) is the
/// exact number of n-step walks start->e with p tag-A steps.
CountTable count_walks(const DomainSpec& domain, const SimplexPoint& start, int n_max);
CountTable count_walks(const DomainSpec& domain, const SimplexPoint& start, int n_max,
                       const StepSet& stepset);

enum class SublatticeFilter { AOnly, BOnly, Both };

/// A walk as a start point plus indices into a StepSet. Every prefix stays in
/// the domain; validated on construction by replay.
class LatticeWalk {
public:
    LatticeWalk(SimplexPoint start, std::vector<int> step_indices, const StepSet& stepset);

    const SimplexPoint& start() const { return start_; }
    const std::vector<int>& step_indices() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }

    /// All length()+1 visited points, start first.
    std::vector<SimplexPoint> positions(const StepSet& stepset) const;
    /// Number of tag-A steps taken.
    int tag_a_count(const StepSet& stepset) const;

    bool operator==(const LatticeWalk&) const = default;
    auto operator<=>(const LatticeWalk&) const = default;

private:
    SimplexPoint start_;
    std::vector<int> steps_;
};

/// Depth-first generation of every n-step walk, visitor-style (nothing is
/// materialized). Filter restricts the usable steps by tag.
void for_each_walk(const DomainSpec& domain, const SimplexPoint& start, int n,
                   SublatticeFilter filter, const std::function<void(const LatticeWalk&)>& visit);

/// Exhaustive duplicate-free walk list. Refuses (resource error) when the DP
/// predicts more than guard_limit walks.
std::vector<LatticeWalk> enumerate_walks(const DomainSpec& domain, const SimplexPoint& start,
                                         int n, SublatticeFilter filter,
                                         long long guard_limit = 10'000'000LL);

/// Triangle walks only: the k-th position (n_x,n_y,n_z) maps to the pair
/// (n_x, n_x+n_y). Both sequences move by at most 1 per step, stay in [0,L]
/// and never cross.
std::pair<std::vector<int>, std::vector<int>> map_to_strip_pair(const LatticeWalk& walk);

} // namespace trilat::lattice
