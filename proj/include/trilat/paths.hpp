#pragma once

#include <string>
#include <vector>

#include "trilat/lattice.hpp"

namespace trilat::paths {

using lattice::LatticeWalk;
using lattice::SimplexPoint;
using series::Int;

/// binomial(n, k) as an exact integer.
Int binomial(int n, int k);

enum class Colouring { Uncoloured, TwoColoured };

/// Height window [0, H] for Motzkin paths; optionally horizontal steps at the
/// top height are disallowed.
struct MotzkinStripSpec {
    int H;
    bool forbid_top_horizontal = false;
    Colouring colours = Colouring::Uncoloured;

    MotzkinStripSpec(int H_, bool forbid_top_horizontal_ = false,
                     Colouring colours_ = Colouring::Uncoloured)
        : H(H_), forbid_top_horizontal(forbid_top_horizontal_), colours(colours_) {
        require(H >= 0, ErrorCode::InvalidArgument, "strip height must be >= 0");
    }
};

enum class MotzkinKind { Up, Down, Horizontal };

struct MotzkinStep {
    MotzkinKind kind;
    int colour = -1;  // -1 uncoloured, 0 colour A, 1 colour B

    bool operator==(const MotzkinStep&) const = default;
    auto operator<=>(const MotzkinStep&) const = default;
};

/// Path over {Up, Down, Horizontal} confined to the strip; starts and ends at
/// height 0 (the convention under which the strip counts match the
/// continued-fraction convergents).
struct MotzkinPath {
    std::vector<MotzkinStep> steps;

    /// "U", "D", "H" with colour letter appended when coloured, e.g. "UA".
    std::vector<std::string> step_strings() const;
};

/// Count of n-step height-0-to-height-0 paths in the strip, ignoring colours.
Int motzkin_strip_count_plain(const MotzkinStripSpec& spec, int n);

/// Two-coloured counts split by the number p of A-coloured steps: every one of
/// the n steps takes a colour independently, so entry p is
/// binomial(n,p) * plain count. Returned vector has n+1 entries.
std::vector<Int> motzkin_strip_count_by_colour(const MotzkinStripSpec& spec, int n);

/// Exhaustive uncoloured path list (oracle for the DP counts).
std::vector<MotzkinPath> enumerate_motzkin_strip(const MotzkinStripSpec& spec, int n);

/// Word over steps (1,1), (1,-1), (1,0), encoded +1 / -1 / 0. Prefix counts
/// are weakly decreasing across the three step kinds, and the prefix
/// difference #(1,1) - #(1,0) never exceeds the excess bound.
class BallotPath {
public:
    BallotPath(std::vector<int> steps, int excess_bound);

    const std::vector<int>& steps() const { return steps_; }
    int excess_bound() const { return excess_bound_; }
    int length() const { return static_cast<int>(steps_.size()); }
    /// Largest prefix value of #(1,1) - #(1,0).
    int max_excess() const;

    /// "+", "-", "0" per step.
    std::vector<std::string> step_strings() const;

    bool operator==(const BallotPath&) const = default;
    auto operator<=>(const BallotPath&) const = default;

private:
    std::vector<int> steps_;
    int excess_bound_;
};

/// Number of n-step three-candidate Ballot paths with excess at most L,
/// by DP over the prefix-difference pair (#(1,1)-#(1,-1), #(1,-1)-#(1,0)).
Int ballot3_count(int L, int n);

/// Exhaustive Ballot path list (oracle for ballot3_count and the bijection).
std::vector<BallotPath> enumerate_ballot3(int L, int n);

/// Corner walks on the tag-A sublattice map stepwise to Ballot paths:
/// (-1,1,0) -> (1,1), (0,-1,1) -> (1,-1), (1,0,-1) -> (1,0). The walk must
/// start at (L,0,0) and use tag-A steps only; the image has excess bound L.
BallotPath walk_to_ballot(const LatticeWalk& walk);

/// Inverse of walk_to_ballot: rebuilds the corner walk on the side-L triangle.
LatticeWalk ballot_to_walk(const BallotPath& path, int L);

} // namespace trilat::paths
