#include "trilat/paths.hpp"

#include <functional>

namespace trilat::paths {

using lattice::StepSet;
using lattice::Tag;

Int binomial(int n, int k) {
    require(n >= 0 && k >= 0, ErrorCode::InvalidArgument, "binomial arguments must be >= 0");
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::vector<std::string> MotzkinPath::step_strings() const {
    std::vector<std::string> out;
    out.reserve(steps.size());
    for (const MotzkinStep& s : steps) {
        std::string str;
        switch (s.kind) {
            case MotzkinKind::Up: str = "U"; break;
            case MotzkinKind::Down: str = "D"; break;
            case MotzkinKind::Horizontal: str = "H"; break;
        }
        if (s.colour == 0) str += "A";
        if (s.colour == 1) str += "B";
        out.push_back(std::move(str));
    }
    return out;
}

Int motzkin_strip_count_plain(const MotzkinStripSpec& spec, int n) {
    require(n >= 0, ErrorCode::InvalidArgument, "path length must be >= 0");
    // counts[h] = paths of the current length from height 0 to height h
    std::vector<Int> counts(static_cast<size_t>(spec.H) + 1);
    counts[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<Int> next(counts.size());
        for (int h = 0; h <= spec.H; ++h) {
            if (counts[static_cast<size_t>(h)] == 0) continue;
            const Int& c = counts[static_cast<size_t>(h)];
            if (h + 1 <= spec.H) next[static_cast<size_t>(h + 1)] += c;
            if (h - 1 >= 0) next[static_cast<size_t>(h - 1)] += c;
            if (!(spec.forbid_top_horizontal && h == spec.H)) next[static_cast<size_t>(h)] += c;
        }
        counts = std::move(next);
    }
    return counts[0];
}

std::vector<Int> motzkin_strip_count_by_colour(const MotzkinStripSpec& spec, int n) {
    Int plain = motzkin_strip_count_plain(spec, n);
    std::vector<Int> out(static_cast<size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) out[static_cast<size_t>(p)] = binomial(n, p) * plain;
    return out;
}

std::vector<MotzkinPath> enumerate_motzkin_strip(const MotzkinStripSpec& spec, int n) {
    require(n >= 0, ErrorCode::InvalidArgument, "path length must be >= 0");
    std::vector<MotzkinPath> out;
    std::vector<MotzkinStep> cur;
    std::function<void(int, int)> go = [&](int depth, int h) {
        if (depth == n) {
            if (h == 0) out.push_back(MotzkinPath{cur});
            return;
        }
        if (h + 1 <= spec.H) {
            cur.push_back({MotzkinKind::Up, -1});
            go(depth + 1, h + 1);
            cur.pop_back();
        }
        if (h - 1 >= 0) {
            cur.push_back({MotzkinKind::Down, -1});
            go(depth + 1, h - 1);
            cur.pop_back();
        }
        if (!(spec.forbid_top_horizontal && h == spec.H)) {
            cur.push_back({MotzkinKind::Horizontal, -1});
            go(depth + 1, h);
            cur.pop_back();
        }
    };
    go(0, 0);
    return out;
}

BallotPath::BallotPath(std::vector<int> steps, int excess_bound)
    : steps_(std::move(steps)), excess_bound_(excess_bound) {
    require(excess_bound_ >= 0, ErrorCode::InvalidArgument, "excess bound must be >= 0");
    int a = 0, b = 0, c = 0;
    for (int s : steps_) {
        require(s == 1 || s == -1 || s == 0, ErrorCode::InvalidArgument, "ballot step must be +1, -1 or 0");
        if (s == 1) ++a;
        else if (s == -1) ++b;
        else ++c;
        require(a >= b && b >= c, ErrorCode::Precondition,
                "ballot prefix counts must be weakly decreasing");
        require(a - c <= excess_bound_, ErrorCode::Precondition, "ballot prefix exceeds the excess bound");
    }
}

int BallotPath::max_excess() const {
    int a = 0, c = 0, best = 0;
    for (int s : steps_) {
        if (s == 1) ++a;
        if (s == 0) ++c;
        best = std::max(best, a - c);
    }
    return best;
}

std::vector<std::string> BallotPath::step_strings() const {
    std::vector<std::string> out;
    out.reserve(steps_.size());
    for (int s : steps_) out.emplace_back(s == 1 ? "+" : (s == -1 ? "-" : "0"));
    return out;
}

Int ballot3_count(int L, int n) {
    require(L >= 0 && n >= 0, ErrorCode::InvalidArgument, "ballot parameters must be >= 0");
    // counts keyed by (i, j) = (a-b, b-c); constraints i,j >= 0 and i+j <= L
    std::map<std::pair<int, int>, Int> layer;
    layer[{0, 0}] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<std::pair<int, int>, Int> next;
        for (const auto& [ij, c] : layer) {
            auto [i, j] = ij;
            if (i + j + 1 <= L) next[{i + 1, j}] += c;          // (1,1)
            if (i - 1 >= 0) next[{i - 1, j + 1}] += c;          // (1,-1)
            if (j - 1 >= 0) next[{i, j - 1}] += c;              // (1,0)
        }
        layer = std::move(next);
    }
    Int total = 0;
    for (const auto& [ij, c] : layer) total += c;
    return total;
}

std::vector<BallotPath> enumerate_ballot3(int L, int n) {
    require(L >= 0 && n >= 0, ErrorCode::InvalidArgument, "ballot parameters must be >= 0");
    std::vector<BallotPath> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> go = [&](int depth, int i, int j) {
        if (depth == n) {
            out.emplace_back(cur, L);
            return;
        }
        if (i + j + 1 <= L) {
            cur.push_back(1);
            go(depth + 1, i + 1, j);
            cur.pop_back();
        }
        if (i - 1 >= 0) {
            cur.push_back(-1);
            go(depth + 1, i - 1, j + 1);
            cur.pop_back();
        }
        if (j - 1 >= 0) {
            cur.push_back(0);
            go(depth + 1, i, j - 1);
            cur.pop_back();
        }
    };
    go(0, 0, 0);
    return out;
}

namespace {

// tag-A deltas and their Ballot images
const std::vector<std::pair<std::vector<int>, int>>& ballot_step_map() {
    static const std::vector<std::pair<std::vector<int>, int>> m = {
        {{-1, 1, 0}, 1},
        {{0, -1, 1}, -1},
        {{1, 0, -1}, 0},
    };
    return m;
}

} // namespace

BallotPath walk_to_ballot(const LatticeWalk& walk) {
    require(walk.start().dim() == 2, ErrorCode::Precondition, "ballot image requires a triangle walk");
    const int L = walk.start().sum();
    require(walk.start().coords() == std::vector<int>({L, 0, 0}), ErrorCode::Precondition,
            "walk must start at the corner (L,0,0)");
    const StepSet stepset = StepSet::standard(2);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(walk.length()));
    for (int idx : walk.step_indices()) {
        const auto& step = stepset.steps()[static_cast<size_t>(idx)];
        require(step.tag == Tag::A, ErrorCode::Precondition, "walk must use tag-A steps only");
        for (const auto& [delta, image] : ballot_step_map())
            if (step.delta == delta) out.push_back(image);
    }
    return BallotPath(std::move(out), L);
}

LatticeWalk ballot_to_walk(const BallotPath& path, int L) {
    require(L >= 0, ErrorCode::InvalidArgument, "side length must be >= 0");
    require(path.max_excess() <= L, ErrorCode::Precondition, "path excess exceeds the side length");
    const StepSet stepset = StepSet::standard(2);
    auto index_of = [&](const std::vector<int>& delta) {
        for (int i = 0; i < static_cast<int>(stepset.steps().size()); ++i)
            if (stepset.steps()[static_cast<size_t>(i)].delta == delta) return i;
        fail(ErrorCode::Internal, "step delta not found in standard step set");
    };
    std::vector<int> indices;
    indices.reserve(static_cast<size_t>(path.length()));
    for (int s : path.steps())
        for (const auto& [delta, image] : ballot_step_map())
            if (image == s) indices.push_back(index_of(delta));
    return LatticeWalk(SimplexPoint({L, 0, 0}), std::move(indices), stepset);
}

} // namespace trilat::paths
