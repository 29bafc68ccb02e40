#include "trilat/lattice.hpp"

#include <algorithm>

namespace trilat::lattice {

namespace {

bool is_sublattice_a(const std::vector<int>& delta) {
    // d=2 only: the directed sublattice {(1,0,-1),(-1,1,0),(0,-1,1)}.
    static const std::vector<std::vector<int>> a_steps = {{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}};
    return std::find(a_steps.begin(), a_steps.end(), delta) != a_steps.end();
}

bool tag_allowed(Tag tag, SublatticeFilter filter) {
    switch (filter) {
        case SublatticeFilter::AOnly: return tag == Tag::A;
        case SublatticeFilter::BOnly: return tag == Tag::B;
        case SublatticeFilter::Both: return true;
    }
    return false;
}

} // namespace

Int DomainSpec::point_count() const {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(L + d), static_cast<unsigned long>(d));
    return r;
}

StepSet StepSet::standard(int d) {
    require(d >= 1, ErrorCode::InvalidArgument, "dimension must be >= 1");
    std::vector<std::vector<int>> deltas;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            if (i == j) continue;
            std::vector<int> delta(d + 1, 0);
            delta[i] = 1;
            delta[j] = -1;
            deltas.push_back(std::move(delta));
        }
    std::sort(deltas.begin(), deltas.end(), std::greater<>());
    std::vector<Step> steps;
    steps.reserve(deltas.size());
    for (auto& delta : deltas) {
        Tag tag = (d == 2 && !is_sublattice_a(delta)) ? Tag::B : Tag::A;
        steps.push_back(Step{std::move(delta), tag});
    }
    return StepSet(d, std::move(steps));
}

StepSet StepSet::swapped_tags() const {
    std::vector<Step> steps = steps_;
    for (auto& s : steps) s.tag = (s.tag == Tag::A) ? Tag::B : Tag::A;
    return StepSet(d_, std::move(steps));
}

std::vector<std::pair<SimplexPoint, Tag>> neighbors(const SimplexPoint& point, const StepSet& stepset) {
    require(point.dim() == stepset.d(), ErrorCode::DomainMismatch,
            "point dimension does not match step set");
    std::vector<std::pair<SimplexPoint, Tag>> out;
    for (const Step& s : stepset.steps()) {
        std::vector<int> c = point.coords();
        bool ok = true;
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] += s.delta[i];
            if (c[i] < 0) ok = false;
        }
        if (ok) out.emplace_back(SimplexPoint(std::move(c)), s.tag);
    }
    return out;
}

Int CountTable::at(int n, const std::vector<int>& end, int p) const {
    auto it = entries_.find(Key{n, end, p});
    return it == entries_.end() ? Int(0) : it->second;
}

Int CountTable::total(int n) const {
    Int s = 0;
    for (const auto& [k, c] : entries_)
        if (std::get<0>(k) == n) s += c;
    return s;
}

Int CountTable::total_by_tag(int n, int p) const {
    Int s = 0;
    for (const auto& [k, c] : entries_)
        if (std::get<0>(k) == n && std::get<2>(k) == p) s += c;
    return s;
}

Int CountTable::side_total(int n, int coord_index) const {
    require(coord_index >= 0 && coord_index <= domain_.d, ErrorCode::InvalidArgument,
            "coordinate index out of range");
    Int s = 0;
    for (const auto& [k, c] : entries_)
        if (std::get<0>(k) == n && std::get<1>(k)[static_cast<size_t>(coord_index)] == 0) s += c;
    return s;
}

Int CountTable::side_total_by_tag(int n, int coord_index, int p) const {
    require(coord_index >= 0 && coord_index <= domain_.d, ErrorCode::InvalidArgument,
            "coordinate index out of range");
    Int s = 0;
    for (const auto& [k, c] : entries_)
        if (std::get<0>(k) == n && std::get<2>(k) == p &&
            std::get<1>(k)[static_cast<size_t>(coord_index)] == 0)
            s += c;
    return s;
}

void CountTable::add(int n, const std::vector<int>& end, int p, const Int& c) {
    if (c == 0) return;
    entries_[Key{n, end, p}] += c;
}

CountTable count_walks(const DomainSpec& domain, const SimplexPoint& start, int n_max) {
    return count_walks(domain, start, n_max, StepSet::standard(domain.d));
}

CountTable count_walks(const DomainSpec& domain, const SimplexPoint& start, int n_max,
                       const StepSet& stepset) {
    require(n_max >= 0, ErrorCode::InvalidArgument, "walk length must be >= 0");
    require(stepset.d() == domain.d, ErrorCode::DomainMismatch,
            "step set dimension does not match domain");
    require(domain.contains(start.coords()), ErrorCode::DomainMismatch, "start point not in domain");

    CountTable table(domain, start, n_max);
    // layer: (position coords, tag-A count) -> walk count
    std::map<std::pair<std::vector<int>, int>, Int> layer;
    layer[{start.coords(), 0}] = 1;
    table.add(0, start.coords(), 0, 1);
    for (int n = 1; n <= n_max; ++n) {
        std::map<std::pair<std::vector<int>, int>, Int> next;
        for (const auto& [key, c] : layer) {
            SimplexPoint pt(key.first);
            for (const auto& [nbr, tag] : neighbors(pt, stepset))
                next[{nbr.coords(), key.second + (tag == Tag::A ? 1 : 0)}] += c;
        }
        layer = std::move(next);
        for (const auto& [key, c] : layer) table.add(n, key.first, key.second, c);
    }
    return table;
}

LatticeWalk::LatticeWalk(SimplexPoint start, std::vector<int> step_indices, const StepSet& stepset)
    : start_(std::move(start)), steps_(std::move(step_indices)) {
    require(start_.dim() == stepset.d(), ErrorCode::DomainMismatch,
            "start dimension does not match step set");
    std::vector<int> c = start_.coords();
    for (int idx : steps_) {
        require(idx >= 0 && idx < static_cast<int>(stepset.steps().size()), ErrorCode::InvalidArgument,
                "step index out of range");
        const Step& s = stepset.steps()[static_cast<size_t>(idx)];
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] += s.delta[i];
            require(c[i] >= 0, ErrorCode::Precondition, "walk leaves the non-negative orthant");
        }
    }
}

std::vector<SimplexPoint> LatticeWalk::positions(const StepSet& stepset) const {
    std::vector<SimplexPoint> out;
    out.reserve(steps_.size() + 1);
    out.push_back(start_);
    std::vector<int> c = start_.coords();
    for (int idx : steps_) {
        const Step& s = stepset.steps()[static_cast<size_t>(idx)];
        for (size_t i = 0; i < c.size(); ++i) c[i] += s.delta[i];
        out.emplace_back(c);
    }
    return out;
}

int LatticeWalk::tag_a_count(const StepSet& stepset) const {
    int p = 0;
    for (int idx : steps_)
        if (stepset.steps()[static_cast<size_t>(idx)].tag == Tag::A) ++p;
    return p;
}

void for_each_walk(const DomainSpec& domain, const SimplexPoint& start, int n,
                   SublatticeFilter filter, const std::function<void(const LatticeWalk&)>& visit) {
    require(n >= 0, ErrorCode::InvalidArgument, "walk length must be >= 0");
    require(domain.contains(start.coords()), ErrorCode::DomainMismatch, "start point not in domain");
    const StepSet stepset = StepSet::standard(domain.d);
    const auto& steps = stepset.steps();

    std::vector<int> chosen(static_cast<size_t>(n));
    std::vector<int> pos = start.coords();

    std::function<void(int)> go = [&](int depth) {
        if (depth == n) {
            visit(LatticeWalk(start, chosen, stepset));
            return;
        }
        for (int idx = 0; idx < static_cast<int>(steps.size()); ++idx) {
            const Step& s = steps[static_cast<size_t>(idx)];
            if (!tag_allowed(s.tag, filter)) continue;
            bool ok = true;
            for (size_t i = 0; i < pos.size(); ++i)
                if (pos[i] + s.delta[i] < 0) ok = false;
            if (!ok) continue;
            for (size_t i = 0; i < pos.size(); ++i) pos[i] += s.delta[i];
            chosen[static_cast<size_t>(depth)] = idx;
            go(depth + 1);
            for (size_t i = 0; i < pos.size(); ++i) pos[i] -= s.delta[i];
        }
    };
    go(0);
}

std::vector<LatticeWalk> enumerate_walks(const DomainSpec& domain, const SimplexPoint& start,
                                         int n, SublatticeFilter filter, long long guard_limit) {
    require(guard_limit >= 0, ErrorCode::InvalidArgument, "guard limit must be >= 0");
    CountTable table = count_walks(domain, start, n);
    Int predicted;
    switch (filter) {
        case SublatticeFilter::AOnly: predicted = table.total_by_tag(n, n); break;
        case SublatticeFilter::BOnly: predicted = table.total_by_tag(n, 0); break;
        case SublatticeFilter::Both: predicted = table.total(n); break;
    }
    require(predicted <= Int(static_cast<long>(guard_limit)), ErrorCode::ResourceLimit,
            "walk enumeration would exceed the guard limit (" + predicted.get_str() + " walks)");

    std::vector<LatticeWalk> out;
    for_each_walk(domain, start, n, filter, [&](const LatticeWalk& w) { out.push_back(w); });
    return out;
}

std::pair<std::vector<int>, std::vector<int>> map_to_strip_pair(const LatticeWalk& walk) {
    require(walk.start().dim() == 2, ErrorCode::DomainMismatch,
            "strip-pair mapping is defined for triangle walks only");
    const StepSet stepset = StepSet::standard(2);
    std::vector<int> lower, upper;
    for (const SimplexPoint& pt : walk.positions(stepset)) {
        lower.push_back(pt.coords()[0]);
        upper.push_back(pt.coords()[0] + pt.coords()[1]);
    }
    return {std::move(lower), std::move(upper)};
}

} // namespace trilat::lattice
