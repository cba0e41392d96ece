#include "arcmodel/saturation.hpp"

#include "arcmodel/dualities.hpp"
#include "arcmodel/ncp.hpp"

#include <algorithm>

namespace arcmodel {

namespace {

// The four arcs induced by a touching pair in chain position
// left(u) <= left(v) <= right(u) <= right(v); degenerate pairs are dropped.
template <class Fn>
void for_each_induced(const Arc& u, const Arc& v, Fn&& fn)
{
    if (auto w = Arc::try_make(u.left(), v.left()))
        fn(*w);
    if (auto w = Arc::try_make(v.left(), u.right()))
        fn(*w);
    if (auto w = Arc::try_make(u.right(), v.right()))
        fn(*w);
    if (auto w = Arc::try_make(u.left(), v.right()))
        fn(*w);
}

bool in_chain(const Arc& u, const Arc& v)
{
    return u.left() <= v.left() && v.left() <= u.right() && u.right() <= v.right();
}

} // namespace

bool is_saturated(const ArcSet& set)
{
    for (const Arc& u : set)
        for (const Arc& v : set) {
            if (!in_chain(u, v))
                continue;
            bool closed = true;
            for_each_induced(u, v, [&](const Arc& w) { closed = closed && set.contains(w); });
            if (!closed)
                return false;
        }
    return true;
}

SaturatedArcSet::SaturatedArcSet(ArcSet arcs) : arcs_(std::move(arcs))
{
    if (!is_saturated(arcs_))
        throw NotSaturated("arc set is not saturated: a touching pair is missing an induced arc");
}

SaturatedArcSet saturate(const ArcSet& set)
{
    ArcSet closure = set;
    std::vector<Arc> worklist(closure.begin(), closure.end());
    while (!worklist.empty()) {
        const Arc u = worklist.back();
        worklist.pop_back();
        // Ordered pairs in both roles, against everything currently present.
        std::vector<Arc> snapshot(closure.begin(), closure.end());
        for (const Arc& v : snapshot) {
            const auto add_from = [&](const Arc& p, const Arc& q) {
                if (!in_chain(p, q))
                    return;
                for_each_induced(p, q, [&](const Arc& w) {
                    if (closure.insert(w))
                        worklist.push_back(w);
                });
            };
            add_from(u, v);
            add_from(v, u);
        }
    }
    return SaturatedArcSet(std::move(closure));
}

SaturatedArcSet meet(const SaturatedArcSet& s, const SaturatedArcSet& t)
{
    return SaturatedArcSet(set_intersection(s.arcs(), t.arcs()));
}

SaturatedArcSet join(const SaturatedArcSet& s, const SaturatedArcSet& t)
{
    return saturate(set_union(s.arcs(), t.arcs()));
}

namespace {

std::vector<Arc> arcs_on_points(const std::vector<Endpoint>& points)
{
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (auto u = Arc::try_make(points[i], points[j]))
                arcs.push_back(*u);
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

// Trustworthy route: filter all subsets of the arcs on <= 6 points.
std::vector<SaturatedArcSet> enumerate_by_filter(const std::vector<Arc>& arcs)
{
    std::vector<SaturatedArcSet> result;
    const std::size_t n = arcs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Arc> chosen;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                chosen.push_back(arcs[i]);
        ArcSet candidate(std::move(chosen));
        if (is_saturated(candidate))
            result.emplace_back(std::move(candidate));
    }
    return result;
}

// Fast route: saturated sets on a finite chain of points are exactly the
// images under alpha of non-crossing partitions of those points, so walk the
// partitions (assign each point to an existing block or a fresh one, pruning
// crossings) instead of the power set of arcs.
void walk_partitions(const std::vector<Endpoint>& points, std::size_t index,
                     std::vector<std::vector<Endpoint>>& blocks,
                     std::vector<SaturatedArcSet>& out)
{
    if (index == points.size()) {
        std::vector<std::vector<Endpoint>> big;
        for (const auto& block : blocks)
            if (block.size() >= 2)
                big.push_back(block);
        out.push_back(alpha(NCPartition(std::move(big))));
        return;
    }
    const Endpoint p = points[index];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        // Joining block b crosses block c iff c has an element strictly
        // between max(blocks[b]) and p and another outside that span.
        const Endpoint lo = blocks[b].back();
        bool crossing = false;
        for (std::size_t c = 0; c < blocks.size() && !crossing; ++c) {
            if (c == b)
                continue;
            bool inside = false, outside = false;
            for (const Endpoint& q : blocks[c]) {
                if (lo < q && q < p)
                    inside = true;
                else
                    outside = true;
            }
            crossing = inside && outside;
        }
        if (crossing)
            continue;
        blocks[b].push_back(p);
        walk_partitions(points, index + 1, blocks, out);
        blocks[b].pop_back();
    }
    blocks.push_back({p});
    walk_partitions(points, index + 1, blocks, out);
    blocks.pop_back();
}

std::vector<SaturatedArcSet> enumerate_by_partitions(const std::vector<Endpoint>& points)
{
    std::vector<SaturatedArcSet> result;
    std::vector<std::vector<Endpoint>> blocks;
    walk_partitions(points, 0, blocks, result);
    return result;
}

} // namespace

std::vector<SaturatedArcSet> enumerate_saturated(const std::vector<Endpoint>& points,
                                                 std::size_t cap)
{
    std::vector<Endpoint> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() > cap)
        throw ResourceLimit("enumerate_saturated: " + std::to_string(sorted.size()) +
                            " points exceeds the cap of " + std::to_string(cap));

    std::vector<SaturatedArcSet> result = sorted.size() <= 6
                                              ? enumerate_by_filter(arcs_on_points(sorted))
                                              : enumerate_by_partitions(sorted);
    std::sort(result.begin(), result.end());
    return result;
}

bool is_twist_stable(const SaturatedArcSet& s, std::int64_t i)
{
    ArcSet shifted;
    for (const Arc& u : s)
        shifted.insert(twist(u, i));
    return shifted == s.arcs();
}

} // namespace arcmodel
