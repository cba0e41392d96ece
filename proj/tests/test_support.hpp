#pragma once

// Shared helpers for the test suites: arc shorthands, exhaustive arc ranges,
// seeded random generators, and independent brute-force oracles kept apart
// from the library code paths they check.

#include "arcmodel/arc.hpp"
#include "arcmodel/saturation.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using arcmodel::Arc;
using arcmodel::ArcSet;
using arcmodel::Endpoint;
using arcmodel::SaturatedArcSet;

inline Arc fin(std::int64_t a, std::int64_t b)
{
    return Arc::make(Endpoint::finite(a), Endpoint::finite(b));
}

inline Arc inf(std::int64_t b)
{
    return Arc::make(Endpoint::minus_infinity(), Endpoint::finite(b));
}

inline ArcSet arcs(std::initializer_list<Arc> list)
{
    return ArcSet(std::vector<Arc>(list));
}

// Every arc with endpoints in {-inf} u [lo, hi].
inline std::vector<Arc> all_arcs(std::int64_t lo, std::int64_t hi, bool with_minus_inf = true)
{
    std::vector<Arc> out;
    if (with_minus_inf)
        for (std::int64_t b = lo; b <= hi; ++b)
            out.push_back(inf(b));
    for (std::int64_t a = lo; a <= hi; ++a)
        for (std::int64_t b = a + 1; b <= hi; ++b)
            out.push_back(fin(a, b));
    return out;
}

class Gen {
  public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    std::int64_t pick(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Arc arc(std::int64_t lo, std::int64_t hi, bool allow_infinite = true)
    {
        if (allow_infinite && pick(0, 4) == 0)
            return inf(pick(lo, hi));
        const std::int64_t a = pick(lo, hi - 1);
        const std::int64_t b = pick(a + 1, hi);
        return fin(a, b);
    }

    ArcSet arc_set(std::int64_t lo, std::int64_t hi, std::size_t max_arcs,
                   bool allow_infinite = true)
    {
        ArcSet set;
        const std::size_t n = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(max_arcs)));
        for (std::size_t i = 0; i < n; ++i)
            set.insert(arc(lo, hi, allow_infinite));
        return set;
    }

    SaturatedArcSet saturated(std::int64_t lo, std::int64_t hi, std::size_t max_arcs,
                              bool allow_infinite = true)
    {
        return arcmodel::saturate(arc_set(lo, hi, max_arcs, allow_infinite));
    }

  private:
    std::mt19937 rng_;
};

// Independent non-crossing-partition enumerator: walk every set partition of
// the given chain of points and keep the crossing-free ones. Deliberately
// shares nothing with the library's enumeration or partition code.
namespace detail {

inline bool partition_has_crossing(const std::vector<std::vector<std::size_t>>& blocks)
{
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j)
                continue;
            for (std::size_t a : blocks[i])
                for (std::size_t b : blocks[i])
                    for (std::size_t c : blocks[j])
                        for (std::size_t d : blocks[j])
                            if (a < c && c < b && b < d)
                                return true;
        }
    return false;
}

inline void walk_all_partitions(std::size_t index, std::size_t n,
                                std::vector<std::vector<std::size_t>>& blocks,
                                std::size_t& noncrossing_count)
{
    if (index == n) {
        if (!partition_has_crossing(blocks))
            ++noncrossing_count;
        return;
    }
    // index the vector: recursion below grows it and would invalidate
    // references held by a range-for
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(index);
        walk_all_partitions(index + 1, n, blocks, noncrossing_count);
        blocks[b].pop_back();
    }
    blocks.push_back({index});
    walk_all_partitions(index + 1, n, blocks, noncrossing_count);
    blocks.pop_back();
}

} // namespace detail

// Number of non-crossing partitions of an n-point chain (a Catalan number).
inline std::size_t brute_force_noncrossing_count(std::size_t n)
{
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t count = 0;
    detail::walk_all_partitions(0, n, blocks, count);
    return count;
}

} // namespace testsupport
