#pragma once

// Finitely supported non-crossing partitions of Z u {-inf} and the inverse
// lattice isomorphisms alpha (partition -> saturated arc set) and phi
// (saturated arc set -> partition). Only blocks of size >= 2 are stored;
// every unlisted point is implicitly a singleton.

#include "arcmodel/arc.hpp"
#include "arcmodel/saturation.hpp"

#include <vector>

namespace arcmodel {

// Sorted ascending, at least two elements once stored in a partition.
using Block = std::vector<Endpoint>;

// Disjointness check plus the non-crossing condition: no a,b in one block and
// c,d in another with a < c < b < d. Throws OverlappingBlocks on overlap.
bool is_noncrossing(const std::vector<Block>& blocks);

class NCPartition {
  public:
    NCPartition() = default; // all points singletons (the bottom element)

    // Normalizes (sorts elements and blocks, drops blocks of size < 2) and
    // validates; throws OverlappingBlocks or CrossingBlocks.
    explicit NCPartition(std::vector<Block> blocks);

    [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
    [[nodiscard]] bool empty() const { return blocks_.empty(); }

    // The block containing p (singleton {p} if unlisted).
    [[nodiscard]] Block block_of(const Endpoint& p) const;

    friend auto operator<=>(const NCPartition&, const NCPartition&) = default;

  private:
    std::vector<Block> blocks_; // sorted by minimum element
};

// alpha(B): all arcs with both endpoints in a common block. Saturated.
SaturatedArcSet alpha(const NCPartition& partition);

// phi(S): blocks are the sets {a} u {b | (a,b) or (b,a) in S} of size >= 2.
NCPartition phi(const SaturatedArcSet& s);

// Blockwise intersections of size >= 2; still non-crossing.
NCPartition ncp_meet(const NCPartition& p, const NCPartition& q);

// Least non-crossing partition coarser than the ordinary join; computed as
// phi(join(alpha(p), alpha(q))).
NCPartition ncp_join(const NCPartition& p, const NCPartition& q);

} // namespace arcmodel
