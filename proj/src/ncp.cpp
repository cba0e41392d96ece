#include "arcmodel/ncp.hpp"

#include <algorithm>
#include <map>

namespace arcmodel {

namespace {

bool blocks_cross(const Block& x, const Block& y)
{
    // x and y sorted; look for a < c < b < d with a,b in one, c,d in the other.
    const auto interleaved = [](const Block& s, const Block& t) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                for (std::size_t k = 0; k + 1 < t.size(); ++k)
                    for (std::size_t l = k + 1; l < t.size(); ++l)
                        if (s[i] < t[k] && t[k] < s[j] && s[j] < t[l])
                            return true;
        return false;
    };
    return interleaved(x, y) || interleaved(y, x);
}

void check_disjoint(const std::vector<Block>& blocks)
{
    std::vector<Endpoint> all;
    for (const Block& b : blocks)
        all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw OverlappingBlocks("blocks are not pairwise disjoint");
}

} // namespace

bool is_noncrossing(const std::vector<Block>& blocks)
{
    check_disjoint(blocks);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (blocks_cross(blocks[i], blocks[j]))
                return false;
    return true;
}

NCPartition::NCPartition(std::vector<Block> blocks) : blocks_(std::move(blocks))
{
    for (Block& b : blocks_) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    // Size-<2 blocks are implicit singletons; keep the stored form canonical.
    std::erase_if(blocks_, [](const Block& b) { return b.size() < 2; });
    std::sort(blocks_.begin(), blocks_.end());
    if (!is_noncrossing(blocks_))
        throw CrossingBlocks("partition blocks cross: a < c < b < d across distinct blocks");
}

Block NCPartition::block_of(const Endpoint& p) const
{
    for (const Block& b : blocks_)
        if (std::binary_search(b.begin(), b.end(), p))
            return b;
    return {p};
}

SaturatedArcSet alpha(const NCPartition& partition)
{
    ArcSet arcs;
    for (const Block& b : partition.blocks())
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (auto u = Arc::try_make(b[i], b[j]))
                    arcs.insert(*u);
    return SaturatedArcSet(std::move(arcs));
}

NCPartition phi(const SaturatedArcSet& s)
{
    std::map<Endpoint, Block> block_at;
    for (const Endpoint& a : s.arcs().endpoints()) {
        Block b{a};
        for (const Arc& u : s) {
            if (u.left() == a)
                b.push_back(u.right());
            else if (u.right() == a)
                b.push_back(u.left());
        }
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        if (b.size() >= 2)
            block_at.emplace(b.front(), std::move(b));
    }
    std::vector<Block> blocks;
    blocks.reserve(block_at.size());
    for (auto& [min, b] : block_at)
        blocks.push_back(std::move(b));
    return NCPartition(std::move(blocks));
}

NCPartition ncp_meet(const NCPartition& p, const NCPartition& q)
{
    std::vector<Block> blocks;
    for (const Block& b : p.blocks())
        for (const Block& c : q.blocks()) {
            Block common;
            std::set_intersection(b.begin(), b.end(), c.begin(), c.end(),
                                  std::back_inserter(common));
            if (common.size() >= 2)
                blocks.push_back(std::move(common));
        }
    return NCPartition(std::move(blocks));
}

NCPartition ncp_join(const NCPartition& p, const NCPartition& q)
{
    return phi(join(alpha(p), alpha(q)));
}

} // namespace arcmodel
