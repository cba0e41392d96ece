#include "arcmodel/exceptional.hpp"

#include <algorithm>
#include <map>

namespace arcmodel {

Arc minimal_arc(const SaturatedArcSet& s)
{
    if (s.empty())
        throw EmptySet("minimal_arc of the empty set");
    return *s.begin();
}

SaturatedArcSet perpendicular(const SaturatedArcSet& s, const Arc& lm)
{
    if (s.empty() || minimal_arc(s) != lm)
        throw NotMinimal("perpendicular requires the lexicographically minimal arc of the set; " +
                         to_string(lm) + " is not it");
    const Endpoint l = lm.left();
    const Endpoint m = lm.right();
    ArcSet kept;
    for (const Arc& u : s) {
        const Endpoint a = u.left();
        const Endpoint b = u.right();
        const bool ext_to_min = l < a && a <= m && m < b;  // Ext^1(u, lm) != 0
        const bool hom_to_min = a <= l && l < b && b <= m; // Hom(u, lm) != 0
        if (!ext_to_min && !hom_to_min)
            kept.insert(u);
    }
    return SaturatedArcSet(std::move(kept));
}

ExceptionalSequence exceptional_sequence(const ArcSet& set)
{
    ExceptionalSequence sequence;
    SaturatedArcSet remaining = saturate(set);
    while (!remaining.empty()) {
        const Arc next = minimal_arc(remaining);
        sequence.arcs.push_back(next);
        remaining = perpendicular(remaining, next);
    }
    return sequence;
}

ChainQuiver endo_quiver(const ExceptionalSequence& sequence)
{
    std::map<Endpoint, std::vector<Arc>> by_left;
    for (const Arc& u : sequence.arcs)
        by_left[u.left()].push_back(u);
    ChainQuiver quiver;
    for (auto& [left, chain] : by_left) {
        std::sort(chain.begin(), chain.end());
        quiver.chains.push_back(std::move(chain));
    }
    return quiver;
}

} // namespace arcmodel
