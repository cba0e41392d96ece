#pragma once

// Perpendicular subcategories and extraction of strong exceptional sequences:
// repeatedly split off the lexicographically minimal arc and pass to its
// perpendicular. The resulting endomorphism algebra is a product of linearly
// oriented type-A path algebras, one chain per shared left endpoint.

#include "arcmodel/arc.hpp"
#include "arcmodel/saturation.hpp"

#include <vector>

namespace arcmodel {

// Ordered sequence with RHom(E_j, E_i) = 0 for j > i and forward maps
// concentrated in degree 0.
struct ExceptionalSequence {
    std::vector<Arc> arcs;

    friend auto operator<=>(const ExceptionalSequence&, const ExceptionalSequence&) = default;
};

// Chains partition the sequence's arcs; within a chain all arcs share the
// left endpoint and right endpoints strictly increase.
struct ChainQuiver {
    std::vector<std::vector<Arc>> chains;

    friend auto operator<=>(const ChainQuiver&, const ChainQuiver&) = default;
};

// Lexicographically least arc; throws EmptySet.
Arc minimal_arc(const SaturatedArcSet& s);

// {(a,b) in S | neither l < a <= m < b nor a <= l < b <= m}, for lm = (l,m)
// the minimal arc of S. Saturated again. Throws NotMinimal if lm is not the
// lex minimum (the saturation-preservation proof needs minimality, so other
// arcs are refused rather than extrapolated).
SaturatedArcSet perpendicular(const SaturatedArcSet& s, const Arc& lm);

// Saturates, then peels minimal arcs via perpendiculars until empty. The
// extracted arcs form a strong exceptional sequence generating saturate(set).
ExceptionalSequence exceptional_sequence(const ArcSet& set);

// Groups the sequence's arcs by left endpoint into linearly oriented chains,
// sorted by right endpoint; chain lengths give End = k[A_r1] x ... x k[A_rk].
ChainQuiver endo_quiver(const ExceptionalSequence& sequence);

} // namespace arcmodel
