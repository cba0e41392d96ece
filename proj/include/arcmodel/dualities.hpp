#pragma once

// Autoequivalence actions on arcs: the internal-degree twist (i), acting as
// translation, and the Grothendieck-duality reflection s_j about j, with
// s_j(a,b) = (j-b, j-a) and s_j(-inf,b) = (-inf, j-b). Duality is
// contravariant and exchanges Hom and Ext^1 across the torsion/free divide
// with a suspension offset delta: 1 on finite (torsion) arcs, 0 on infinite
// (free) ones, entering the exchange identity
//   rhom_dim(u, v, n) = rhom_dim(s_j v, s_j u, n + delta(v) - delta(u)).

#include "arcmodel/arc.hpp"
#include "arcmodel/ncp.hpp"
#include "arcmodel/saturation.hpp"

#include <cstdint>

namespace arcmodel {

// Translation by i; -inf stays fixed.
Arc twist(const Arc& u, std::int64_t i);

// Reflection about j.
Arc reflect(const Arc& u, std::int64_t j);

// Suspension offset incurred by duality: 1 for finite arcs, 0 for infinite.
int shift_delta(const Arc& u);

// Elementwise actions; saturation and non-crossing are preserved.
SaturatedArcSet twist_set(const SaturatedArcSet& s, std::int64_t i);
SaturatedArcSet reflect_set(const SaturatedArcSet& s, std::int64_t j);
NCPartition reflect_ncp(const NCPartition& p, std::int64_t j);

// True iff reflect_set(s, j) == s; such sets are exactly the duality-stable
// thick subcategories.
bool is_reflection_symmetric(const SaturatedArcSet& s, std::int64_t j);

} // namespace arcmodel
