#pragma once

// Hom and Ext^1 dimensions between indecomposables, with the kernel/cokernel,
// cone, and fiber decompositions they induce. All Hom/Ext spaces in this model
// are 0- or 1-dimensional independently of the ground field, so dimensions are
// returned as ints and decompositions are canonical.
//
// Orientation convention, fixed throughout: ext_dim(u, v) is the space of
// extensions OF u BY v, i.e. dim Hom(M_u, Sigma M_v). With u = (c,d) and
// v = (a,b) it is nonzero exactly when a < c <= b < d.

#include "arcmodel/arc.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace arcmodel {

// An arc together with a suspension exponent (cohomological).
struct ShiftedArc {
    Arc arc;
    int shift = 0;

    friend auto operator<=>(const ShiftedArc&, const ShiftedArc&) = default;
};

// Indecomposable summands of a cone or fiber; zero summands are dropped, so
// the list is empty exactly for the cone of an isomorphism.
using DecompositionResult = std::vector<ShiftedArc>;

// dim Hom_{gr S}(M_u, M_v): 1 iff a <= c < b <= d for u = (a,b), v = (c,d).
int hom_dim(const Arc& u, const Arc& v);

// dim Ext^1(M_u, M_v) = dim Hom(M_u, Sigma M_v); see the orientation note.
int ext_dim(const Arc& u, const Arc& v);

// Graded answer: hom_dim at n = 0, ext_dim at n = 1, zero elsewhere (the base
// is hereditary).
int rhom_dim(const Arc& u, const Arc& v, int n);

// Kernel and cokernel arcs of any nonzero morphism M_u -> M_v: ((a,c),(b,d)),
// with degenerate entries absent. Throws NoMorphism when hom_dim(u,v) = 0.
std::pair<std::optional<Arc>, std::optional<Arc>>
ker_coker(const Arc& u, const Arc& v);

// cone(phi) = Sigma ker(phi) (+) coker(phi) for any nonzero phi: M_u -> M_v.
// Empty when u = v. Throws NoMorphism when hom_dim(u,v) = 0.
DecompositionResult cone(const Arc& u, const Arc& v);

// Middle term of the non-split triangle M_v -> B -> M_u -> Sigma M_v:
// B = M_(c,b) (+) M_(a,d) with u = (c,d), v = (a,b). Throws NoExtension when
// ext_dim(u,v) = 0.
DecompositionResult fiber(const Arc& u, const Arc& v);

} // namespace arcmodel
