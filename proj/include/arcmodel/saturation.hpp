#pragma once

// Saturated arc sets. A set S is saturated when for every touching pair
// (a,b),(c,d) in S with a <= c <= b <= d, those of (a,c),(c,b),(b,d),(a,d)
// that are arcs also lie in S. Finite saturated sets are exactly the finitely
// generated thick subcategories of the bounded derived category, so the
// closure operator below computes thick-subcategory generation and
// (meet, join) is the lattice structure.

#include "arcmodel/arc.hpp"

#include <cstdint>
#include <vector>

namespace arcmodel {

bool is_saturated(const ArcSet& set);

// An ArcSet carrying the saturation invariant; the constructor re-verifies
// and throws NotSaturated, so every value of this type is trustworthy.
class SaturatedArcSet {
  public:
    SaturatedArcSet() = default; // the empty set is saturated
    explicit SaturatedArcSet(ArcSet arcs);

    [[nodiscard]] const ArcSet& arcs() const { return arcs_; }
    [[nodiscard]] std::size_t size() const { return arcs_.size(); }
    [[nodiscard]] bool empty() const { return arcs_.empty(); }
    [[nodiscard]] bool contains(const Arc& u) const { return arcs_.contains(u); }
    [[nodiscard]] auto begin() const { return arcs_.begin(); }
    [[nodiscard]] auto end() const { return arcs_.end(); }

    friend auto operator<=>(const SaturatedArcSet&, const SaturatedArcSet&) = default;

  private:
    ArcSet arcs_;
};

// Least saturated superset; a worklist fixed point over ordered touching
// pairs. Every added arc has endpoints among endpoints(set), so the closure
// of a finite set is finite.
SaturatedArcSet saturate(const ArcSet& set);

// Intersection of saturated sets is saturated.
SaturatedArcSet meet(const SaturatedArcSet& s, const SaturatedArcSet& t);

// Join in the saturated lattice: saturate(s u t).
SaturatedArcSet join(const SaturatedArcSet& s, const SaturatedArcSet& t);

// Every saturated subset of the arcs with endpoints in `points`, sorted.
// Requires at most one -inf member; throws ResourceLimit past the cap.
std::vector<SaturatedArcSet> enumerate_saturated(const std::vector<Endpoint>& points,
                                                 std::size_t cap = 8);

// True iff translating every arc by i reproduces s exactly. For i != 0 this
// forces s to be empty among finite sets (translation moves the maximal
// endpoint).
bool is_twist_stable(const SaturatedArcSet& s, std::int64_t i);

} // namespace arcmodel
