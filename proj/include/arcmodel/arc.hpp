#pragma once

// Endpoints on the poset Z u {-inf}, arcs (a,b) with a < b, and finite arc
// sets with lexicographic canonical order. An arc (a,b) stands for the
// suspension orbit of the indecomposable graded k[y]-module M_(a,b):
// S/(y^(b-a))(b) when a is finite, the twisted free module S(b) when a = -inf.

#include "arcmodel/errors.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arcmodel {

// A point of Z u {-inf}; -inf is below every integer.
class Endpoint {
  public:
    static constexpr Endpoint minus_infinity() { return Endpoint{false, 0}; }
    static constexpr Endpoint finite(std::int64_t z) { return Endpoint{true, z}; }

    [[nodiscard]] constexpr bool is_finite() const { return finite_; }
    [[nodiscard]] constexpr bool is_minus_infinity() const { return !finite_; }

    // Only meaningful for finite endpoints; -inf stores 0 so that the
    // defaulted comparison below is a total order.
    [[nodiscard]] constexpr std::int64_t value() const { return value_; }

    friend constexpr auto operator<=>(const Endpoint&, const Endpoint&) = default;

  private:
    constexpr Endpoint(bool finite, std::int64_t value) : finite_(finite), value_(value) {}

    bool finite_;
    std::int64_t value_;
};

std::string to_string(const Endpoint& e);

// Parses a decimal integer or the literal "-inf". Throws ParseError.
Endpoint parse_endpoint(std::string_view text);

// An ordered pair (a,b) with a < b and b finite.
class Arc {
  public:
    // Throws DegenerateArc when a = b, InvalidArc when a > b or b = -inf.
    static Arc make(Endpoint left, Endpoint right);

    // As make, but a = b yields nullopt instead of throwing. Operations that
    // produce "those which are arcs" (cones, fibers, saturation) use this to
    // drop zero summands.
    static std::optional<Arc> try_make(Endpoint left, Endpoint right);

    [[nodiscard]] Endpoint left() const { return left_; }
    [[nodiscard]] Endpoint right() const { return right_; }

    // The right endpoint is finite by the invariant.
    [[nodiscard]] std::int64_t right_value() const { return right_.value(); }

    [[nodiscard]] bool is_finite() const { return left_.is_finite(); }

    // b - a, or nullopt for infinite arcs.
    [[nodiscard]] std::optional<std::int64_t> length() const;

    // Lexicographic order on (left, right); (-inf, b) sorts below every
    // finite-left arc.
    friend auto operator<=>(const Arc&, const Arc&) = default;

  private:
    Arc(Endpoint left, Endpoint right) : left_(left), right_(right) {}

    Endpoint left_;
    Endpoint right_;
};

// Touching: a <= c <= b <= d or c <= a <= d <= b.
bool touches(const Arc& u, const Arc& v);

// Crossing: a < c < b < d or c < a < d < b, strictly. Implies touching.
bool crosses(const Arc& u, const Arc& v);

// Canonical text form "a..b", with "-inf" for the infinite left endpoint.
std::string to_string(const Arc& u);
Arc parse_arc(std::string_view text);

// A finite set of arcs; iteration order is lexicographic.
class ArcSet {
  public:
    ArcSet() = default;
    explicit ArcSet(std::vector<Arc> arcs);

    [[nodiscard]] bool contains(const Arc& u) const;
    // Returns true if the arc was not already present.
    bool insert(const Arc& u);
    bool erase(const Arc& u);

    [[nodiscard]] std::size_t size() const { return arcs_.size(); }
    [[nodiscard]] bool empty() const { return arcs_.empty(); }

    [[nodiscard]] auto begin() const { return arcs_.begin(); }
    [[nodiscard]] auto end() const { return arcs_.end(); }

    [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }

    // All endpoints occurring in the set, sorted ascending without repeats.
    [[nodiscard]] std::vector<Endpoint> endpoints() const;

    // True when every arc has finite length (no left endpoint at -inf).
    [[nodiscard]] bool all_finite() const;

    [[nodiscard]] bool subset_of(const ArcSet& other) const;

    friend auto operator<=>(const ArcSet&, const ArcSet&) = default;

  private:
    std::vector<Arc> arcs_; // sorted, no duplicates
};

ArcSet set_union(const ArcSet& a, const ArcSet& b);
ArcSet set_intersection(const ArcSet& a, const ArcSet& b);

} // namespace arcmodel
