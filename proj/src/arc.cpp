#include "arcmodel/arc.hpp"

#include <algorithm>
#include <charconv>

namespace arcmodel {

std::string to_string(const Endpoint& e)
{
    return e.is_finite() ? std::to_string(e.value()) : std::string("-inf");
}

namespace {

// Keeps twists/reflections of CLI-entered values far from int64 overflow.
constexpr std::int64_t kMaxMagnitude = 1'000'000'000'000'000; // 10^15

std::int64_t parse_integer(std::string_view text)
{
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("not an integer: '" + std::string(text) + "'");
    if (value > kMaxMagnitude || value < -kMaxMagnitude)
        throw ParseError("integer out of supported range (|z| <= 10^15): '" + std::string(text) + "'");
    return value;
}

} // namespace

Endpoint parse_endpoint(std::string_view text)
{
    if (text == "-inf")
        return Endpoint::minus_infinity();
    return Endpoint::finite(parse_integer(text));
}

Arc Arc::make(Endpoint left, Endpoint right)
{
    if (left == right)
        throw DegenerateArc("degenerate pair (" + to_string(left) + "," + to_string(right) +
                            "): M_(a,a) is the zero object");
    if (left > right || right.is_minus_infinity())
        throw InvalidArc("invalid arc (" + to_string(left) + "," + to_string(right) +
                         "): need a < b with b finite");
    return Arc(left, right);
}

std::optional<Arc> Arc::try_make(Endpoint left, Endpoint right)
{
    if (left == right)
        return std::nullopt;
    return make(left, right);
}

std::optional<std::int64_t> Arc::length() const
{
    if (!left_.is_finite())
        return std::nullopt;
    return right_.value() - left_.value();
}

bool touches(const Arc& u, const Arc& v)
{
    const auto chain = [](const Arc& p, const Arc& q) {
        return p.left() <= q.left() && q.left() <= p.right() && p.right() <= q.right();
    };
    return chain(u, v) || chain(v, u);
}

bool crosses(const Arc& u, const Arc& v)
{
    const auto chain = [](const Arc& p, const Arc& q) {
        return p.left() < q.left() && q.left() < p.right() && p.right() < q.right();
    };
    return chain(u, v) || chain(v, u);
}

std::string to_string(const Arc& u)
{
    return to_string(u.left()) + ".." + to_string(u.right());
}

Arc parse_arc(std::string_view text)
{
    // Split at the first ".." whose right part is nonempty; left parts such
    // as "-inf" or "-3" keep their leading minus.
    const auto pos = text.find("..");
    if (pos == std::string_view::npos || pos == 0 || pos + 2 >= text.size())
        throw ParseError("not an arc: '" + std::string(text) + "' (expected <a>..<b>)");
    const Endpoint left = parse_endpoint(text.substr(0, pos));
    const Endpoint right = parse_endpoint(text.substr(pos + 2));
    return Arc::make(left, right);
}

ArcSet::ArcSet(std::vector<Arc> arcs) : arcs_(std::move(arcs))
{
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool ArcSet::contains(const Arc& u) const
{
    return std::binary_search(arcs_.begin(), arcs_.end(), u);
}

bool ArcSet::insert(const Arc& u)
{
    const auto it = std::lower_bound(arcs_.begin(), arcs_.end(), u);
    if (it != arcs_.end() && *it == u)
        return false;
    arcs_.insert(it, u);
    return true;
}

bool ArcSet::erase(const Arc& u)
{
    const auto it = std::lower_bound(arcs_.begin(), arcs_.end(), u);
    if (it == arcs_.end() || *it != u)
        return false;
    arcs_.erase(it);
    return true;
}

std::vector<Endpoint> ArcSet::endpoints() const
{
    std::vector<Endpoint> points;
    points.reserve(2 * arcs_.size());
    for (const Arc& u : arcs_) {
        points.push_back(u.left());
        points.push_back(u.right());
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

bool ArcSet::all_finite() const
{
    return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& u) { return u.is_finite(); });
}

bool ArcSet::subset_of(const ArcSet& other) const
{
    return std::includes(other.arcs_.begin(), other.arcs_.end(), arcs_.begin(), arcs_.end());
}

ArcSet set_union(const ArcSet& a, const ArcSet& b)
{
    std::vector<Arc> merged;
    merged.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    return ArcSet(std::move(merged));
}

ArcSet set_intersection(const ArcSet& a, const ArcSet& b)
{
    std::vector<Arc> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return ArcSet(std::move(common));
}

} // namespace arcmodel
