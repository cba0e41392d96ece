#include "arcmodel/dualities.hpp"

namespace arcmodel {

namespace {

Endpoint translated(const Endpoint& e, std::int64_t i)
{
    return e.is_finite() ? Endpoint::finite(e.value() + i) : e;
}

} // namespace

Arc twist(const Arc& u, std::int64_t i)
{
    return Arc::make(translated(u.left(), i), Endpoint::finite(u.right_value() + i));
}

Arc reflect(const Arc& u, std::int64_t j)
{
    if (u.left().is_minus_infinity())
        return Arc::make(Endpoint::minus_infinity(), Endpoint::finite(j - u.right_value()));
    return Arc::make(Endpoint::finite(j - u.right_value()),
                     Endpoint::finite(j - u.left().value()));
}

int shift_delta(const Arc& u)
{
    return u.is_finite() ? 1 : 0;
}

SaturatedArcSet twist_set(const SaturatedArcSet& s, std::int64_t i)
{
    ArcSet shifted;
    for (const Arc& u : s)
        shifted.insert(twist(u, i));
    return SaturatedArcSet(std::move(shifted));
}

SaturatedArcSet reflect_set(const SaturatedArcSet& s, std::int64_t j)
{
    ArcSet reflected;
    for (const Arc& u : s)
        reflected.insert(reflect(u, j));
    return SaturatedArcSet(std::move(reflected));
}

NCPartition reflect_ncp(const NCPartition& p, std::int64_t j)
{
    std::vector<Block> blocks;
    for (const Block& b : p.blocks()) {
        Block image;
        image.reserve(b.size());
        for (const Endpoint& e : b)
            image.push_back(e.is_finite() ? Endpoint::finite(j - e.value()) : e);
        blocks.push_back(std::move(image));
    }
    return NCPartition(std::move(blocks));
}

bool is_reflection_symmetric(const SaturatedArcSet& s, std::int64_t j)
{
    return reflect_set(s, j) == s;
}

} // namespace arcmodel
