#include "arcmodel/hom.hpp"

namespace arcmodel {

int hom_dim(const Arc& u, const Arc& v)
{
    // a <= c < b <= d, where -inf <= -inf holds.
    const Endpoint a = u.left(), c = v.left();
    return (a <= c && c < u.right() && u.right() <= v.right()) ? 1 : 0;
}

int ext_dim(const Arc& u, const Arc& v)
{
    // u = (c,d) source, v = (a,b) target: a < c <= b < d. A free source
    // (c = -inf) is projective and the first inequality can never hold.
    const Endpoint c = u.left(), a = v.left();
    return (a < c && c <= v.right() && v.right() < u.right()) ? 1 : 0;
}

int rhom_dim(const Arc& u, const Arc& v, int n)
{
    if (n == 0)
        return hom_dim(u, v);
    if (n == 1)
        return ext_dim(u, v);
    return 0;
}

std::pair<std::optional<Arc>, std::optional<Arc>>
ker_coker(const Arc& u, const Arc& v)
{
    if (hom_dim(u, v) == 0)
        throw NoMorphism("no nonzero morphism M_" + to_string(u) + " -> M_" + to_string(v) +
                         ": condition a <= c < b <= d fails");
    return {Arc::try_make(u.left(), v.left()), Arc::try_make(u.right(), v.right())};
}

DecompositionResult cone(const Arc& u, const Arc& v)
{
    const auto [kernel, cokernel] = ker_coker(u, v);
    DecompositionResult summands;
    if (kernel)
        summands.push_back({*kernel, 1});
    if (cokernel)
        summands.push_back({*cokernel, 0});
    return summands;
}

DecompositionResult fiber(const Arc& u, const Arc& v)
{
    if (ext_dim(u, v) == 0)
        throw NoExtension("no nontrivial extension of M_" + to_string(u) + " by M_" + to_string(v) +
                          ": condition a < c <= b < d fails");
    // B = M_(c,b) (+) M_(a,d); (c,b) vanishes when c = b.
    DecompositionResult summands;
    if (auto cb = Arc::try_make(u.left(), v.right()))
        summands.push_back({*cb, 0});
    summands.push_back({Arc::make(v.left(), u.right()), 0});
    return summands;
}

} // namespace arcmodel
