#include "arcmodel/oracle.hpp"

namespace arcmodel {

std::size_t GradedModuleRep::dim_at(std::int64_t d) const
{
    if (truncation_top && d > *truncation_top)
        throw WindowTooSmall("component in degree " + std::to_string(d) +
                             " lies beyond the truncation top " + std::to_string(*truncation_top));
    const auto it = components.find(d);
    return it == components.end() ? 0 : it->second;
}

RationalMatrix GradedModuleRep::y_at(std::int64_t d) const
{
    if (truncation_top && d >= *truncation_top)
        throw WindowTooSmall("y-map out of degree " + std::to_string(d) +
                             " is not represented at truncation top " +
                             std::to_string(*truncation_top));
    const auto it = maps.find(d);
    if (it != maps.end())
        return it->second;
    return RationalMatrix(dim_at(d + 1), dim_at(d));
}

GradedModuleRep module_of_arc(const Arc& u, std::int64_t window_top)
{
    GradedModuleRep rep;
    const std::int64_t generator_degree = -u.right_value();
    std::int64_t top; // last occupied degree
    if (u.left().is_finite()) {
        top = -u.left().value() - 1;
    }
    else {
        if (window_top < generator_degree)
            throw WindowTooSmall("window top " + std::to_string(window_top) +
                                 " is below the generator degree " +
                                 std::to_string(generator_degree) + " of M_" + to_string(u));
        top = window_top;
        rep.truncation_top = window_top;
    }
    for (std::int64_t d = generator_degree; d <= top; ++d)
        rep.components[d] = 1;
    for (std::int64_t d = generator_degree; d < top; ++d)
        rep.maps.emplace(d, RationalMatrix::identity(1));
    return rep;
}

std::int64_t required_window(const Arc& u, const Arc& v)
{
    std::int64_t needed = std::max(-u.right_value(), -v.right_value());
    for (const Arc* x : {&u, &v})
        if (x->left().is_finite())
            needed = std::max(needed, -x->left().value() + 1);
    return needed;
}

namespace oracle_detail {

void check_window(const Arc& u, const Arc& v, std::int64_t window_top)
{
    const std::int64_t needed = required_window(u, v);
    if (window_top < needed)
        throw WindowTooSmall("window top " + std::to_string(window_top) + " too small for M_" +
                             to_string(u) + ", M_" + to_string(v) + ": need at least " +
                             std::to_string(needed) +
                             " so no relation or generator is truncated away");
}

} // namespace oracle_detail

std::size_t oracle_hom_dim(const Arc& u, const Arc& v, std::int64_t window_top)
{
    return oracle_hom_dim_over<linalg::Rational>(u, v, window_top);
}

std::size_t oracle_ext_dim(const Arc& u, const Arc& v, std::int64_t window_top)
{
    return oracle_ext_dim_over<linalg::Rational>(u, v, window_top);
}

std::size_t oracle_direct_hom_dim(const Arc& u, const Arc& v, std::int64_t window_top)
{
    return oracle_direct_hom_dim_over<linalg::Rational>(u, v, window_top);
}

DegreewiseDims morphism_ker_coker_dims(const Arc& u, const Arc& v, std::int64_t window_top)
{
    oracle_detail::check_window(u, v, window_top);

    // Existence of a nonzero map; its components are then unique up to scale.
    const Endpoint a = u.left(), c = v.left();
    if (!(a <= c && c < u.right() && u.right() <= v.right()))
        throw NoMorphism("no nonzero morphism M_" + to_string(u) + " -> M_" + to_string(v) +
                         ": condition a <= c < b <= d fails");

    const GradedModuleRep source = module_of_arc(u, window_top);
    const GradedModuleRep target = module_of_arc(v, window_top);

    // The generator of M_u maps to y^(d-b) times the generator of M_v; the
    // higher components follow by commuting with y. Both reps are interval
    // modules with identity internal maps, so f_(d+1) = y_N(d) f_d.
    std::map<std::int64_t, RationalMatrix> f;
    const std::int64_t generator_degree = -u.right_value();
    RationalMatrix component = RationalMatrix::identity(1);
    f.emplace(generator_degree, component);
    for (std::int64_t d = generator_degree;; ++d) {
        if (source.truncation_top && d >= *source.truncation_top)
            break;
        if (source.dim_at(d + 1) == 0)
            break;
        component = target.y_at(d) * component;
        f.emplace(d + 1, component);
    }

    DegreewiseDims dims;
    auto rank_at = [&](std::int64_t d) -> std::size_t {
        const auto it = f.find(d);
        return it == f.end() ? 0 : linalg::rank(it->second);
    };
    for (const auto& [d, dim] : source.components) {
        const std::size_t k = dim - rank_at(d);
        if (k != 0)
            dims.kernel[d] = k;
    }
    for (const auto& [d, dim] : target.components) {
        const std::size_t k = dim - rank_at(d);
        if (k != 0)
            dims.cokernel[d] = k;
    }
    return dims;
}

} // namespace arcmodel
