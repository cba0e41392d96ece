#pragma once

// Independent ground truth for the combinatorial Hom/Ext formulas: build
// M_(a,b) as an explicit graded vector space with its y-action and recompute
// dimensions by exact linear algebra. Two separate routes are provided, the
// resolution route (kernel/cokernel of multiplication by a power of y, from
// the minimal projective resolution of a cyclic module) and a direct solver
// for degree-0 maps commuting with y. Free modules are truncated at a window
// top; the window preconditions below guarantee that truncation can never
// change a kernel or cokernel, and violations are hard errors.

#include "arcmodel/arc.hpp"
#include "arcmodel/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace arcmodel {

using RationalMatrix = linalg::Matrix<linalg::Rational>;

// Explicit finite-dimensional graded module: nonzero component dimensions and
// the degree-raising maps V_d -> V_{d+1}. truncation_top marks where a free
// module was cut; degrees beyond it are unknown, not zero.
struct GradedModuleRep {
    std::map<std::int64_t, std::size_t> components;
    std::map<std::int64_t, RationalMatrix> maps;
    std::optional<std::int64_t> truncation_top;

    // Zero outside the support; throws WindowTooSmall beyond a truncation.
    [[nodiscard]] std::size_t dim_at(std::int64_t d) const;

    // The map V_d -> V_{d+1}, zero where absent; throws WindowTooSmall for
    // the unrepresented map out of a truncation top.
    [[nodiscard]] RationalMatrix y_at(std::int64_t d) const;
};

// For finite (a,b): one basis vector in each degree -b..-a-1 with identity
// y-maps and zero out of the top (the cyclic module S/(y^(b-a))(b)). For
// (-inf,b): one basis vector in each degree -b..window_top, truncated.
GradedModuleRep module_of_arc(const Arc& u, std::int64_t window_top);

// The window floor shared by the oracle queries on the pair (u,v):
// one more than every finite -left (so relation checks survive) and at least
// every generator degree -right.
std::int64_t required_window(const Arc& u, const Arc& v);

std::size_t oracle_hom_dim(const Arc& u, const Arc& v, std::int64_t window_top);
std::size_t oracle_ext_dim(const Arc& u, const Arc& v, std::int64_t window_top);
std::size_t oracle_direct_hom_dim(const Arc& u, const Arc& v, std::int64_t window_top);

// Degreewise kernel and cokernel dimensions of the canonical nonzero
// morphism M_u -> M_v, realized as explicit componentwise matrices.
// Throws NoMorphism when the Hom space vanishes.
struct DegreewiseDims {
    std::map<std::int64_t, std::size_t> kernel;
    std::map<std::int64_t, std::size_t> cokernel;
};
DegreewiseDims morphism_ker_coker_dims(const Arc& u, const Arc& v, std::int64_t window_top);

// Field-parameterized variants backing the field-independence checks; the
// plain functions above fix F = linalg::Rational.
namespace oracle_detail {

void check_window(const Arc& u, const Arc& v, std::int64_t window_top);

template <class F>
linalg::Matrix<F> lift(const RationalMatrix& m)
{
    linalg::Matrix<F> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const linalg::Rational& r = m.at(i, j);
            out.at(i, j) = F(r.num()) / F(r.den());
        }
    return out;
}

// Composite y^k: V_start -> V_(start+k).
template <class F>
linalg::Matrix<F> power_map(const GradedModuleRep& v, std::int64_t start, std::int64_t k)
{
    linalg::Matrix<F> acc = linalg::Matrix<F>::identity(v.dim_at(start));
    for (std::int64_t step = 0; step < k; ++step)
        acc = lift<F>(v.y_at(start + step)) * acc;
    return acc;
}

} // namespace oracle_detail

template <class F>
std::size_t oracle_hom_dim_over(const Arc& u, const Arc& v, std::int64_t window_top)
{
    oracle_detail::check_window(u, v, window_top);
    const GradedModuleRep target = module_of_arc(v, window_top);
    if (u.left().is_minus_infinity()) {
        // Hom(S(d), N) = N_(-d); no truncated map-solving for free sources.
        return target.dim_at(-u.right_value());
    }
    const std::int64_t c = u.left().value();
    const std::int64_t d = u.right_value();
    return linalg::kernel_dim(oracle_detail::power_map<F>(target, -d, d - c));
}

template <class F>
std::size_t oracle_ext_dim_over(const Arc& u, const Arc& v, std::int64_t window_top)
{
    if (u.left().is_minus_infinity())
        return 0; // projective source
    oracle_detail::check_window(u, v, window_top);
    const GradedModuleRep target = module_of_arc(v, window_top);
    const std::int64_t c = u.left().value();
    const std::int64_t d = u.right_value();
    return linalg::cokernel_dim(oracle_detail::power_map<F>(target, -d, d - c));
}

// Dimension of the space of degree-0 maps f: M_u -> M_v with f y = y f,
// solved componentwise as one linear system.
template <class F>
std::size_t oracle_direct_hom_dim_over(const Arc& u, const Arc& v, std::int64_t window_top)
{
    oracle_detail::check_window(u, v, window_top);
    const GradedModuleRep m = module_of_arc(u, window_top);
    const GradedModuleRep n = module_of_arc(v, window_top);

    // Unknowns: the entries of f_d for every degree where both sides live.
    std::map<std::int64_t, std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& [d, dim_m] : m.components) {
        const std::size_t dim_n = n.dim_at(d);
        if (dim_n == 0)
            continue;
        offset[d] = unknowns;
        unknowns += dim_m * dim_n;
    }

    // Count constraint rows: one per entry of Hom(M_d, N_(d+1)) for each
    // degree d where the y-map out of M_d is represented.
    std::size_t rows = 0;
    for (const auto& [d, dim_m] : m.components) {
        if (m.truncation_top && d >= *m.truncation_top)
            continue; // y out of the truncation top is unknown, not zero
        rows += dim_m * n.dim_at(d + 1);
    }

    linalg::Matrix<F> system(rows, unknowns);
    std::size_t row = 0;
    for (const auto& [d, dim_m] : m.components) {
        if (m.truncation_top && d >= *m.truncation_top)
            continue;
        const std::size_t dim_n_next = n.dim_at(d + 1);
        if (dim_n_next == 0)
            continue;
        const auto y_n = oracle_detail::lift<F>(n.y_at(d));
        const auto y_m = oracle_detail::lift<F>(m.y_at(d));
        const std::size_t dim_n = n.dim_at(d);
        const std::size_t dim_m_next = m.dim_at(d + 1);
        for (std::size_t r = 0; r < dim_n_next; ++r)
            for (std::size_t q = 0; q < dim_m; ++q) {
                // (y_N f_d)_{r,q} - (f_{d+1} y_M)_{r,q} = 0
                if (dim_n != 0) {
                    const std::size_t base = offset.at(d);
                    for (std::size_t p = 0; p < dim_n; ++p)
                        system.at(row, base + p * dim_m + q) =
                            system.at(row, base + p * dim_m + q) + y_n.at(r, p);
                }
                if (dim_m_next != 0 && offset.count(d + 1)) {
                    const std::size_t base = offset.at(d + 1);
                    for (std::size_t s = 0; s < dim_m_next; ++s)
                        system.at(row, base + r * dim_m_next + s) =
                            system.at(row, base + r * dim_m_next + s) - y_m.at(s, q);
                }
                ++row;
            }
    }
    return unknowns - linalg::rank(std::move(system));
}

} // namespace arcmodel
