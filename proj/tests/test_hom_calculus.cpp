#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcmodel/hom.hpp"
#include "test_support.hpp"

using namespace arcmodel;
using testsupport::all_arcs;
using testsupport::fin;
using testsupport::inf;

TEST_CASE("hom_dim")
{
    CHECK(hom_dim(fin(0, 3), fin(1, 4)) == 1);
    CHECK(hom_dim(fin(1, 4), fin(0, 3)) == 0);
    CHECK(hom_dim(inf(2), inf(5)) == 1);
    CHECK(hom_dim(fin(0, 2), fin(2, 4)) == 0);
}

TEST_CASE("ext_dim is extensions of the first argument by the second")
{
    CHECK(ext_dim(fin(1, 4), fin(0, 2)) == 1);
    CHECK(ext_dim(fin(2, 4), fin(0, 2)) == 1);
    CHECK(ext_dim(inf(4), fin(0, 2)) == 0);
    CHECK(ext_dim(fin(1, 3), inf(2)) == 1);
}

TEST_CASE("rhom_dim packages both degrees")
{
    CHECK(rhom_dim(fin(0, 3), fin(1, 4), 0) == 1);
    CHECK(rhom_dim(fin(1, 4), fin(0, 2), 1) == 1);
    CHECK(rhom_dim(fin(0, 3), fin(1, 4), 2) == 0);
    CHECK(rhom_dim(fin(0, 3), fin(1, 4), -1) == 0);
}

TEST_CASE("ker_coker")
{
    CHECK(ker_coker(fin(0, 3), fin(1, 4)) ==
          std::pair(std::optional(fin(0, 1)), std::optional(fin(3, 4))));
    CHECK(ker_coker(fin(0, 3), fin(0, 4)) ==
          std::pair(std::optional<Arc>(), std::optional(fin(3, 4))));
    CHECK(ker_coker(fin(0, 3), fin(0, 3)) == std::pair(std::optional<Arc>(), std::optional<Arc>()));
    CHECK_THROWS_AS(ker_coker(fin(1, 4), fin(0, 3)), NoMorphism);
}

TEST_CASE("cone")
{
    CHECK(cone(fin(0, 3), fin(1, 4)) ==
          DecompositionResult{{fin(0, 1), 1}, {fin(3, 4), 0}});
    CHECK(cone(fin(0, 3), fin(0, 3)).empty());
    CHECK(cone(inf(2), inf(5)) == DecompositionResult{{fin(2, 5), 0}});
    CHECK_THROWS_AS(cone(fin(0, 2), fin(3, 5)), NoMorphism);
}

TEST_CASE("fiber")
{
    CHECK(fiber(fin(1, 4), fin(0, 2)) ==
          DecompositionResult{{fin(1, 2), 0}, {fin(0, 4), 0}});
    CHECK(fiber(fin(2, 4), fin(0, 2)) == DecompositionResult{{fin(0, 4), 0}});
    CHECK(fiber(fin(1, 3), inf(2)) == DecompositionResult{{fin(1, 2), 0}, {inf(3), 0}});
    CHECK_THROWS_AS(fiber(inf(4), fin(0, 2)), NoExtension);
}

TEST_CASE("calculus invariants on all arcs over {-inf} u [-3,3]")
{
    const std::vector<Arc> arcs = all_arcs(-3, 3);
    for (const Arc& u : arcs) {
        // every indecomposable is exceptional
        CHECK(hom_dim(u, u) == 1);
        CHECK(ext_dim(u, u) == 0);
        for (const Arc& v : arcs) {
            if (u != v)
                CHECK(hom_dim(u, v) * hom_dim(v, u) == 0);
            CHECK(hom_dim(u, v) * ext_dim(u, v) == 0);
            if (u.left().is_minus_infinity())
                CHECK(ext_dim(u, v) == 0); // projective source
            if (u.left().is_finite() && v.left().is_minus_infinity())
                CHECK(hom_dim(u, v) == 0); // no map from torsion to free
        }
    }
}

TEST_CASE("cone and fiber arcs use only the four input endpoints")
{
    const std::vector<Arc> arcs = all_arcs(-3, 3);
    const auto endpoint_of_inputs = [](const Arc& w, const Arc& u, const Arc& v) {
        const auto from = [&](const Endpoint& e) {
            return e == u.left() || e == u.right() || e == v.left() || e == v.right();
        };
        return from(w.left()) && from(w.right());
    };
    for (const Arc& u : arcs)
        for (const Arc& v : arcs) {
            if (hom_dim(u, v) == 1)
                for (const ShiftedArc& s : cone(u, v))
                    CHECK(endpoint_of_inputs(s.arc, u, v));
            if (ext_dim(u, v) == 1)
                for (const ShiftedArc& s : fiber(u, v)) {
                    CHECK(endpoint_of_inputs(s.arc, u, v));
                    CHECK(s.shift == 0);
                }
        }
}
