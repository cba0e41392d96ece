#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcmodel/dualities.hpp"
#include "arcmodel/hom.hpp"
#include "test_support.hpp"

using namespace arcmodel;
using testsupport::all_arcs;
using testsupport::arcs;
using testsupport::fin;
using testsupport::Gen;
using testsupport::inf;

TEST_CASE("twist")
{
    CHECK(twist(fin(0, 2), 1) == fin(1, 3));
    CHECK(twist(inf(3), -2) == inf(1));
    CHECK(twist(fin(5, 7), 0) == fin(5, 7));
}

TEST_CASE("reflect")
{
    CHECK(reflect(fin(0, 2), 0) == fin(-2, 0));
    CHECK(reflect(inf(3), 1) == inf(-2));
    CHECK(reflect(fin(1, 2), 3) == fin(1, 2));
}

TEST_CASE("shift_delta")
{
    CHECK(shift_delta(fin(0, 2)) == 1);
    CHECK(shift_delta(inf(5)) == 0);
    CHECK(shift_delta(fin(7, 8)) == 1);
}

TEST_CASE("set and partition actions")
{
    const SaturatedArcSet s = saturate(arcs({fin(0, 1), fin(1, 2)}));
    CHECK(twist_set(s, 3).arcs() == arcs({fin(3, 4), fin(4, 5), fin(3, 5)}));
    CHECK(reflect_set(saturate(arcs({fin(0, 1)})), 0).arcs() == arcs({fin(-1, 0)}));
    CHECK(reflect_set(SaturatedArcSet{}, 5).empty());

    const NCPartition p = phi(s);
    CHECK(reflect_ncp(p, 0) == phi(reflect_set(s, 0)));
}

TEST_CASE("reflection symmetry")
{
    CHECK(is_reflection_symmetric(saturate(arcs({fin(0, 1)})), 1));
    CHECK(!is_reflection_symmetric(saturate(arcs({fin(0, 1)})), 0));
    CHECK(is_reflection_symmetric(SaturatedArcSet{}, -7));
}

TEST_CASE("s_j factors through s_0 and is an involution")
{
    for (const Arc& u : all_arcs(-3, 3))
        for (const std::int64_t j : {-3, 0, 1, 4}) {
            CHECK(reflect(u, j) == twist(reflect(u, 0), j));
            CHECK(reflect(reflect(u, j), j) == u);
        }
}

TEST_CASE("twists are autoequivalences for the calculus")
{
    const std::vector<Arc> sample = all_arcs(-3, 3);
    for (const Arc& u : sample)
        for (const Arc& v : sample)
            for (const std::int64_t i : {-2, 1, 5})
                for (int n = -1; n <= 2; ++n)
                    CHECK(rhom_dim(u, v, n) == rhom_dim(twist(u, i), twist(v, i), n));
}

TEST_CASE("duality exchanges Hom and Ext with the delta offset")
{
    const std::vector<Arc> sample = all_arcs(-3, 3);
    for (const Arc& u : sample)
        for (const Arc& v : sample)
            for (const std::int64_t j : {-3, 0, 4})
                for (int n = -1; n <= 2; ++n) {
                    const int reflected_degree = n + shift_delta(v) - shift_delta(u);
                    CHECK(rhom_dim(u, v, n) ==
                          rhom_dim(reflect(v, j), reflect(u, j), reflected_degree));
                }
}

TEST_CASE("actions preserve saturation and non-crossing")
{
    Gen gen(61);
    for (int trial = 0; trial < 100; ++trial) {
        const SaturatedArcSet s = gen.saturated(-4, 4, 4);
        // constructors re-verify the invariants, so these throw on violation
        const SaturatedArcSet t = twist_set(s, gen.pick(-3, 3));
        const std::int64_t j = gen.pick(-3, 3);
        const SaturatedArcSet r = reflect_set(s, j);
        CHECK(t.size() == s.size());
        CHECK(r.size() == s.size());
        CHECK(phi(r) == reflect_ncp(phi(s), j));
    }
}
