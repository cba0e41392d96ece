// Acceptance suite: every release gate in one binary, one line per criterion.
// All checks are exact; there are no tolerances anywhere in this model.

#include "arcmodel/cli.hpp"
#include "arcmodel/dualities.hpp"
#include "arcmodel/exceptional.hpp"
#include "arcmodel/hom.hpp"
#include "arcmodel/json_io.hpp"
#include "arcmodel/ncp.hpp"
#include "arcmodel/oracle.hpp"
#include "arcmodel/saturation.hpp"
#include "test_support.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace arcmodel;
using testsupport::all_arcs;
using testsupport::brute_force_noncrossing_count;
using testsupport::Gen;

namespace {

std::vector<Endpoint> integer_points(std::int64_t lo, std::int64_t hi)
{
    std::vector<Endpoint> points;
    for (std::int64_t z = lo; z <= hi; ++z)
        points.push_back(Endpoint::finite(z));
    return points;
}

// Every saturated set over <= 5 points: consecutive integers, with and
// without -inf in place of the first point.
std::vector<SaturatedArcSet> exhaustive_small_sets()
{
    std::vector<SaturatedArcSet> sets;
    for (std::int64_t n = 0; n <= 5; ++n) {
        for (const SaturatedArcSet& s : enumerate_saturated(integer_points(0, n - 1)))
            sets.push_back(s);
        if (n >= 1) {
            std::vector<Endpoint> points = integer_points(0, n - 2);
            points.push_back(Endpoint::minus_infinity());
            for (const SaturatedArcSet& s : enumerate_saturated(points))
                sets.push_back(s);
        }
    }
    return sets;
}

bool criterion_oracle_equivalence(std::string& detail)
{
    const std::vector<Arc> arcs = all_arcs(-4, 4);
    if (arcs.size() != 45) {
        detail = "expected 45 arcs, got " + std::to_string(arcs.size());
        return false;
    }
    const std::int64_t window = 8;
    std::size_t mismatches = 0;
    for (const Arc& u : arcs)
        for (const Arc& v : arcs) {
            const auto h = static_cast<std::size_t>(hom_dim(u, v));
            const auto e = static_cast<std::size_t>(ext_dim(u, v));
            if (oracle_hom_dim(u, v, window) != h || oracle_direct_hom_dim(u, v, window) != h ||
                oracle_ext_dim(u, v, window) != e)
                ++mismatches;
        }
    detail = std::to_string(arcs.size() * arcs.size()) + " ordered pairs, " +
             std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
}

bool criterion_catalan_counts(std::string& detail)
{
    const std::vector<std::size_t> expected = {1, 2, 5, 14, 42, 132};
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto plain = enumerate_saturated(integer_points(0, static_cast<std::int64_t>(n) - 1));
        if (plain.size() != expected[n - 1] ||
            plain.size() != brute_force_noncrossing_count(n)) {
            detail = "n=" + std::to_string(n) + " gave " + std::to_string(plain.size());
            return false;
        }
        std::vector<Endpoint> with_inf = integer_points(0, static_cast<std::int64_t>(n) - 1);
        with_inf.push_back(Endpoint::minus_infinity());
        const auto extended = enumerate_saturated(with_inf);
        if (extended.size() != brute_force_noncrossing_count(n + 1)) {
            detail = "n=" + std::to_string(n) + " with -inf gave " +
                     std::to_string(extended.size());
            return false;
        }
    }
    detail = "counts 1,2,5,14,42,132 and Catalan(n+1) with -inf";
    return true;
}

bool criterion_alpha_phi(std::string& detail)
{
    std::vector<SaturatedArcSet> sets = exhaustive_small_sets();
    const std::size_t exhaustive = sets.size();
    Gen gen(101);
    for (int trial = 0; trial < 500; ++trial)
        sets.push_back(gen.saturated(-6, 6, 5));

    for (const SaturatedArcSet& s : sets) {
        const NCPartition p = phi(s);
        if (!(alpha(p) == s) || !(phi(alpha(p)) == p)) {
            detail = "round trip failed on a set of size " + std::to_string(s.size());
            return false;
        }
    }
    const auto commutes = [](const SaturatedArcSet& s, const SaturatedArcSet& t) {
        const NCPartition p = phi(s), q = phi(t);
        return phi(meet(s, t)) == ncp_meet(p, q) && phi(join(s, t)) == ncp_join(p, q) &&
               alpha(ncp_meet(p, q)) == meet(s, t) && alpha(ncp_join(p, q)) == join(s, t);
    };
    // every pair over 5 consecutive points, then a sliding pair over the rest
    const auto five = enumerate_saturated(integer_points(0, 4));
    for (const SaturatedArcSet& s : five)
        for (const SaturatedArcSet& t : five)
            if (!commutes(s, t)) {
                detail = "lattice homomorphism failed on an exhaustive pair";
                return false;
            }
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
        if (!commutes(sets[i], sets[i + 1])) {
            detail = "lattice homomorphism failed at pair " + std::to_string(i);
            return false;
        }
    detail = std::to_string(exhaustive) + " exhaustive + 500 random sets";
    return true;
}

bool criterion_closure_laws(std::string& detail)
{
    Gen gen(202);
    for (int trial = 0; trial < 1000; ++trial) {
        const ArcSet f = gen.arc_set(-6, 6, 5);
        const SaturatedArcSet closed = saturate(f);
        if (!f.subset_of(closed.arcs())) {
            detail = "not extensive";
            return false;
        }
        if (!(saturate(closed.arcs()) == closed)) {
            detail = "not idempotent";
            return false;
        }
        ArcSet g = f;
        g.insert(gen.arc(-6, 6));
        if (!closed.arcs().subset_of(saturate(g).arcs())) {
            detail = "not monotone";
            return false;
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const SaturatedArcSet s = gen.saturated(-6, 6, 4);
        const SaturatedArcSet t = gen.saturated(-6, 6, 4);
        const SaturatedArcSet u = gen.saturated(-6, 6, 4);
        const bool laws = meet(s, t) == meet(t, s) && join(s, t) == join(t, s) &&
                          meet(s, meet(t, u)) == meet(meet(s, t), u) &&
                          join(s, join(t, u)) == join(join(s, t), u) &&
                          meet(s, join(s, t)) == s && join(s, meet(s, t)) == s;
        if (!laws) {
            detail = "lattice law failed at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "1000 closure samples, 1000 lattice triples";
    return true;
}

bool criterion_cone_fiber_closure(std::string& detail)
{
    Gen gen(303);
    for (int trial = 0; trial < 1000; ++trial) {
        const SaturatedArcSet s = gen.saturated(-5, 5, 4);
        for (const Arc& u : s)
            for (const Arc& v : s) {
                if (hom_dim(u, v) == 1)
                    for (const ShiftedArc& w : cone(u, v))
                        if (!s.contains(w.arc)) {
                            detail = "cone arc escaped at trial " + std::to_string(trial);
                            return false;
                        }
                if (ext_dim(u, v) == 1)
                    for (const ShiftedArc& w : fiber(u, v))
                        if (!s.contains(w.arc)) {
                            detail = "fiber arc escaped at trial " + std::to_string(trial);
                            return false;
                        }
            }
    }
    detail = "1000 random saturated sets";
    return true;
}

bool criterion_exceptional(std::string& detail)
{
    Gen gen(404);
    for (int trial = 0; trial < 500; ++trial) {
        const ArcSet f = gen.arc_set(-5, 5, 5);
        const ExceptionalSequence seq = exceptional_sequence(f);
        const auto& e = seq.arcs;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                if (rhom_dim(e[j], e[i], 0) != 0 || rhom_dim(e[j], e[i], 1) != 0 ||
                    ext_dim(e[i], e[j]) != 0) {
                    detail = "vanishing pattern failed at trial " + std::to_string(trial);
                    return false;
                }
        if (!(saturate(ArcSet(std::vector<Arc>(e.begin(), e.end()))) == saturate(f))) {
            detail = "sequence does not regenerate the closure";
            return false;
        }
        const ChainQuiver q = endo_quiver(seq);
        for (std::size_t a = 0; a < q.chains.size(); ++a) {
            const auto& chain = q.chains[a];
            for (std::size_t i = 0; i < chain.size(); ++i)
                for (std::size_t j = i + 1; j < chain.size(); ++j)
                    if (chain[i].left() != chain[j].left() ||
                        chain[i].right_value() >= chain[j].right_value() ||
                        hom_dim(chain[i], chain[j]) != 1) {
                        detail = "within-chain pattern failed";
                        return false;
                    }
            for (std::size_t b = 0; b < q.chains.size(); ++b) {
                if (a == b)
                    continue;
                for (const Arc& u : chain)
                    for (const Arc& v : q.chains[b])
                        if (hom_dim(u, v) != 0 || ext_dim(u, v) != 0) {
                            detail = "across-chain pattern failed";
                            return false;
                        }
            }
        }
    }
    detail = "500 random generating sets";
    return true;
}

bool criterion_duality(std::string& detail)
{
    const std::vector<Arc> arcs = all_arcs(-4, 4);
    for (const Arc& u : arcs)
        for (const Arc& v : arcs) {
            for (const std::int64_t j : {-3, 0, 4})
                for (int n = -1; n <= 2; ++n)
                    if (rhom_dim(u, v, n) !=
                        rhom_dim(reflect(v, j), reflect(u, j), n + shift_delta(v) - shift_delta(u))) {
                        detail = "duality exchange failed";
                        return false;
                    }
            for (const std::int64_t i : {-2, 1, 5})
                for (int n = -1; n <= 2; ++n)
                    if (rhom_dim(u, v, n) != rhom_dim(twist(u, i), twist(v, i), n)) {
                        detail = "twist equivariance failed";
                        return false;
                    }
        }
    for (const Arc& u : arcs)
        for (const std::int64_t j : {-3, 0, 4})
            if (reflect(u, j) != twist(reflect(u, 0), j) || reflect(reflect(u, j), j) != u) {
                detail = "s_j = (j) s_0 or involutivity failed";
                return false;
            }
    detail = "all pairs over {-inf} u [-4,4], j in {-3,0,4}, i in {-2,1,5}";
    return true;
}

bool criterion_twist_rigidity(std::string& detail)
{
    for (const SaturatedArcSet& s : exhaustive_small_sets())
        for (const std::int64_t i : {-3, -1, 1, 2}) {
            if (is_twist_stable(s, i) != s.empty()) {
                detail = "a nonempty set claimed stability under " + std::to_string(i);
                return false;
            }
        }
    detail = "all saturated sets on <= 5 points, i in {-3,-1,1,2}";
    return true;
}

bool criterion_cli(std::string& detail)
{
    std::ostringstream out, err;
    const int code =
        cli::run({"verify", "--range", "-4..4", "--window", "8"}, out, err);
    if (code != 0) {
        detail = "verify exited " + std::to_string(code);
        return false;
    }

    Gen gen(505);
    for (int trial = 0; trial < 100; ++trial) {
        const SaturatedArcSet s = gen.saturated(-6, 6, 5);
        const std::string original = io::dump(io::saturated_to_json(s)) + "\n";

        std::ostringstream to_out, to_err;
        if (cli::run({"to-ncp", original.substr(0, original.size() - 1)}, to_out, to_err) != 0) {
            detail = "to-ncp failed";
            return false;
        }
        std::string partition = to_out.str();
        partition.pop_back();

        std::ostringstream from_out, from_err;
        if (cli::run({"from-ncp", partition}, from_out, from_err) != 0) {
            detail = "from-ncp failed";
            return false;
        }
        if (from_out.str() != original) {
            detail = "round trip not byte-identical at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "verify exit 0; 100 byte-identical round trips";
    return true;
}

} // namespace

int main()
{
    struct Criterion {
        int number;
        std::string name;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence, exhaustive {-inf} u [-4,4], window 8", criterion_oracle_equivalence},
        {2, "Catalan counts for enumerate_saturated", criterion_catalan_counts},
        {3, "alpha/phi inversion and lattice homomorphism", criterion_alpha_phi},
        {4, "closure-operator and lattice laws", criterion_closure_laws},
        {5, "cone/fiber closure of saturated sets", criterion_cone_fiber_closure},
        {6, "exceptional sequences and endomorphism quivers", criterion_exceptional},
        {7, "duality exchange and twist equivariance", criterion_duality},
        {8, "finite twist-rigidity", criterion_twist_rigidity},
        {9, "CLI verify and to-ncp/from-ncp round trips", criterion_cli},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        }
        catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << c.number << " (" << c.name << "): "
                  << (ok ? "PASS" : "FAIL") << " [" << detail << "]\n";
        if (!ok)
            ++failures;
    }
    return failures;
}
