#include <doctest.h>

#include "test_util.hpp"
#include "unifat/fatgraph.hpp"
#include "unifat/reversals.hpp"

using namespace unifat;
using namespace fixtures;

TEST_CASE("classify_reversal on the fixtures") {
    CHECK(classify_reversal(t1(), 1, 2) == ReversalKind::Gluing);
    CHECK(classify_reversal(p1(), 1, 2) == ReversalKind::Slicing);
    CHECK(classify_reversal(o2(), 1, 2) == ReversalKind::HalfFlipping);
    CHECK_THROWS_AS(classify_reversal(t1(), 1, 1), domain_error);
    CHECK_THROWS_AS(classify_reversal(t1(), 1, 3), domain_error);  // root sector
    CHECK_THROWS_AS(classify_reversal(t1(), 0, 2), domain_error);
}

TEST_CASE("glue T1 -> P1 and T2 -> X2 with the exact orientation updates") {
    CHECK(glue(t1(), 1, 2).graph == p1());
    CHECK(glue(t2(), 1, 3).graph == x2());  // omega(2) negated per the interior rule
}

TEST_CASE("genus delta of gluing is +1") {
    for (const Fatgraph& f : {t1(), t2(), y2(), x2()}) {
        for (const Reversal& r : legal_reversals(f)) {
            if (r.kind != ReversalKind::Gluing) continue;
            CHECK(euler_genus(glue(f, r.i, r.j).graph) == euler_genus(f) + 1);
        }
    }
}

TEST_CASE("slice P1 -> T1 up to canonical form, X2 -> Y2 exactly") {
    CHECK(canonical_form(slice(p1(), 1, 2).graph) == canonical_form(t1()));
    CHECK(slice(x2(), 2, 4).graph == y2());
}

TEST_CASE("slice after glue is the canonical identity") {
    for (const Fatgraph& f : {t1(), t2(), y2(), x2(), o2()}) {
        for (const Reversal& r : legal_reversals(f)) {
            if (r.kind != ReversalKind::Gluing) continue;
            Fatgraph g = glue(f, r.i, r.j).graph;
            CHECK(classify_reversal(g, r.i, r.j) == ReversalKind::Slicing);
            CHECK(canonical_form(slice(g, r.i, r.j).graph) == canonical_form(f));
        }
    }
}

TEST_CASE("half_flip keeps genus and is a canonical involution") {
    for (const Fatgraph& f : {t2(), o2(), x2(), y2()}) {
        for (const Reversal& r : legal_reversals(f)) {
            if (r.kind != ReversalKind::HalfFlipping) continue;
            Fatgraph g = half_flip(f, r.i, r.j).graph;
            CHECK(euler_genus(g) == euler_genus(f));
            CHECK(static_cast<int>(g.vertices().size()) == static_cast<int>(f.vertices().size()));
            CHECK(classify_reversal(g, r.i, r.j) == ReversalKind::HalfFlipping);
            CHECK(canonical_form(half_flip(g, r.i, r.j).graph) == canonical_form(f));
        }
    }
}

TEST_CASE("half_flip of O2 at (1,2) creates a mono-directional ribbon") {
    Fatgraph g = half_flip(o2(), 1, 2).graph;
    CHECK(euler_genus(g) == 2);
    CHECK_FALSE(is_orientable(g));
}

TEST_CASE("slicing and half-flipping preconditions") {
    CHECK_THROWS_AS(slice(t1(), 1, 2), domain_error);      // distinct vertices
    CHECK_THROWS_AS(half_flip(p1(), 1, 2), domain_error);  // opposite orientations
    CHECK_THROWS_AS(glue(p1(), 1, 2), domain_error);       // same vertex
}

TEST_CASE("legal_reversals enumerates every pair exactly once") {
    CHECK(legal_reversals(t1()) ==
          std::vector<Reversal>{{1, 2, ReversalKind::Gluing}});
    CHECK(legal_reversals(p1()) ==
          std::vector<Reversal>{{1, 2, ReversalKind::Slicing}});
    for (const Fatgraph& f : {t2(), x2(), o2()}) {
        const auto moves = legal_reversals(f);
        const int two_n = 2 * f.n();
        CHECK(static_cast<int>(moves.size()) == two_n * (two_n - 1) / 2);
    }
}

TEST_CASE("slice_m_ribbon") {
    // P1: r^R = 2n+1, mirror pair (1,2)
    Fatgraph p = p1();
    CHECK(m_ribbon_slice_sectors(p, p.ribbons()[0]) == std::pair<Sector, Sector>{1, 2});
    CHECK(euler_genus(slice_m_ribbon(p, 0).graph) == 0);

    // X2: ribbon with origin 1 slices at (2,4) onto Y2
    Fatgraph x = x2();
    int idx = x.ribbon_owning_wedge(1);
    CHECK(m_ribbon_slice_sectors(x, x.ribbons()[static_cast<size_t>(idx)]) ==
          std::pair<Sector, Sector>{2, 4});
    CHECK(slice_m_ribbon(x, idx).graph == y2());

    // bi-directional ribbons are rejected
    Fatgraph o = o2();
    CHECK_THROWS_AS(slice_m_ribbon(o, 0), domain_error);
}

TEST_CASE("ribbon bijection follows the boundary sides") {
    // glue(T2,1,3): the outer ribbon keeps its terminus side, the inner one
    // inherits the origin side.
    Fatgraph t = t2();
    ApplyResult res = glue(t, 1, 3);
    const Fatgraph& x = res.graph;
    REQUIRE(res.ribbon_map.size() == 2);
    const Ribbon& outer_img = x.ribbons()[static_cast<size_t>(res.ribbon_map[0])];
    const Ribbon& inner_img = x.ribbons()[static_cast<size_t>(res.ribbon_map[1])];
    CHECK(outer_img.origin == 2);
    CHECK(outer_img.terminus == 5);
    CHECK(inner_img.origin == 1);
    CHECK(inner_img.terminus == 4);
}

TEST_CASE("direction changes match the intersects criterion on the worked slices") {
    Fatgraph x = x2();
    ApplyResult res = slice(x, 2, 4);
    for (size_t k = 0; k < x.ribbons().size(); ++k) {
        const Ribbon& before = x.ribbons()[k];
        const Ribbon& after = res.graph.ribbons()[static_cast<size_t>(res.ribbon_map[k])];
        const bool changed = before.direction != after.direction;
        CHECK(changed == intersects_interval(before, 2, 4));
    }
}
