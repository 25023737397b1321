#include <doctest.h>

#include "test_util.hpp"
#include "unifat/fatgraph.hpp"

#include <set>

using namespace unifat;
using namespace fixtures;

TEST_CASE("validate accepts the Fig. 2(B) fixture with the captioned ribbons") {
    Fatgraph f = f2b();
    CHECK(f.boundary_components() == 2);
    REQUIRE(f.ribbons().size() == 3);

    auto find = [&](Sector wedge_start) -> const Ribbon& {
        return f.ribbons()[static_cast<size_t>(f.ribbon_owning_wedge(wedge_start))];
    };
    const Ribbon& r15 = find(1);  // ((1,5),(6,2))
    CHECK(r15.wedge_a == std::pair<Sector, Sector>{1, 5});
    CHECK(r15.wedge_b == std::pair<Sector, Sector>{6, 2});
    CHECK(r15.twist == Twist::Untwisted);
    CHECK(r15.direction == Direction::Bi);

    const Ribbon& r53 = find(5);  // ((5,3),(4,6))
    CHECK(r53.wedge_a == std::pair<Sector, Sector>{4, 6});
    CHECK(r53.wedge_b == std::pair<Sector, Sector>{5, 3});
    CHECK(r53.twist == Twist::Untwisted);
    CHECK(r53.direction == Direction::Mono);

    const Ribbon& r37 = find(3);  // ((3,7),(2,4))
    CHECK(r37.twist == Twist::Twisted);
}

TEST_CASE("validate accepts T1 and rejects the all-positive loop") {
    Fatgraph t = t1();
    REQUIRE(t.ribbons().size() == 1);
    CHECK(t.ribbons()[0].twist == Twist::Untwisted);
    CHECK(t.ribbons()[0].direction == Direction::Bi);

    // sigma (1 2 3) with omega all + has no admissible partner for (1,2).
    std::vector<Sector> sigma = {0, 2, 3, 1};
    std::vector<std::int8_t> omega = {0, 1, 1, 1};
    auto rep = Fatgraph::validate(1, sigma, omega);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
}

TEST_CASE("validate rejects broken root and non-bijective sigma") {
    // sigma(2n+1) != 1
    auto rep = Fatgraph::validate(1, {0, 3, 1, 2}, {0, 1, 1, 1});
    CHECK_FALSE(rep.ok);
    // repeated image
    rep = Fatgraph::validate(1, {0, 2, 2, 1}, {0, 1, 1, 1});
    CHECK_FALSE(rep.ok);
    // omega(1) != omega(2n+1)
    rep = Fatgraph::validate(1, {0, 3, 2, 1}, {0, 1, 1, -1});
    CHECK_FALSE(rep.ok);
    // n = 0 rejected
    rep = Fatgraph::validate(0, {0}, {0});
    CHECK_FALSE(rep.ok);
}

TEST_CASE("ribbons of P1 and O2") {
    Fatgraph p = p1();
    REQUIRE(p.ribbons().size() == 1);
    const Ribbon& r = p.ribbons()[0];
    CHECK(r.wedge_a == std::pair<Sector, Sector>{1, 2});
    CHECK(r.wedge_b == std::pair<Sector, Sector>{2, 3});
    CHECK(r.twist == Twist::Twisted);
    CHECK(r.direction == Direction::Mono);
    CHECK(r.origin == 1);
    CHECK(r.terminus == 3);

    Fatgraph o = o2();
    REQUIRE(o.ribbons().size() == 2);
    CHECK(o.ribbons()[0].origin == 1);
    CHECK(o.ribbons()[0].terminus == 4);
    CHECK(o.ribbons()[1].origin == 2);
    CHECK(o.ribbons()[1].terminus == 5);
    for (const Ribbon& rb : o.ribbons()) {
        CHECK(rb.twist == Twist::Untwisted);
        CHECK(rb.direction == Direction::Bi);
    }
}

TEST_CASE("euler genus of the fixtures") {
    CHECK(euler_genus(t1()) == 0);
    CHECK(euler_genus(p1()) == 1);
    CHECK(euler_genus(f2b()) == 1);
    CHECK(euler_genus(t2()) == 0);
    CHECK(euler_genus(x2()) == 1);
    CHECK(euler_genus(y2()) == 0);
    CHECK(euler_genus(o2()) == 2);
}

TEST_CASE("orientability criterion") {
    CHECK(is_orientable(t1()));
    CHECK_FALSE(is_orientable(p1()));
    CHECK(is_orientable(o2()));
    CHECK_FALSE(is_orientable(x2()));
    CHECK(is_orientable(y2()));
}

TEST_CASE("flip_vertex flips omega and reverses the cycle") {
    Fatgraph f = Fatgraph::from_cycles(1, {{1, 3}, {2}}, {1, -1, 1});
    Fatgraph g = flip_vertex(f, f.vertex_of(2));
    CHECK(g == t1());

    // Fig. 2 (B) -> (C): vertex (2,4,6) flips to (2,6,4).
    Fatgraph b = f2b();
    Fatgraph c = flip_vertex(b, b.vertex_of(2));
    CHECK(c.sigma(2) == 6);
    CHECK(c.sigma(6) == 4);
    CHECK(c.sigma(4) == 2);
    CHECK(c.omega(2) == -1);

    // double flip is the identity
    Fatgraph cc = flip_vertex(c, c.vertex_of(2));
    CHECK(cc == b);

    // genus, orientability and ribbon spans are flip-invariant
    Fatgraph y = y2();
    Fatgraph yf = flip_vertex(y, y.vertex_of(4));
    CHECK(euler_genus(yf) == euler_genus(y));
    CHECK(is_orientable(yf) == is_orientable(y));
    REQUIRE(yf.ribbons().size() == y.ribbons().size());
    for (size_t k = 0; k < y.ribbons().size(); ++k) {
        CHECK(yf.ribbons()[k].origin == y.ribbons()[k].origin);
        CHECK(yf.ribbons()[k].terminus == y.ribbons()[k].terminus);
    }
}

TEST_CASE("flip_vertex rejects large root vertices and unknown ids") {
    Fatgraph o = o2();
    CHECK_THROWS_AS(flip_vertex(o, o.root_vertex()), domain_error);
    CHECK_THROWS_AS(flip_vertex(o, 99), domain_error);
}

TEST_CASE("canonical form is flip-invariant and idempotent") {
    Fatgraph y = y2();
    for (int v = 0; v < static_cast<int>(y.vertices().size()); ++v) {
        if (v == y.root_vertex() && y.vertices()[static_cast<size_t>(v)].size() > 2) continue;
        CHECK(canonical_form(flip_vertex(y, v)) == canonical_form(y));
    }
    Fatgraph rep = canonical_rep(y);
    CHECK(canonical_form(rep) == canonical_form(y));
    CHECK(canonical_rep(rep) == rep);
}

TEST_CASE("crossing relation on O2 and T2") {
    Fatgraph o = o2();
    CHECK(crossing(o.ribbons()[0], o.ribbons()[1]));
    Fatgraph t = t2();
    CHECK_FALSE(crossing(t.ribbons()[0], t.ribbons()[1]));
    Fatgraph x = x2();
    CHECK(crossing(x.ribbons()[0], x.ribbons()[1]));
}

TEST_CASE("induced fatgraph of a nested trivial ribbon is T1") {
    Fatgraph t = t2();
    // component of the inner ribbon (2,4)-(3,3): ribbon index owning wedge 2
    int inner = t.ribbon_owning_wedge(2);
    Fatgraph ind = induced_fatgraph(t, {inner});
    CHECK(ind == t1());

    // identity up to re-rooting on an irreducible fatgraph
    Fatgraph x = x2();
    Fatgraph ix = induced_fatgraph(x, {0, 1});
    CHECK(ix == x);
    CHECK(euler_genus(ix) == euler_genus(x));
}
