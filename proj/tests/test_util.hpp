#pragma once

#include "unifat/fatgraph.hpp"

#include <vector>

// Shared canonical fixtures. Each returns a freshly built value; tests mutate
// nothing (Fatgraph is immutable) but independent copies keep cases isolated.
namespace fixtures {

using unifat::Fatgraph;

// One-ribbon plane tree: sigma (1 3)(2), all +.
inline Fatgraph t1() { return Fatgraph::from_cycles(1, {{1, 3}, {2}}, {1, 1, 1}); }

// Projective-plane loop: sigma (1 2 3), omega (+,-,+).
inline Fatgraph p1() { return Fatgraph::from_cycles(1, {{1, 2, 3}}, {1, -1, 1}); }

// Two nested trivial ribbons: sigma (1 5)(2 4)(3), all +.
inline Fatgraph t2() {
    return Fatgraph::from_cycles(2, {{1, 5}, {2, 4}, {3}}, {1, 1, 1, 1, 1});
}

// Two crossing m-ribbons, genus 1: sigma (1 3 5)(2 4), omega (+,-,-,+,+).
inline Fatgraph x2() {
    return Fatgraph::from_cycles(2, {{1, 3, 5}, {2, 4}}, {1, -1, -1, 1, 1});
}

// Plane tree with one flipped leaf: sigma (1 3 5)(2)(4), omega (+,-,+,+,+).
inline Fatgraph y2() {
    return Fatgraph::from_cycles(2, {{1, 3, 5}, {2}, {4}}, {1, -1, 1, 1, 1});
}

// Orientable genus-2 single vertex: sigma (1 4 3 2 5), all +.
inline Fatgraph o2() {
    return Fatgraph::from_cycles(2, {{1, 4, 3, 2, 5}}, {1, 1, 1, 1, 1});
}

// Fig. 2(B): multicellular validation fixture with explicit gamma.
inline Fatgraph f2b() {
    return Fatgraph::from_cycles(3, {{1, 5, 3, 7}, {2, 4, 6}}, {1, 1, -1, -1, 1, 1, 1},
                                 {{1, 2, 3, 4, 7}, {5, 6}});
}

}  // namespace fixtures
