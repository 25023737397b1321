#pragma once

#include "unifat/fatgraph.hpp"

#include <vector>

// Crossing-equivalence components with traces and gaps, the bicolored
// component tree and block tree, sector attachment, coverage, adjacency, and
// the E-/S-block counts feeding the distance formula.

namespace unifat {

struct Interval {
    Sector lo = 0;
    Sector hi = 0;  // closed [lo, hi]
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    int width() const { return hi - lo; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

struct Component {
    std::vector<int> ribbons;      // indices into Fatgraph::ribbons()
    std::vector<Sector> sectors;   // distinct trace sectors, ascending
    std::vector<Interval> trace;   // maximal boundary runs of the trace
    std::vector<Interval> gaps;    // [c_i, a_{i+1}] between consecutive runs
    bool trivial = false;          // exactly one bi-directional ribbon
    bool orientable = true;        // no mono-directional ribbon
    int genus = 0;                 // Euler genus of the induced fatgraph

    Sector trace_start() const { return trace.front().lo; }
    Interval span() const { return {trace.front().lo, trace.back().hi}; }
};

struct Block {
    std::vector<int> components;  // indices into Decomposition::components
    std::vector<Sector> sectors;
    std::vector<Interval> trace;
    std::vector<Interval> gaps;
    bool orientable = true;

    Sector trace_start() const { return trace.front().lo; }
};

// Rooted bicolored tree over black units (components, or blocks and trivial
// components) and white gaps; node 0 is the white root [1, 2n+1].
struct BicoloredTree {
    struct Node {
        bool black = false;
        int unit = -1;       // black only
        Interval gap{0, 0};  // white only
        int gap_owner = -1;  // white non-root: owning unit
        int parent = -1;
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    std::vector<int> unit_node;    // unit -> black node id
    std::vector<int> attachment;   // sector -> node id (Def. 6)

    int root() const { return 0; }
    int node_of(int unit) const { return unit_node[static_cast<size_t>(unit)]; }
    // Vertices on the unique path between a and b, endpoints included.
    std::vector<int> path(int a, int b) const;
    int distance(int a, int b) const;
    bool adjacent_nodes(int a, int b) const;
};

enum class Adjacency : std::uint8_t { NotAdjacent, Adjacent, MAdjacent };

struct Decomposition {
    std::vector<Component> components;
    BicoloredTree ctree;  // black units are component indices

    std::vector<Block> blocks;
    std::vector<int> block_of_component;  // -1 for trivial components
    // Block-tree units: blocks first, then trivial components in trace order.
    std::vector<int> btree_units;  // unit -> component index for trivial units, -1 for blocks
    BicoloredTree btree;

    std::vector<int> e_blocks;  // exposed blocks (Def. 7), ascending
    std::vector<int> s_blocks;  // super blocks among them (Def. 8)

    int h() const { return static_cast<int>(e_blocks.size()); }
    bool all_super() const { return !e_blocks.empty() && s_blocks.size() == e_blocks.size(); }
    bool block_non_orientable() const;
    int btree_unit_of_block(int block) const { return block; }
    int btree_unit_of_trivial(int component) const;
};

Decomposition decompose(const Fatgraph& f);

// Def. 6 attachment in the component tree.
int attachment(const Decomposition& d, Sector s);

// Black vertices (component indices) on the component-tree path joining the
// attachment vertices of i and j, in path order.
std::vector<int> tree_path_components(const Decomposition& d, Sector i, Sector j);

// Block-tree path between the attachment vertices of i and j (node ids).
std::vector<int> btree_path_for_sectors(const Decomposition& d, Sector i, Sector j);

// Blocks contained in the path or adjacent to a gap on it.
std::vector<int> covered_blocks(const Decomposition& d, const std::vector<int>& path_nodes);

Adjacency adjacency(const Fatgraph& f, const Decomposition& d, int c1, int c2);

// Common sigma-vertices touched by both components.
std::vector<int> common_vertices(const Fatgraph& f, const Decomposition& d, int c1, int c2);

// Exposure computation over arbitrary orientability flags; used both for the
// decomposition itself and for the S-block relabeling probe.
std::vector<int> exposed_blocks(const Decomposition& d, const std::vector<char>& orientable);

}  // namespace unifat
