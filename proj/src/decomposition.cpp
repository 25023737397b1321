#include "unifat/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace unifat {

namespace {

std::vector<Interval> runs_of(const std::vector<Sector>& sorted_sectors) {
    std::vector<Interval> runs;
    for (Sector s : sorted_sectors) {
        if (!runs.empty() && runs.back().hi == s - 1)
            runs.back().hi = s;
        else
            runs.push_back({s, s});
    }
    return runs;
}

std::vector<Interval> gaps_of(const std::vector<Interval>& runs) {
    std::vector<Interval> gaps;
    for (size_t k = 0; k + 1 < runs.size(); ++k) gaps.push_back({runs[k].hi, runs[k + 1].lo});
    return gaps;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Shared Def. 4 / Def. 5 construction: black units with interval traces,
// white gaps plus the root, parents by minimal containing gap, and the Def. 6
// attachment of every sector.
BicoloredTree build_bicolored_tree(int sector_count,
                                   const std::vector<const std::vector<Interval>*>& traces,
                                   const std::vector<const std::vector<Interval>*>& gaps) {
    BicoloredTree t;
    const int units = static_cast<int>(traces.size());
    t.nodes.push_back({false, -1, {1, sector_count}, -1, -1, {}});
    t.unit_node.assign(static_cast<size_t>(units), -1);
    for (int u = 0; u < units; ++u) {
        t.unit_node[static_cast<size_t>(u)] = static_cast<int>(t.nodes.size());
        t.nodes.push_back({true, u, {0, 0}, -1, -1, {}});
    }
    for (int u = 0; u < units; ++u) {
        for (const Interval& g : *gaps[static_cast<size_t>(u)]) {
            const int id = static_cast<int>(t.nodes.size());
            t.nodes.push_back({false, -1, g, u, t.node_of(u), {}});
            t.nodes[static_cast<size_t>(t.node_of(u))].children.push_back(id);
        }
    }
    // Parent of each black unit: the narrowest white interval containing its
    // span, other than its own gaps (which never contain it).
    for (int u = 0; u < units; ++u) {
        const Interval span{traces[static_cast<size_t>(u)]->front().lo,
                            traces[static_cast<size_t>(u)]->back().hi};
        int best = 0;
        for (int w = 0; w < static_cast<int>(t.nodes.size()); ++w) {
            const auto& node = t.nodes[static_cast<size_t>(w)];
            if (node.black || node.gap_owner == u) continue;
            if (!node.gap.contains(span)) continue;
            if (node.gap.width() < t.nodes[static_cast<size_t>(best)].gap.width()) {
                best = w;
            } else if (w != best && node.gap.width() == t.nodes[static_cast<size_t>(best)].gap.width() &&
                       best != 0) {
                throw internal_error("two minimal gaps contain one trace");
            }
        }
        t.nodes[static_cast<size_t>(t.node_of(u))].parent = best;
        t.nodes[static_cast<size_t>(best)].children.push_back(t.node_of(u));
    }
    for (auto& node : t.nodes) {
        std::sort(node.children.begin(), node.children.end(), [&](int a, int b) {
            const auto& na = t.nodes[static_cast<size_t>(a)];
            const auto& nb = t.nodes[static_cast<size_t>(b)];
            const Sector la = na.black ? traces[static_cast<size_t>(na.unit)]->front().lo : na.gap.lo;
            const Sector lb = nb.black ? traces[static_cast<size_t>(nb.unit)]->front().lo : nb.gap.lo;
            return la < lb;
        });
    }

    // Def. 6: a sector belongs to the open interior of exactly one trace
    // interval, or to the junction set of exactly one white vertex.
    t.attachment.assign(static_cast<size_t>(sector_count) + 1, -1);
    auto attach = [&](Sector s, int node) {
        if (s < 1 || s > sector_count) throw internal_error("attachment: sector out of range");
        int& slot = t.attachment[static_cast<size_t>(s)];
        if (slot == node) return;
        if (slot != -1) throw internal_error("sector " + std::to_string(s) + " attached twice");
        slot = node;
    };
    for (int u = 0; u < units; ++u)
        for (const Interval& iv : *traces[static_cast<size_t>(u)])
            for (Sector s = iv.lo + 1; s < iv.hi; ++s) attach(s, t.node_of(u));
    for (int w = 0; w < static_cast<int>(t.nodes.size()); ++w) {
        const auto& node = t.nodes[static_cast<size_t>(w)];
        if (node.black) continue;
        attach(node.gap.lo, w);
        attach(node.gap.hi, w);
        for (int c : node.children) {
            const auto& child = t.nodes[static_cast<size_t>(c)];
            attach(traces[static_cast<size_t>(child.unit)]->front().lo, w);
            attach(traces[static_cast<size_t>(child.unit)]->back().hi, w);
        }
    }
    for (Sector s = 1; s <= sector_count; ++s)
        if (t.attachment[static_cast<size_t>(s)] == -1)
            throw internal_error("sector " + std::to_string(s) + " attached to no tree vertex");
    return t;
}

}  // namespace

std::vector<int> BicoloredTree::path(int a, int b) const {
    std::vector<int> up_a;
    for (int x = a; x != -1; x = nodes[static_cast<size_t>(x)].parent) up_a.push_back(x);
    std::vector<char> on_a(nodes.size(), 0);
    for (int x : up_a) on_a[static_cast<size_t>(x)] = 1;
    std::vector<int> up_b;
    int meet = b;
    while (!on_a[static_cast<size_t>(meet)]) {
        up_b.push_back(meet);
        meet = nodes[static_cast<size_t>(meet)].parent;
    }
    std::vector<int> out;
    for (int x : up_a) {
        out.push_back(x);
        if (x == meet) break;
    }
    for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) out.push_back(*it);
    return out;
}

int BicoloredTree::distance(int a, int b) const { return static_cast<int>(path(a, b).size()) - 1; }

bool BicoloredTree::adjacent_nodes(int a, int b) const {
    return nodes[static_cast<size_t>(a)].parent == b || nodes[static_cast<size_t>(b)].parent == a;
}

int Decomposition::btree_unit_of_trivial(int component) const {
    for (int u = static_cast<int>(blocks.size()); u < static_cast<int>(btree_units.size()); ++u)
        if (btree_units[static_cast<size_t>(u)] == component) return u;
    throw internal_error("component is not a trivial block-tree unit");
}

bool Decomposition::block_non_orientable() const {
    for (const Block& b : blocks)
        if (b.orientable) return false;
    return true;
}

std::vector<int> exposed_blocks(const Decomposition& d, const std::vector<char>& orientable) {
    std::vector<int> orient;
    for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
        if (orientable[static_cast<size_t>(b)]) orient.push_back(b);
    std::vector<int> out;
    for (int b : orient) {
        bool covered_somewhere = false;
        for (size_t x = 0; x < orient.size() && !covered_somewhere; ++x) {
            for (size_t y = x + 1; y < orient.size() && !covered_somewhere; ++y) {
                if (orient[x] == b || orient[y] == b) continue;
                const auto path = d.btree.path(d.btree.node_of(orient[x]), d.btree.node_of(orient[y]));
                const int bn = d.btree.node_of(b);
                for (int node : path) {
                    if (node == bn ||
                        (!d.btree.nodes[static_cast<size_t>(node)].black &&
                         d.btree.adjacent_nodes(bn, node))) {
                        covered_somewhere = true;
                        break;
                    }
                }
            }
        }
        if (!covered_somewhere) out.push_back(b);
    }
    return out;
}

namespace {

// Def. 7 cross-check: the minimum block-subtree containing all orientable
// blocks has orientable leaves; a block is exposed iff it is such a leaf and
// its adjacent gap has degree two in the subtree.
std::vector<int> exposed_blocks_leaf_criterion(const Decomposition& d,
                                               const std::vector<char>& orientable) {
    std::vector<int> orient;
    for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
        if (orientable[static_cast<size_t>(b)]) orient.push_back(b);
    std::set<int> bar;
    for (size_t x = 0; x < orient.size(); ++x)
        for (size_t y = x + 1; y < orient.size(); ++y)
            for (int node : d.btree.path(d.btree.node_of(orient[x]), d.btree.node_of(orient[y])))
                bar.insert(node);
    auto bar_degree = [&](int node) {
        int deg = 0;
        const auto& nd = d.btree.nodes[static_cast<size_t>(node)];
        if (nd.parent != -1 && bar.count(nd.parent)) ++deg;
        for (int c : nd.children)
            if (bar.count(c)) ++deg;
        return deg;
    };
    std::vector<int> out;
    for (int b : orient) {
        const int bn = d.btree.node_of(b);
        if (!bar.count(bn) || bar_degree(bn) != 1) continue;
        const auto& nd = d.btree.nodes[static_cast<size_t>(bn)];
        int nb = (nd.parent != -1 && bar.count(nd.parent)) ? nd.parent : -1;
        if (nb == -1)
            for (int c : nd.children)
                if (bar.count(c)) nb = c;
        if (nb != -1 && bar_degree(nb) == 2) out.push_back(b);
    }
    return out;
}

void check_pairwise_nesting(const std::vector<Component>& comps) {
    for (size_t a = 0; a < comps.size(); ++a) {
        for (size_t b = a + 1; b < comps.size(); ++b) {
            const Interval sa = comps[a].span();
            const Interval sb = comps[b].span();
            if (sa.hi <= sb.lo || sb.hi <= sa.lo) continue;  // subsequent
            bool nested = false;
            for (const Interval& g : comps[a].gaps) nested = nested || g.contains(sb);
            for (const Interval& g : comps[b].gaps) nested = nested || g.contains(sa);
            if (!nested) throw internal_error("component traces interleave (Prop. 3 violated)");
        }
    }
}

}  // namespace

Decomposition decompose(const Fatgraph& f) {
    f.require_unicellular("decompose");
    Decomposition d;

    const auto& ribs = f.ribbons();
    const int nr = static_cast<int>(ribs.size());
    UnionFind uf(nr);
    for (int a = 0; a < nr; ++a)
        for (int b = a + 1; b < nr; ++b)
            if (crossing(ribs[static_cast<size_t>(a)], ribs[static_cast<size_t>(b)])) uf.unite(a, b);

    std::vector<int> class_of(static_cast<size_t>(nr));
    std::vector<int> roots;
    for (int r = 0; r < nr; ++r) {
        const int root = uf.find(r);
        if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
        class_of[static_cast<size_t>(r)] = root;
    }
    for (int root : roots) {
        Component c;
        std::set<Sector> sectors;
        for (int r = 0; r < nr; ++r) {
            if (class_of[static_cast<size_t>(r)] != root) continue;
            c.ribbons.push_back(r);
            for (Sector s : ribs[static_cast<size_t>(r)].sectors()) sectors.insert(s);
        }
        c.sectors.assign(sectors.begin(), sectors.end());
        c.trace = runs_of(c.sectors);
        c.gaps = gaps_of(c.trace);
        c.trivial = c.ribbons.size() == 1 && !ribs[static_cast<size_t>(c.ribbons[0])].mono();
        c.orientable = true;
        for (int r : c.ribbons) c.orientable = c.orientable && !ribs[static_cast<size_t>(r)].mono();
        c.genus = euler_genus(induced_fatgraph(f, c.ribbons));
        d.components.push_back(std::move(c));
    }
    std::sort(d.components.begin(), d.components.end(),
              [](const Component& a, const Component& b) { return a.trace_start() < b.trace_start(); });
    for (size_t a = 0; a + 1 < d.components.size(); ++a)
        if (d.components[a].trace_start() == d.components[a + 1].trace_start())
            throw internal_error("two components share a trace start");
    check_pairwise_nesting(d.components);

    int genus_sum = 0;
    for (const Component& c : d.components) genus_sum += c.genus;
    if (genus_sum != euler_genus(f))
        throw internal_error("component genera do not add up to the Euler genus");

    {
        std::vector<const std::vector<Interval>*> traces, gaps;
        for (const Component& c : d.components) {
            traces.push_back(&c.trace);
            gaps.push_back(&c.gaps);
        }
        d.ctree = build_bicolored_tree(f.sector_count(), traces, gaps);
    }

    // Blocks: connected clusters of non-trivial components after deleting
    // trivial black vertices; white vertices keep their neighbors connected.
    const int nc = static_cast<int>(d.components.size());
    UnionFind buf(nc);
    for (int w = 0; w < static_cast<int>(d.ctree.nodes.size()); ++w) {
        const auto& node = d.ctree.nodes[static_cast<size_t>(w)];
        if (node.black) continue;
        std::vector<int> nontrivial;
        if (node.gap_owner >= 0 && !d.components[static_cast<size_t>(node.gap_owner)].trivial)
            nontrivial.push_back(node.gap_owner);
        for (int c : node.children) {
            const int unit = d.ctree.nodes[static_cast<size_t>(c)].unit;
            if (!d.components[static_cast<size_t>(unit)].trivial) nontrivial.push_back(unit);
        }
        for (size_t k = 1; k < nontrivial.size(); ++k) buf.unite(nontrivial[0], nontrivial[k]);
    }
    d.block_of_component.assign(static_cast<size_t>(nc), -1);
    std::vector<int> block_roots;
    for (int c = 0; c < nc; ++c) {
        if (d.components[static_cast<size_t>(c)].trivial) continue;
        const int root = buf.find(c);
        if (std::find(block_roots.begin(), block_roots.end(), root) == block_roots.end())
            block_roots.push_back(root);
    }
    for (int root : block_roots) {
        Block b;
        std::set<Sector> sectors;
        for (int c = 0; c < nc; ++c) {
            if (d.components[static_cast<size_t>(c)].trivial || buf.find(c) != root) continue;
            b.components.push_back(c);
            sectors.insert(d.components[static_cast<size_t>(c)].sectors.begin(),
                           d.components[static_cast<size_t>(c)].sectors.end());
            b.orientable = b.orientable && d.components[static_cast<size_t>(c)].orientable;
        }
        b.sectors.assign(sectors.begin(), sectors.end());
        b.trace = runs_of(b.sectors);
        b.gaps = gaps_of(b.trace);
        d.blocks.push_back(std::move(b));
    }
    std::sort(d.blocks.begin(), d.blocks.end(),
              [](const Block& a, const Block& b) { return a.trace_start() < b.trace_start(); });
    for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
        for (int c : d.blocks[static_cast<size_t>(b)].components)
            d.block_of_component[static_cast<size_t>(c)] = b;

    // Block-tree units: blocks, then trivial components in trace order.
    std::vector<const std::vector<Interval>*> traces, gaps;
    for (const Block& b : d.blocks) {
        d.btree_units.push_back(-1);
        traces.push_back(&b.trace);
        gaps.push_back(&b.gaps);
    }
    for (int c = 0; c < nc; ++c) {
        if (!d.components[static_cast<size_t>(c)].trivial) continue;
        d.btree_units.push_back(c);
        traces.push_back(&d.components[static_cast<size_t>(c)].trace);
        gaps.push_back(&d.components[static_cast<size_t>(c)].gaps);
    }
    d.btree = build_bicolored_tree(f.sector_count(), traces, gaps);

    std::vector<char> flags;
    for (const Block& b : d.blocks) flags.push_back(b.orientable ? 1 : 0);
    d.e_blocks = exposed_blocks(d, flags);
    const int orientable_count =
        static_cast<int>(std::count(flags.begin(), flags.end(), static_cast<char>(1)));
    if (orientable_count >= 2 && d.e_blocks != exposed_blocks_leaf_criterion(d, flags))
        throw internal_error("E-block criteria disagree (Def. 7 vs leaf characterization)");
    if (orientable_count > 0 && d.e_blocks.empty())
        throw internal_error("orientable blocks exist but none is exposed");

    for (int b : d.e_blocks) {
        std::vector<char> relabeled = flags;
        relabeled[static_cast<size_t>(b)] = 0;
        if (static_cast<int>(exposed_blocks(d, relabeled).size()) == d.h()) d.s_blocks.push_back(b);
    }
    return d;
}

int attachment(const Decomposition& d, Sector s) {
    if (s < 1 || s >= static_cast<int>(d.ctree.attachment.size()))
        throw domain_error("attachment: sector out of range");
    return d.ctree.attachment[static_cast<size_t>(s)];
}

std::vector<int> tree_path_components(const Decomposition& d, Sector i, Sector j) {
    const auto path = d.ctree.path(attachment(d, i), attachment(d, j));
    std::vector<int> comps;
    for (int node : path)
        if (d.ctree.nodes[static_cast<size_t>(node)].black)
            comps.push_back(d.ctree.nodes[static_cast<size_t>(node)].unit);
    return comps;
}

std::vector<int> btree_path_for_sectors(const Decomposition& d, Sector i, Sector j) {
    return d.btree.path(d.btree.attachment[static_cast<size_t>(i)],
                        d.btree.attachment[static_cast<size_t>(j)]);
}

std::vector<int> covered_blocks(const Decomposition& d, const std::vector<int>& path_nodes) {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
        const int bn = d.btree.node_of(b);
        bool covered = false;
        for (int node : path_nodes) {
            if (node == bn) covered = true;
            else if (!d.btree.nodes[static_cast<size_t>(node)].black &&
                     d.btree.adjacent_nodes(bn, node))
                covered = true;
            if (covered) break;
        }
        if (covered) out.push_back(b);
    }
    return out;
}

std::vector<int> common_vertices(const Fatgraph& f, const Decomposition& d, int c1, int c2) {
    auto touched = [&](int c) {
        std::set<int> v;
        for (int r : d.components[static_cast<size_t>(c)].ribbons)
            for (Sector s : f.ribbons()[static_cast<size_t>(r)].sectors()) v.insert(f.vertex_of(s));
        return v;
    };
    const std::set<int> t1 = touched(c1);
    const std::set<int> t2 = touched(c2);
    std::vector<int> out;
    std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(out));
    return out;
}

Adjacency adjacency(const Fatgraph& f, const Decomposition& d, int c1, int c2) {
    if (c1 == c2) throw domain_error("adjacency: components must be distinct");
    if (d.ctree.distance(d.ctree.node_of(c1), d.ctree.node_of(c2)) != 2)
        return Adjacency::NotAdjacent;
    for (int v : common_vertices(f, d, c1, c2)) {
        for (int c : {c1, c2}) {
            for (int r : d.components[static_cast<size_t>(c)].ribbons) {
                const Ribbon& rb = f.ribbons()[static_cast<size_t>(r)];
                if (!rb.mono()) continue;
                for (Sector s : rb.sectors())
                    if (f.vertex_of(s) == v) return Adjacency::MAdjacent;
            }
        }
    }
    return Adjacency::Adjacent;
}

}  // namespace unifat
