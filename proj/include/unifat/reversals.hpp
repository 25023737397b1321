#pragma once

#include "unifat/fatgraph.hpp"

// The three i,j-reversals on unicellular fatgraphs. Every operation returns a
// new fatgraph whose boundary has been renormalized to the standard cycle
// (labels i+1..j-1 reversed, interior orientations adjusted), together with
// the natural bijection between old and new ribbons.

namespace unifat {

enum class ReversalKind : std::uint8_t { Gluing, Slicing, HalfFlipping };

const char* kind_name(ReversalKind k);

struct Reversal {
    Sector i = 0;
    Sector j = 0;
    ReversalKind kind = ReversalKind::Gluing;

    bool operator==(const Reversal& o) const { return i == o.i && j == o.j && kind == o.kind; }
};

struct ApplyResult {
    Fatgraph graph;
    // ribbon_map[old index] = new index, the natural bijection between ribbons.
    std::vector<int> ribbon_map;
};

// Requires F unicellular and 1 <= i < j <= 2n. Every such pair has exactly
// one kind: distinct vertices glue; a common vertex slices when omega(i) =
// -omega(j) and half-flips otherwise.
ReversalKind classify_reversal(const Fatgraph& f, Sector i, Sector j);

ApplyResult glue(const Fatgraph& f, Sector i, Sector j);
ApplyResult slice(const Fatgraph& f, Sector i, Sector j);
ApplyResult half_flip(const Fatgraph& f, Sector i, Sector j);

// Dispatch on classify_reversal.
ApplyResult apply_reversal(const Fatgraph& f, Sector i, Sector j);
// Additionally verifies that the requested kind matches the classification.
ApplyResult apply_reversal(const Fatgraph& f, const Reversal& r);

// The slicing sectors for a mono-directional ribbon: (gamma(r^L), r^R), or the
// mirror pair (r^L, gamma^{-1}(r^R)) when r^R is the root sector.
std::pair<Sector, Sector> m_ribbon_slice_sectors(const Fatgraph& f, const Ribbon& r);

// Slice a mono-directional ribbon with at least 3 distinct sectors; the
// ribbon becomes a trivial component of the result.
ApplyResult slice_m_ribbon(const Fatgraph& f, int ribbon_index);

// All pairs 1 <= i < j <= 2n with their kinds, ascending by (i, j).
std::vector<Reversal> legal_reversals(const Fatgraph& f);

// Lemma 2 criterion: r^L < i < r^R <= j or i <= r^L < j < r^R.
bool intersects_interval(const Ribbon& r, Sector i, Sector j);

}  // namespace unifat
