#include "unifat/reversals.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

namespace unifat {

const char* kind_name(ReversalKind k) {
    switch (k) {
        case ReversalKind::Gluing: return "glue";
        case ReversalKind::Slicing: return "slice";
        case ReversalKind::HalfFlipping: return "halfflip";
    }
    return "?";
}

ReversalKind classify_reversal(const Fatgraph& f, Sector i, Sector j) {
    f.require_unicellular("classify_reversal");
    const int m = f.sector_count();
    if (i < 1 || j < 1 || i > m || j > m)
        throw domain_error("reversal sectors out of range");
    if (i == j) throw domain_error("reversal requires two distinct sectors");
    if (i == m || j == m)
        throw domain_error("reversal sectors may not include the root sector " + std::to_string(m));
    if (i > j) std::swap(i, j);
    if (f.vertex_of(i) != f.vertex_of(j)) return ReversalKind::Gluing;
    return f.omega(i) == -f.omega(j) ? ReversalKind::Slicing : ReversalKind::HalfFlipping;
}

namespace {

// Cycle of the vertex containing s, rotated to start at s.
std::vector<Sector> cycle_from(const Fatgraph& f, Sector s) {
    std::vector<Sector> cyc = f.vertices()[static_cast<size_t>(f.vertex_of(s))];
    auto it = std::find(cyc.begin(), cyc.end(), s);
    std::rotate(cyc.begin(), it, cyc.end());
    return cyc;
}

Sector rho(Sector k, Sector i, Sector j) { return (k > i && k < j) ? i + j - k : k; }

std::set<Sector> open_interval(Sector i, Sector j) {
    std::set<Sector> s;
    for (Sector k = i + 1; k < j; ++k) s.insert(k);
    return s;
}

std::set<Sector> sym_diff(const std::set<Sector>& a, const std::set<Sector>& b) {
    std::set<Sector> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.end()));
    return out;
}

// One candidate realization of a reversal: the vertex-surgered sigma given by
// replacement cycles, plus the set of sectors whose orientation is negated
// (both in pre-normalization labels).
struct Candidate {
    std::vector<std::vector<Sector>> new_cycles;
    std::set<Sector> negate;
};

// Reversing the surgered vertex (a legal presentation change) restores the
// root wedge when the surgery turned it around; orientations on the reversed
// cycle negate alongside.
Candidate flipped(const Candidate& c, size_t which) {
    Candidate out = c;
    auto& cyc = out.new_cycles[which];
    std::reverse(cyc.begin() + 1, cyc.end());
    std::set<Sector> members(cyc.begin(), cyc.end());
    out.negate = sym_diff(out.negate, members);
    return out;
}

// Apply a candidate: renormalize the boundary with rho (the relabeling that
// undoes the i+1..j-1 reversal), validate, and track ribbons through their
// boundary side edges (side k maps to i+j-k-1 inside [i, j-1]).
std::optional<ApplyResult> try_candidate(const Fatgraph& before, const Candidate& cand,
                                         Sector i, Sector j) {
    const int m = before.sector_count();
    std::vector<Sector> sigma_hat = before.sigma_table();
    for (const auto& cyc : cand.new_cycles)
        for (size_t k = 0; k < cyc.size(); ++k)
            sigma_hat[static_cast<size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    if (sigma_hat[static_cast<size_t>(m)] != 1) return std::nullopt;  // root wedge lost

    std::vector<Sector> sigma(static_cast<size_t>(m) + 1, 0);
    std::vector<std::int8_t> omega(static_cast<size_t>(m) + 1, 0);
    for (Sector k = 1; k <= m; ++k) {
        sigma[static_cast<size_t>(rho(k, i, j))] = rho(sigma_hat[static_cast<size_t>(k)], i, j);
        std::int8_t w = before.omega(k);
        if (cand.negate.count(k)) w = static_cast<std::int8_t>(-w);
        omega[static_cast<size_t>(rho(k, i, j))] = w;
    }
    if (!Fatgraph::validate(before.n(), sigma, omega).ok) return std::nullopt;

    ApplyResult out{Fatgraph::make(before.n(), std::move(sigma), std::move(omega)), {}};
    out.ribbon_map.assign(before.ribbons().size(), -1);
    std::vector<char> hit(before.ribbons().size(), 0);
    auto side_map = [&](Sector k) { return (k >= i && k <= j - 1) ? i + j - k - 1 : k; };
    for (size_t ri = 0; ri < before.ribbons().size(); ++ri) {
        const Ribbon& r = before.ribbons()[ri];
        const Sector a = side_map(r.origin);
        const Sector b = side_map(r.terminus - 1);
        const int na = out.graph.ribbon_on_side(a);
        const int nb = out.graph.ribbon_on_side(b);
        if (na < 0 || na != nb || hit[static_cast<size_t>(na)]++) return std::nullopt;
        out.ribbon_map[ri] = na;
    }
    return out;
}

ApplyResult pick_candidate(const Fatgraph& before, const std::vector<Candidate>& cands,
                           Sector i, Sector j, const char* op) {
    for (const Candidate& c : cands) {
        if (auto res = try_candidate(before, c, i, j)) return std::move(*res);
    }
    throw internal_error(std::string(op) + " at (" + std::to_string(i) + "," + std::to_string(j) +
                         "): no candidate realization is valid and rooted");
}

std::vector<Candidate> with_flips(Candidate base) {
    std::vector<Candidate> out;
    out.push_back(base);
    for (size_t w = 0; w < base.new_cycles.size(); ++w) out.push_back(flipped(base, w));
    return out;
}

}  // namespace

ApplyResult glue(const Fatgraph& f, Sector i, Sector j) {
    if (classify_reversal(f, i, j) != ReversalKind::Gluing)
        throw domain_error("glue: sectors lie at the same vertex");
    if (i > j) std::swap(i, j);

    // Equal orientations are normalized away by flipping one of the two
    // vertices; prefer the vertex of j, falling back to the vertex of i when
    // j sits at an unflippable root vertex.
    if (f.omega(i) == f.omega(j)) {
        int w = f.vertex_of(j);
        if (w == f.root_vertex() && f.vertices()[static_cast<size_t>(w)].size() > 2)
            w = f.vertex_of(i);
        Fatgraph base = flip_vertex(f, w);
        ApplyResult res = glue(base, i, j);
        return res;
    }

    const std::vector<Sector> seq_i = cycle_from(f, i);
    const std::vector<Sector> seq_j = cycle_from(f, j);
    const std::vector<Sector> is(seq_i.begin() + 1, seq_i.end());
    const std::vector<Sector> js(seq_j.begin() + 1, seq_j.end());

    // omega(i) = +1: merge (i, j_1..j_q, j, i_1..i_p), cutting the corners
    // that the boundary leaves; omega(i) = -1: the mirror merge
    // (i, i_1..i_p, j, j_1..j_q), cutting the corners it enters.
    auto merge = [&](bool paper_form) {
        std::vector<Sector> v;
        v.push_back(i);
        const auto& first = paper_form ? js : is;
        const auto& second = paper_form ? is : js;
        v.insert(v.end(), first.begin(), first.end());
        v.push_back(j);
        v.insert(v.end(), second.begin(), second.end());
        return v;
    };

    const bool paper_form = f.omega(i) > 0;
    std::vector<Candidate> cands = with_flips({{merge(paper_form)}, open_interval(i, j)});
    std::vector<Candidate> alt = with_flips({{merge(!paper_form)}, open_interval(i, j)});
    cands.insert(cands.end(), alt.begin(), alt.end());
    return pick_candidate(f, cands, i, j, "glue");
}

ApplyResult slice(const Fatgraph& f, Sector i, Sector j) {
    if (classify_reversal(f, i, j) != ReversalKind::Slicing)
        throw domain_error("slice: requires one vertex and opposite orientations");
    if (i > j) std::swap(i, j);

    const std::vector<Sector> seq = cycle_from(f, i);
    const auto jt = std::find(seq.begin(), seq.end(), j);
    const std::vector<Sector> between(seq.begin() + 1, jt);  // j_1 .. j_q
    const std::vector<Sector> rest(jt + 1, seq.end());       // i_1 .. i_p

    auto split = [&](bool paper_form) {
        std::vector<Sector> v1{i}, v2{j};
        const auto& to_i = paper_form ? rest : between;
        const auto& to_j = paper_form ? between : rest;
        v1.insert(v1.end(), to_i.begin(), to_i.end());
        v2.insert(v2.end(), to_j.begin(), to_j.end());
        return std::vector<std::vector<Sector>>{v1, v2};
    };

    const bool paper_form = f.omega(i) > 0;
    std::vector<Candidate> cands = with_flips({split(paper_form), open_interval(i, j)});
    std::vector<Candidate> alt = with_flips({split(!paper_form), open_interval(i, j)});
    cands.insert(cands.end(), alt.begin(), alt.end());
    return pick_candidate(f, cands, i, j, "slice");
}

ApplyResult half_flip(const Fatgraph& f, Sector i, Sector j) {
    if (classify_reversal(f, i, j) != ReversalKind::HalfFlipping)
        throw domain_error("half_flip: requires one vertex and equal orientations");
    if (i > j) std::swap(i, j);

    const std::vector<Sector> seq = cycle_from(f, i);
    const auto jt = std::find(seq.begin(), seq.end(), j);
    const std::vector<Sector> between(seq.begin() + 1, jt);  // j_1 .. j_q
    const std::vector<Sector> rest(jt + 1, seq.end());       // i_1 .. i_p

    // Counterclockwise orientations flip the half between i and j,
    // (i, j_q..j_1, j, i_1..i_p); clockwise ones flip the complementary half,
    // (i, j_1..j_q, j, i_p..i_1). The flipped half's sectors negate, combined
    // with the boundary-interval negation of the normalization.
    auto build = [&](bool ccw) {
        Candidate c;
        std::vector<Sector> v{i};
        if (ccw) {
            v.insert(v.end(), between.rbegin(), between.rend());
            v.push_back(j);
            v.insert(v.end(), rest.begin(), rest.end());
            c.negate = sym_diff(std::set<Sector>(between.begin(), between.end()),
                                open_interval(i, j));
        } else {
            v.insert(v.end(), between.begin(), between.end());
            v.push_back(j);
            v.insert(v.end(), rest.rbegin(), rest.rend());
            c.negate = sym_diff(std::set<Sector>(rest.begin(), rest.end()),
                                open_interval(i, j));
        }
        c.new_cycles = {v};
        return c;
    };

    const bool ccw = f.omega(i) > 0;
    std::vector<Candidate> cands = with_flips(build(ccw));
    std::vector<Candidate> alt = with_flips(build(!ccw));
    cands.insert(cands.end(), alt.begin(), alt.end());
    return pick_candidate(f, cands, i, j, "half_flip");
}

ApplyResult apply_reversal(const Fatgraph& f, Sector i, Sector j) {
    switch (classify_reversal(f, i, j)) {
        case ReversalKind::Gluing: return glue(f, i, j);
        case ReversalKind::Slicing: return slice(f, i, j);
        case ReversalKind::HalfFlipping: return half_flip(f, i, j);
    }
    throw internal_error("unreachable reversal kind");
}

ApplyResult apply_reversal(const Fatgraph& f, const Reversal& r) {
    const ReversalKind actual = classify_reversal(f, r.i, r.j);
    if (actual != r.kind)
        throw domain_error(std::string("reversal kind mismatch at (") + std::to_string(r.i) + "," +
                           std::to_string(r.j) + "): script says " + kind_name(r.kind) +
                           " but the pair classifies as " + kind_name(actual));
    return apply_reversal(f, r.i, r.j);
}

std::pair<Sector, Sector> m_ribbon_slice_sectors(const Fatgraph& f, const Ribbon& r) {
    if (!r.mono()) throw domain_error("slice_m_ribbon: ribbon is bi-directional");
    if (r.sectors().size() < 3)
        throw domain_error("slice_m_ribbon: degenerate ribbon with fewer than 3 sectors");
    Sector a = f.gamma(r.origin);
    Sector b = r.terminus;
    if (b == f.sector_count()) {
        a = r.origin;
        b = f.gamma_inv(r.terminus);
    }
    if (a > b) std::swap(a, b);
    return {a, b};
}

ApplyResult slice_m_ribbon(const Fatgraph& f, int ribbon_index) {
    if (ribbon_index < 0 || ribbon_index >= static_cast<int>(f.ribbons().size()))
        throw domain_error("slice_m_ribbon: no such ribbon");
    const Ribbon& r = f.ribbons()[static_cast<size_t>(ribbon_index)];
    const auto [a, b] = m_ribbon_slice_sectors(f, r);
    if (classify_reversal(f, a, b) != ReversalKind::Slicing)
        throw internal_error("slice_m_ribbon: chosen sectors do not slice");
    return slice(f, a, b);
}

std::vector<Reversal> legal_reversals(const Fatgraph& f) {
    f.require_unicellular("legal_reversals");
    std::vector<Reversal> out;
    const int top = 2 * f.n();
    for (Sector i = 1; i <= top; ++i)
        for (Sector j = i + 1; j <= top; ++j)
            out.push_back({i, j, classify_reversal(f, i, j)});
    return out;
}

bool intersects_interval(const Ribbon& r, Sector i, Sector j) {
    return (r.origin < i && i < r.terminus && r.terminus <= j) ||
           (i <= r.origin && r.origin < j && j < r.terminus);
}

}  // namespace unifat
