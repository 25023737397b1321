#include "unifat/fatgraph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace unifat {

namespace {

bool is_bijection(const std::vector<Sector>& table, int m) {
    if (static_cast<int>(table.size()) != m + 1) return false;
    std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
    for (int x = 1; x <= m; ++x) {
        Sector y = table[static_cast<size_t>(x)];
        if (y < 1 || y > m || seen[static_cast<size_t>(y)]) return false;
        seen[static_cast<size_t>(y)] = 1;
    }
    return true;
}

}  // namespace

std::vector<Sector> Ribbon::sectors() const {
    std::vector<Sector> s = {wedge_a.first, wedge_a.second, wedge_b.first, wedge_b.second};
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Sector Fatgraph::gamma(Sector x) const {
    if (!gamma_.empty()) return gamma_[static_cast<size_t>(x)];
    return x == sector_count() ? 1 : x + 1;
}

Sector Fatgraph::gamma_inv(Sector x) const {
    if (!gamma_.empty()) return gamma_inv_[static_cast<size_t>(x)];
    return x == 1 ? sector_count() : x - 1;
}

void Fatgraph::require_unicellular(const char* op) const {
    if (!unicellular()) throw domain_error(std::string(op) + ": fatgraph is not unicellular");
}

namespace {

// Def. 1 wedge admissibility. gamma is passed as a lookup to cover both the
// standard cycle and explicit validation fixtures.
struct CaseCheck {
    bool case1 = false;
    bool case2 = false;
    bool any() const { return case1 || case2; }
};

template <typename GammaFn>
CaseCheck admissible(Sector x, Sector sx, Sector y, Sector sy,
                     const std::vector<std::int8_t>& omega, GammaFn&& g) {
    auto w = [&](Sector s) { return omega[static_cast<size_t>(s)]; };
    CaseCheck c;
    const bool s1 = (g(x) == sy || g(sy) == x) && (g(sx) == y || g(y) == sx);
    const bool s2 = (g(x) == y || g(y) == x) && (g(sx) == sy || g(sy) == sx);
    c.case1 = s1 && w(x) == w(sy) && w(sx) == w(y);
    c.case2 = s2 && w(x) == -w(y) && w(sx) == -w(sy);
    return c;
}

// Count perfect matchings of the admissibility graph, stopping at 2. Records
// the first matching found into `partner`.
int count_matchings(const std::vector<std::vector<Sector>>& adm, std::vector<Sector>& partner,
                    std::vector<Sector>& work, int limit) {
    Sector first = 0;
    for (size_t x = 1; x < work.size(); ++x) {
        if (work[x] == 0) {
            first = static_cast<Sector>(x);
            break;
        }
    }
    if (first == 0) {
        if (partner.empty()) partner = work;
        return 1;
    }
    int found = 0;
    for (Sector y : adm[static_cast<size_t>(first)]) {
        if (work[static_cast<size_t>(y)] != 0) continue;
        work[static_cast<size_t>(first)] = y;
        work[static_cast<size_t>(y)] = first;
        found += count_matchings(adm, partner, work, limit - found);
        work[static_cast<size_t>(first)] = 0;
        work[static_cast<size_t>(y)] = 0;
        if (found >= limit) break;
    }
    return found;
}

}  // namespace

ValidationReport Fatgraph::validate(int n, const std::vector<Sector>& sigma,
                                    const std::vector<std::int8_t>& omega,
                                    const std::vector<Sector>& gamma) {
    ValidationReport rep;
    auto fail = [&](std::string msg, std::vector<Sector> sectors = {}) {
        rep.violations.push_back({std::move(msg), std::move(sectors)});
    };

    if (n < 1) {
        fail("ribbon count must be at least 1");
        return rep;
    }
    const int m = 2 * n + 1;
    if (!is_bijection(sigma, m)) {
        fail("sigma is not a permutation of [1.." + std::to_string(m) + "]");
        return rep;
    }
    if (static_cast<int>(omega.size()) != m + 1) {
        fail("omega must assign a sign to every sector 1.." + std::to_string(m));
        return rep;
    }
    for (int x = 1; x <= m; ++x) {
        if (omega[static_cast<size_t>(x)] != 1 && omega[static_cast<size_t>(x)] != -1) {
            fail("omega(" + std::to_string(x) + ") must be +1 or -1", {x});
            return rep;
        }
    }
    if (!gamma.empty() && !is_bijection(gamma, m)) {
        fail("gamma is not a permutation of [1.." + std::to_string(m) + "]");
        return rep;
    }

    auto g = [&](Sector x) -> Sector {
        if (!gamma.empty()) return gamma[static_cast<size_t>(x)];
        return x == m ? 1 : x + 1;
    };

    if (sigma[static_cast<size_t>(m)] != 1) fail("rootedness requires sigma(2n+1) = 1", {m});
    if (!gamma.empty() && gamma[static_cast<size_t>(m)] != 1)
        fail("rootedness requires gamma(2n+1) = 1", {m});
    if (omega[1] != omega[static_cast<size_t>(m)]) fail("omega(1) must equal omega(2n+1)", {1, m});
    if (!rep.violations.empty()) return rep;

    // Admissible partners per wedge (x, sigma(x)), x in [1..2n].
    std::vector<std::vector<Sector>> adm(static_cast<size_t>(2 * n) + 1);
    for (Sector x = 1; x <= 2 * n; ++x) {
        for (Sector y = x + 1; y <= 2 * n; ++y) {
            const CaseCheck c = admissible(x, sigma[static_cast<size_t>(x)], y,
                                           sigma[static_cast<size_t>(y)], omega, g);
            if (c.any()) {
                adm[static_cast<size_t>(x)].push_back(y);
                adm[static_cast<size_t>(y)].push_back(x);
            }
        }
    }
    for (Sector x = 1; x <= 2 * n; ++x) {
        if (adm[static_cast<size_t>(x)].empty()) {
            fail("wedge (" + std::to_string(x) + "," + std::to_string(sigma[static_cast<size_t>(x)]) +
                     ") has no admissible partner",
                 {x});
        }
    }
    if (!rep.violations.empty()) return rep;

    std::vector<Sector> matched;
    std::vector<Sector> work(static_cast<size_t>(2 * n) + 1, 0);
    const int matchings = count_matchings(adm, matched, work, 2);
    if (matchings == 0) {
        fail("wedges admit no perfect matching into ribbons");
        return rep;
    }
    if (matchings > 1) {
        fail("wedge matching is ambiguous: two distinct perfect matchings exist");
        return rep;
    }

    rep.partner.assign(static_cast<size_t>(m) + 1, 0);
    for (Sector x = 1; x <= 2 * n; ++x) rep.partner[static_cast<size_t>(x)] = matched[static_cast<size_t>(x)];

    for (Sector x = 1; x <= 2 * n; ++x) {
        const Sector y = matched[static_cast<size_t>(x)];
        if (y < x) continue;
        Ribbon r;
        r.wedge_a = {x, sigma[static_cast<size_t>(x)]};
        r.wedge_b = {y, sigma[static_cast<size_t>(y)]};
        const CaseCheck c =
            admissible(x, r.wedge_a.second, y, r.wedge_b.second, omega, g);
        r.twist = c.case1 && c.case2 ? Twist::Ambiguous
                                     : (c.case1 ? Twist::Untwisted : Twist::Twisted);
        const bool mono_a = omega[static_cast<size_t>(x)] == -omega[static_cast<size_t>(r.wedge_a.second)];
        const bool mono_b = omega[static_cast<size_t>(y)] == -omega[static_cast<size_t>(r.wedge_b.second)];
        if (mono_a != mono_b)
            throw internal_error("ribbon wedges disagree on directional status at sector " +
                                 std::to_string(x));
        r.direction = mono_a ? Direction::Mono : Direction::Bi;
        auto s = r.sectors();
        r.origin = s.front();
        r.terminus = s.back();
        rep.ribbons.push_back(r);
    }
    std::sort(rep.ribbons.begin(), rep.ribbons.end(),
              [](const Ribbon& a, const Ribbon& b) { return a.origin < b.origin; });

    rep.ok = true;
    return rep;
}

Fatgraph Fatgraph::make(int n, std::vector<Sector> sigma, std::vector<std::int8_t> omega,
                        std::vector<Sector> gamma) {
    ValidationReport rep = validate(n, sigma, omega, gamma);
    if (!rep.ok) {
        std::string msg = "invalid fatgraph:";
        for (const auto& v : rep.violations) msg += " " + v.message + ";";
        throw domain_error(msg);
    }
    Fatgraph f;
    f.n_ = n;
    f.sigma_ = std::move(sigma);
    f.omega_ = std::move(omega);
    f.gamma_ = std::move(gamma);
    f.index_structure(rep);
    return f;
}

Fatgraph Fatgraph::from_cycles(int n, const std::vector<std::vector<Sector>>& sigma_cycles,
                               const std::vector<std::int8_t>& omega,
                               const std::vector<std::vector<Sector>>& gamma_cycles) {
    const int m = 2 * n + 1;
    auto expand = [&](const std::vector<std::vector<Sector>>& cycles, const char* name) {
        std::vector<Sector> table(static_cast<size_t>(m) + 1, 0);
        std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
        for (const auto& cyc : cycles) {
            if (cyc.empty()) throw domain_error(std::string(name) + ": empty cycle");
            for (size_t i = 0; i < cyc.size(); ++i) {
                Sector a = cyc[i];
                Sector b = cyc[(i + 1) % cyc.size()];
                if (a < 1 || a > m) throw domain_error(std::string(name) + ": sector out of range");
                if (seen[static_cast<size_t>(a)])
                    throw domain_error(std::string(name) + ": sector " + std::to_string(a) + " repeated");
                seen[static_cast<size_t>(a)] = 1;
                table[static_cast<size_t>(a)] = b;
            }
        }
        for (int x = 1; x <= m; ++x)
            if (table[static_cast<size_t>(x)] == 0) table[static_cast<size_t>(x)] = x;  // omitted fixed point
        return table;
    };
    std::vector<Sector> sig = expand(sigma_cycles, "sigma");
    std::vector<Sector> gam;
    if (!gamma_cycles.empty()) gam = expand(gamma_cycles, "gamma");
    std::vector<std::int8_t> om(static_cast<size_t>(m) + 1, 0);
    if (static_cast<int>(omega.size()) == m) {
        for (int x = 1; x <= m; ++x) om[static_cast<size_t>(x)] = omega[static_cast<size_t>(x - 1)];
    } else {
        om = omega;
    }
    return make(n, std::move(sig), std::move(om), std::move(gam));
}

void Fatgraph::index_structure(const ValidationReport& report) {
    const int m = sector_count();
    sigma_inv_.assign(static_cast<size_t>(m) + 1, 0);
    for (int x = 1; x <= m; ++x) sigma_inv_[static_cast<size_t>(sigma_[static_cast<size_t>(x)])] = x;
    if (!gamma_.empty()) {
        gamma_inv_.assign(static_cast<size_t>(m) + 1, 0);
        for (int x = 1; x <= m; ++x) gamma_inv_[static_cast<size_t>(gamma_[static_cast<size_t>(x)])] = x;
        std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
        boundary_count_ = 0;
        for (int x = 1; x <= m; ++x) {
            if (seen[static_cast<size_t>(x)]) continue;
            ++boundary_count_;
            for (Sector y = x; !seen[static_cast<size_t>(y)]; y = gamma_[static_cast<size_t>(y)])
                seen[static_cast<size_t>(y)] = 1;
        }
    } else {
        boundary_count_ = 1;
    }

    vertex_of_.assign(static_cast<size_t>(m) + 1, -1);
    std::vector<std::vector<Sector>> cycles;
    for (int x = 1; x <= m; ++x) {
        if (vertex_of_[static_cast<size_t>(x)] >= 0) continue;
        std::vector<Sector> cyc;
        Sector least = x;
        for (Sector y = x;; y = sigma_[static_cast<size_t>(y)]) {
            least = std::min(least, y);
            cyc.push_back(y);
            if (sigma_[static_cast<size_t>(y)] == x) break;
        }
        // rotate to start at the least sector
        auto it = std::find(cyc.begin(), cyc.end(), least);
        std::rotate(cyc.begin(), it, cyc.end());
        for (Sector y : cyc) vertex_of_[static_cast<size_t>(y)] = static_cast<int>(cycles.size());
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    vertices_ = std::move(cycles);
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
        for (Sector y : vertices_[static_cast<size_t>(v)]) vertex_of_[static_cast<size_t>(y)] = v;

    ribbons_ = report.ribbons;
    wedge_owner_.assign(static_cast<size_t>(m) + 1, -1);
    side_owner_.assign(static_cast<size_t>(m) + 1, -1);
    for (int i = 0; i < static_cast<int>(ribbons_.size()); ++i) {
        const Ribbon& r = ribbons_[static_cast<size_t>(i)];
        wedge_owner_[static_cast<size_t>(r.wedge_a.first)] = i;
        wedge_owner_[static_cast<size_t>(r.wedge_b.first)] = i;
    }
    if (unicellular()) {
        // In boundary order each ribbon occupies the side edges (r^L, r^L+1)
        // and (r^R-1, r^R); its sector set is exactly the union of the two.
        for (int i = 0; i < static_cast<int>(ribbons_.size()); ++i) {
            const Ribbon& r = ribbons_[static_cast<size_t>(i)];
            auto s = r.sectors();
            std::set<Sector> expect = {r.origin, r.origin + 1, r.terminus - 1, r.terminus};
            if (std::set<Sector>(s.begin(), s.end()) != expect)
                throw internal_error("ribbon sectors are not two boundary-adjacent pairs");
            for (Sector side : {r.origin, r.terminus - 1}) {
                if (side_owner_[static_cast<size_t>(side)] != -1)
                    throw internal_error("boundary side claimed by two ribbons");
                side_owner_[static_cast<size_t>(side)] = i;
            }
        }
        for (Sector k = 1; k <= 2 * n_; ++k)
            if (side_owner_[static_cast<size_t>(k)] == -1)
                throw internal_error("boundary side " + std::to_string(k) + " belongs to no ribbon");
    }
}

int euler_genus(const Fatgraph& f) {
    const int v = static_cast<int>(f.vertices().size());
    const int e = f.n();
    const int b = f.boundary_components();
    const int genus = 2 - (v - e + b);
    if (genus < 0) throw internal_error("negative Euler genus: corrupted fatgraph");
    return genus;
}

bool is_orientable(const Fatgraph& f) {
    f.require_unicellular("is_orientable");
    for (const Ribbon& r : f.ribbons())
        if (r.mono()) return false;
    return true;
}

Fatgraph flip_vertex(const Fatgraph& f, int vertex_id) {
    if (vertex_id < 0 || vertex_id >= static_cast<int>(f.vertices().size()))
        throw domain_error("flip_vertex: unknown vertex id " + std::to_string(vertex_id));
    if (vertex_id == f.root_vertex() && f.vertices()[static_cast<size_t>(vertex_id)].size() > 2)
        throw domain_error("flip_vertex: flipping the root vertex breaks rootedness");
    const auto& cyc = f.vertices()[static_cast<size_t>(vertex_id)];
    std::vector<Sector> sigma = f.sigma_table();
    std::vector<std::int8_t> omega = f.omega_table();
    const size_t len = cyc.size();
    for (size_t i = 0; i < len; ++i) {
        // reversed cycle: successor of cyc[i] becomes cyc[i-1]
        sigma[static_cast<size_t>(cyc[i])] = cyc[(i + len - 1) % len];
        omega[static_cast<size_t>(cyc[i])] = static_cast<std::int8_t>(-omega[static_cast<size_t>(cyc[i])]);
    }
    try {
        return Fatgraph::make(f.n(), std::move(sigma), std::move(omega), f.gamma_table());
    } catch (const domain_error& e) {
        throw internal_error(std::string("flip_vertex produced an invalid fatgraph: ") + e.what());
    }
}

namespace {

// Local encoding of one vertex: cycle written from its least sector, then the
// omega signs in that order ('+' sorts before '-'). Flip candidates compare
// lexicographically.
struct VertexCode {
    std::vector<Sector> cyc;
    std::vector<std::uint8_t> signs;  // 0 for +, 1 for -
    bool operator<(const VertexCode& o) const {
        if (cyc != o.cyc) return cyc < o.cyc;
        return signs < o.signs;
    }
};

VertexCode encode_vertex(const std::vector<Sector>& cyc, const Fatgraph& f, bool flipped) {
    VertexCode code;
    code.cyc = cyc;
    if (flipped) {
        std::reverse(code.cyc.begin() + 1, code.cyc.end());
    }
    for (Sector s : code.cyc) {
        std::int8_t w = f.omega(s);
        if (flipped) w = static_cast<std::int8_t>(-w);
        code.signs.push_back(w > 0 ? 0 : 1);
    }
    return code;
}

}  // namespace

Fatgraph canonical_rep(const Fatgraph& f) {
    f.require_unicellular("canonical_form");
    const int root = f.root_vertex();
    std::vector<Sector> sigma = f.sigma_table();
    std::vector<std::int8_t> omega = f.omega_table();
    for (int v = 0; v < static_cast<int>(f.vertices().size()); ++v) {
        const auto& cyc = f.vertices()[static_cast<size_t>(v)];
        // Flipping the root vertex is only rooted-legal for the 2-cycle (1, 2n+1).
        if (v == root && cyc.size() > 2) continue;
        if (encode_vertex(cyc, f, true) < encode_vertex(cyc, f, false)) {
            const size_t len = cyc.size();
            for (size_t i = 0; i < len; ++i) {
                sigma[static_cast<size_t>(cyc[i])] = cyc[(i + len - 1) % len];
                omega[static_cast<size_t>(cyc[i])] =
                    static_cast<std::int8_t>(-omega[static_cast<size_t>(cyc[i])]);
            }
        }
    }
    try {
        return Fatgraph::make(f.n(), std::move(sigma), std::move(omega), f.gamma_table());
    } catch (const domain_error& e) {
        throw internal_error(std::string("canonical representative invalid: ") + e.what());
    }
}

std::string canonical_form(const Fatgraph& f) {
    Fatgraph rep = canonical_rep(f);
    std::ostringstream os;
    os << rep.n() << ';';
    for (const auto& cyc : rep.vertices()) {
        os << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            os << (i ? " " : "") << cyc[i] << (rep.omega(cyc[i]) > 0 ? '+' : '-');
        }
        os << ')';
    }
    return os.str();
}

bool crossing(const Ribbon& r1, const Ribbon& r2) {
    const Sector a = r1.origin, b = r1.terminus, c = r2.origin, d = r2.terminus;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

Fatgraph induced_fatgraph(const Fatgraph& f, const std::vector<int>& component_ribbons) {
    f.require_unicellular("induced_fatgraph");
    // Sectors owned by the component: the wedge starts of its ribbons.
    std::vector<Sector> owned;
    for (int idx : component_ribbons) {
        const Ribbon& r = f.ribbons()[static_cast<size_t>(idx)];
        owned.push_back(r.wedge_a.first);
        owned.push_back(r.wedge_b.first);
    }
    std::sort(owned.begin(), owned.end());
    owned.erase(std::unique(owned.begin(), owned.end()), owned.end());
    const int m2 = static_cast<int>(owned.size());
    if (m2 != 2 * static_cast<int>(component_ribbons.size()))
        throw internal_error("component does not own two sectors per ribbon");

    std::vector<int> relabel(static_cast<size_t>(f.sector_count()) + 1, 0);
    for (int i = 0; i < m2; ++i) relabel[static_cast<size_t>(owned[static_cast<size_t>(i)])] = i + 1;

    const int mark = m2 + 1;  // fresh root sector
    std::vector<Sector> sigma(static_cast<size_t>(mark) + 1, 0);
    std::vector<std::int8_t> omega(static_cast<size_t>(mark) + 1, 0);
    for (Sector x : owned) {
        Sector next = f.sigma(x);
        while (!relabel[static_cast<size_t>(next)]) next = f.sigma(next);
        sigma[static_cast<size_t>(relabel[static_cast<size_t>(x)])] = relabel[static_cast<size_t>(next)];
        omega[static_cast<size_t>(relabel[static_cast<size_t>(x)])] = f.omega(x);
    }
    // Bisect the first sector's vertex: splice the root sector right before 1.
    Sector pred = 1;
    while (sigma[static_cast<size_t>(pred)] != 1) pred = sigma[static_cast<size_t>(pred)];
    sigma[static_cast<size_t>(pred)] = mark;
    sigma[static_cast<size_t>(mark)] = 1;
    omega[static_cast<size_t>(mark)] = omega[1];

    try {
        Fatgraph out = Fatgraph::make(static_cast<int>(component_ribbons.size()), std::move(sigma),
                                      std::move(omega));
        return out;
    } catch (const domain_error& e) {
        throw internal_error(std::string("induced fatgraph invalid: ") + e.what());
    }
}

}  // namespace unifat
