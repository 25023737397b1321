#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core model for rooted fatgraphs on sectors [1..2n+1]: validation of the
// wedge matching, ribbons, Euler genus, orientability, vertex flips,
// canonical form under flips, crossing, and induced sub-fatgraphs.

namespace unifat {

// Domain error: bad input (invalid permutation, failed validation, illegal
// operation arguments). Maps to CLI exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal inconsistency: a structural guarantee the theory promises was
// observed broken. Maps to CLI exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

using Sector = int;  // 1-based label in [1 .. 2n+1]

enum class Twist : std::uint8_t { Untwisted, Twisted, Ambiguous };
enum class Direction : std::uint8_t { Bi, Mono };

// A ribbon is the matched pair of wedges ((x, sigma(x)), (y, sigma(y))).
struct Ribbon {
    std::pair<Sector, Sector> wedge_a;
    std::pair<Sector, Sector> wedge_b;
    Twist twist = Twist::Untwisted;
    Direction direction = Direction::Bi;
    Sector origin = 0;    // r^L, first sector in boundary order
    Sector terminus = 0;  // r^R, last sector in boundary order

    bool mono() const { return direction == Direction::Mono; }

    // The distinct sector labels of the ribbon, sorted ascending.
    std::vector<Sector> sectors() const;
};

struct Violation {
    std::string message;
    std::vector<Sector> sectors;  // offending labels, if any
};

struct ValidationReport {
    bool ok = false;
    // partner[x] = y iff the wedge (x, sigma(x)) is matched with (y, sigma(y)).
    // 0 for unmatched / root sector.
    std::vector<Sector> partner;
    std::vector<Ribbon> ribbons;  // populated when ok
    std::vector<Violation> violations;
};

class Fatgraph {
public:
    // Validate a candidate quadruple without throwing. `gamma` empty means the
    // standard boundary cycle (1 2 ... 2n+1). sigma and omega are 1-based
    // tables of size 2n+2 (index 0 unused).
    static ValidationReport validate(int n, const std::vector<Sector>& sigma,
                                     const std::vector<std::int8_t>& omega,
                                     const std::vector<Sector>& gamma = {});

    // Construct a validated fatgraph; throws domain_error on any violation.
    static Fatgraph make(int n, std::vector<Sector> sigma, std::vector<std::int8_t> omega,
                         std::vector<Sector> gamma = {});

    // Convenience: build sigma from cycle notation, e.g. {{1,3},{2}} for (1 3)(2).
    // Cycles must cover [1..2n+1] exactly once; fixed points may be omitted.
    static Fatgraph from_cycles(int n, const std::vector<std::vector<Sector>>& sigma_cycles,
                                const std::vector<std::int8_t>& omega,
                                const std::vector<std::vector<Sector>>& gamma_cycles = {});

    int n() const { return n_; }
    int sector_count() const { return 2 * n_ + 1; }

    Sector sigma(Sector x) const { return sigma_[static_cast<size_t>(x)]; }
    Sector sigma_inv(Sector x) const { return sigma_inv_[static_cast<size_t>(x)]; }
    std::int8_t omega(Sector x) const { return omega_[static_cast<size_t>(x)]; }
    Sector gamma(Sector x) const;
    Sector gamma_inv(Sector x) const;

    const std::vector<Sector>& sigma_table() const { return sigma_; }
    const std::vector<std::int8_t>& omega_table() const { return omega_; }
    bool has_explicit_gamma() const { return !gamma_.empty(); }
    const std::vector<Sector>& gamma_table() const { return gamma_; }

    // sigma-cycles, each written from its least sector, sorted by least sector.
    const std::vector<std::vector<Sector>>& vertices() const { return vertices_; }
    // Index into vertices() for the cycle containing x.
    int vertex_of(Sector x) const { return vertex_of_[static_cast<size_t>(x)]; }
    // The vertex whose cycle carries the root wedge (2n+1 -> 1).
    int root_vertex() const { return vertex_of(sector_count()); }

    int boundary_components() const { return boundary_count_; }
    bool unicellular() const { return boundary_count_ == 1; }
    void require_unicellular(const char* op) const;

    const std::vector<Ribbon>& ribbons() const { return ribbons_; }
    // Ribbon owning the wedge (x, sigma(x)); -1 for x = 2n+1.
    int ribbon_owning_wedge(Sector x) const { return wedge_owner_[static_cast<size_t>(x)]; }
    // Ribbon whose boundary side runs from k to gamma(k); -1 for the root edge.
    int ribbon_on_side(Sector k) const { return side_owner_[static_cast<size_t>(k)]; }

    bool operator==(const Fatgraph& other) const {
        return n_ == other.n_ && sigma_ == other.sigma_ && omega_ == other.omega_ &&
               gamma_ == other.gamma_;
    }

private:
    Fatgraph() = default;
    void index_structure(const ValidationReport& report);

    int n_ = 0;
    std::vector<Sector> sigma_, sigma_inv_;
    std::vector<std::int8_t> omega_;
    std::vector<Sector> gamma_, gamma_inv_;  // empty when standard
    int boundary_count_ = 1;
    std::vector<std::vector<Sector>> vertices_;
    std::vector<int> vertex_of_;
    std::vector<Ribbon> ribbons_;
    std::vector<int> wedge_owner_;
    std::vector<int> side_owner_;
};

// 2 - (v - e + b); defined for any valid fatgraph, also multicellular ones.
int euler_genus(const Fatgraph& f);

// Proposition-1 criterion: non-orientable iff some ribbon is mono-directional.
bool is_orientable(const Fatgraph& f);

// Reverse the cycle order of the vertex and negate omega on its sectors.
// The root vertex (carrying the wedge 2n+1 -> 1) cannot be flipped without
// leaving the rooted class, so it is rejected.
Fatgraph flip_vertex(const Fatgraph& f, int vertex_id);

// Byte-comparable key, equal for fatgraphs related by non-root vertex flips.
std::string canonical_form(const Fatgraph& f);
// The distinguished representative realizing canonical_form.
Fatgraph canonical_rep(const Fatgraph& f);

// Interleaving of origins/termini in boundary order.
bool crossing(const Ribbon& r1, const Ribbon& r2);

// Given the ribbon indices of one crossing-equivalence class, produce the
// rooted fatgraph it induces (order-preserving relabel of the class's wedge
// sectors plus a fresh root sector bisecting the first one).
Fatgraph induced_fatgraph(const Fatgraph& f, const std::vector<int>& component_ribbons);

}  // namespace unifat
