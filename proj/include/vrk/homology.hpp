#pragma once

#include "vrk/abelian.hpp"
#include "vrk/flag_complex.hpp"
#include "vrk/smith.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace vrk {

// Coefficient choice: Z, Q, or F_p with p prime. Both factors of every
// product computation use the same coefficients; for these choices the
// torsion product of the coefficient modules vanishes, which is the
// hypothesis all the product short exact sequences need.
class Coefficients {
public:
    enum class Kind { integers, rationals, prime_field };

    static Coefficients integers() { return Coefficients(Kind::integers, 0); }
    static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
    static Coefficients prime_field(std::int64_t p);

    // "z", "q", or "f<p>" as written on the command line.
    static Coefficients parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::int64_t prime() const { return p_; }
    bool is_field() const { return kind_ != Kind::integers; }

    std::string describe() const; // "Z", "Q", "F_2"

    bool operator==(const Coefficients&) const = default;

private:
    Coefficients(Kind k, std::int64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::int64_t p_;
};

// Graded abelian groups with finite support; degrees without an entry are
// zero. Over a field the rank field carries the dimension.
struct GradedGroups {
    std::map<int, FgAbelianGroup> groups;

    FgAbelianGroup at(int q) const {
        auto it = groups.find(q);
        return it == groups.end() ? FgAbelianGroup() : it->second;
    }

    void set(int q, FgAbelianGroup g) {
        if (!g.is_zero()) groups[q] = std::move(g);
    }

    int max_degree() const { return groups.empty() ? -1 : groups.rbegin()->first; }
};

// True when the complex can answer for degree q: always below the top,
// at or above the top only when the complex is not truncated there.
bool degree_computed(const ChainComplex& c, int q);

// Homology (or, with transpose, cohomology) with each boundary eliminated
// at most once and reused across degrees. The complex must outlive this.
class HomologyCalculator {
public:
    HomologyCalculator(const ChainComplex& c, Coefficients coeff, bool transpose = false);

    bool computable(int q) const { return degree_computed(*c_, q); }

    // Throws degree_not_computed when !computable(q).
    FgAbelianGroup at(int q);

private:
    struct BoundaryInfo {
        std::int64_t rank = 0;
        std::vector<Integer> torsion;
        bool ready = false;
    };

    const BoundaryInfo& boundary_info(int q);

    const ChainComplex* c_;
    Coefficients coeff_;
    bool transpose_;
    std::vector<BoundaryInfo> cache_;
};

// Over Z: rank = dim_q - rank d_q - rank d_{q+1}, torsion = invariant
// factors > 1 of d_{q+1}. Over a field: dimension via field ranks, no
// torsion. Throws degree_not_computed beyond a truncated top.
FgAbelianGroup homology_at(const ChainComplex& c, int q,
                           const Coefficients& coeff = Coefficients::integers());

// Homology of the transposed boundary sequence at q; over Z its torsion is
// the torsion of d_q (one degree lower than in homology), matching the
// universal-coefficient picture.
FgAbelianGroup cohomology_at(const ChainComplex& c, int q,
                             const Coefficients& coeff = Coefficients::integers());

// Degrees 0..max_q in one sweep, running one elimination per boundary.
GradedGroups graded_homology(const ChainComplex& c, int max_q,
                             const Coefficients& coeff = Coefficients::integers());
GradedGroups graded_cohomology(const ChainComplex& c, int max_q,
                               const Coefficients& coeff = Coefficients::integers());

} // namespace vrk
