#pragma once

#include "vrk/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vrk {

// Finitely generated abelian group in canonical form: free rank plus
// invariant factors d1 | d2 | ... with every di >= 2. Because the form is
// unique, structural equality decides isomorphism.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default; // the zero group

    static FgAbelianGroup free_of_rank(std::int64_t rank);

    // Canonicalizes arbitrary cyclic orders (each >= 1; 1s are dropped)
    // into the invariant-factor chain. Throws std::invalid_argument on a
    // nonpositive order.
    static FgAbelianGroup from_parts(std::int64_t rank, std::vector<Integer> orders);

    std::int64_t rank() const { return rank_; }
    const std::vector<Integer>& invariant_factors() const { return factors_; }
    bool is_zero() const { return rank_ == 0 && factors_.empty(); }

    // "0", "Z", "Z^2", "Z/2", "Z + Z/2 + Z/6", ...
    std::string describe() const;

    bool operator==(const FgAbelianGroup&) const = default;

private:
    std::int64_t rank_ = 0;
    std::vector<Integer> factors_;
};

// Z^a (x) B contributes a copies of B; Z/m (x) Z/n = Z/gcd(m,n).
FgAbelianGroup tensor_groups(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Tor(Z, -) = 0; Tor(Z/m, Z/n) = Z/gcd(m,n).
FgAbelianGroup tor_groups(const FgAbelianGroup& a, const FgAbelianGroup& b);

FgAbelianGroup direct_sum(std::span<const FgAbelianGroup> groups);
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Canonical forms make this structural equality.
bool groups_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);

} // namespace vrk
