#include "vrk/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace vrk {

namespace {

// Fold a multiset of cyclic orders into the invariant-factor chain: one
// full pairwise (a,b) -> (gcd,lcm) sweep leaves position i holding the gcd
// of everything from i on, so the chain holds after a single pass.
void canonicalize_chain(std::vector<Integer>& factors) {
    std::erase_if(factors, [](const Integer& d) { return d == 1; });
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (factors[j] % factors[i] == 0) continue;
            Integer g = gcd(factors[i], factors[j]);
            factors[j] = factors[i] / g * factors[j];
            factors[i] = g;
        }
    std::erase_if(factors, [](const Integer& d) { return d == 1; });
}

} // namespace

FgAbelianGroup FgAbelianGroup::free_of_rank(std::int64_t rank) {
    return from_parts(rank, {});
}

FgAbelianGroup FgAbelianGroup::from_parts(std::int64_t rank, std::vector<Integer> orders) {
    if (rank < 0) throw std::invalid_argument("group rank must be nonnegative");
    for (const Integer& d : orders)
        if (d < 1) throw std::invalid_argument("cyclic order must be positive, got " + d.str());
    FgAbelianGroup g;
    g.rank_ = rank;
    canonicalize_chain(orders);
    g.factors_ = std::move(orders);
    return g;
}

std::string FgAbelianGroup::describe() const {
    if (is_zero()) return "0";
    std::string out;
    if (rank_ == 1)
        out = "Z";
    else if (rank_ > 1)
        out = "Z^" + std::to_string(rank_);
    for (const Integer& d : factors_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    return out;
}

FgAbelianGroup tensor_groups(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> orders;
    // Z^rank(a) (x) torsion(b) and symmetrically
    for (std::int64_t i = 0; i < a.rank(); ++i)
        for (const Integer& d : b.invariant_factors()) orders.push_back(d);
    for (std::int64_t i = 0; i < b.rank(); ++i)
        for (const Integer& d : a.invariant_factors()) orders.push_back(d);
    for (const Integer& da : a.invariant_factors())
        for (const Integer& db : b.invariant_factors()) orders.push_back(gcd(da, db));
    return FgAbelianGroup::from_parts(a.rank() * b.rank(), std::move(orders));
}

FgAbelianGroup tor_groups(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> orders;
    for (const Integer& da : a.invariant_factors())
        for (const Integer& db : b.invariant_factors()) orders.push_back(gcd(da, db));
    return FgAbelianGroup::from_parts(0, std::move(orders));
}

FgAbelianGroup direct_sum(std::span<const FgAbelianGroup> groups) {
    std::int64_t rank = 0;
    std::vector<Integer> orders;
    for (const FgAbelianGroup& g : groups) {
        rank += g.rank();
        for (const Integer& d : g.invariant_factors()) orders.push_back(d);
    }
    return FgAbelianGroup::from_parts(rank, std::move(orders));
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    const FgAbelianGroup pair[] = {a, b};
    return direct_sum(std::span<const FgAbelianGroup>(pair, 2));
}

bool groups_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a == b;
}

} // namespace vrk
