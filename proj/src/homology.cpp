#include "vrk/homology.hpp"

#include "vrk/errors.hpp"

#include <stdexcept>

namespace vrk {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Coefficients Coefficients::prime_field(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " +
                                                  std::to_string(p));
    return Coefficients(Kind::prime_field, p);
}

Coefficients Coefficients::parse(const std::string& text) {
    if (text == "z" || text == "Z") return integers();
    if (text == "q" || text == "Q") return rationals();
    if ((text.size() >= 2 && (text[0] == 'f' || text[0] == 'F'))) {
        try {
            return prime_field(std::stoll(text.substr(1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad field coefficients '" + text + "' (want f<prime>)");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("field characteristic out of range in '" + text + "'");
        }
    }
    throw std::invalid_argument("unknown coefficients '" + text + "' (want z, q, or f<prime>)");
}

std::string Coefficients::describe() const {
    switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::prime_field: return "F_" + std::to_string(p_);
    }
    return "?";
}

bool degree_computed(const ChainComplex& c, int q) {
    if (q < 0) return true;
    if (!c.truncated) return true;
    return q < c.top_degree();
}

HomologyCalculator::HomologyCalculator(const ChainComplex& c, Coefficients coeff, bool transpose)
    : c_(&c), coeff_(coeff), transpose_(transpose),
      cache_(static_cast<std::size_t>(c.top_degree()) + 2) {}

const HomologyCalculator::BoundaryInfo& HomologyCalculator::boundary_info(int q) {
    auto& info = cache_[static_cast<std::size_t>(q)];
    if (info.ready) return info;
    info.ready = true;
    if (c_->has_boundary(q)) {
        const SparseIntMatrix& d = c_->boundary(q);
        SparseIntMatrix m = transpose_ ? d.transposed() : d;
        switch (coeff_.kind()) {
        case Coefficients::Kind::prime_field:
            info.rank = rank_mod_p(m, coeff_.prime());
            break;
        case Coefficients::Kind::rationals:
        case Coefficients::Kind::integers: {
            SmithForm snf = smith_normal_form(m);
            info.rank = snf.rank();
            if (coeff_.kind() == Coefficients::Kind::integers)
                info.torsion = snf.nontrivial_factors();
            break;
        }
        }
    }
    return info;
}

FgAbelianGroup HomologyCalculator::at(int q) {
    if (!computable(q)) throw degree_not_computed(q);
    if (q < 0 || q > c_->top_degree()) return FgAbelianGroup();
    const BoundaryInfo& lower = boundary_info(q);       // d_q (or its transpose)
    const BoundaryInfo& upper = boundary_info(q + 1);   // d_{q+1} (or its transpose)
    std::int64_t rank = c_->dim_at(q) - lower.rank - upper.rank;
    // torsion rides on the incoming map: d_{q+1} for homology, the
    // transpose of d_q (the coboundary out of degree q-1) for cohomology
    const std::vector<Integer>& torsion = transpose_ ? lower.torsion : upper.torsion;
    return FgAbelianGroup::from_parts(rank, torsion);
}

FgAbelianGroup homology_at(const ChainComplex& c, int q, const Coefficients& coeff) {
    return HomologyCalculator(c, coeff, false).at(q);
}

FgAbelianGroup cohomology_at(const ChainComplex& c, int q, const Coefficients& coeff) {
    return HomologyCalculator(c, coeff, true).at(q);
}

GradedGroups graded_homology(const ChainComplex& c, int max_q, const Coefficients& coeff) {
    if (max_q < 0) throw std::invalid_argument("graded_homology: negative degree cap");
    HomologyCalculator calc(c, coeff, false);
    GradedGroups out;
    for (int q = 0; q <= max_q; ++q) out.set(q, calc.at(q));
    return out;
}

GradedGroups graded_cohomology(const ChainComplex& c, int max_q, const Coefficients& coeff) {
    if (max_q < 0) throw std::invalid_argument("graded_cohomology: negative degree cap");
    HomologyCalculator calc(c, coeff, true);
    GradedGroups out;
    for (int q = 0; q <= max_q; ++q) out.set(q, calc.at(q));
    return out;
}

} // namespace vrk
