#include "vrk/kunneth.hpp"

#include <chrono>
#include <stdexcept>

namespace vrk {

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

KunnethPrediction predict(const GradedGroups& hx, const GradedGroups& hy, int q, int tor_degree) {
    KunnethPrediction p;
    std::vector<FgAbelianGroup> tensor_terms;
    for (int i = 0; i <= q; ++i) tensor_terms.push_back(tensor_groups(hx.at(i), hy.at(q - i)));
    p.tensor_part = direct_sum(tensor_terms);

    std::vector<FgAbelianGroup> tor_terms;
    for (int i = 0; i <= tor_degree; ++i)
        tor_terms.push_back(tor_groups(hx.at(i), hy.at(tor_degree - i)));
    p.tor_part = direct_sum(tor_terms);

    p.total = direct_sum(p.tensor_part, p.tor_part);
    return p;
}

struct VerifySides {
    const ChainComplex& x;
    const ChainComplex& y;
    const ChainComplex& product;
};

void run_comparison(KunnethReport& report, const VerifySides& sides, int max_q,
                    const Coefficients& coeff, bool cohomology) {
    auto total_start = Clock::now();

    // factor homologies, reused across degrees
    GradedGroups hx, hy;
    int factor_upto = max_q;
    for (int q = 0; q <= max_q; ++q) {
        if (!degree_computed(sides.x, q) || !degree_computed(sides.y, q)) {
            factor_upto = q - 1;
            break;
        }
    }
    if (factor_upto >= 0) {
        hx = cohomology ? graded_cohomology(sides.x, factor_upto, coeff)
                        : graded_homology(sides.x, factor_upto, coeff);
        hy = cohomology ? graded_cohomology(sides.y, factor_upto, coeff)
                        : graded_homology(sides.y, factor_upto, coeff);
    }

    HomologyCalculator product_calc(sides.product, coeff, cohomology);
    for (int q = 0; q <= max_q; ++q) {
        auto start = Clock::now();
        KunnethDegree entry;
        entry.q = q;
        entry.known = q <= factor_upto && degree_computed(sides.product, q);
        if (entry.known) {
            entry.computed = product_calc.at(q);
            KunnethPrediction p = cohomology ? predict_cohomology(hx, hy, q)
                                             : predict_homology(hx, hy, q);
            entry.tensor_part = std::move(p.tensor_part);
            entry.tor_part = std::move(p.tor_part);
            entry.predicted = std::move(p.total);
            entry.match = groups_isomorphic(entry.computed, entry.predicted);
        } else {
            report.partial = true;
        }
        entry.millis = since_ms(start);
        report.degrees.push_back(std::move(entry));
    }
    report.total_millis = since_ms(total_start);
}

} // namespace

KunnethPrediction predict_homology(const GradedGroups& hx, const GradedGroups& hy, int q) {
    return predict(hx, hy, q, q - 1);
}

KunnethPrediction predict_cohomology(const GradedGroups& hx, const GradedGroups& hy, int q) {
    return predict(hx, hy, q, q + 1);
}

FgAbelianGroup torus_closed_form(int l, int l_prime, int q) {
    if (l < 0 || l_prime < 0) throw std::invalid_argument("sphere parameters must be nonnegative");
    if (q < 0) return FgAbelianGroup();
    if (l == l_prime) {
        if (q == 0 || q == 2 * (2 * l + 1)) return FgAbelianGroup::free_of_rank(1);
        if (q == 2 * l + 1) return FgAbelianGroup::free_of_rank(2);
        return FgAbelianGroup();
    }
    if (q == 0 || q == 2 * l + 1 || q == 2 * l_prime + 1 || q == 2 * (l + l_prime + 1))
        return FgAbelianGroup::free_of_rank(1);
    return FgAbelianGroup();
}

bool KunnethReport::all_match() const {
    for (const KunnethDegree& d : degrees)
        if (d.known && !d.match) return false;
    return true;
}

KunnethReport verify_graph_product(const Graph& g, const Graph& h, int max_q,
                                   const Coefficients& coeff, const BuildLimits& limits,
                                   const std::string& label_x, const std::string& label_y) {
    if (max_q < 0) throw std::invalid_argument("max_q must be nonnegative");
    KunnethReport report;
    report.kind = "graph-product";
    report.coeff = coeff;
    report.max_q = max_q;
    report.cap = max_q + 1;
    report.factor_x = label_x.empty() ? "graph(n=" + std::to_string(g.vertex_count()) + ")" : label_x;
    report.factor_y = label_y.empty() ? "graph(n=" + std::to_string(h.vertex_count()) + ")" : label_y;

    Graph product = strong_product(g, h);
    FlagComplex kx = build_flag_complex(g, report.cap, limits, OnLimit::truncate);
    FlagComplex ky = build_flag_complex(h, report.cap, limits, OnLimit::truncate);
    FlagComplex kp = build_flag_complex(product, report.cap, limits, OnLimit::truncate);
    report.f_x = kx.f_vector();
    report.f_y = ky.f_vector();
    report.f_product = kp.f_vector();

    ChainComplex cx = chain_complex(kx);
    ChainComplex cy = chain_complex(ky);
    ChainComplex cp = chain_complex(kp);
    run_comparison(report, {cx, cy, cp}, max_q, coeff, /*cohomology=*/false);
    return report;
}

KunnethReport verify_algebraic(const ChainComplex& a, const ChainComplex& b, int max_q,
                               const Coefficients& coeff, const BuildLimits& limits,
                               const std::string& label_x, const std::string& label_y) {
    if (max_q < 0) throw std::invalid_argument("max_q must be nonnegative");
    KunnethReport report;
    report.kind = "algebraic";
    report.coeff = coeff;
    report.max_q = max_q;
    report.cap = max_q + 1;
    auto dims_label = [](const ChainComplex& c) {
        std::string s = "complex(dims=";
        for (int q = 0; q <= c.top_degree(); ++q)
            s += (q ? "," : "") + std::to_string(c.dim_at(q));
        return s + ")";
    };
    report.factor_x = label_x.empty() ? dims_label(a) : label_x;
    report.factor_y = label_y.empty() ? dims_label(b) : label_y;
    report.f_x = a.dims;
    report.f_y = b.dims;

    ChainComplex tensor = tensor_chain_complex(a, b, report.cap, limits);
    report.f_product = tensor.dims;
    run_comparison(report, {a, b, tensor}, max_q, coeff, /*cohomology=*/false);
    return report;
}

KunnethReport verify_supplied_product(const ChainComplex& a, const ChainComplex& b,
                                      const ChainComplex& product, int max_q,
                                      const Coefficients& coeff, const std::string& label_x,
                                      const std::string& label_y) {
    if (max_q < 0) throw std::invalid_argument("max_q must be nonnegative");
    KunnethReport report;
    report.kind = "algebraic";
    report.coeff = coeff;
    report.max_q = max_q;
    report.cap = product.top_degree();
    report.factor_x = label_x;
    report.factor_y = label_y;
    report.f_x = a.dims;
    report.f_y = b.dims;
    report.f_product = product.dims;
    run_comparison(report, {a, b, product}, max_q, coeff, /*cohomology=*/false);
    return report;
}

KunnethReport verify_cohomology_product(const Graph& g, const Graph& h, int max_q,
                                        const Coefficients& coeff, const BuildLimits& limits,
                                        const std::string& label_x, const std::string& label_y) {
    if (max_q < 0) throw std::invalid_argument("max_q must be nonnegative");
    KunnethReport report = [&] {
        KunnethReport r;
        r.kind = "cohomology-product";
        r.coeff = coeff;
        r.max_q = max_q;
        r.cap = max_q + 1;
        r.factor_x = label_x.empty() ? "graph(n=" + std::to_string(g.vertex_count()) + ")" : label_x;
        r.factor_y = label_y.empty() ? "graph(n=" + std::to_string(h.vertex_count()) + ")" : label_y;
        return r;
    }();

    Graph product = strong_product(g, h);
    FlagComplex kx = build_flag_complex(g, report.cap, limits, OnLimit::truncate);
    FlagComplex ky = build_flag_complex(h, report.cap, limits, OnLimit::truncate);
    FlagComplex kp = build_flag_complex(product, report.cap, limits, OnLimit::truncate);
    report.f_x = kx.f_vector();
    report.f_y = ky.f_vector();
    report.f_product = kp.f_vector();

    ChainComplex cx = chain_complex(kx);
    ChainComplex cy = chain_complex(ky);
    ChainComplex cp = chain_complex(kp);
    run_comparison(report, {cx, cy, cp}, max_q, coeff, /*cohomology=*/true);
    return report;
}

} // namespace vrk
