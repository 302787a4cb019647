#include "vrk/errors.hpp"
#include "vrk/flag_complex.hpp"
#include "vrk/homology.hpp"
#include "vrk/kunneth.hpp"
#include "vrk/relation.hpp"
#include "vrk/report_json.hpp"
#include "vrk/smith.hpp"
#include "vrk/spaces.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace vrk;

namespace pybind11::detail {

// exact big integers cross the boundary as python ints, via decimal strings
template <>
struct type_caster<Integer> {
    PYBIND11_TYPE_CASTER(Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = Integer(static_cast<std::string>(py::str(src)));
        return true;
    }

    static handle cast(const Integer& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

// exact rationals cross as fractions.Fraction (ints and "p/q" accepted in)
template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = Rational(Integer(static_cast<std::string>(py::str(src))));
            return true;
        }
        if (py::isinstance<py::str>(src)) {
            value = parse_rational(src.cast<std::string>());
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            Integer num(static_cast<std::string>(py::str(src.attr("numerator"))));
            Integer den(static_cast<std::string>(py::str(src.attr("denominator"))));
            if (den == 0) return false;
            value = Rational(num, den);
            return true;
        }
        return false;
    }

    static handle cast(const Rational& v, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(format_rational(v)).release();
    }
};

} // namespace pybind11::detail

namespace {

Coefficients coeff_from(const std::string& text) { return Coefficients::parse(text); }

py::dict graded_to_dict(const GradedGroups& g) {
    py::dict out;
    for (const auto& [q, group] : g.groups) out[py::int_(q)] = group;
    return out;
}

GradedGroups graded_from_dict(const py::dict& d) {
    GradedGroups g;
    for (auto item : d) g.set(item.first.cast<int>(), item.second.cast<FgAbelianGroup>());
    return g;
}

Threshold threshold_from(const Rational& value, const std::string& mode) {
    if (mode == "closed") return Threshold(value, Threshold::Mode::closed);
    if (mode == "open") return Threshold(value, Threshold::Mode::open);
    throw std::invalid_argument("threshold mode must be 'closed' or 'open'");
}

} // namespace

PYBIND11_MODULE(vrkunneth, m) {
    m.doc() = "Exact flag-complex homology and product-formula verification for "
              "finite relations, graphs, and metric samples.";

    py::register_exception<resource_limit_error>(m, "ResourceLimitError");
    py::register_exception<degree_not_computed>(m, "DegreeNotComputed");

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) +
                   " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("make_graph", &make_graph, py::arg("n"), py::arg("edges"),
          "Graph from an edge list; symmetric closure, self-pairs dropped.");
    m.def("strong_product", &strong_product, py::arg("g"), py::arg("h"));
    m.def("relation_equals", &relation_equals, py::arg("g"), py::arg("h"));
    m.def("tuple_count", &tuple_count, py::arg("g"), py::arg("k"),
          "Number of pairwise-related (k+1)-tuples, repeats allowed.");

    py::class_<FiniteMetricSpace>(m, "FiniteMetricSpace")
        .def(py::init([](const std::vector<std::vector<Rational>>& rows) {
                 VertexId n = static_cast<VertexId>(rows.size());
                 std::vector<Rational> flat;
                 for (const auto& row : rows) {
                     if (static_cast<VertexId>(row.size()) != n)
                         throw std::invalid_argument("distance matrix must be square");
                     flat.insert(flat.end(), row.begin(), row.end());
                 }
                 return FiniteMetricSpace(n, std::move(flat));
             }),
             py::arg("distances"))
        .def_property_readonly("point_count", &FiniteMetricSpace::point_count)
        .def("distance", &FiniteMetricSpace::distance, py::arg("i"), py::arg("j"));

    py::class_<Threshold>(m, "Threshold")
        .def(py::init(&threshold_from), py::arg("value"), py::arg("mode") = "closed")
        .def("admits", &Threshold::admits, py::arg("distance"))
        .def("__repr__", [](const Threshold& t) { return "<Threshold " + t.describe() + ">"; });

    m.def("relation_from_metric", &relation_from_metric, py::arg("metric"), py::arg("threshold"));
    m.def("max_metric_product", &max_metric_product, py::arg("a"), py::arg("b"));

    py::class_<FlagComplex>(m, "FlagComplex")
        .def_property_readonly("top_dimension", &FlagComplex::top_dimension)
        .def_property_readonly("truncated", &FlagComplex::truncated)
        .def("f_vector", &FlagComplex::f_vector)
        .def("simplex_count", &FlagComplex::simplex_count, py::arg("q"))
        .def("simplex",
             [](const FlagComplex& k, int q, std::int64_t idx) {
                 if (q < 0 || q > k.top_dimension() || idx < 0 || idx >= k.simplex_count(q))
                     throw std::out_of_range("simplex index out of range");
                 auto s = k.simplex(q, idx);
                 return std::vector<VertexId>(s.begin(), s.end());
             },
             py::arg("q"), py::arg("index"));

    m.def(
        "build_flag_complex",
        [](const Graph& g, int max_dim, std::int64_t max_simplices) {
            BuildLimits limits = BuildLimits::defaults();
            if (max_simplices > 0) limits.max_simplices = max_simplices;
            return build_flag_complex(g, max_dim, limits);
        },
        py::arg("g"), py::arg("max_dim"), py::arg("max_simplices") = 0);

    py::class_<SparseIntMatrix>(m, "SparseIntMatrix")
        .def_property_readonly("rows", &SparseIntMatrix::rows)
        .def_property_readonly("cols", &SparseIntMatrix::cols)
        .def_property_readonly("nonzero_count", &SparseIntMatrix::nonzero_count)
        .def("entry", &SparseIntMatrix::entry, py::arg("row"), py::arg("col"))
        .def("entries", [](const SparseIntMatrix& m_) {
            std::vector<std::tuple<std::int64_t, std::int64_t, Integer>> out;
            for (const auto& t : m_.entries()) out.emplace_back(t.row, t.col, t.value);
            return out;
        });

    m.def("boundary_matrix", &boundary_matrix, py::arg("complex"), py::arg("q"));
    m.def("export_complex_text", &export_complex_text, py::arg("complex"));
    m.def("export_matrix_text", &export_matrix_text, py::arg("m"));

    py::class_<ChainComplex>(m, "ChainComplex")
        .def_readonly("dims", &ChainComplex::dims)
        .def_readonly("truncated", &ChainComplex::truncated)
        .def_property_readonly("top_degree", &ChainComplex::top_degree)
        .def("boundary",
             [](const ChainComplex& c, int q) {
                 if (!c.has_boundary(q)) throw std::out_of_range("no boundary at that degree");
                 return c.boundary(q);
             },
             py::arg("q"))
        .def("euler_characteristic", &ChainComplex::euler_characteristic)
        .def("validate", &ChainComplex::validate);

    m.def("chain_complex", &chain_complex, py::arg("complex"));
    m.def(
        "tensor_chain_complex",
        [](const ChainComplex& a, const ChainComplex& b, int max_deg) {
            return tensor_chain_complex(a, b, max_deg);
        },
        py::arg("a"), py::arg("b"), py::arg("max_deg"));

    py::class_<SmithForm>(m, "SmithForm")
        .def_readonly("invariant_factors", &SmithForm::invariant_factors)
        .def_property_readonly("rank", &SmithForm::rank)
        .def_property_readonly("transforms",
                               [](const SmithForm& s) -> py::object {
                                   if (!s.transform_left) return py::none();
                                   auto dense = [](const DenseIntMatrix& d) {
                                       std::vector<std::vector<Integer>> rows;
                                       for (std::int64_t i = 0; i < d.rows(); ++i) {
                                           std::vector<Integer> row;
                                           for (std::int64_t j = 0; j < d.cols(); ++j)
                                               row.push_back(d.at(i, j));
                                           rows.push_back(std::move(row));
                                       }
                                       return rows;
                                   };
                                   return py::make_tuple(dense(*s.transform_left),
                                                         dense(*s.transform_right));
                               });

    m.def("smith_normal_form", &smith_normal_form, py::arg("m"),
          py::arg("with_transforms") = false);
    m.def("rank_mod_p", &rank_mod_p, py::arg("m"), py::arg("p"));

    py::class_<FgAbelianGroup>(m, "FgAbelianGroup")
        .def(py::init([](std::int64_t rank, const std::vector<Integer>& torsion) {
                 return FgAbelianGroup::from_parts(rank, torsion);
             }),
             py::arg("rank") = 0, py::arg("torsion") = std::vector<Integer>{})
        .def_property_readonly("rank", &FgAbelianGroup::rank)
        .def_property_readonly("invariant_factors", &FgAbelianGroup::invariant_factors)
        .def_property_readonly("is_zero", &FgAbelianGroup::is_zero)
        .def("__eq__",
             [](const FgAbelianGroup& a, const FgAbelianGroup& b) { return a == b; })
        .def("__repr__", [](const FgAbelianGroup& g) { return g.describe(); });

    m.def("tensor_groups", &tensor_groups, py::arg("a"), py::arg("b"));
    m.def("tor_groups", &tor_groups, py::arg("a"), py::arg("b"));
    m.def(
        "direct_sum",
        [](const std::vector<FgAbelianGroup>& groups) {
            return direct_sum(std::span<const FgAbelianGroup>(groups.data(), groups.size()));
        },
        py::arg("groups"));
    m.def("groups_isomorphic", &groups_isomorphic, py::arg("a"), py::arg("b"));

    m.def(
        "homology_at",
        [](const ChainComplex& c, int q, const std::string& coeff) {
            return homology_at(c, q, coeff_from(coeff));
        },
        py::arg("complex"), py::arg("q"), py::arg("coeff") = "z");
    m.def(
        "cohomology_at",
        [](const ChainComplex& c, int q, const std::string& coeff) {
            return cohomology_at(c, q, coeff_from(coeff));
        },
        py::arg("complex"), py::arg("q"), py::arg("coeff") = "z");
    m.def(
        "graded_homology",
        [](const ChainComplex& c, int max_q, const std::string& coeff) {
            return graded_to_dict(graded_homology(c, max_q, coeff_from(coeff)));
        },
        py::arg("complex"), py::arg("max_q"), py::arg("coeff") = "z");
    m.def(
        "graded_cohomology",
        [](const ChainComplex& c, int max_q, const std::string& coeff) {
            return graded_to_dict(graded_cohomology(c, max_q, coeff_from(coeff)));
        },
        py::arg("complex"), py::arg("max_q"), py::arg("coeff") = "z");
    m.def("degree_computed", &degree_computed, py::arg("complex"), py::arg("q"));

    m.def(
        "predict_homology",
        [](const py::dict& hx, const py::dict& hy, int q) {
            auto p = predict_homology(graded_from_dict(hx), graded_from_dict(hy), q);
            return py::make_tuple(p.tensor_part, p.tor_part, p.total);
        },
        py::arg("hx"), py::arg("hy"), py::arg("q"),
        "Returns (tensor_part, tor_part, total).");
    m.def(
        "predict_cohomology",
        [](const py::dict& hx, const py::dict& hy, int q) {
            auto p = predict_cohomology(graded_from_dict(hx), graded_from_dict(hy), q);
            return py::make_tuple(p.tensor_part, p.tor_part, p.total);
        },
        py::arg("hx"), py::arg("hy"), py::arg("q"));
    m.def("torus_closed_form", &torus_closed_form, py::arg("l"), py::arg("l_prime"), py::arg("q"));

    py::class_<KunnethDegree>(m, "KunnethDegree")
        .def_readonly("q", &KunnethDegree::q)
        .def_readonly("known", &KunnethDegree::known)
        .def_readonly("computed", &KunnethDegree::computed)
        .def_readonly("tensor_part", &KunnethDegree::tensor_part)
        .def_readonly("tor_part", &KunnethDegree::tor_part)
        .def_readonly("predicted", &KunnethDegree::predicted)
        .def_readonly("match", &KunnethDegree::match);

    py::class_<KunnethReport>(m, "KunnethReport")
        .def_readonly("kind", &KunnethReport::kind)
        .def_readonly("factor_x", &KunnethReport::factor_x)
        .def_readonly("factor_y", &KunnethReport::factor_y)
        .def_readonly("max_q", &KunnethReport::max_q)
        .def_readonly("cap", &KunnethReport::cap)
        .def_readonly("f_x", &KunnethReport::f_x)
        .def_readonly("f_y", &KunnethReport::f_y)
        .def_readonly("f_product", &KunnethReport::f_product)
        .def_readonly("degrees", &KunnethReport::degrees)
        .def_readonly("partial", &KunnethReport::partial)
        .def("all_match", &KunnethReport::all_match)
        .def("to_json", [](const KunnethReport& r) { return kunneth_report_to_json(r).dump(2); });

    m.def(
        "verify_graph_product",
        [](const Graph& g, const Graph& h, int max_q, const std::string& coeff) {
            return verify_graph_product(g, h, max_q, coeff_from(coeff));
        },
        py::arg("g"), py::arg("h"), py::arg("max_q"), py::arg("coeff") = "z");
    m.def(
        "verify_algebraic",
        [](const ChainComplex& a, const ChainComplex& b, int max_q, const std::string& coeff) {
            return verify_algebraic(a, b, max_q, coeff_from(coeff));
        },
        py::arg("a"), py::arg("b"), py::arg("max_q"), py::arg("coeff") = "z");
    m.def(
        "verify_cohomology_product",
        [](const Graph& g, const Graph& h, int max_q, const std::string& coeff) {
            return verify_cohomology_product(g, h, max_q, coeff_from(coeff));
        },
        py::arg("g"), py::arg("h"), py::arg("max_q"), py::arg("coeff") = "z");
    m.def(
        "verify_supplied_product",
        [](const ChainComplex& a, const ChainComplex& b, const ChainComplex& product, int max_q,
           const std::string& coeff) {
            return verify_supplied_product(a, b, product, max_q, coeff_from(coeff));
        },
        py::arg("a"), py::arg("b"), py::arg("product"), py::arg("max_q"), py::arg("coeff") = "z");

    m.def("cycle", &cycle, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("power_cycle", &power_cycle, py::arg("n"), py::arg("k"));
    m.def("circle_metric", &circle_metric, py::arg("n"));
    m.def("barycentric_flag", &barycentric_flag, py::arg("top_simplices"));
    m.def("rp2_flag", &rp2_flag);
    m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("load_edge_list", &load_edge_list, py::arg("path"));
    m.def("load_distance_matrix", &load_distance_matrix, py::arg("path"));
}
