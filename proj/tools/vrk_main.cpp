// vrk: exact flag-complex homology and product verification from the
// command line. Reports are JSON (or TSV) with deterministic ordering;
// exit codes: 0 success, 2 input error, 3 resource cap, 4 verified
// mathematical mismatch.

#include "vrk/errors.hpp"
#include "vrk/flag_complex.hpp"
#include "vrk/homology.hpp"
#include "vrk/kunneth.hpp"
#include "vrk/relation.hpp"
#include "vrk/report_json.hpp"
#include "vrk/spaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace vrk;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

struct CommandState {
    std::vector<SpaceRecipe> recipes;
    std::optional<Rational> threshold_value;
    Threshold::Mode mode = Threshold::Mode::closed;
    int max_q = 2;
    std::string coeff_text = "z";
    std::string format = "json";
    std::string output_path;   // report destination; empty = stdout
    std::string artifact_path; // product artifact destination
    std::int64_t max_simplices = BuildLimits::defaults().max_simplices;
    std::int64_t max_entries = BuildLimits::defaults().max_matrix_entries;
    bool no_timings = false;
    bool cohomology = false;
    bool algebraic = false;
    std::string flip_sign; // "q:index" falsification hook
    int max_dim = 1;       // product f-vector depth
    std::int64_t l = 0, lp = 0;
    bool check = false;
    int verbose = 0;
    std::string dump_complex_path;

    BuildLimits limits() const { return {max_simplices, max_entries}; }

    std::optional<Threshold> threshold() const {
        if (!threshold_value) return std::nullopt;
        return Threshold(*threshold_value, mode);
    }

    Graph realize(const SpaceRecipe& r) const {
        auto t = threshold();
        return r.realize_graph(t ? &*t : nullptr);
    }

    Coefficients coefficients() const { return Coefficients::parse(coeff_text); }
};

std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

void add_recipe_flags(CLI::App* cmd, CommandState& st) {
    auto push = [&st](SpaceRecipe r) { st.recipes.push_back(std::move(r)); };

    cmd->add_option(
           "--cycle",
           [&st, push](const CLI::results_t& res) {
               push(SpaceRecipe::make_cycle(parse_int(res.at(0))));
               return true;
           },
           "cycle graph on N vertices")
        ->trigger_on_parse()
        ->type_name("N");
    cmd->add_option(
           "--complete",
           [push](const CLI::results_t& res) {
               push(SpaceRecipe::make_complete(parse_int(res.at(0))));
               return true;
           },
           "complete graph on N vertices")
        ->trigger_on_parse()
        ->type_name("N");
    cmd->add_option(
           "--power-cycle",
           [push](const CLI::results_t& res) {
               push(SpaceRecipe::make_power_cycle(parse_int(res.at(0)), parse_int(res.at(1))));
               return true;
           },
           "cycle power: N vertices, window K")
        ->trigger_on_parse()
        ->type_size(2)
        ->type_name("N K");
    cmd->add_option(
           "--circle",
           [push](const CLI::results_t& res) {
               push(SpaceRecipe::make_circle(parse_int(res.at(0))));
               return true;
           },
           "N equally spaced points on the unit-circumference circle (metric; needs --threshold)")
        ->trigger_on_parse()
        ->type_name("N");
    cmd->add_flag_function(
           "--rp2",
           [push](std::int64_t) { push(SpaceRecipe::make_rp2()); },
           "subdivided projective plane (31 vertices; torsion fixture)")
        ->trigger_on_parse();
    cmd->add_option(
           "--er",
           [push](const CLI::results_t& res) {
               push(SpaceRecipe::make_erdos_renyi(parse_int(res.at(0)), parse_rational(res.at(1)),
                                                  static_cast<std::uint64_t>(parse_int(res.at(2)))));
               return true;
           },
           "random graph: N vertices, edge probability P (exact rational), SEED")
        ->trigger_on_parse()
        ->type_size(3)
        ->type_name("N P SEED");
    cmd->add_option(
           "--edge-file",
           [push](const CLI::results_t& res) {
               push(SpaceRecipe::make_edge_file(res.at(0)));
               return true;
           },
           "edge-list file (first line n, then 'u v' lines)")
        ->trigger_on_parse()
        ->type_name("PATH");
    cmd->add_option(
           "--metric-file",
           [push](const CLI::results_t& res) {
               push(SpaceRecipe::make_metric_file(res.at(0)));
               return true;
           },
           "distance-matrix file (metric; needs --threshold)")
        ->trigger_on_parse()
        ->type_name("PATH");
}

void add_common_flags(CLI::App* cmd, CommandState& st, bool with_coeff = true) {
    cmd->add_option(
           "--threshold",
           [&st](const CLI::results_t& res) {
               Rational r = parse_rational(res.at(0));
               if (r < 0) throw std::invalid_argument("threshold must be nonnegative");
               st.threshold_value = r;
               return true;
           },
           "scale for metric recipes, exact rational ('1/4' or '0.25')")
        ->type_name("R");
    cmd->add_option("--mode",
                    [&st](const CLI::results_t& res) {
                        if (res.at(0) == "closed")
                            st.mode = Threshold::Mode::closed;
                        else if (res.at(0) == "open")
                            st.mode = Threshold::Mode::open;
                        else
                            throw std::invalid_argument("mode must be 'closed' or 'open'");
                        return true;
                    },
                    "threshold comparison: closed (d <= r) or open (d < r)")
        ->type_name("MODE");
    if (with_coeff)
        cmd->add_option("--coeff", st.coeff_text, "coefficients: z, q, or f<prime>")
            ->capture_default_str();
    cmd->add_option("--format", st.format, "report format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    cmd->add_option("--output", st.output_path, "write the report here instead of stdout")
        ->type_name("PATH");
    cmd->add_option("--max-simplices", st.max_simplices,
                    "total simplex cap (env VRK_MAX_SIMPLICES)")
        ->capture_default_str();
    cmd->add_option("--max-entries", st.max_entries,
                    "sparse-matrix entry cap (env VRK_MAX_ENTRIES)")
        ->capture_default_str();
    cmd->add_flag("--no-timings", st.no_timings,
                  "omit timing fields so identical runs emit identical bytes");
    cmd->add_flag("-v,--verbose", st.verbose, "progress notes on stderr");
}

void emit_report(const CommandState& st, const std::string& text) {
    if (st.output_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(st.output_path);
        if (!out) throw std::runtime_error("cannot write '" + st.output_path + "'");
        out << text << "\n";
    }
}

ordered_json config_json(const CommandState& st, const std::string& subcommand) {
    ordered_json j;
    j["subcommand"] = subcommand;
    auto spaces = ordered_json::array();
    for (const auto& r : st.recipes) spaces.push_back(r.describe());
    j["spaces"] = std::move(spaces);
    if (st.threshold_value)
        j["threshold"] = {{"value", format_rational(*st.threshold_value)},
                          {"mode", st.mode == Threshold::Mode::closed ? "closed" : "open"}};
    j["coefficients"] = Coefficients::parse(st.coeff_text).describe();
    j["max_q"] = st.max_q;
    j["caps"] = {{"max_simplices", st.max_simplices}, {"max_entries", st.max_entries}};
    return j;
}

std::string torsion_tsv(const FgAbelianGroup& g) {
    if (g.invariant_factors().empty()) return "-";
    std::string out;
    for (const Integer& d : g.invariant_factors()) {
        if (!out.empty()) out += ",";
        out += d.str();
    }
    return out;
}

int cmd_homology(CommandState& st) {
    if (st.recipes.size() != 1)
        throw std::invalid_argument("homology needs exactly one space recipe, got " +
                                    std::to_string(st.recipes.size()));
    Coefficients coeff = st.coefficients();
    auto t0 = std::chrono::steady_clock::now();

    Graph g = st.realize(st.recipes[0]);
    int cap = st.max_q + 1;
    if (st.verbose)
        std::cerr << "building flag complex of " << st.recipes[0].describe() << " through dimension "
                  << cap << "\n";
    FlagComplex k = build_flag_complex(g, cap, st.limits());
    if (!st.dump_complex_path.empty()) {
        std::ofstream dump(st.dump_complex_path);
        if (!dump) throw std::runtime_error("cannot write '" + st.dump_complex_path + "'");
        dump << export_complex_text(k) << "\n";
    }
    ChainComplex c = chain_complex(k);
    GradedGroups homology = graded_homology(c, st.max_q, coeff);
    GradedGroups cohomology;
    if (st.cohomology) cohomology = graded_cohomology(c, st.max_q, coeff);
    double millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (st.format == "tsv") {
        std::string text = "# q\trank\ttorsion";
        if (st.cohomology) text += "\tcohomology_rank\tcohomology_torsion";
        for (int q = 0; q <= st.max_q; ++q) {
            FgAbelianGroup h = homology.at(q);
            text += "\n" + std::to_string(q) + "\t" + std::to_string(h.rank()) + "\t" +
                    torsion_tsv(h);
            if (st.cohomology) {
                FgAbelianGroup hc = cohomology.at(q);
                text += "\t" + std::to_string(hc.rank()) + "\t" + torsion_tsv(hc);
            }
        }
        emit_report(st, text);
        return kExitOk;
    }

    ordered_json j;
    j["config"] = config_json(st, "homology");
    j["space"] = {{"description", st.recipes[0].describe()},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()}};
    j["cap"] = cap;
    j["f_vector"] = k.f_vector();
    auto degrees = ordered_json::array();
    for (int q = 0; q <= st.max_q; ++q) {
        ordered_json entry;
        entry["q"] = q;
        FgAbelianGroup h = homology.at(q);
        entry["rank"] = h.rank();
        auto torsion = ordered_json::array();
        for (const Integer& d : h.invariant_factors()) torsion.push_back(d.str());
        entry["torsion"] = std::move(torsion);
        if (st.cohomology) entry["cohomology"] = group_to_json(cohomology.at(q));
        degrees.push_back(std::move(entry));
    }
    j["degrees"] = std::move(degrees);
    if (!st.no_timings) j["timings"] = {{"total_millis", millis}};
    emit_report(st, j.dump(2));
    return kExitOk;
}

std::string edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    for (auto [u, v] : g.edges())
        out += "\n" + std::to_string(u) + " " + std::to_string(v);
    return out;
}

std::string matrix_text(const FiniteMetricSpace& m) {
    std::string out = std::to_string(m.point_count());
    for (VertexId i = 0; i < m.point_count(); ++i) {
        out += "\n";
        for (VertexId j = 0; j < m.point_count(); ++j)
            out += (j ? " " : "") + format_rational(m.distance(i, j));
    }
    return out;
}

int cmd_product(CommandState& st) {
    if (st.recipes.size() != 2)
        throw std::invalid_argument("product needs exactly two space recipes, got " +
                                    std::to_string(st.recipes.size()));
    const bool both_metric = st.recipes[0].is_metric() && st.recipes[1].is_metric();

    if (both_metric && !st.threshold_value) {
        // pure metric product: the artifact is a distance matrix
        FiniteMetricSpace p =
            max_metric_product(st.recipes[0].realize_metric(), st.recipes[1].realize_metric());
        std::string artifact = matrix_text(p);
        if (!st.artifact_path.empty()) {
            std::ofstream out(st.artifact_path);
            if (!out) throw std::runtime_error("cannot write '" + st.artifact_path + "'");
            out << artifact << "\n";
        }
        ordered_json j;
        j["config"] = config_json(st, "product");
        j["product"] = {{"kind", "metric"}, {"points", p.point_count()}};
        if (st.artifact_path.empty())
            j["product"]["matrix"] = artifact;
        else
            j["product"]["written_to"] = st.artifact_path;
        emit_report(st, j.dump(2));
        return kExitOk;
    }

    Graph gx = st.realize(st.recipes[0]);
    Graph gy = st.realize(st.recipes[1]);
    Graph p = strong_product(gx, gy);

    // when both inputs are metric, thresholding the max-metric product must
    // give the same relation; check the identity while we are here
    bool identity_checked = false;
    if (both_metric) {
        Threshold t = *st.threshold();
        Graph via_metric = relation_from_metric(
            max_metric_product(st.recipes[0].realize_metric(), st.recipes[1].realize_metric()), t);
        if (!relation_equals(via_metric, p))
            throw std::logic_error("max-metric product disagrees with the strong product");
        identity_checked = true;
    }

    FlagComplex k = build_flag_complex(p, st.max_dim, st.limits());
    if (!st.artifact_path.empty()) {
        std::ofstream out(st.artifact_path);
        if (!out) throw std::runtime_error("cannot write '" + st.artifact_path + "'");
        out << edge_list_text(p) << "\n";
    }

    if (st.format == "tsv") {
        std::string text = "# dim\tcount";
        auto f = k.f_vector();
        for (std::size_t q = 0; q < f.size(); ++q)
            text += "\n" + std::to_string(q) + "\t" + std::to_string(f[q]);
        emit_report(st, text);
        return kExitOk;
    }

    ordered_json j;
    j["config"] = config_json(st, "product");
    j["factors"] = {{{"description", st.recipes[0].describe()},
                     {"vertices", gx.vertex_count()},
                     {"edges", gx.edge_count()}},
                    {{"description", st.recipes[1].describe()},
                     {"vertices", gy.vertex_count()},
                     {"edges", gy.edge_count()}}};
    j["product"] = {{"kind", "graph"},
                    {"vertices", p.vertex_count()},
                    {"edges", p.edge_count()},
                    {"f_vector", k.f_vector()}};
    if (identity_checked) j["product"]["metric_route_equal"] = true;
    if (!st.artifact_path.empty()) j["product"]["written_to"] = st.artifact_path;
    emit_report(st, j.dump(2));
    return kExitOk;
}

std::string kunneth_tsv(const KunnethReport& r) {
    std::string text = "# q\trank\ttorsion\tpredicted_rank\tpredicted_torsion\tmatch";
    for (const KunnethDegree& d : r.degrees) {
        text += "\n" + std::to_string(d.q) + "\t";
        if (!d.known) {
            text += "-\t-\t-\t-\tnot-computed";
            continue;
        }
        text += std::to_string(d.computed.rank()) + "\t" + torsion_tsv(d.computed) + "\t" +
                std::to_string(d.predicted.rank()) + "\t" + torsion_tsv(d.predicted) + "\t" +
                (d.match ? "true" : "false");
    }
    return text;
}

int cmd_kunneth(CommandState& st) {
    if (st.recipes.size() != 2)
        throw std::invalid_argument("kunneth needs exactly two space recipes, got " +
                                    std::to_string(st.recipes.size()));
    if (st.cohomology && st.algebraic)
        throw std::invalid_argument("--cohomology and --algebraic cannot be combined");
    if (!st.flip_sign.empty() && !st.algebraic)
        throw std::invalid_argument("--flip-sign needs --algebraic");

    Coefficients coeff = st.coefficients();
    Graph gx = st.realize(st.recipes[0]);
    Graph gy = st.realize(st.recipes[1]);
    std::string lx = st.recipes[0].describe(), ly = st.recipes[1].describe();

    KunnethReport report;
    if (st.algebraic) {
        if (st.verbose) std::cerr << "assembling tensor product complex\n";
        ChainComplex cx = chain_complex(build_flag_complex(gx, st.max_q + 1, st.limits()));
        ChainComplex cy = chain_complex(build_flag_complex(gy, st.max_q + 1, st.limits()));
        ChainComplex tensor = tensor_chain_complex(cx, cy, st.max_q + 1, st.limits());
        if (!st.flip_sign.empty()) {
            auto colon = st.flip_sign.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("--flip-sign wants 'q:index'");
            int q = static_cast<int>(parse_int(st.flip_sign.substr(0, colon)));
            std::int64_t idx = parse_int(st.flip_sign.substr(colon + 1));
            if (!tensor.has_boundary(q))
                throw std::invalid_argument("no boundary at degree " + std::to_string(q));
            auto triplets = tensor.boundaries[static_cast<std::size_t>(q)].entries();
            if (idx < 0 || idx >= static_cast<std::int64_t>(triplets.size()))
                throw std::invalid_argument("flip index out of range");
            triplets[static_cast<std::size_t>(idx)].value =
                -triplets[static_cast<std::size_t>(idx)].value;
            tensor.boundaries[static_cast<std::size_t>(q)] = SparseIntMatrix::from_triplets(
                tensor.boundaries[static_cast<std::size_t>(q)].rows(),
                tensor.boundaries[static_cast<std::size_t>(q)].cols(), std::move(triplets));
        }
        report = verify_supplied_product(cx, cy, tensor, st.max_q, coeff, lx, ly);
    } else if (st.cohomology) {
        report = verify_cohomology_product(gx, gy, st.max_q, coeff, st.limits(), lx, ly);
    } else {
        report = verify_graph_product(gx, gy, st.max_q, coeff, st.limits(), lx, ly);
    }

    if (st.format == "tsv") {
        emit_report(st, kunneth_tsv(report));
    } else {
        ordered_json j;
        j["config"] = config_json(st, "kunneth");
        if (!st.flip_sign.empty()) j["config"]["flip_sign"] = st.flip_sign;
        ordered_json body = kunneth_report_to_json(report, !st.no_timings);
        for (auto& [key, value] : body.items()) j[key] = value;
        emit_report(st, j.dump(2));
    }

    if (!report.all_match()) return kExitMismatch;
    if (report.partial) return kExitResource;
    return kExitOk;
}

int cmd_torus_table(CommandState& st) {
    if (st.l < 0 || st.lp < 0) throw std::invalid_argument("--l and --lp must be nonnegative");
    int top = 2 * static_cast<int>(st.l + st.lp + 1);
    int max_q = st.max_q > 0 ? st.max_q : top;
    if (!st.check && !st.recipes.empty())
        throw std::invalid_argument("space recipes require --check");

    ordered_json j;
    st.max_q = max_q;
    j["config"] = config_json(st, "torus-table");
    j["config"]["l"] = st.l;
    j["config"]["lp"] = st.lp;

    std::optional<KunnethReport> side;
    GradedGroups computed;
    bool any_mismatch = false;
    if (st.check) {
        if (st.recipes.size() != 2)
            throw std::invalid_argument("--check needs exactly two space recipes");
        if (st.coefficients() != Coefficients::integers())
            throw std::invalid_argument("the closed form is integral; use --coeff z");
        Graph gx = st.realize(st.recipes[0]);
        Graph gy = st.realize(st.recipes[1]);
        Graph p = strong_product(gx, gy);
        FlagComplex k = build_flag_complex(p, max_q + 1, st.limits());
        ChainComplex c = chain_complex(k);
        computed = graded_cohomology(c, max_q);
    }

    auto degrees = ordered_json::array();
    for (int q = 0; q <= max_q; ++q) {
        ordered_json entry;
        entry["q"] = q;
        FgAbelianGroup table = torus_closed_form(static_cast<int>(st.l), static_cast<int>(st.lp), q);
        entry["rank"] = table.rank();
        auto torsion = ordered_json::array();
        for (const Integer& d : table.invariant_factors()) torsion.push_back(d.str());
        entry["torsion"] = std::move(torsion);
        if (st.check) {
            FgAbelianGroup got = computed.at(q);
            entry["computed"] = group_to_json(got);
            bool match = groups_isomorphic(table, got);
            entry["match"] = match;
            if (!match) any_mismatch = true;
        }
        degrees.push_back(std::move(entry));
    }
    j["degrees"] = std::move(degrees);
    if (st.check) j["all_match"] = !any_mismatch;

    if (st.format == "tsv") {
        std::string text = st.check ? "# q\trank\ttorsion\tcomputed_rank\tmatch"
                                    : "# q\trank\ttorsion";
        for (const auto& entry : j["degrees"]) {
            text += "\n" + entry["q"].dump() + "\t" + entry["rank"].dump() + "\t";
            text += entry["torsion"].empty() ? "-" : entry["torsion"].dump();
            if (st.check)
                text += "\t" + entry["computed"]["rank"].dump() + "\t" + entry["match"].dump();
        }
        emit_report(st, text);
    } else {
        emit_report(st, j.dump(2));
    }
    (void)side;
    return any_mismatch ? kExitMismatch : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Vietoris-Rips (flag) homology and product verification"};
    app.require_subcommand(1);

    CommandState st;

    CLI::App* homology = app.add_subcommand("homology", "graded (co)homology of one space");
    st.max_q = 2;
    add_recipe_flags(homology, st);
    add_common_flags(homology, st);
    homology->add_option("--max-q", st.max_q, "top degree to report")->capture_default_str();
    homology->add_flag("--cohomology", st.cohomology, "also report cohomology per degree");
    homology->add_option("--dump-complex", st.dump_complex_path,
                         "write the complex and its boundary triplets as diffable text")
        ->type_name("PATH");

    CLI::App* product = app.add_subcommand("product", "strong / max-metric product of two spaces");
    add_recipe_flags(product, st);
    add_common_flags(product, st, /*with_coeff=*/false);
    product->add_option("--max-dim", st.max_dim, "f-vector depth for the product report")
        ->capture_default_str();
    product->add_option("--emit", st.artifact_path,
                        "write the product itself (edge list or matrix) to this file")
        ->type_name("PATH");

    CLI::App* kunneth = app.add_subcommand("kunneth", "verify the product formula degree by degree");
    add_recipe_flags(kunneth, st);
    add_common_flags(kunneth, st);
    kunneth->add_option("--max-q", st.max_q, "top degree to verify")->capture_default_str();
    kunneth->add_flag("--algebraic", st.algebraic,
                      "compare against the tensor product of the factor chain complexes");
    kunneth->add_flag("--cohomology", st.cohomology, "verify the cohomology sequence instead");
    kunneth->add_option("--flip-sign", st.flip_sign,
                        "falsification hook: negate entry INDEX of tensor boundary Q ('q:index')")
        ->type_name("Q:INDEX");

    CLI::App* torus = app.add_subcommand("torus-table", "closed-form torus cohomology table");
    add_recipe_flags(torus, st);
    add_common_flags(torus, st);
    torus->add_option("--l", st.l, "sphere parameter of the first factor")->required();
    torus->add_option("--lp", st.lp, "sphere parameter of the second factor")->required();
    torus->add_option("--max-q", st.max_q, "top degree (default 2(l+l'+1))")
        ->default_val(0);
    torus->add_flag("--check", st.check, "also compute the product cohomology and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(homology)) return cmd_homology(st);
        if (app.got_subcommand(product)) return cmd_product(st);
        if (app.got_subcommand(kunneth)) return cmd_kunneth(st);
        if (app.got_subcommand(torus)) return cmd_torus_table(st);
        std::cerr << "no subcommand\n";
        return kExitInput;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const degree_not_computed& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
