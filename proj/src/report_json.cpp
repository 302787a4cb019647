#include "vrk/report_json.hpp"

#include <limits>

namespace vrk {

namespace {

nlohmann::ordered_json factor_to_json(const Integer& d) {
    if (d <= Integer(std::numeric_limits<std::int64_t>::max()))
        return d.convert_to<std::int64_t>();
    return d.str();
}

} // namespace

nlohmann::ordered_json group_to_json(const FgAbelianGroup& g) {
    nlohmann::ordered_json j;
    j["rank"] = g.rank();
    auto torsion = nlohmann::ordered_json::array();
    for (const Integer& d : g.invariant_factors()) torsion.push_back(factor_to_json(d));
    j["torsion"] = std::move(torsion);
    return j;
}

nlohmann::ordered_json kunneth_report_to_json(const KunnethReport& report, bool include_timings) {
    nlohmann::ordered_json j;
    j["kind"] = report.kind;
    j["coefficients"] = report.coeff.describe();
    j["max_q"] = report.max_q;
    j["cap"] = report.cap;
    j["factors"] = {{{"description", report.factor_x}, {"f_vector", report.f_x}},
                    {{"description", report.factor_y}, {"f_vector", report.f_y}}};
    j["product"] = {{"f_vector", report.f_product}};

    auto degrees = nlohmann::ordered_json::array();
    for (const KunnethDegree& d : report.degrees) {
        nlohmann::ordered_json entry;
        entry["q"] = d.q;
        if (d.known) {
            entry["rank"] = d.computed.rank();
            auto torsion = nlohmann::ordered_json::array();
            for (const Integer& t : d.computed.invariant_factors())
                torsion.push_back(factor_to_json(t));
            entry["torsion"] = std::move(torsion);
            entry["tensor_part"] = group_to_json(d.tensor_part);
            entry["tor_part"] = group_to_json(d.tor_part);
            entry["predicted"] = group_to_json(d.predicted);
            entry["match"] = d.match;
        } else {
            entry["computed"] = "not-computed";
        }
        if (include_timings) entry["millis"] = d.millis;
        degrees.push_back(std::move(entry));
    }
    j["degrees"] = std::move(degrees);
    j["partial"] = report.partial;
    j["all_match"] = report.all_match();
    if (include_timings) j["timings"] = {{"total_millis", report.total_millis}};
    return j;
}

} // namespace vrk
