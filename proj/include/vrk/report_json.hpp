#pragma once

#include "vrk/abelian.hpp"
#include "vrk/kunneth.hpp"

#include <json.hpp>

namespace vrk {

// {"rank": r, "torsion": [d1, d2, ...]} -- ascending invariant factors.
// Factors that fit in 64 bits are numbers; anything larger is a decimal
// string so nothing is ever rounded.
nlohmann::ordered_json group_to_json(const FgAbelianGroup& g);

// Stable key order throughout; timings are the one nondeterministic field,
// so they can be omitted for byte-comparable reports.
nlohmann::ordered_json kunneth_report_to_json(const KunnethReport& report,
                                              bool include_timings = true);

} // namespace vrk
