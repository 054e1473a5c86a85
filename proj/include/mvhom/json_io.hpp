#pragma once

#include <string>

#include <json.hpp>

#include "mvhom/chain.hpp"
#include "mvhom/corr.hpp"
#include "mvhom/engine.hpp"
#include "mvhom/finspace.hpp"
#include "mvhom/fixedset.hpp"

namespace mvhom {

using json = nlohmann::json;

// Space description {"points": [...], "leq": [[x,y],...], "t0": bool}.
// Output lists are canonical: points sorted, leq the full non-reflexive
// relation sorted; input accepts any generating set.
json space_to_json(const FinSpace& space);
FinSpace space_from_json(const json& j);

// {"source": <space>, "target": <space>, "pairs": [[x,y],...]}.
json corr_to_json(const Corr& corr);
Corr corr_from_json(const json& j);
// Parses without constructing (for reporting on invalid graphs).
void graph_from_json(const json& j, FinSpace& source, FinSpace& target,
                     std::vector<std::pair<int, int>>& pairs);

json validity_to_json(const Validity& v);

// {"degree": n, "terms": [{"simplex": <corr>, "coeff": k}, ...]}; each
// simplex source must be the finite model of the right simplex.
json chain_to_json(const Chain& chain);
Chain chain_from_json(const json& j);

json identity_report_to_json(const IdentityReport& report);
json homology_report_to_json(const HomologyReport& report);
json certificate_to_json(const Certificate& cert);
json fixed_set_report_to_json(const FixedSetReport& report, const FinSpace& space);

std::string dump_canonical(const json& j);
json load_json_file(const std::string& path);

} // namespace mvhom
