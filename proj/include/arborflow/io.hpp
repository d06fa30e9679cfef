#pragma once

#include "arborflow/batch.hpp"
#include "arborflow/catalysts.hpp"
#include "arborflow/formulas.hpp"
#include "arborflow/tree.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace arborflow {

using Json = nlohmann::ordered_json;

/// Version tag stamped into every JSON document we emit.
inline constexpr const char* kSchema = "arborflow/1";

/// Arrowflow spec string: comma-separated arcs "tail>head", multiplicity by
/// repetition, e.g. "1>2,2>1,3>2". Whitespace around tokens is ignored.
std::string format_arrowflow(const std::vector<Arc>& arcs);
std::vector<Arc> parse_arrowflow(const std::string& spec);

/// {"schema", "n", "edges": [[lo,hi],...]}
Json tree_to_json(const Tree& t);

/// Catalyst list: sigma/f one-line 1-based, sign, arrowflow spec, class.
Json catalysts_to_json(const Tree& t);

/// Arrowflow classes with class size and signed sum, sorted by spec string.
Json classes_to_json(const Tree& t);

/// {"identity", "n", "trials", "passes", "failures"}
Json report_to_json(const IdentityReport& r);

/// {"items", "failures"} of a batch kernel, plus a caller-chosen label.
Json report_to_json(const std::string& label, const BatchReport& r);

} // namespace arborflow
