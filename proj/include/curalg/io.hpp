#pragma once

#include "curalg/certify.hpp"
#include "curalg/cocycles.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace curalg {

/// Insertion-ordered so that serialized output is byte-stable.
using json = nlohmann::ordered_json;

constexpr int schema_version = 1;

/// Malformed input, schema mismatch or an unresolved name. `where` is a
/// JSON-pointer-like location.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

json to_json(const Certificate& c);
json to_json(const CriterionResult& r);
/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();
/// Criteria records plus a summary; `timestamp` adds an ISO-8601 UTC field.
json criteria_report(const std::vector<CriterionResult>& results, bool timestamp);

/// Vectors serialize as {label: "p/q"} in basis order.
json vec_json(const GradedSpace& s, const Vec& v);
Vec vec_from_json(const GradedSpace& s, const json& j, const std::string& where);

/// Structure-constant documents. Bracket and product tables list every
/// nonzero pair (i, j) with i < j, plus any entry with i >= j that graded
/// (anti)symmetry does not imply; importers fill the implied entries back in.
json export_lie(const LieAlgebra& g);
json export_dgla(const Dgla& a);
json export_cdga(const Cdga& c);
json export_gdiff(const GDiffSpace& v);
json export_module(const LieModule& m);
/// (u, v, value) triples with the same completion rule (antisymmetry).
json export_cocycle(const Cocycle2& s);

LieAlgebra import_lie(const json& j, const std::string& where);
Dgla import_dgla(const json& j, const std::string& where);
Cdga import_cdga(const json& j, const std::string& where);
/// The "lie" field is resolved through `lie_lookup` when it is a name.
GDiffSpace import_gdiff(const json& j, const std::string& where,
                        const std::function<LieAlgebra(const std::string&)>& lie_lookup);
Cocycle2 import_cocycle(const json& j, const std::string& where);

/// Human-readable rendering of an exported document.
std::string text_table(const json& doc);

}  // namespace curalg
