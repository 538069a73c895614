#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cstar/banach.hpp"
#include "cstar/drazin.hpp"
#include "cstar/fredholm.hpp"
#include "cstar/geometry.hpp"
#include "cstar/probes.hpp"

namespace cstar {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

/// Throws ParseError for anything other than json, csv or text.
Format parse_format(const std::string& name);

/// 17 significant digits, scientific; inf and nan print as words.
std::string format_double(double x);

/// Deterministic JSON text with formatted floats and non-finite values as strings.
void write_json(std::ostream& os, const Json& j, int indent = 2);
std::string dump_json(const Json& j, int indent = 2);

/// JSON as text: one `path: value` line per leaf. CSV: the array of objects
/// under `table_key` as a table when present, `path,value` rows otherwise.
std::string render(const Json& j, Format format, const std::string& table_key = "");

/// Parse errors carry the source name, line and column.
Json parse_json_text(const std::string& text, const std::string& source);
Json load_json_file(const std::string& path);

Json to_json(const AlgebraShape& shape);
Json to_json(const AlgebraElement& a);
Json to_json(const K0Class& k);
Json to_json(const AdjointableMap& f);
/// Spanning set: one generator per basis vector of each block part.
Json to_json(const Submodule& n);

AlgebraShape shape_from_json(const Json& j, const std::string& path = "shape");
AlgebraElement element_from_json(const Json& j, const AlgebraShape& shape, const std::string& path);
/// `{ "shape": [..], "domain": m, "codomain": n, "entries": [[element,...],...] }`
AdjointableMap operator_from_json(const Json& j);
/// A list of module vectors, or `{ "shape": [..], "rank": m, "vectors": [...] }`.
Submodule submodule_from_json(const Json& j);

Json submodule_summary(const Submodule& n);
Json report_json(const FredholmReport& r);
Json report_json(const DrazinReport& r);
Json report_json(const BFredholmReport& r);
Json report_json(const GeometryReport& r);
Json report_json(const BouldinReport& r);
Json report_json(const DualReport& r);
Json report_json(const BrowderWitness& r);
Json report_json(const CriterionReport& r);
Json report_json(const ChainReport& r);
Json report_json(const ProductChainReport& r);
Json report_json(const ExactSequenceReport& r);
Json report_json(const RegularOperator& r);
Json report_json(const BanachPerturbationReport& r);
Json report_json(const BanachProductReport& r);
Json report_json(const FamilyDiagnostic& r);
Json report_json(const ShiftExample& r);

/// Dense complex matrix as rows of [re, im] pairs.
Json matrix_json(const Matrix& m);

}  // namespace cstar
