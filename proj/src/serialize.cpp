#include "cstar/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw ParseError("unknown format '" + name + "' (expected json, csv or text)");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

namespace {

std::string quoted(const std::string& s) { return Json(s).dump(); }

void write_value(std::ostream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent >= 0 ? "\n" : "";
  const char* sep = indent >= 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << quoted(it.key()) << sep;
        write_value(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // arrays of scalars stay on one line
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      if (flat || indent < 0) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ',';
          write_value(os, j[i], -1, 0);
        }
        os << ']';
        return;
      }
      os << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',' << nl;
        os << pad;
        write_value(os, j[i], indent, depth + 1);
      }
      os << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x)) {
        os << format_double(x);
      } else {
        os << quoted(format_double(x));
      }
      return;
    }
    default:
      os << j.dump();
  }
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ';';
      out += scalar_text(j[i]);
    }
    return out;
  }
  if (j.is_object()) return dump_json(j, -1);
  return j.dump();
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && j[0].is_structured()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar_text(j));
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

void write_json(std::ostream& os, const Json& j, int indent) {
  write_value(os, j, indent, 0);
  if (indent >= 0) os << '\n';
}

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

std::string render(const Json& j, Format format, const std::string& table_key) {
  if (format == Format::Json) return dump_json(j);
  std::ostringstream os;
  if (format == Format::Csv && !table_key.empty() && j.contains(table_key) && j[table_key].is_array() &&
      !j[table_key].empty() && j[table_key][0].is_object()) {
    const Json& rows = j[table_key];
    bool first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
      os << (first ? "" : ",") << csv_cell(it.key());
      first = false;
    }
    os << '\n';
    for (const auto& row : rows) {
      first = true;
      for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        os << (first ? "" : ",") << csv_cell(row.contains(it.key()) ? scalar_text(row[it.key()]) : "");
        first = false;
      }
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> leaves;
  flatten(j, "", leaves);
  if (format == Format::Csv) {
    os << "key,value\n";
    for (const auto& [k, v] : leaves) os << csv_cell(k) << ',' << csv_cell(v) << '\n';
  } else {
    for (const auto& [k, v] : leaves) os << k << ": " << v << '\n';
  }
  return os.str();
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": malformed JSON";
    const std::string what = e.what();
    const auto cut = what.find("syntax error");
    if (cut != std::string::npos) os << " (" << what.substr(cut) << ")";
    throw ParseError(os.str());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Json to_json(const AlgebraShape& shape) { return Json(shape.block_sizes()); }

Json to_json(const AlgebraElement& a) {
  Json blocks = Json::array();
  for (const auto& m : a.blocks()) {
    Json flat = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
      for (Index c = 0; c < m.cols(); ++c) flat.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    blocks.push_back(std::move(flat));
  }
  return blocks;
}

Json to_json(const K0Class& k) { return Json(k.ranks()); }

Json to_json(const AdjointableMap& f) {
  const auto m = f.domain_rank();
  const auto n = f.codomain_rank();
  if (!m || !n) {
    Json blocks = Json::array();
    for (const auto& b : f.blocks()) blocks.push_back(matrix_json(b));
    return Json{{"shape", to_json(f.shape())}, {"blocks", std::move(blocks)}};
  }
  Json entries = Json::array();
  for (int i = 0; i < *n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < *m; ++j) row.push_back(to_json(f.entry(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"shape", to_json(f.shape())}, {"domain", *m}, {"codomain", *n}, {"entries", std::move(entries)}};
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Submodule& n) {
  const AlgebraShape& shape = n.shape();
  const K0Class amb = n.ambient_class();
  int m = -1;
  bool free = true;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const long long nb = shape.block_size(b);
    if (amb[b] % nb != 0 || (m >= 0 && amb[b] / nb != m)) free = false;
    if (m < 0) m = static_cast<int>(amb[b] / nb);
  }
  if (!free) throw StructuralError("to_json: submodule does not live in a free module");
  Json vectors = Json::array();
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const int nb = shape.block_size(b);
    const Matrix& basis = n.part(b).basis();
    for (Index c = 0; c < basis.cols(); ++c) {
      ModuleVector v = ModuleVector::zero(shape, m);
      for (int i = 0; i < m; ++i) {
        std::vector<Matrix> blocks = v.entries[i].blocks();
        blocks[b].col(0) = basis.col(c).segment(static_cast<Index>(i) * nb, nb);
        v.entries[i] = AlgebraElement(shape, std::move(blocks));
      }
      Json jv = Json::array();
      for (const auto& e : v.entries) jv.push_back(to_json(e));
      vectors.push_back(std::move(jv));
    }
  }
  return Json{{"shape", to_json(shape)}, {"rank", m}, {"vectors", std::move(vectors)}};
}

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& msg) {
  throw ParseError("field '" + path + "': " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) field_error(path, "expected an object");
  if (!j.contains(key)) field_error(path.empty() ? key : path + "." + key, "missing");
  return j.at(key);
}

int int_field(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) field_error(path, "expected a nonnegative integer");
  return j.get<int>();
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  return j.get<double>();
}

std::vector<ModuleVector> vectors_from_json(const Json& list, const AlgebraShape& shape, int m,
                                            const std::string& path) {
  if (!list.is_array()) field_error(path, "expected a list of module vectors");
  std::vector<ModuleVector> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string vp = path + "[" + std::to_string(k) + "]";
    if (!list[k].is_array() || static_cast<int>(list[k].size()) != m) {
      field_error(vp, "expected " + std::to_string(m) + " algebra elements");
    }
    ModuleVector v;
    v.shape = shape;
    for (int i = 0; i < m; ++i) v.entries.push_back(element_from_json(list[k][i], shape, vp + "[" + std::to_string(i) + "]"));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

AlgebraShape shape_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) field_error(path, "expected a nonempty array of block sizes");
  std::vector<int> sizes;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int n = int_field(j[i], path + "[" + std::to_string(i) + "]");
    if (n < 1) field_error(path + "[" + std::to_string(i) + "]", "block sizes must be positive");
    sizes.push_back(n);
  }
  return AlgebraShape(std::move(sizes));
}

AlgebraElement element_from_json(const Json& j, const AlgebraShape& shape, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != shape.num_blocks()) {
    field_error(path, "expected " + std::to_string(shape.num_blocks()) + " blocks");
  }
  std::vector<Matrix> blocks;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const int n = shape.block_size(b);
    const std::string bp = path + "[" + std::to_string(b) + "]";
    const Json& flat = j[b];
    if (!flat.is_array() || static_cast<int>(flat.size()) != n * n) {
      field_error(bp, "expected " + std::to_string(n * n) + " [re,im] pairs");
    }
    Matrix m(n, n);
    for (int k = 0; k < n * n; ++k) {
      const std::string ep = bp + "[" + std::to_string(k) + "]";
      const Json& z = flat[k];
      if (!z.is_array() || z.size() != 2) field_error(ep, "expected [re,im]");
      m(k / n, k % n) = Complex(number(z[0], ep + "[0]"), number(z[1], ep + "[1]"));
    }
    blocks.push_back(std::move(m));
  }
  return AlgebraElement(shape, std::move(blocks));
}

AdjointableMap operator_from_json(const Json& j) {
  const AlgebraShape shape = shape_from_json(field(j, "shape", ""));
  const int m = int_field(field(j, "domain", ""), "domain");
  const int n = int_field(field(j, "codomain", ""), "codomain");
  const Json& entries = field(j, "entries", "");
  if (!entries.is_array() || static_cast<int>(entries.size()) != n) {
    field_error("entries", "expected " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<AlgebraElement>> rows;
  for (int i = 0; i < n; ++i) {
    const std::string rp = "entries[" + std::to_string(i) + "]";
    if (!entries[i].is_array() || static_cast<int>(entries[i].size()) != m) {
      field_error(rp, "expected " + std::to_string(m) + " elements");
    }
    std::vector<AlgebraElement> row;
    for (int c = 0; c < m; ++c) row.push_back(element_from_json(entries[i][c], shape, rp + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  if (n == 0 || m == 0) return AdjointableMap::zero(shape, n, m);
  return AdjointableMap::from_entries(shape, rows);
}

Submodule submodule_from_json(const Json& j) {
  if (j.is_object()) {
    const AlgebraShape shape = shape_from_json(field(j, "shape", ""));
    const int m = int_field(field(j, "rank", ""), "rank");
    return submodule_span(shape, m, vectors_from_json(field(j, "vectors", ""), shape, m, "vectors"));
  }
  if (!j.is_array() || j.empty()) {
    field_error("", "expected a nonempty list of module vectors or an object with shape, rank and vectors");
  }
  // infer the shape from the first element: block b holds n_b² pairs
  const Json& first = j[0];
  if (!first.is_array() || first.empty() || !first[0].is_array()) field_error("[0]", "expected a module vector");
  std::vector<int> sizes;
  for (std::size_t b = 0; b < first[0].size(); ++b) {
    const Json& flat = first[0][b];
    const std::string bp = "[0][0][" + std::to_string(b) + "]";
    if (!flat.is_array() || flat.empty()) field_error(bp, "expected a block");
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(flat.size()))));
    if (n * n != static_cast<int>(flat.size())) field_error(bp, "block length is not a square");
    sizes.push_back(n);
  }
  const AlgebraShape shape(sizes);
  const int m = static_cast<int>(first.size());
  return submodule_span(shape, m, vectors_from_json(j, shape, m, ""));
}

Json submodule_summary(const Submodule& n) {
  return Json{{"k0", to_json(n.k0_class())}, {"complex_dim", n.complex_dim()}, {"margin", n.margin()}};
}

Json report_json(const FredholmReport& r) {
  return Json{{"kernel", submodule_summary(r.kernel)},
              {"image", submodule_summary(r.image)},
              {"kernel_class", to_json(r.kernel_class)},
              {"coker_class", to_json(r.coker_class)},
              {"index", to_json(r.index)},
              {"weyl_zero_index", r.is_weyl_zero_index},
              {"generalized_weyl", r.is_generalized_weyl},
              {"margin", r.margin},
              {"note", kFiniteModelNote}};
}

namespace {

Json residuals_json(const DrazinResiduals& r) {
  return Json{{"xfx", r.xfx}, {"commute", r.commute}, {"power", r.power}};
}

Json split_json(const BlockSplit& s) {
  return Json{{"first", submodule_summary(s.first)},
              {"second", submodule_summary(s.second)},
              {"condition", s.condition},
              {"projection_norm", s.projection_norm}};
}

Json witness_json(const WitnessPair& w) { return Json{{"n", to_json(w.n)}, {"n_tilde", to_json(w.n_tilde)}}; }

Json classes_json(const std::vector<K0Class>& v) {
  Json out = Json::array();
  for (const auto& k : v) out.push_back(to_json(k));
  return out;
}

Json subspace_summary(const Subspace& s) {
  return Json{{"dim", s.dim()}, {"ambient_dim", s.ambient_dim()}, {"margin", s.margin()}};
}

}  // namespace

Json report_json(const DrazinReport& r) {
  return Json{{"index", r.index},
              {"residuals", residuals_json(r.residuals)},
              {"nilpotent_residual", r.nilpotent_residual},
              {"core_gamma", r.core_gamma},
              {"off_diagonal", r.off_diagonal},
              {"decomposition", split_json(r.decomposition)},
              {"inverse", to_json(r.inverse)}};
}

Json report_json(const BFredholmReport& r) {
  return Json{{"stabilization_exponent", r.stabilization_exponent},
              {"stable_image", submodule_summary(r.stable_image)},
              {"b_index", to_json(r.b_index)},
              {"restricted", report_json(r.restricted_report)},
              {"kernel_on_stable_image", submodule_summary(r.kernel_on_stable_image)}};
}

Json report_json(const GeometryReport& r) {
  return Json{{"c0", r.c0},
              {"c0_sup", r.c0_sup},
              {"delta", r.delta},
              {"bound_c", r.bound_c},
              {"delta_degenerate", r.delta_degenerate},
              {"reduced", r.reduced},
              {"intersection_dim", r.intersection_dim},
              {"identity_residual", r.identity_residual},
              {"samples", r.samples},
              {"max_sample_ratio", r.max_sample_ratio},
              {"adversarial_ratio", r.adversarial_ratio},
              {"violations", r.violations},
              {"inequality_holds", r.inequality_holds}};
}

Json report_json(const BouldinReport& r) {
  return Json{{"k", submodule_summary(r.k)},
              {"margin_p", r.margin_p},
              {"margin_q", r.margin_q},
              {"p_degenerate", r.p_degenerate},
              {"q_degenerate", r.q_degenerate},
              {"p_bounded", r.p_bounded},
              {"q_bounded", r.q_bounded},
              {"verdicts_agree", r.verdicts_agree},
              {"gamma_df", r.gamma_df},
              {"closed_sum_delta", r.closed_sum_delta},
              {"bridge_agrees", r.bridge_agrees}};
}

Json report_json(const DualReport& r) {
  return Json{{"index", r.index},
              {"adjoint_index", r.adjoint_index},
              {"inverse_distance", r.inverse_distance},
              {"orthogonality_residual", r.orthogonality_residual},
              {"holds", r.holds}};
}

Json report_json(const BrowderWitness& r) {
  return Json{{"index", r.index},
              {"m", submodule_summary(r.m)},
              {"n", submodule_summary(r.n)},
              {"f1_gamma", r.f1_gamma},
              {"off_diagonal", r.off_diagonal},
              {"split_condition", r.split_condition},
              {"n_finitely_generated", r.n_finitely_generated}};
}

Json report_json(const CriterionReport& r) {
  Json found = nullptr;
  if (r.found) found = Json{{"k", r.found->k}, {"s", r.found->s}, {"k_prime", r.found->k_prime}, {"t", r.found->t}};
  return Json{{"p", r.p},
              {"found", found},
              {"intersection_classes", classes_json(r.intersection_classes)},
              {"adjoint_classes", classes_json(r.adjoint_classes)},
              {"verdict", r.verdict},
              {"direct_verdict", r.direct_verdict},
              {"commutator", r.commutator},
              {"note", r.note}};
}

Json report_json(const ChainReport& r) {
  return Json{{"m", submodule_summary(r.m)},
              {"m_prime", submodule_summary(r.m_prime)},
              {"n", submodule_summary(r.n)},
              {"n_prime", submodule_summary(r.n_prime)},
              {"r", to_json(r.r)},
              {"r_prime", to_json(r.r_prime)},
              {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},
              {"identity_holds", r.identity_holds},
              {"image_splittings_hold", r.image_splittings_hold},
              {"kernel_splittings_hold", r.kernel_splittings_hold},
              {"margin", r.margin},
              {"note", r.note}};
}

Json report_json(const ProductChainReport& r) {
  return Json{{"f_witness", witness_json(r.f_witness)},
              {"d_witness", witness_json(r.d_witness)},
              {"kernel_d_cap_image_f", submodule_summary(r.kernel_d_cap_image_f)},
              {"links", classes_json(r.links)},
              {"identity_holds", r.identity_holds},
              {"product_generalized_weyl", r.product_generalized_weyl},
              {"margin", r.margin}};
}

Json report_json(const ExactSequenceReport& r) {
  Json spaces = Json::array();
  for (const auto& s : r.spaces) spaces.push_back(submodule_summary(s));
  return Json{{"spaces", spaces},
              {"residuals", Json(std::vector<double>(r.residuals.begin(), r.residuals.end()))},
              {"leak", r.leak},
              {"alternating_dim_sum", r.alternating_dim_sum},
              {"alternating_k0_sum", to_json(r.alternating_k0_sum)}};
}

Json report_json(const RegularOperator& r) {
  return Json{{"domain_dim", r.domain_dim()},
              {"codomain_dim", r.codomain_dim()},
              {"kernel_dim", r.kernel_dim()},
              {"codim_image", r.codim_image()},
              {"inner_residual", r.inner_residual},
              {"outer_residual", r.outer_residual},
              {"projection_residual", r.projection_residual},
              {"domain_projection_norm", r.domain_split.norm},
              {"codomain_projection_norm", r.codomain_split.norm},
              {"ill_posed", r.ill_posed},
              {"generalized_weyl", generalized_weyl_banach(r)},
              {"t_prime", matrix_json(r.t_prime)}};
}

namespace {

Json banach_witness_json(const BanachWitness& w) { return Json{{"z1", w.z1}, {"z2", w.z2}}; }

}  // namespace

Json report_json(const BanachPerturbationReport& r) {
  return Json{{"rank_f", r.rank_f},
              {"relative_rank", r.relative_rank},
              {"t_ker_f", subspace_summary(r.t_ker_f)},
              {"n", subspace_summary(r.n)},
              {"n_prime", subspace_summary(r.n_prime)},
              {"m", subspace_summary(r.m)},
              {"m_prime", subspace_summary(r.m_prime)},
              {"common_kernel", subspace_summary(r.common_kernel)},
              {"v", subspace_summary(r.v)},
              {"witness", banach_witness_json(r.witness)},
              {"perturbed_witness", banach_witness_json(r.perturbed_witness)},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"identity_holds", r.identity_holds},
              {"max_projection_norm", r.max_projection_norm},
              {"ill_posed", r.ill_posed},
              {"perturbed", report_json(r.perturbed)}};
}

Json report_json(const BanachProductReport& r) {
  return Json{{"s_weyl", r.s_weyl},
              {"t_weyl", r.t_weyl},
              {"product_weyl", r.product_weyl},
              {"restricted_inverse_residual", r.restricted_inverse_residual},
              {"kernel_on_image", subspace_summary(r.kernel_on_image)},
              {"kernel_on_image_complemented", r.kernel_on_image_complemented},
              {"index_additive", r.index_additive},
              {"product_witness", banach_witness_json(r.product_witness)},
              {"sequence_residuals",
               Json(std::vector<double>(r.sequence.residuals.begin(), r.sequence.residuals.end()))},
              {"sequence_alternating_sum", r.sequence.alternating_dim_sum},
              {"product", report_json(r.product)}};
}

Json report_json(const FamilyDiagnostic& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"gamma_f", row.gamma_f},
                        {"gamma_f2", row.gamma_f2},
                        {"c0", row.c0},
                        {"delta", row.delta},
                        {"margin_p", row.margin_p},
                        {"margin_q", row.margin_q},
                        {"closed_sum_verdict", row.closed_sum_verdict},
                        {"gamma_f2_verdict", row.gamma_f2_verdict},
                        {"bridge_agrees", row.bridge_agrees}});
  }
  return Json{{"family", r.family},
              {"sizes", r.sizes},
              {"rows", rows},
              {"gamma_f2_strictly_decreasing", r.gamma_f2_strictly_decreasing},
              {"gamma_f_floor", r.gamma_f_floor},
              {"gamma_f2_exponent", r.gamma_f2_exponent},
              {"gamma_exact", r.gamma_exact}};
}

Json report_json(const ShiftExample& r) {
  return Json{{"kind", r.kind == ShiftKind::RangeStrict ? "range-strict" : "kernel-strict"},
              {"n", r.n},
              {"chain", r.chain},
              {"kernel_p_chain", r.kernel_p_chain},
              {"strict_depth", r.strict_depth},
              {"fp_drazin_index", r.fp_drazin_index},
              {"fp_residual", r.fp_residual},
              {"commutator", r.commutator},
              {"note", r.note}};
}

}  // namespace cstar
