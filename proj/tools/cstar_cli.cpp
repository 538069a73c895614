// Command-line front end for the cstar toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cstar/errors.hpp"
#include "cstar/serialize.hpp"
#include "cstar/suites.hpp"
#include "cstar/tolerance.hpp"

namespace {

using namespace cstar;

struct Options {
  std::uint64_t seed = 1;
  int n = 100;
  std::optional<double> tol_rank;
  std::optional<double> tol_angle;
  std::string out;
  std::string format = "json";
  int samples = 10000;
  int threads = 0;
};

// A run produces a document plus an exit status.
struct Output {
  Json doc;
  std::string table_key;
  int status = 0;
};

void emit(const Options& o, const Output& r) {
  const std::string text = render(r.doc, parse_format(o.format), r.table_key);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + o.out + "'");
  f << text;
}

bool is_operator(const Json& j) { return j.is_object() && j.contains("entries"); }

Json map_summary(const AdjointableMap& f) {
  return Json{{"shape", to_json(f.shape())},
              {"domain", to_json(f.domain_class())},
              {"codomain", to_json(f.codomain_class())}};
}

Output analyze(const std::string& path, const Options& o) {
  const AdjointableMap f = operator_from_json(load_json_file(path));
  Output r;
  r.doc["operator"] = map_summary(f);
  r.doc["fredholm"] = report_json(fredholm_report(f));
  if (!f.is_endomorphism()) {
    r.doc["note"] = "not an endomorphism; drazin, b-fredholm and ker/Im geometry skipped";
    return r;
  }
  r.doc["drazin"] = report_json(drazin_inverse(f));
  r.doc["b_fredholm"] = report_json(b_fredholm_report(f));
  const GeometryReport g = closed_sum_report(image(f), kernel(f), o.seed, o.samples);
  r.doc["geometry"] = report_json(g);
  if (!g.inequality_holds) r.status = 1;
  return r;
}

Output verify(const std::string& suite, const Options& o) {
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.instances = o.n;
  cfg.samples = o.samples;
  cfg.threads = o.threads;
  const SuiteResult s = run_suite(suite, cfg);
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
  return {report_json(s), "properties", s.passed ? 0 : 1};
}

Output probe(const std::string& family, const std::vector<int>& sizes) {
  if (sizes.empty()) throw ParseError("--sizes: empty size list");
  for (int n : sizes) {
    if (n < 1) throw ParseError("--sizes: sizes must be positive integers");
  }
  const FamilyDiagnostic d = family_diagnostic(family, sizes);
  return {report_json(d), "rows", 0};
}

Output drazin(const std::string& path, const std::string& with, const std::string& shift, int size) {
  Output r;
  if (!shift.empty()) {
    ShiftKind kind;
    if (shift == "range") {
      kind = ShiftKind::RangeStrict;
    } else if (shift == "kernel") {
      kind = ShiftKind::KernelStrict;
    } else {
      throw ParseError("--shift must be 'range' or 'kernel'");
    }
    r.doc["shift"] = report_json(shift_counterexample(kind, size));
    if (path.empty()) return r;
  }
  if (path.empty()) throw ParseError("an operator file or --shift is required");
  const AdjointableMap f = operator_from_json(load_json_file(path));
  r.doc["operator"] = map_summary(f);
  const DrazinReport d = drazin_inverse(f);
  r.doc["drazin"] = report_json(d);
  r.doc["dual"] = report_json(drazin_dual_check(f));
  r.doc["browder"] = report_json(browder_decomposition(f));
  if (!with.empty()) {
    const AdjointableMap g = operator_from_json(load_json_file(with));
    const CriterionReport c = commuting_drazin_criterion(f, g);
    r.doc["criterion"] = report_json(c);
    if (c.verdict != c.direct_verdict) r.status = 1;
  }
  return r;
}

Output geometry(const std::string& a, const std::string& b, const Options& o) {
  const Json ja = load_json_file(a);
  const Json jb = load_json_file(b);
  Output r;
  if (is_operator(ja) != is_operator(jb)) throw ParseError("expected two submodule files or two operator files");
  if (is_operator(ja)) {
    const BouldinReport br = bouldin_criterion(operator_from_json(ja), operator_from_json(jb));
    r.doc["bouldin"] = report_json(br);
    if (!br.verdicts_agree || !br.bridge_agrees) r.status = 1;
    return r;
  }
  const Submodule m = submodule_from_json(ja);
  const Submodule n = submodule_from_json(jb);
  r.doc["m"] = submodule_summary(m);
  r.doc["n"] = submodule_summary(n);
  const GeometryReport g = closed_sum_report(m, n, o.seed, o.samples);
  r.doc["geometry"] = report_json(g);
  if (!g.inequality_holds) r.status = 1;
  return r;
}

Matrix scalar_operator(const std::string& path) {
  const AdjointableMap f = operator_from_json(load_json_file(path));
  if (f.shape().num_blocks() != 1 || f.shape().block_size(0) != 1) {
    throw ParseError(path + ": banach operators must have shape [1]");
  }
  return f.block(0);
}

Output banach(const std::string& path, const std::string& perturb, const std::string& then) {
  const Matrix t = scalar_operator(path);
  const RegularOperator reg = make_regular_orthogonal(t);
  Output r;
  r.doc["regular"] = report_json(reg);
  r.doc["generalized_weyl"] = generalized_weyl_banach(reg);
  if (!perturb.empty()) {
    const BanachPerturbationReport p = banach_perturbation(reg, scalar_operator(perturb));
    r.doc["perturbation"] = report_json(p);
    if (!p.identity_holds) r.status = 1;
  }
  if (!then.empty()) {
    const BanachProductReport p = banach_product(make_regular_orthogonal(scalar_operator(then)), reg);
    r.doc["product"] = report_json(p);
    if (p.s_weyl && p.t_weyl && !p.product_weyl) r.status = 1;
  }
  return r;
}

std::vector<std::string> suite_list() { return suite_names(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator theory toolkit over finite-dimensional C*-algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--n", o.n, "Instances per suite")->check(CLI::NonNegativeNumber);
  app.add_option("--tol-rank", o.tol_rank, "Relative rank tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-angle", o.tol_angle, "Subspace equality angle tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Output file (stdout when omitted)");
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--samples", o.samples, "Random samples for the closed-sum bound")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", o.threads, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);

  std::string path, second, suite, family, with, shift, perturb, then;
  std::vector<int> sizes;
  int shift_size = 4;

  auto* an = app.add_subcommand("analyze", "Fredholm, Drazin and geometry reports for an operator file");
  an->add_option("operator", path)->required();

  auto* ve = app.add_subcommand("verify", "Run a seeded randomized property suite");
  ve->add_option("suite", suite)->required()->check(CLI::IsMember(suite_list()));

  auto* pr = app.add_subcommand("probe", "Decay table for a truncation family");
  pr->add_option("family", family)->required()->check(CLI::IsMember(family_names()));
  pr->add_option("--sizes", sizes, "Comma-separated sizes")->delimiter(',')->required();

  auto* dr = app.add_subcommand("drazin", "Drazin inverse, duality and Browder witness");
  dr->add_option("operator", path);
  dr->add_option("--with", with, "Commuting partner for the intersection criterion");
  dr->add_option("--shift", shift, "Shift counterexample: range or kernel");
  dr->add_option("--size", shift_size, "Shift counterexample size");

  auto* ge = app.add_subcommand("geometry", "Closed-sum geometry of two submodules, or Bouldin for two operators");
  ge->add_option("first", path)->required();
  ge->add_option("second", second)->required();

  auto* ba = app.add_subcommand("banach", "Regularity of an operator on C^n");
  ba->add_option("operator", path)->required();
  ba->add_option("--perturb", perturb, "Finite-rank perturbation F");
  ba->add_option("--then", then, "Left factor S for the product ST");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ToleranceConfig tol = tolerances();
    if (o.tol_rank) tol.rank_tol = *o.tol_rank;
    if (o.tol_angle) tol.angle_tol = *o.tol_angle;
    set_tolerances(tol);

    Output r;
    if (*an) {
      r = analyze(path, o);
    } else if (*ve) {
      r = verify(suite, o);
    } else if (*pr) {
      r = probe(family, sizes);
    } else if (*dr) {
      r = drazin(path, with, shift, shift_size);
    } else if (*ge) {
      r = geometry(path, second, o);
    } else {
      r = banach(path, perturb, then);
    }
    emit(o, r);
    return r.status;
  } catch (const TheoremViolation& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
