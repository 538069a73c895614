// One PASS/FAIL line per acceptance criterion. Criteria listed with
// --known-red are still run and reported; they only change the exit status.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "cstar/probes.hpp"
#include "cstar/serialize.hpp"
#include "cstar/suites.hpp"

namespace {

using namespace cstar;

struct Line {
  int id = 0;
  bool pass = false;
  std::string text;
};

Line suite_criterion(int id, const std::string& suite, int instances, std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.instances = instances;
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult r = run_suite(suite, cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << suite << " x" << instances << ", " << r.failures.size() << " failing checks, " << r.redraws
     << " redraws, " << std::fixed;
  os.precision(1);
  os << secs << " s";
  if (!r.failures.empty()) os << "; first: instance " << r.failures[0].instance << " " << r.failures[0].property;
  return {id, r.passed, os.str()};
}

Line probe_criterion() {
  std::vector<int> sizes;
  for (int n = 1; n <= 64; ++n) sizes.push_back(n);
  const FamilyDiagnostic mult = family_diagnostic("multiplier", sizes);
  const FamilyDiagnostic sq = family_diagnostic("nonclosed-square", {4, 8, 16, 32});
  const double last = sq.rows.back().gamma_f2;
  const bool below = last < 1e-3;
  std::ostringstream os;
  os << "multiplier gamma exact for n=1..64: " << (mult.gamma_exact ? "yes" : "no")
     << "; gamma(F) floor " << format_double(sq.gamma_f_floor) << "; gamma(F^2) strictly decreasing: "
     << (sq.gamma_f2_strictly_decreasing ? "yes" : "no") << "; gamma(F^2) at n=32 " << format_double(last)
     << (below ? " < 1e-3" : " >= 1e-3");
  return {10, mult.gamma_exact && sq.gamma_f_floor > 0.5 && sq.gamma_f2_strictly_decreasing && below, os.str()};
}

Line determinism_criterion(std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.instances = 40;
  bool same = true;
  for (const auto& suite : suite_names()) {
    SuiteConfig serial = cfg;
    serial.threads = 1;
    const std::string a = dump_json(report_json(run_suite(suite, cfg)));
    const std::string b = dump_json(report_json(run_suite(suite, cfg)));
    const std::string c = dump_json(report_json(run_suite(suite, serial)));
    same = same && a == b && a == c;
  }
  return {11, same, "verify output byte-identical across repeated and single-threaded runs of every suite"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::uint64_t seed = 1;
  std::vector<int> known_red;
  std::string report;
  app.add_option("--seed", seed);
  app.add_option("--known-red", known_red, "Criteria expected to fail")->delimiter(',');
  app.add_option("--report", report, "Also write the lines to this file");
  CLI11_PARSE(app, argc, argv);

  std::vector<Line> lines;
  auto run = [&](Line l) {
    std::ostringstream os;
    os << "criterion " << l.id << ": " << (l.pass ? "PASS" : "FAIL") << "  " << l.text;
    l.text = os.str();
    std::cout << l.text << std::endl;
    lines.push_back(std::move(l));
  };
  try {
    run(suite_criterion(1, "drazin-axioms", 200, seed));
    run(suite_criterion(2, "dual", 200, seed));
    run(suite_criterion(3, "ra-l01", 100, seed));
    run(suite_criterion(4, "browder", 100, seed));
    run(suite_criterion(5, "exact-sequence", 200, seed));
    run(suite_criterion(6, "perturbation-chain", 150, seed));
    run(suite_criterion(7, "banach-perturbation", 150, seed));
    run(suite_criterion(8, "banach-product", 100, seed));
    run(suite_criterion(9, "lemma-d-l22", 200, seed));
    run(probe_criterion());
    run(determinism_criterion(seed));
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }

  if (!report.empty()) {
    std::ofstream f(report);
    for (const auto& l : lines) f << l.text << "\n";
  }

  const std::set<int> expected(known_red.begin(), known_red.end());
  std::set<int> failed;
  for (const auto& l : lines) {
    if (!l.pass) failed.insert(l.id);
  }
  int passed = static_cast<int>(lines.size() - failed.size());
  std::cout << passed << "/" << lines.size() << " criteria pass";
  if (!expected.empty()) {
    std::cout << "; expected failures:";
    for (int id : expected) std::cout << ' ' << id;
  }
  std::cout << "\n";
  return failed == expected ? 0 : 1;
}
