#pragma once

#include <string>
#include <vector>

#include "cstar/linmap.hpp"

namespace cstar {

/// Multiplication by the sampled identity function j/(n+1) over the
/// commutative algebra C^n, acting on A¹. γ(F) = 1/(n+1).
AdjointableMap multiplier_family(int n);

/// Left multiplication by S on A = M_n. Throws TheoremViolation if γ(F)
/// differs from γ(S).
AdjointableMap left_multiplier_family(const Matrix& s);

/// The n×n truncated forward shift plus diag(1, 1/2, ..., 1/n) scaled by `weight`.
Matrix decaying_shift(int n, double weight);

/// F on A¹ over M_{2n} with ker F = N and Im F = M, where
/// M = span{e_{2j}} and N = span{e_{2j} + e_{2j+1}/j}, j = 1..n.
/// F = U P_{N^⊥} with U the isometry sending the unit vector of N^⊥ in the
/// j-th coordinate pair to e_{2j}.
AdjointableMap nonclosed_square_family(int n);

struct FamilyRow {
  int n = 0;
  double gamma_f = kInfinity;
  double gamma_f2 = kInfinity;
  /// c0 and δ for the pair (Im F, ker F).
  double c0 = 0.0;
  double delta = kInfinity;
  /// bouldin_criterion(F, F).
  double margin_p = kInfinity;
  double margin_q = kInfinity;
  bool closed_sum_verdict = true;
  bool gamma_f2_verdict = true;
  bool bridge_agrees = true;
};

struct FamilyDiagnostic {
  std::string family;
  std::vector<int> sizes;
  std::vector<FamilyRow> rows;
  bool gamma_f2_strictly_decreasing = false;
  double gamma_f_floor = kInfinity;
  /// Least-squares slope of log γ(F²) against log n; logged, not asserted.
  double gamma_f2_exponent = 0.0;
  /// multiplier family only: γ(F) = 1/(n+1) to the last bit.
  bool gamma_exact = true;
};

const std::vector<std::string>& family_names();

/// Families: "multiplier", "left-multiplier", "nonclosed-square".
/// Throws StructuralError on an unknown family or empty size list.
FamilyDiagnostic family_diagnostic(const std::string& family, const std::vector<int>& sizes);

}  // namespace cstar
