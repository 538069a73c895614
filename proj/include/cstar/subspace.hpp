#pragma once

#include "cstar/tolerance.hpp"
#include "cstar/types.hpp"

namespace cstar {

/// A complex subspace of C^d carried by an orthonormal basis.
///
/// Every constructor that takes an arbitrary spanning set makes a rank
/// decision; its margin is kept so that downstream reports can say how
/// confidently the dimension was determined.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);
  /// Column span of `columns`, rank decided with the global tolerances.
  static Subspace span(const Matrix& columns, double scale = 0.0);
  /// Trusts `basis` to have orthonormal columns.
  static Subspace from_orthonormal(Matrix basis, double margin = kInfinity);

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  double margin() const { return margin_; }

  Matrix projector() const;
  Subspace complement() const;

 private:
  Subspace(Index ambient_dim, Matrix basis, double margin);

  Index ambient_dim_ = 0;
  Matrix basis_ = Matrix(0, 0);
  double margin_ = kInfinity;
};

/// Kernel and image of a matrix computed from one SVD so that
/// dim ker + dim im = cols holds exactly.
struct KernelImage {
  Subspace kernel;
  Subspace image;
  RankDecision decision;
};

/// `scale` as in decide_rank.
KernelImage kernel_image(const Matrix& a, double scale = 0.0);
Subspace kernel(const Matrix& a, double scale = 0.0);
Subspace image(const Matrix& a, double scale = 0.0);

/// Descending singular values.
RealVector singular_values(const Matrix& a);
double spectral_norm(const Matrix& a);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Intersection through the null space of [Qa, -Qb]. Uses the same SVD as
/// the sum, so dim(a+b) + dim(a∩b) = dim a + dim b at the chosen tolerance.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Principal angles in ascending order, min(dim a, dim b) of them.
/// Small angles come from sines, large ones from cosines.
RealVector principal_angles(const Subspace& a, const Subspace& b);

/// sin of the largest principal angle for equal dimensions; 1 otherwise.
double subspace_distance(const Subspace& a, const Subspace& b);
bool same_subspace(const Subspace& a, const Subspace& b);
/// Whether `inner` lies in `outer` up to angle_tol.
bool contains(const Subspace& outer, const Subspace& inner);

/// Orthogonal complement of `inner` inside `outer` (inner must lie in outer).
Subspace relative_complement(const Subspace& outer, const Subspace& inner);

/// Image of a subspace under a matrix. Rank is judged against max(||a||, scale).
Subspace map_subspace(const Matrix& a, const Subspace& s, double scale = 0.0);
/// {x : a x in target}.
Subspace preimage(const Matrix& a, const Subspace& target, double scale = 0.0);

/// Projection onto `range` along `kernel`. Throws UnmetHypothesis unless the
/// two subspaces are algebraic complements.
struct ObliqueProjector {
  Matrix matrix;
  double norm = 1.0;  // ||E||, the conditioning of the splitting
};
ObliqueProjector oblique_projector(const Subspace& range, const Subspace& kernel);

/// Whether a and b are algebraic complements in their ambient space.
bool are_complements(const Subspace& a, const Subspace& b);

}  // namespace cstar
