#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cstar/module.hpp"

namespace cstar {

/// An adjointable A-linear map between finitely generated projective modules.
///
/// Over block b the modules are C^{k_b} ⊗ C^{n_b} and every A-linear map acts
/// as F_b ⊗ 1, so the map is stored as one amplified complex matrix F_b per
/// block. For free modules A^m → A^n, F_b has entry ((i,r),(j,c)) equal to
/// entry (r,c) of block b of the A-matrix element F_ij.
class AdjointableMap {
 public:
  AdjointableMap();
  AdjointableMap(AlgebraShape shape, std::vector<Matrix> blocks);

  /// From an n×m matrix of algebra elements (rows index the codomain).
  static AdjointableMap from_entries(const AlgebraShape& shape,
                                     const std::vector<std::vector<AlgebraElement>>& entries);
  static AdjointableMap identity(const AlgebraShape& shape, int m);
  static AdjointableMap identity_on(const AlgebraShape& shape, const K0Class& module);
  static AdjointableMap zero(const AlgebraShape& shape, int codomain, int domain);
  static AdjointableMap zero_between(const AlgebraShape& shape, const K0Class& codomain, const K0Class& domain);
  /// The complex matrix c (n×m) tensored with 1_A: entries c_ij · 1.
  static AdjointableMap scalar_lift(const AlgebraShape& shape, const Matrix& c);
  /// Reads back A-matrix structure from the dense realization of a map
  /// A^m → A^n. Throws InvarianceError if the matrix is not A-linear.
  static AdjointableMap from_realization(const AlgebraShape& shape, int codomain, int domain,
                                         const Matrix& realization);

  const AlgebraShape& shape() const { return shape_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const Matrix& block(int b) const { return blocks_[b]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  K0Class domain_class() const;
  K0Class codomain_class() const;
  /// m when the domain is the free module A^m.
  std::optional<int> domain_rank() const;
  std::optional<int> codomain_rank() const;
  bool is_endomorphism() const { return domain_class() == codomain_class(); }

  /// A-matrix entry (i, j); requires free modules.
  AlgebraElement entry(int i, int j) const;

  /// Dense matrix acting on flattened coordinates; computed on first use.
  const Matrix& realization() const;
  ModuleVector apply(const ModuleVector& x) const;
  /// Operator norm: max over blocks.
  double norm() const;
  /// Magnitude against which rank decisions are made: max(norm, the product
  /// of operand scales for composites). Keeps roundoff in a product that
  /// cancels from being read as rank.
  double scale() const;
  AdjointableMap with_scale(double scale) const;

 private:
  struct Cache;

  AlgebraShape shape_;
  std::vector<Matrix> blocks_;
  std::shared_ptr<Cache> cache_;
  double scale_hint_ = 0.0;
};

AdjointableMap adjoint(const AdjointableMap& f);
/// f ∘ g.
AdjointableMap compose(const AdjointableMap& f, const AdjointableMap& g);
AdjointableMap operator*(const AdjointableMap& f, const AdjointableMap& g);
AdjointableMap operator+(const AdjointableMap& f, const AdjointableMap& g);
AdjointableMap operator-(const AdjointableMap& f, const AdjointableMap& g);
AdjointableMap operator*(Complex s, const AdjointableMap& f);
AdjointableMap power(const AdjointableMap& f, int k);
/// Largest blockwise difference in operator norm.
double distance(const AdjointableMap& f, const AdjointableMap& g);

Submodule kernel(const AdjointableMap& f);
Submodule image(const AdjointableMap& f);

/// F(N) for a submodule N of the domain.
Submodule map_submodule(const AdjointableMap& f, const Submodule& n);
/// F^{-1}(W) for a submodule W of the codomain.
Submodule preimage(const AdjointableMap& f, const Submodule& w);

AdjointableMap orthogonal_projection(const Submodule& n);

/// F restricted to `from` as a map into `to`, in the orthonormal block bases
/// of the two submodules. Requires F(from) ⊆ to; the resulting map acts
/// between modules of classes k0(from) and k0(to).
AdjointableMap restrict_map(const AdjointableMap& f, const Submodule& from, const Submodule& to);

/// Moore–Penrose pseudoinverse with the global rank tolerance.
AdjointableMap mp_pseudoinverse(const AdjointableMap& f);

struct SingularData {
  /// Singular values of the realization, descending, with multiplicity n_b.
  RealVector singular_values;
  Index rank = 0;
  /// Reduced minimum modulus; +inf for the zero map.
  double gamma = kInfinity;
  double margin = kInfinity;
};

SingularData singular_data(const AdjointableMap& f);
/// γ(F), the smallest nonzero singular value.
double reduced_minimum_modulus(const AdjointableMap& f);

/// ||FD - DF|| / (||F|| ||D||), 0 if either map vanishes.
double commutator_residual(const AdjointableMap& f, const AdjointableMap& d);

}  // namespace cstar
