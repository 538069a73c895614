#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cstar/algebra.hpp"
#include "cstar/subspace.hpp"

namespace cstar {

/// K₀ class of a finitely generated projective A-module: one multiplicity per
/// block. Entries may be negative when the class is a formal difference.
class K0Class {
 public:
  K0Class() = default;
  explicit K0Class(std::vector<long long> ranks) : ranks_(std::move(ranks)) {}
  static K0Class zero(int num_blocks) { return K0Class(std::vector<long long>(num_blocks, 0)); }

  const std::vector<long long>& ranks() const { return ranks_; }
  long long operator[](std::size_t b) const { return ranks_[b]; }
  std::size_t size() const { return ranks_.size(); }
  bool is_zero() const;
  bool is_nonnegative() const;
  /// Complex dimension Σ n_b · rank_b of a module with this class.
  long long complex_dim(const AlgebraShape& shape) const;
  std::string to_string() const;

  K0Class& operator+=(const K0Class& other);
  K0Class& operator-=(const K0Class& other);
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  friend K0Class operator-(const K0Class& a) { return K0Class::zero(static_cast<int>(a.size())) - a; }
  friend bool operator==(const K0Class&, const K0Class&) = default;

 private:
  std::vector<long long> ranks_;
};

std::ostream& operator<<(std::ostream& os, const K0Class& k);

/// Componentwise max(0, k).
K0Class positive_part(const K0Class& k);

/// K₀ class of the free module A^m: entry m·n_b per block.
K0Class free_module_class(const AlgebraShape& shape, int m);

/// An element of the free module A^m.
struct ModuleVector {
  AlgebraShape shape;
  std::vector<AlgebraElement> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  static ModuleVector zero(const AlgebraShape& shape, int m);
  /// (0, …, 1_A, …, 0) with the identity in coordinate i.
  static ModuleVector unit(const AlgebraShape& shape, int m, int i);
  /// Right action x·a.
  ModuleVector times(const AlgebraElement& a) const;
};

/// A-valued inner product ⟨x, y⟩ = Σ x_i* y_i.
AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y);

/// Per-block matrix X_b of a module vector: rows index (coordinate, row of
/// block), columns index the n_b column slots.
Matrix block_matrix(const ModuleVector& x, int b);

/// Flattened coordinates in C^{m Σ n_b²}: blocks in order, each vec(X_b)
/// column-major. The trace inner product is the standard one here.
Vector coordinates(const ModuleVector& x);
ModuleVector from_coordinates(const AlgebraShape& shape, int m, const Vector& v);

/// An A-submodule of a finitely generated projective module.
///
/// The module over block b is C^{k_b} ⊗ C^{n_b}; every A-invariant subspace
/// has the form V_b ⊗ C^{n_b}. We store the orthonormal basis of V_b for each
/// block; the orthonormal basis of the full coordinate space is derived.
class Submodule {
 public:
  Submodule() = default;
  Submodule(AlgebraShape shape, std::vector<Subspace> parts);

  static Submodule zero(const AlgebraShape& shape, const K0Class& ambient);
  static Submodule full(const AlgebraShape& shape, const K0Class& ambient);
  /// Checks A-invariance of an arbitrary coordinate subspace and extracts the
  /// block generators. Throws InvarianceError if the subspace is not a submodule.
  static Submodule from_coordinate_subspace(const AlgebraShape& shape, const K0Class& ambient,
                                            const Subspace& coords);

  const AlgebraShape& shape() const { return shape_; }
  const Subspace& part(int b) const { return parts_[b]; }
  const std::vector<Subspace>& parts() const { return parts_; }
  int num_blocks() const { return static_cast<int>(parts_.size()); }

  K0Class ambient_class() const;
  K0Class k0_class() const;
  Index complex_dim() const;
  Index ambient_complex_dim() const;
  bool is_zero() const;
  /// Smallest rank-decision margin over blocks.
  double margin() const;

  Subspace coordinate_subspace() const;

 private:
  AlgebraShape shape_;
  std::vector<Subspace> parts_;
};

/// Orthonormal basis of the full coordinate space, one column per
/// (block, slot, generator) triple.
Matrix coordinate_basis(const Submodule& n);

/// Offset of block b in the flattened coordinates of a module of class `ambient`.
Index coordinate_offset(const AlgebraShape& shape, const K0Class& ambient, int b);

/// Smallest A-invariant subspace containing the vectors.
Submodule submodule_span(const AlgebraShape& shape, int m, const std::vector<ModuleVector>& vectors);

/// The K₀ class of a submodule; equal to k0_class() on the stored form.
K0Class k0_class(const Submodule& n);

Submodule orth_complement(const Submodule& n);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);
std::pair<Submodule, Submodule> sum_and_intersection(const Submodule& a, const Submodule& b);

/// Largest principal angle between equal-dimensional submodules, as a sine.
double submodule_distance(const Submodule& a, const Submodule& b);
bool same_submodule(const Submodule& a, const Submodule& b);
bool contains(const Submodule& outer, const Submodule& inner);
/// Orthogonal complement of inner within outer.
Submodule relative_complement(const Submodule& outer, const Submodule& inner);
bool are_complements(const Submodule& a, const Submodule& b);
/// Isomorphism test for finitely generated modules over a finite-dimensional
/// algebra: equality of K₀ classes.
bool isomorphic(const Submodule& a, const Submodule& b);

struct DecompositionWitness {
  Submodule first;
  Submodule second;
  bool orthogonal = false;
};

/// For M1 ⊆ M2 and ambient = M1 ⊕̃ M1c, returns M2 = M1 ⊕̃ (M1c ∩ M2).
/// Throws UnmetHypothesis when M1 ⊄ M2 or M1c is not a complement of M1.
DecompositionWitness split_nested_submodule(const Submodule& m1, const Submodule& m2,
                                            const Submodule& m1_complement);

/// Verifies that the witness parts meet trivially and sum to `parent`.
bool decomposes(const DecompositionWitness& w, const Submodule& parent);

}  // namespace cstar
