#include "cstar/exact_sequence.hpp"

#include <algorithm>

#include "cstar/errors.hpp"

namespace cstar {

RangeComplement orthogonal_range_complement(const Subspace& range) {
  Subspace c = range.complement();
  Matrix p = c.projector();
  return {std::move(c), std::move(p)};
}

RangeComplement oblique_range_complement(const Subspace& range, const Subspace& complement) {
  ObliqueProjector e = oblique_projector(complement, range);
  return {complement, std::move(e.matrix)};
}

namespace {

// Coordinates of `vectors` in the orthonormal basis of `target`, plus the
// norm of whatever falls outside the target.
Matrix to_coordinates(const Subspace& target, const Matrix& vectors, double& leak) {
  const Matrix coords = target.basis().adjoint() * vectors;
  if (vectors.size() > 0) {
    leak = std::max(leak, spectral_norm(vectors - target.basis() * coords));
  }
  return coords;
}

double node_residual(const Matrix& incoming, double in_scale, const Matrix& outgoing, double out_scale,
                     Index node_dim) {
  // incoming: node_dim × prev_dim, outgoing: next_dim × node_dim.
  const Subspace im = incoming.cols() == 0 ? Subspace::zero(node_dim) : image(incoming, in_scale);
  const Subspace ker = outgoing.rows() == 0 ? Subspace::full(node_dim) : kernel(outgoing, out_scale);
  return subspace_distance(im, ker);
}

}  // namespace

ExactSequenceData build_exact_sequence(const Matrix& f, const Matrix& g, const RangeComplement& f_complement,
                                       const RangeComplement& gf_complement, const RangeComplement& g_complement,
                                       double f_scale, double g_scale) {
  if (g.cols() != f.rows()) {
    throw StructuralError("build_exact_sequence: G and F are not composable");
  }
  const Matrix gf = g * f;
  const double nf = std::max(f_scale, spectral_norm(f));
  const double ng = std::max(g_scale, spectral_norm(g));
  const double pf = spectral_norm(f_complement.projector);
  const double pgf = spectral_norm(gf_complement.projector);
  const double pg = spectral_norm(g_complement.projector);
  ExactSequenceData d;
  d.spaces = {kernel(f, nf), kernel(gf, nf * ng), kernel(g, ng), f_complement.complement, gf_complement.complement,
              g_complement.complement};

  const auto& s = d.spaces;
  d.maps[0] = to_coordinates(s[1], s[0].basis(), d.leak);
  d.maps[1] = to_coordinates(s[2], f * s[1].basis(), d.leak);
  d.maps[2] = to_coordinates(s[3], f_complement.projector * s[2].basis(), d.leak);
  d.maps[3] = to_coordinates(s[4], gf_complement.projector * g * s[3].basis(), d.leak);
  d.maps[4] = to_coordinates(s[5], g_complement.projector * s[4].basis(), d.leak);

  const std::array<double, 5> scales{1.0, nf, pf, pgf * ng, pg};
  d.residuals[0] = node_residual(Matrix(s[0].dim(), 0), 1.0, d.maps[0], scales[0], s[0].dim());
  for (int k = 1; k < 5; ++k) {
    d.residuals[k] = node_residual(d.maps[k - 1], scales[k - 1], d.maps[k], scales[k], s[k].dim());
  }
  d.residuals[5] = node_residual(d.maps[4], scales[4], Matrix(0, s[5].dim()), 1.0, s[5].dim());

  long long sum = 0;
  for (int k = 0; k < 6; ++k) sum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(s[k].dim());
  d.alternating_dim_sum = sum;
  return d;
}

}  // namespace cstar
