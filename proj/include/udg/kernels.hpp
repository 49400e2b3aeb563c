#pragma once

#include <cstddef>
#include <utility>

// Batch numeric kernels over flat vertex-major coordinate arrays (n points of
// dimension d, row i at coords + i*d). Scalar reference implementations plus
// AVX2 variants selected at runtime; the variants are equivalence-tested
// against each other. Everything above this layer is backend-agnostic.

namespace udg::kernels {

using Edge = std::pair<int, int>;

struct Ops {
  const char* name;

  double (*dot)(const double* a, const double* b, int d);
  double (*dist2)(const double* a, const double* b, int d);

  // max over edges of | |x_u - x_v| - 1 |; index of the worst edge in *worst
  double (*edge_deviation)(const double* coords, int d, const Edge* edges,
                           std::size_t m, std::size_t* worst);

  // min over unordered vertex pairs of |x_i - x_j|; pair written to *worst
  double (*min_pair_gap)(const double* coords, int n, int d, Edge* worst);

  // max over vertices of | |x_i| - radius |; vertex index in *worst
  double (*norm_deviation)(const double* coords, int n, int d, double radius,
                           int* worst);

  // sum over edges of (|x_u - x_v| - 1)^2; gradient accumulated into grad
  // (grad must be zeroed by the caller; near-coincident endpoints contribute
  // to the objective but not the gradient)
  double (*lsq_residual_grad)(const double* coords, int n, int d,
                              const Edge* edges, std::size_t m, double* grad);
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // null when unavailable on this build/CPU

// Dispatch: AVX2 when the CPU supports it, unless UDG_KERNELS=scalar is set
// in the environment. The choice is made once per process.
const Ops& active();

}  // namespace udg::kernels
