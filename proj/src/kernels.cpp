#include "udg/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace udg::kernels {

namespace {

double dot_scalar(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int k = 0; k < d; ++k) s += a[k] * b[k];
  return s;
}

double dist2_scalar(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int k = 0; k < d; ++k) {
    double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

double edge_deviation_scalar(const double* coords, int d, const Edge* edges,
                             std::size_t m, std::size_t* worst) {
  double best = 0.0;
  std::size_t arg = 0;
  for (std::size_t e = 0; e < m; ++e) {
    const double* pu = coords + static_cast<std::size_t>(edges[e].first) * d;
    const double* pv = coords + static_cast<std::size_t>(edges[e].second) * d;
    double dev = std::fabs(std::sqrt(dist2_scalar(pu, pv, d)) - 1.0);
    if (dev > best) {
      best = dev;
      arg = e;
    }
  }
  if (worst) *worst = arg;
  return best;
}

double min_pair_gap_scalar(const double* coords, int n, int d, Edge* worst) {
  double best = std::numeric_limits<double>::infinity();
  Edge arg{-1, -1};
  for (int i = 0; i < n; ++i) {
    const double* pi = coords + static_cast<std::size_t>(i) * d;
    for (int j = i + 1; j < n; ++j) {
      double q = dist2_scalar(pi, coords + static_cast<std::size_t>(j) * d, d);
      if (q < best) {
        best = q;
        arg = {i, j};
      }
    }
  }
  if (worst) *worst = arg;
  return std::sqrt(best);
}

double norm_deviation_scalar(const double* coords, int n, int d, double radius,
                             int* worst) {
  double best = 0.0;
  int arg = -1;
  for (int i = 0; i < n; ++i) {
    const double* p = coords + static_cast<std::size_t>(i) * d;
    double dev = std::fabs(std::sqrt(dot_scalar(p, p, d)) - radius);
    if (dev > best) {
      best = dev;
      arg = i;
    }
  }
  if (worst) *worst = arg;
  return best;
}

double lsq_residual_grad_scalar(const double* coords, int /*n*/, int d,
                                const Edge* edges, std::size_t m,
                                double* grad) {
  double f = 0.0;
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t u = static_cast<std::size_t>(edges[e].first);
    std::size_t v = static_cast<std::size_t>(edges[e].second);
    const double* pu = coords + u * d;
    const double* pv = coords + v * d;
    double r = std::sqrt(dist2_scalar(pu, pv, d));
    double res = r - 1.0;
    f += res * res;
    if (grad && r > 1e-12) {
      double c = 2.0 * res / r;
      for (int k = 0; k < d; ++k) {
        double t = c * (pu[k] - pv[k]);
        grad[u * d + k] += t;
        grad[v * d + k] -= t;
      }
    }
  }
  return f;
}

const Ops kScalarOps = {
    "scalar",          dot_scalar,           dist2_scalar,
    edge_deviation_scalar, min_pair_gap_scalar, norm_deviation_scalar,
    lsq_residual_grad_scalar,
};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& active() {
  static const Ops* chosen = [] {
    const char* env = std::getenv("UDG_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &kScalarOps;
    if (const Ops* simd = avx2_ops()) return simd;
    return &kScalarOps;
  }();
  return *chosen;
}

#ifndef UDG_HAVE_AVX2
const Ops* avx2_ops() { return nullptr; }
#endif

}  // namespace udg::kernels
