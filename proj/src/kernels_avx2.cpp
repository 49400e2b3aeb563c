// AVX2 variants of the batch kernels. Compiled with -mavx2 -mfma; selected at
// runtime only when the CPU reports AVX2 support.

#include "udg/kernels.hpp"

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace udg::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline double dot_avx2(const double* a, const double* b, int d) {
  __m256d acc = _mm256_setzero_pd();
  int k = 0;
  for (; k + 4 <= d; k += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc);
  }
  double s = hsum(acc);
  for (; k < d; ++k) s += a[k] * b[k];
  return s;
}

inline double dist2_avx2(const double* a, const double* b, int d) {
  __m256d acc = _mm256_setzero_pd();
  int k = 0;
  for (; k + 4 <= d; k += 4) {
    __m256d t = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
    acc = _mm256_fmadd_pd(t, t, acc);
  }
  double s = hsum(acc);
  for (; k < d; ++k) {
    double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

double edge_deviation_avx2(const double* coords, int d, const Edge* edges,
                           std::size_t m, std::size_t* worst) {
  double best = 0.0;
  std::size_t arg = 0;
  for (std::size_t e = 0; e < m; ++e) {
    const double* pu = coords + static_cast<std::size_t>(edges[e].first) * d;
    const double* pv = coords + static_cast<std::size_t>(edges[e].second) * d;
    double dev = std::fabs(std::sqrt(dist2_avx2(pu, pv, d)) - 1.0);
    if (dev > best) {
      best = dev;
      arg = e;
    }
  }
  if (worst) *worst = arg;
  return best;
}

double min_pair_gap_avx2(const double* coords, int n, int d, Edge* worst) {
  double best = std::numeric_limits<double>::infinity();
  Edge arg{-1, -1};
  for (int i = 0; i < n; ++i) {
    const double* pi = coords + static_cast<std::size_t>(i) * d;
    for (int j = i + 1; j < n; ++j) {
      double q = dist2_avx2(pi, coords + static_cast<std::size_t>(j) * d, d);
      if (q < best) {
        best = q;
        arg = {i, j};
      }
    }
  }
  if (worst) *worst = arg;
  return std::sqrt(best);
}

double norm_deviation_avx2(const double* coords, int n, int d, double radius,
                           int* worst) {
  double best = 0.0;
  int arg = -1;
  for (int i = 0; i < n; ++i) {
    const double* p = coords + static_cast<std::size_t>(i) * d;
    double dev = std::fabs(std::sqrt(dot_avx2(p, p, d)) - radius);
    if (dev > best) {
      best = dev;
      arg = i;
    }
  }
  if (worst) *worst = arg;
  return best;
}

double lsq_residual_grad_avx2(const double* coords, int /*n*/, int d,
                              const Edge* edges, std::size_t m, double* grad) {
  double f = 0.0;
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t u = static_cast<std::size_t>(edges[e].first);
    std::size_t v = static_cast<std::size_t>(edges[e].second);
    const double* pu = coords + u * d;
    const double* pv = coords + v * d;
    double r = std::sqrt(dist2_avx2(pu, pv, d));
    double res = r - 1.0;
    f += res * res;
    if (grad && r > 1e-12) {
      double c = 2.0 * res / r;
      double* gu = grad + u * d;
      double* gv = grad + v * d;
      __m256d cv = _mm256_set1_pd(c);
      int k = 0;
      for (; k + 4 <= d; k += 4) {
        __m256d t = _mm256_mul_pd(
            cv, _mm256_sub_pd(_mm256_loadu_pd(pu + k), _mm256_loadu_pd(pv + k)));
        _mm256_storeu_pd(gu + k, _mm256_add_pd(_mm256_loadu_pd(gu + k), t));
        _mm256_storeu_pd(gv + k, _mm256_sub_pd(_mm256_loadu_pd(gv + k), t));
      }
      for (; k < d; ++k) {
        double t = c * (pu[k] - pv[k]);
        gu[k] += t;
        gv[k] -= t;
      }
    }
  }
  return f;
}

double dot_entry(const double* a, const double* b, int d) {
  return dot_avx2(a, b, d);
}
double dist2_entry(const double* a, const double* b, int d) {
  return dist2_avx2(a, b, d);
}

const Ops kAvx2Ops = {
    "avx2",           dot_entry,          dist2_entry,
    edge_deviation_avx2, min_pair_gap_avx2, norm_deviation_avx2,
    lsq_residual_grad_avx2,
};

}  // namespace

const Ops* avx2_ops() {
  static const Ops* ops =
      __builtin_cpu_supports("avx2") ? &kAvx2Ops : nullptr;
  return ops;
}

}  // namespace udg::kernels
