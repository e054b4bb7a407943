#include "skymec/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define SKYMEC_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define SKYMEC_HAVE_AVX2_BUILD 0
#endif

#include <cmath>

namespace skymec::simd::detail {

#if SKYMEC_HAVE_AVX2_BUILD

namespace {

inline double hsum256(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum256(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void matvec_avx2(const double* a, const double* x, const double* bias,
                 double* y, std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double acc = dot_avx2(a + r * cols, x, cols);
    y[r] = bias ? acc + bias[r] : acc;
  }
}

void matvec_t_acc_avx2(const double* a, const double* g, double* dx,
                       std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    const __m256d gr = _mm256_set1_pd(g[r]);
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      __m256d d = _mm256_loadu_pd(dx + c);
      d = _mm256_fmadd_pd(_mm256_loadu_pd(row + c), gr, d);
      _mm256_storeu_pd(dx + c, d);
    }
    for (; c < cols; ++c) dx[c] += row[c] * g[r];
  }
}

void ger_acc_avx2(double* gw, const double* g, const double* x,
                  std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    double* row = gw + r * cols;
    const __m256d gr = _mm256_set1_pd(g[r]);
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      __m256d d = _mm256_loadu_pd(row + c);
      d = _mm256_fmadd_pd(gr, _mm256_loadu_pd(x + c), d);
      _mm256_storeu_pd(row + c, d);
    }
    for (; c < cols; ++c) row[c] += g[r] * x[c];
  }
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double* x, double alpha, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

double l2norm_sq_avx2(const double* x, std::size_t n) {
  return dot_avx2(x, x, n);
}

void relu_avx2(const double* x, double* y, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  }
  for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward_acc_avx2(const double* pre, const double* dy, double* dx,
                            std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(pre + i), zero, _CMP_GT_OQ);
    const __m256d gd = _mm256_and_pd(_mm256_loadu_pd(dy + i), mask);
    _mm256_storeu_pd(dx + i, _mm256_add_pd(_mm256_loadu_pd(dx + i), gd));
  }
  for (; i < n; ++i) {
    if (pre[i] > 0.0) dx[i] += dy[i];
  }
}

void adam_update_avx2(double* p, double* m, double* v, const double* g,
                      std::size_t n, double lr, double beta1, double beta2,
                      double eps, double bc1, double bc2) {
  const __m256d vb1 = _mm256_set1_pd(beta1);
  const __m256d vb1c = _mm256_set1_pd(1.0 - beta1);
  const __m256d vb2 = _mm256_set1_pd(beta2);
  const __m256d vb2c = _mm256_set1_pd(1.0 - beta2);
  const __m256d vbc1 = _mm256_set1_pd(bc1);
  const __m256d vbc2 = _mm256_set1_pd(bc2);
  const __m256d vlr = _mm256_set1_pd(lr);
  const __m256d veps = _mm256_set1_pd(eps);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gi = _mm256_loadu_pd(g + i);
    __m256d mi = _mm256_loadu_pd(m + i);
    __m256d vi = _mm256_loadu_pd(v + i);
    mi = _mm256_fmadd_pd(vb1, mi, _mm256_mul_pd(vb1c, gi));
    vi = _mm256_fmadd_pd(vb2, vi, _mm256_mul_pd(vb2c, _mm256_mul_pd(gi, gi)));
    _mm256_storeu_pd(m + i, mi);
    _mm256_storeu_pd(v + i, vi);
    const __m256d mhat = _mm256_div_pd(mi, vbc1);
    const __m256d vhat = _mm256_div_pd(vi, vbc2);
    const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), veps);
    const __m256d step = _mm256_div_pd(_mm256_mul_pd(vlr, mhat), denom);
    _mm256_storeu_pd(p + i, _mm256_sub_pd(_mm256_loadu_pd(p + i), step));
  }
  for (; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    const double mhat = m[i] / bc1;
    const double vhat = v[i] / bc2;
    p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

}  // namespace

const KernelTable& table_avx2() {
  static const KernelTable t{
      matvec_avx2,       matvec_t_acc_avx2,
      ger_acc_avx2,      dot_avx2,
      axpy_avx2,         scale_avx2,
      l2norm_sq_avx2,    relu_avx2,
      relu_backward_acc_avx2, adam_update_avx2,
  };
  return t;
}

bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#else  // !SKYMEC_HAVE_AVX2_BUILD

const KernelTable& table_avx2() { return table_scalar(); }
bool avx2_supported() { return false; }

#endif

}  // namespace skymec::simd::detail
