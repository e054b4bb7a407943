#pragma once

#include <cstddef>
#include <string>

// Dense double-precision kernels used by the policy networks and the
// retrieval index. Every kernel has a scalar reference implementation and,
// on x86-64 with AVX2+FMA, a vectorized variant. The active variant is
// picked once at startup from CPUID and can be forced with the environment
// variable SKYMEC_KERNELS=scalar|avx2.
//
// Matrices are row-major, dimensions are (rows x cols).

namespace skymec::simd {

enum class Lane { scalar, avx2 };

Lane active_lane();
const char* lane_name(Lane lane);
// Force a lane (throws std::runtime_error if unsupported on this CPU).
void set_lane(Lane lane);

// y[r] = sum_c a[r*cols+c] * x[c] + bias[r]   (bias may be nullptr)
void matvec(const double* a, const double* x, const double* bias, double* y,
            std::size_t rows, std::size_t cols);

// dx[c] += sum_r a[r*cols+c] * g[r]
void matvec_t_acc(const double* a, const double* g, double* dx,
                  std::size_t rows, std::size_t cols);

// gw[r*cols+c] += g[r] * x[c]
void ger_acc(double* gw, const double* g, const double* x, std::size_t rows,
             std::size_t cols);

double dot(const double* a, const double* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

void scale(double* x, double alpha, std::size_t n);

double l2norm_sq(const double* x, std::size_t n);

// y[i] = max(x[i], 0)
void relu(const double* x, double* y, std::size_t n);

// dx[i] += dy[i] * (pre[i] > 0)
void relu_backward_acc(const double* pre, const double* dy, double* dx,
                       std::size_t n);

// Bias-corrected Adam step on one tensor. bc1 = 1 - beta1^t, bc2 = 1 - beta2^t.
void adam_update(double* p, double* m, double* v, const double* g,
                 std::size_t n, double lr, double beta1, double beta2,
                 double eps, double bc1, double bc2);

namespace detail {
// Per-lane entry points, exposed for the cross-lane equivalence tests.
struct KernelTable {
  void (*matvec)(const double*, const double*, const double*, double*,
                 std::size_t, std::size_t);
  void (*matvec_t_acc)(const double*, const double*, double*, std::size_t,
                       std::size_t);
  void (*ger_acc)(double*, const double*, const double*, std::size_t,
                  std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double*, double, std::size_t);
  double (*l2norm_sq)(const double*, std::size_t);
  void (*relu)(const double*, double*, std::size_t);
  void (*relu_backward_acc)(const double*, const double*, double*,
                            std::size_t);
  void (*adam_update)(double*, double*, double*, const double*, std::size_t,
                      double, double, double, double, double, double);
};

const KernelTable& table_scalar();
const KernelTable& table_avx2();  // valid only if avx2_supported()
bool avx2_supported();
}  // namespace detail

}  // namespace skymec::simd
