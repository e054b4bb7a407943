#include "skymec/simd/kernels.hpp"

#include <cmath>

namespace skymec::simd::detail {
namespace {

void matvec_scalar(const double* a, const double* x, const double* bias,
                   double* y, std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    double acc = 0.0;
    for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
    y[r] = bias ? acc + bias[r] : acc;
  }
}

void matvec_t_acc_scalar(const double* a, const double* g, double* dx,
                         std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    const double gr = g[r];
    for (std::size_t c = 0; c < cols; ++c) dx[c] += row[c] * gr;
  }
}

void ger_acc_scalar(double* gw, const double* g, const double* x,
                    std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    double* row = gw + r * cols;
    const double gr = g[r];
    for (std::size_t c = 0; c < cols; ++c) row[c] += gr * x[c];
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double* x, double alpha, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double l2norm_sq_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void relu_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward_acc_scalar(const double* pre, const double* dy, double* dx,
                              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pre[i] > 0.0) dx[i] += dy[i];
  }
}

void adam_update_scalar(double* p, double* m, double* v, const double* g,
                        std::size_t n, double lr, double beta1, double beta2,
                        double eps, double bc1, double bc2) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    const double mhat = m[i] / bc1;
    const double vhat = v[i] / bc2;
    p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

}  // namespace

const KernelTable& table_scalar() {
  static const KernelTable t{
      matvec_scalar,       matvec_t_acc_scalar,
      ger_acc_scalar,      dot_scalar,
      axpy_scalar,         scale_scalar,
      l2norm_sq_scalar,    relu_scalar,
      relu_backward_acc_scalar, adam_update_scalar,
  };
  return t;
}

}  // namespace skymec::simd::detail
