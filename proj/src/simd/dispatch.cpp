#include "skymec/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace skymec::simd {

namespace {

using detail::KernelTable;

Lane pick_initial_lane() {
  if (const char* env = std::getenv("SKYMEC_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Lane::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!detail::avx2_supported())
        throw std::runtime_error("SKYMEC_KERNELS=avx2 but CPU lacks AVX2/FMA");
      return Lane::avx2;
    }
  }
  return detail::avx2_supported() ? Lane::avx2 : Lane::scalar;
}

Lane& lane_ref() {
  static Lane lane = pick_initial_lane();
  return lane;
}

const KernelTable& active() {
  return lane_ref() == Lane::avx2 ? detail::table_avx2()
                                  : detail::table_scalar();
}

}  // namespace

Lane active_lane() { return lane_ref(); }

const char* lane_name(Lane lane) {
  return lane == Lane::avx2 ? "avx2" : "scalar";
}

void set_lane(Lane lane) {
  if (lane == Lane::avx2 && !detail::avx2_supported())
    throw std::runtime_error("AVX2/FMA not supported on this CPU");
  lane_ref() = lane;
}

void matvec(const double* a, const double* x, const double* bias, double* y,
            std::size_t rows, std::size_t cols) {
  active().matvec(a, x, bias, y, rows, cols);
}

void matvec_t_acc(const double* a, const double* g, double* dx,
                  std::size_t rows, std::size_t cols) {
  active().matvec_t_acc(a, g, dx, rows, cols);
}

void ger_acc(double* gw, const double* g, const double* x, std::size_t rows,
             std::size_t cols) {
  active().ger_acc(gw, g, x, rows, cols);
}

double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  active().axpy(alpha, x, y, n);
}

void scale(double* x, double alpha, std::size_t n) {
  active().scale(x, alpha, n);
}

double l2norm_sq(const double* x, std::size_t n) {
  return active().l2norm_sq(x, n);
}

void relu(const double* x, double* y, std::size_t n) {
  active().relu(x, y, n);
}

void relu_backward_acc(const double* pre, const double* dy, double* dx,
                       std::size_t n) {
  active().relu_backward_acc(pre, dy, dx, n);
}

void adam_update(double* p, double* m, double* v, const double* g,
                 std::size_t n, double lr, double beta1, double beta2,
                 double eps, double bc1, double bc2) {
  active().adam_update(p, m, v, g, n, lr, beta1, beta2, eps, bc1, bc2);
}

}  // namespace skymec::simd
