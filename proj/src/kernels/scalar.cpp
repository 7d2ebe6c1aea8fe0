#include <cmath>
#include <cstring>

#include "ctclass/kernels/kernels.hpp"

// Reference kernels. Plain loops, no tricks: these define the semantics
// the SIMD variants are tested against.

namespace ctclass::kernels {
namespace {

void gemm_nn_scalar(const float* a, const float* b, float* c, int m, int k, int n,
                    bool accumulate) {
  if (!accumulate) std::memset(c, 0, sizeof(float) * static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    const float* arow = a + static_cast<std::size_t>(i) * k;
    float* crow = c + static_cast<std::size_t>(i) * n;
    for (int l = 0; l < k; ++l) {
      const float av = arow[l];
      const float* brow = b + static_cast<std::size_t>(l) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void gemm_nt_scalar(const float* a, const float* b, float* c, int m, int k, int n,
                    bool accumulate) {
  for (int i = 0; i < m; ++i) {
    const float* arow = a + static_cast<std::size_t>(i) * k;
    float* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const float* brow = b + static_cast<std::size_t>(j) * k;
      float acc = 0.0f;
      for (int l = 0; l < k; ++l) acc += arow[l] * brow[l];
      crow[j] = accumulate ? crow[j] + acc : acc;
    }
  }
}

void gemm_tn_scalar(const float* a, const float* b, float* c, int m, int k, int n,
                    bool accumulate) {
  if (!accumulate) std::memset(c, 0, sizeof(float) * static_cast<std::size_t>(m) * n);
  for (int l = 0; l < k; ++l) {
    const float* arow = a + static_cast<std::size_t>(l) * m;
    const float* brow = b + static_cast<std::size_t>(l) * n;
    for (int i = 0; i < m; ++i) {
      const float av = arow[i];
      float* crow = c + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void relu_scalar(const float* x, float* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_backward_scalar(const float* y, const float* dy, float* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dx[i] = y[i] > 0.0f ? dy[i] : 0.0f;
}

void axpy_scalar(float a, const float* x, float* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(float a, float* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void adam_update_scalar(float* p, const float* g, float* m, float* v, std::size_t n,
                        float lr, float beta1, float beta2, float eps, float inv_bias1,
                        float inv_bias2) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0f - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0f - beta2) * g[i] * g[i];
    const float mhat = m[i] * inv_bias1;
    const float vhat = v[i] * inv_bias2;
    p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

float reduce_sum_scalar(const float* x, std::size_t n) {
  float acc = 0.0f;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

float reduce_max_scalar(const float* x, std::size_t n) {
  float best = x[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] > best) best = x[i];
  }
  return best;
}

float dot_scalar(const float* a, const float* b, std::size_t n) {
  float acc = 0.0f;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      "scalar",          gemm_nn_scalar, gemm_nt_scalar,     gemm_tn_scalar,
      relu_scalar,       relu_backward_scalar, axpy_scalar,  scale_scalar,
      adam_update_scalar, reduce_sum_scalar, reduce_max_scalar, dot_scalar,
  };
  return ops;
}

}  // namespace ctclass::kernels
