#pragma once

#include <cstddef>

namespace ctclass::kernels {

// Dense float32 kernels behind every inner loop of the pipeline: matrix
// products for dense/conv layers (via im2col), elementwise activation and
// optimizer updates, and row reductions. Two implementations exist -- a
// scalar reference and an AVX2 variant -- selected at runtime. The scalar
// table is the semantic definition; the SIMD table must agree with it to
// float rounding (see tests/test_kernels.cpp).
//
// All matrices are row-major and densely packed.
struct Ops {
  const char* name;

  // c[m x n] (+)= a[m x k] * b[k x n]
  void (*gemm_nn)(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate);
  // c[m x n] (+)= a[m x k] * b^T, with b stored as [n x k]
  void (*gemm_nt)(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate);
  // c[m x n] (+)= a^T * b, with a stored as [k x m], b as [k x n]
  void (*gemm_tn)(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate);

  // y[i] = max(x[i], 0)
  void (*relu)(const float* x, float* y, std::size_t n);
  // dx[i] = y[i] > 0 ? dy[i] : 0, where y is the relu forward output
  void (*relu_backward)(const float* y, const float* dy, float* dx, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(float a, const float* x, float* y, std::size_t n);
  // x[i] *= a
  void (*scale)(float a, float* x, std::size_t n);
  // Adam update with precomputed bias corrections:
  //   m = b1*m + (1-b1)*g;  v = b2*v + (1-b2)*g^2
  //   p -= lr * (m*inv_bias1) / (sqrt(v*inv_bias2) + eps)
  void (*adam_update)(float* p, const float* g, float* m, float* v, std::size_t n,
                      float lr, float beta1, float beta2, float eps, float inv_bias1,
                      float inv_bias2);

  float (*reduce_sum)(const float* x, std::size_t n);
  float (*reduce_max)(const float* x, std::size_t n);
  float (*dot)(const float* a, const float* b, std::size_t n);
};

enum class Backend { automatic, scalar, avx2 };

// Active kernel table. First call resolves the backend: the
// CTCLASS_KERNELS environment variable ("scalar", "avx2", "auto") wins,
// otherwise the best table supported by the CPU is picked.
const Ops& active();

// Force a backend; returns false (and keeps the current one) if it is
// unavailable on this machine/build.
bool select(Backend backend);
Backend selected();

const Ops& scalar_ops();
// Null when the binary was built without AVX2 support or the CPU lacks it.
const Ops* avx2_ops();

}  // namespace ctclass::kernels
