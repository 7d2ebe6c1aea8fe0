// AVX2/FMA kernel table. This translation unit is the only one compiled
// with -mavx2 -mfma; everything else stays at the baseline ISA so the
// binary still runs on machines without AVX2 (dispatch falls back to the
// scalar table there).

#include "ctclass/kernels/kernels.hpp"

#if defined(CTCLASS_BUILD_AVX2) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>
#include <cstring>

namespace ctclass::kernels {
namespace {

inline float hsum256(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  __m128 shuf = _mm_movehdup_ps(lo);
  __m128 sums = _mm_add_ps(lo, shuf);
  shuf = _mm_movehl_ps(shuf, sums);
  sums = _mm_add_ss(sums, shuf);
  return _mm_cvtss_f32(sums);
}

// crow[j] += av * brow[j] over n elements
inline void fma_row(float av, const float* brow, float* crow, int n) {
  const __m256 a = _mm256_set1_ps(av);
  int j = 0;
  for (; j + 16 <= n; j += 16) {
    __m256 c0 = _mm256_loadu_ps(crow + j);
    __m256 c1 = _mm256_loadu_ps(crow + j + 8);
    c0 = _mm256_fmadd_ps(a, _mm256_loadu_ps(brow + j), c0);
    c1 = _mm256_fmadd_ps(a, _mm256_loadu_ps(brow + j + 8), c1);
    _mm256_storeu_ps(crow + j, c0);
    _mm256_storeu_ps(crow + j + 8, c1);
  }
  for (; j + 8 <= n; j += 8) {
    __m256 c0 = _mm256_loadu_ps(crow + j);
    c0 = _mm256_fmadd_ps(a, _mm256_loadu_ps(brow + j), c0);
    _mm256_storeu_ps(crow + j, c0);
  }
  for (; j < n; ++j) crow[j] += av * brow[j];
}

void gemm_nn_avx2(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate) {
  if (!accumulate) std::memset(c, 0, sizeof(float) * static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    const float* arow = a + static_cast<std::size_t>(i) * k;
    float* crow = c + static_cast<std::size_t>(i) * n;
    for (int l = 0; l < k; ++l) {
      fma_row(arow[l], b + static_cast<std::size_t>(l) * n, crow, n);
    }
  }
}

void gemm_nt_avx2(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate) {
  for (int i = 0; i < m; ++i) {
    const float* arow = a + static_cast<std::size_t>(i) * k;
    float* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const float* brow = b + static_cast<std::size_t>(j) * k;
      __m256 acc0 = _mm256_setzero_ps();
      __m256 acc1 = _mm256_setzero_ps();
      int l = 0;
      for (; l + 16 <= k; l += 16) {
        acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(arow + l), _mm256_loadu_ps(brow + l), acc0);
        acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(arow + l + 8), _mm256_loadu_ps(brow + l + 8),
                               acc1);
      }
      for (; l + 8 <= k; l += 8) {
        acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(arow + l), _mm256_loadu_ps(brow + l), acc0);
      }
      float acc = hsum256(_mm256_add_ps(acc0, acc1));
      for (; l < k; ++l) acc += arow[l] * brow[l];
      crow[j] = accumulate ? crow[j] + acc : acc;
    }
  }
}

void gemm_tn_avx2(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate) {
  if (!accumulate) std::memset(c, 0, sizeof(float) * static_cast<std::size_t>(m) * n);
  for (int l = 0; l < k; ++l) {
    const float* arow = a + static_cast<std::size_t>(l) * m;
    const float* brow = b + static_cast<std::size_t>(l) * n;
    for (int i = 0; i < m; ++i) {
      fma_row(arow[i], brow, c + static_cast<std::size_t>(i) * n, n);
    }
  }
}

void relu_avx2(const float* x, float* y, std::size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(y + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
  }
  for (; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_backward_avx2(const float* y, const float* dy, float* dx, std::size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(y + i), zero, _CMP_GT_OQ);
    _mm256_storeu_ps(dx + i, _mm256_and_ps(_mm256_loadu_ps(dy + i), mask));
  }
  for (; i < n; ++i) dx[i] = y[i] > 0.0f ? dy[i] : 0.0f;
}

void axpy_avx2(float a, const float* x, float* y, std::size_t n) {
  const __m256 av = _mm256_set1_ps(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 yv = _mm256_loadu_ps(y + i);
    yv = _mm256_fmadd_ps(av, _mm256_loadu_ps(x + i), yv);
    _mm256_storeu_ps(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(float a, float* x, std::size_t n) {
  const __m256 av = _mm256_set1_ps(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(x + i, _mm256_mul_ps(_mm256_loadu_ps(x + i), av));
  }
  for (; i < n; ++i) x[i] *= a;
}

void adam_update_avx2(float* p, const float* g, float* m, float* v, std::size_t n,
                      float lr, float beta1, float beta2, float eps, float inv_bias1,
                      float inv_bias2) {
  const __m256 vb1 = _mm256_set1_ps(beta1);
  const __m256 vb2 = _mm256_set1_ps(beta2);
  const __m256 vone_b1 = _mm256_set1_ps(1.0f - beta1);
  const __m256 vone_b2 = _mm256_set1_ps(1.0f - beta2);
  const __m256 vlr = _mm256_set1_ps(lr);
  const __m256 veps = _mm256_set1_ps(eps);
  const __m256 vib1 = _mm256_set1_ps(inv_bias1);
  const __m256 vib2 = _mm256_set1_ps(inv_bias2);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 gv = _mm256_loadu_ps(g + i);
    __m256 mv = _mm256_loadu_ps(m + i);
    __m256 vv = _mm256_loadu_ps(v + i);
    mv = _mm256_fmadd_ps(vone_b1, gv, _mm256_mul_ps(vb1, mv));
    vv = _mm256_fmadd_ps(vone_b2, _mm256_mul_ps(gv, gv), _mm256_mul_ps(vb2, vv));
    _mm256_storeu_ps(m + i, mv);
    _mm256_storeu_ps(v + i, vv);
    const __m256 mhat = _mm256_mul_ps(mv, vib1);
    const __m256 vhat = _mm256_mul_ps(vv, vib2);
    const __m256 denom = _mm256_add_ps(_mm256_sqrt_ps(vhat), veps);
    const __m256 step = _mm256_div_ps(_mm256_mul_ps(vlr, mhat), denom);
    _mm256_storeu_ps(p + i, _mm256_sub_ps(_mm256_loadu_ps(p + i), step));
  }
  for (; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0f - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0f - beta2) * g[i] * g[i];
    p[i] -= lr * (m[i] * inv_bias1) / (std::sqrt(v[i] * inv_bias2) + eps);
  }
}

float reduce_sum_avx2(const float* x, std::size_t n) {
  __m256 acc = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) acc = _mm256_add_ps(acc, _mm256_loadu_ps(x + i));
  float sum = hsum256(acc);
  for (; i < n; ++i) sum += x[i];
  return sum;
}

float reduce_max_avx2(const float* x, std::size_t n) {
  float best = x[0];
  std::size_t i = 0;
  if (n >= 8) {
    __m256 acc = _mm256_loadu_ps(x);
    for (i = 8; i + 8 <= n; i += 8) acc = _mm256_max_ps(acc, _mm256_loadu_ps(x + i));
    alignas(32) float lanes[8];
    _mm256_store_ps(lanes, acc);
    for (float l : lanes) {
      if (l > best) best = l;
    }
  }
  for (; i < n; ++i) {
    if (x[i] > best) best = x[i];
  }
  return best;
}

float dot_avx2(const float* a, const float* b, std::size_t n) {
  __m256 acc0 = _mm256_setzero_ps();
  __m256 acc1 = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
    acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8), acc1);
  }
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
  }
  float sum = hsum256(_mm256_add_ps(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

const Ops* avx2_ops_table() {
  static const Ops ops = {
      "avx2",           gemm_nn_avx2, gemm_nt_avx2,      gemm_tn_avx2,
      relu_avx2,        relu_backward_avx2, axpy_avx2,   scale_avx2,
      adam_update_avx2, reduce_sum_avx2, reduce_max_avx2, dot_avx2,
  };
  return &ops;
}

}  // namespace ctclass::kernels

#else

namespace ctclass::kernels {

const Ops* avx2_ops_table() { return nullptr; }

}  // namespace ctclass::kernels

#endif
