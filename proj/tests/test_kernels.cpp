#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ctclass/kernels/kernels.hpp"
#include "ctclass/rng.hpp"

using ctclass::Rng;
namespace kn = ctclass::kernels;

namespace {

std::vector<float> random_vec(Rng& rng, std::size_t n, float scale = 1.0f) {
  std::vector<float> v(n);
  for (auto& x : v) x = static_cast<float>(rng.uniform(-scale, scale));
  return v;
}

// mixed absolute/relative comparison; FMA reassociation keeps backends
// from being bit-identical
void check_close(const std::vector<float>& got, const std::vector<float>& want,
                 float atol = 1e-4f, float rtol = 1e-4f) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    const float tol = atol + rtol * std::fabs(want[i]);
    REQUIRE(std::fabs(got[i] - want[i]) <= tol);
  }
}

}  // namespace

TEST_CASE("scalar gemm_nn matches a hand-computed product") {
  // [1 2; 3 4] * [5 6; 7 8] = [19 22; 43 50]
  std::vector<float> a = {1, 2, 3, 4};
  std::vector<float> b = {5, 6, 7, 8};
  std::vector<float> c(4, -1.0f);
  kn::scalar_ops().gemm_nn(a.data(), b.data(), c.data(), 2, 2, 2, false);
  CHECK(c == std::vector<float>{19, 22, 43, 50});

  // accumulate on top
  kn::scalar_ops().gemm_nn(a.data(), b.data(), c.data(), 2, 2, 2, true);
  CHECK(c == std::vector<float>{38, 44, 86, 100});
}

TEST_CASE("gemm_nt and gemm_tn agree with explicit transposition through gemm_nn") {
  Rng rng(7);
  const auto& ops = kn::scalar_ops();
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform_int(17));
    const int k = 1 + static_cast<int>(rng.uniform_int(23));
    const int n = 1 + static_cast<int>(rng.uniform_int(19));
    auto a = random_vec(rng, static_cast<std::size_t>(m) * k);
    auto bt = random_vec(rng, static_cast<std::size_t>(n) * k);  // [n x k]

    // reference: build b = bt^T and multiply
    std::vector<float> b(static_cast<std::size_t>(k) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) b[static_cast<std::size_t>(j) * n + i] = bt[static_cast<std::size_t>(i) * k + j];
    std::vector<float> want(static_cast<std::size_t>(m) * n);
    ops.gemm_nn(a.data(), b.data(), want.data(), m, k, n, false);

    std::vector<float> got(static_cast<std::size_t>(m) * n);
    ops.gemm_nt(a.data(), bt.data(), got.data(), m, k, n, false);
    check_close(got, want, 1e-5f, 1e-5f);

    // gemm_tn: c = at^T * b2, at is [k2 x m2]
    const int m2 = 1 + static_cast<int>(rng.uniform_int(13));
    const int k2 = 1 + static_cast<int>(rng.uniform_int(11));
    const int n2 = 1 + static_cast<int>(rng.uniform_int(15));
    auto at = random_vec(rng, static_cast<std::size_t>(k2) * m2);
    auto b2 = random_vec(rng, static_cast<std::size_t>(k2) * n2);
    std::vector<float> a2(static_cast<std::size_t>(m2) * k2);
    for (int i = 0; i < k2; ++i)
      for (int j = 0; j < m2; ++j)
        a2[static_cast<std::size_t>(j) * k2 + i] = at[static_cast<std::size_t>(i) * m2 + j];
    std::vector<float> want2(static_cast<std::size_t>(m2) * n2);
    ops.gemm_nn(a2.data(), b2.data(), want2.data(), m2, k2, n2, false);
    std::vector<float> got2(static_cast<std::size_t>(m2) * n2);
    ops.gemm_tn(at.data(), b2.data(), got2.data(), m2, k2, n2, false);
    check_close(got2, want2, 1e-5f, 1e-5f);
  }
}

TEST_CASE("avx2 kernels are equivalent to the scalar reference") {
  const kn::Ops* avx2 = kn::avx2_ops();
  if (avx2 == nullptr) {
    MESSAGE("AVX2 unavailable on this machine; equivalence suite skipped");
    return;
  }
  const auto& ref = kn::scalar_ops();
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform_int(33));
    const int k = 1 + static_cast<int>(rng.uniform_int(65));
    const int n = 1 + static_cast<int>(rng.uniform_int(49));

    auto a = random_vec(rng, static_cast<std::size_t>(m) * k);
    auto b = random_vec(rng, static_cast<std::size_t>(k) * n);
    auto bt = random_vec(rng, static_cast<std::size_t>(n) * k);
    auto at = random_vec(rng, static_cast<std::size_t>(k) * m);
    auto seed_c = random_vec(rng, static_cast<std::size_t>(m) * n);

    for (bool acc : {false, true}) {
      auto want = seed_c, got = seed_c;
      ref.gemm_nn(a.data(), b.data(), want.data(), m, k, n, acc);
      avx2->gemm_nn(a.data(), b.data(), got.data(), m, k, n, acc);
      check_close(got, want);

      want = seed_c;
      got = seed_c;
      ref.gemm_nt(a.data(), bt.data(), want.data(), m, k, n, acc);
      avx2->gemm_nt(a.data(), bt.data(), got.data(), m, k, n, acc);
      check_close(got, want);

      want = seed_c;
      got = seed_c;
      ref.gemm_tn(at.data(), b.data(), want.data(), m, k, n, acc);
      avx2->gemm_tn(at.data(), b.data(), got.data(), m, k, n, acc);
      check_close(got, want);
    }
  }
}

TEST_CASE("avx2 elementwise kernels are equivalent to scalar") {
  const kn::Ops* avx2 = kn::avx2_ops();
  if (avx2 == nullptr) return;
  const auto& ref = kn::scalar_ops();
  Rng rng(99);

  for (std::size_t n : {1u, 3u, 7u, 8u, 9u, 16u, 31u, 100u, 1024u, 1031u}) {
    auto x = random_vec(rng, n, 2.0f);
    auto dy = random_vec(rng, n);

    std::vector<float> want(n), got(n);
    ref.relu(x.data(), want.data(), n);
    avx2->relu(x.data(), got.data(), n);
    CHECK(want == got);  // max() is exact

    std::vector<float> wdx(n), gdx(n);
    ref.relu_backward(want.data(), dy.data(), wdx.data(), n);
    avx2->relu_backward(want.data(), dy.data(), gdx.data(), n);
    CHECK(wdx == gdx);

    auto y1 = dy, y2 = dy;
    ref.axpy(0.37f, x.data(), y1.data(), n);
    avx2->axpy(0.37f, x.data(), y2.data(), n);
    check_close(y2, y1, 1e-6f, 1e-5f);

    auto s1 = x, s2 = x;
    ref.scale(-1.25f, s1.data(), n);
    avx2->scale(-1.25f, s2.data(), n);
    CHECK(s1 == s2);  // single multiply is exact

    CHECK(ref.reduce_max(x.data(), n) == avx2->reduce_max(x.data(), n));
    CHECK(std::fabs(ref.reduce_sum(x.data(), n) - avx2->reduce_sum(x.data(), n)) <=
          1e-4f + 1e-4f * std::fabs(ref.reduce_sum(x.data(), n)));
    CHECK(std::fabs(ref.dot(x.data(), dy.data(), n) - avx2->dot(x.data(), dy.data(), n)) <=
          1e-4f + 1e-4f * std::fabs(ref.dot(x.data(), dy.data(), n)));

    // full adam step on both backends
    auto p1 = x, p2 = x;
    std::vector<float> m1(n, 0.0f), v1(n, 0.0f), m2(n, 0.0f), v2(n, 0.0f);
    for (int t = 1; t <= 3; ++t) {
      const float ib1 = 1.0f / (1.0f - std::pow(0.9f, static_cast<float>(t)));
      const float ib2 = 1.0f / (1.0f - std::pow(0.999f, static_cast<float>(t)));
      ref.adam_update(p1.data(), dy.data(), m1.data(), v1.data(), n, 1e-3f, 0.9f, 0.999f,
                      1e-7f, ib1, ib2);
      avx2->adam_update(p2.data(), dy.data(), m2.data(), v2.data(), n, 1e-3f, 0.9f, 0.999f,
                        1e-7f, ib1, ib2);
    }
    check_close(p2, p1, 1e-6f, 1e-5f);
  }
}

TEST_CASE("adam scalar oracle: first step moves p=1 by -lr/(1+eps)") {
  float p = 1.0f, g = 1.0f, m = 0.0f, v = 0.0f;
  const float ib1 = 1.0f / (1.0f - 0.9f);
  const float ib2 = 1.0f / (1.0f - 0.999f);
  kn::scalar_ops().adam_update(&p, &g, &m, &v, 1, 1e-3f, 0.9f, 0.999f, 1e-7f, ib1, ib2);
  // mhat = vhat = 1 exactly at t=1, so the step is lr/(1+eps)
  CHECK(std::fabs((1.0f - p) - 0.001f / (1.0f + 1e-7f)) < 1e-9f);
}

TEST_CASE("backend selection: scalar can be forced and restored") {
  const kn::Backend before = kn::selected();
  REQUIRE(kn::select(kn::Backend::scalar));
  CHECK(kn::selected() == kn::Backend::scalar);
  CHECK(std::string(kn::active().name) == "scalar");
  kn::select(before);
}
