#include <atomic>
#include <cstdlib>
#include <cstring>

#include "ctclass/kernels/kernels.hpp"

namespace ctclass::kernels {

// defined in avx2.cpp; null when that TU was built without AVX2
const Ops* avx2_ops_table();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct State {
  const Ops* ops;
  Backend backend;
};

State resolve(Backend requested) {
  const Ops* avx2 = avx2_ops_table();
  const bool avx2_ok = avx2 != nullptr && cpu_has_avx2();
  switch (requested) {
    case Backend::scalar:
      return {&scalar_ops(), Backend::scalar};
    case Backend::avx2:
      if (avx2_ok) return {avx2, Backend::avx2};
      return {nullptr, Backend::scalar};
    case Backend::automatic:
    default:
      if (avx2_ok) return {avx2, Backend::avx2};
      return {&scalar_ops(), Backend::scalar};
  }
}

Backend env_backend() {
  const char* env = std::getenv("CTCLASS_KERNELS");
  if (env == nullptr) return Backend::automatic;
  if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
  if (std::strcmp(env, "avx2") == 0) return Backend::avx2;
  return Backend::automatic;
}

State& state() {
  static State st = [] {
    State s = resolve(env_backend());
    if (s.ops == nullptr) s = resolve(Backend::automatic);
    return s;
  }();
  return st;
}

}  // namespace

const Ops& active() { return *state().ops; }

Backend selected() { return state().backend; }

bool select(Backend backend) {
  State s = resolve(backend);
  if (s.ops == nullptr) return false;
  state() = s;
  return true;
}

const Ops* avx2_ops() {
  const Ops* avx2 = avx2_ops_table();
  return (avx2 != nullptr && cpu_has_avx2()) ? avx2 : nullptr;
}

}  // namespace ctclass::kernels
