#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ctclass {

// splitmix64 finalizer; also the basis for seed derivation.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent sub-seed from a base seed and a tag.
// Adding a class or changing an epoch never perturbs sibling streams.
std::uint64_t seed_combine(std::uint64_t seed, std::string_view tag);
std::uint64_t seed_combine(std::uint64_t seed, std::uint64_t a);
std::uint64_t seed_combine(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

// xoshiro256++ -- fixed algorithm so streams are identical on every
// platform and standard library (std:: distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  std::uint64_t next_u64();

  // uniform in [0, 1)
  double uniform();
  // uniform in [lo, hi)
  double uniform(double lo, double hi);
  // uniform integer in [0, n), n >= 1
  std::uint64_t uniform_int(std::uint64_t n);
  // standard normal via Box-Muller
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }
  bool bernoulli(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_[4];
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ctclass
