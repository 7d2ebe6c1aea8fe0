#include "ctclass/rng.hpp"

#include <numbers>

namespace ctclass {

std::uint64_t seed_combine(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = splitmix64(seed);
  for (unsigned char c : tag) {
    h = splitmix64(h ^ c);
  }
  return h;
}

std::uint64_t seed_combine(std::uint64_t seed, std::uint64_t a) {
  return splitmix64(splitmix64(seed) ^ a);
}

std::uint64_t seed_combine(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return seed_combine(seed_combine(seed, a), b);
}

Rng::Rng(std::uint64_t seed) {
  // expand the seed into four non-zero state words
  std::uint64_t s = seed;
  for (auto& w : state_) {
    s += 0x9e3779b97f4a7c15ULL;
    w = splitmix64(s);
  }
}

static inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
  // rejection sampling to stay unbiased
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

}  // namespace ctclass
