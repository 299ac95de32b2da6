#ifndef RHYDRO_RNG_HPP
#define RHYDRO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace rhydro {

// splitmix64 scrambler; used both to condition user seeds and to derive
// independent per-replica streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derived seed for replica `index` of a run seeded with `seed`. Distinct
// indices give decorrelated streams, so replicas can run on any worker.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0xA0761D6478BD642Full * (index + 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

// Random draws used across the simulator. Wraps mt19937_64 with exact
// samplers so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    // condition trivial seeds (0, 1, ...) before feeding the engine
    std::seed_seq seq{splitmix64(s), splitmix64(s), splitmix64(s), splitmix64(s)};
    engine_.seed(seq);
  }

  // uniform on [0,1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // uniform on (0,1], safe for log()
  double uniform_pos() {
    return 1.0 - uniform();
  }

  double exponential() { return -std::log(uniform_pos()); }

  bool bernoulli(double p) { return uniform() < p; }

  double normal() {
    // Box-Muller; one value per call, no cached state (keeps replay trivial)
    double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    double a = 6.283185307179586476925286766559 * uniform();
    return r * std::cos(a);
  }

  // Exact Poisson sampler for any mean >= 0: multiplication method for
  // small means, Hormann's PTRS transformed rejection for large ones.
  // No normal approximation anywhere.
  std::int64_t poisson(double mean);

  std::uint64_t raw() { return engine_(); }

 private:
  std::int64_t poisson_small(double mean);
  std::int64_t poisson_ptrs(double mean);

  std::mt19937_64 engine_;
};

inline std::int64_t Rng::poisson_small(double mean) {
  // inversion by multiplication of uniforms
  const double limit = std::exp(-mean);
  double prod = 1.0;
  std::int64_t n = -1;
  do {
    prod *= uniform_pos();
    ++n;
  } while (prod > limit);
  return n;
}

inline std::int64_t Rng::poisson_ptrs(double mean) {
  // W. Hormann, "The transformed rejection method for generating Poisson
  // random variables", mean >= 10.
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = uniform() - 0.5;
    const double v = uniform_pos();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * loglam - mean - std::lgamma(k + 1.0)) {
      return static_cast<std::int64_t>(k);
    }
  }
}

inline std::int64_t Rng::poisson(double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 10.0) return poisson_small(mean);
  return poisson_ptrs(mean);
}

}  // namespace rhydro

#endif
