#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace nishlab {

// splitmix64 finalizer; used to derive independent stream seeds from
// (master seed, stream index) pairs so that parallel scheduling can never
// change which variates a work item sees.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed + 0x632be59bd9b4e019ULL * (stream + 1));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(seed, a), b);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
  return derive_seed(derive_seed(seed, a, b), c);
}

// mt19937_64 core with hand-rolled transforms. std:: distributions are not
// bit-portable across standard libraries, which would break the seed
// reproducibility invariants, so the few transforms we need live here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // uniform integer in {0, ..., n-1}
  int uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= bound);
    return static_cast<int>(x % un);
  }

  // standard normal via Box-Muller (one variate per call, no cached partner)
  double normal() {
    const double u1 = 1.0 - uniform();  // in (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Exp(1): density e^{-x} on x >= 0
  double exponential() { return -std::log1p(-uniform()); }

  // Poisson by inversion of exponential gaps; exact for desk-scale means.
  int poisson(double mean) {
    if (mean < 0) throw std::invalid_argument("poisson: mean must be nonnegative");
    if (mean == 0) return 0;
    if (mean > 30.0) {
      const double half = mean / 2.0;
      return poisson(half) + poisson(mean - half);
    }
    const double limit = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    for (;;) {
      p *= uniform();
      if (p <= limit) break;
      ++k;
    }
    return k;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nishlab
