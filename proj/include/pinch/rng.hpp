#ifndef PINCH_RNG_HPP
#define PINCH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace pinch {

/// splitmix64: tiny, fast, fully reproducible across platforms. All seeded
/// sampling in the project goes through this so reports are byte-identical
/// for a fixed seed.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::vector<double> gaussian_vector(int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  /// Derive an independent stream; deterministic in (parent seed, tag).
  Rng fork(uint64_t tag) const {
    Rng r(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    r.next_u64();
    return r;
  }

private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Halton low-discrepancy sequence. Index prefixes are nested, so estimates
/// taken over "the first n points" are monotone in n by construction.
class Halton {
public:
  explicit Halton(int dim, uint64_t start_index = 1) : dim_(dim), index_(start_index) {}

  /// Next point, each coordinate in [0, 1).
  std::vector<double> next() {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<double> p(dim_);
    for (int d = 0; d < dim_; ++d) p[d] = radical_inverse(index_, primes[d % 8]);
    ++index_;
    return p;
  }

private:
  static double radical_inverse(uint64_t i, int base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
      f /= base;
      r += f * static_cast<double>(i % base);
      i /= base;
    }
    return r;
  }

  int dim_;
  uint64_t index_;
};

} // namespace pinch

#endif
