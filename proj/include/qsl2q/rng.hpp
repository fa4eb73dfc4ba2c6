#ifndef QSL2Q_RNG_HPP
#define QSL2Q_RNG_HPP

#include <complex>
#include <cmath>
#include <cstdint>

namespace qsl2q {

namespace detail {

// MurmurHash3 64-bit finalizer. Bijective; spreads adjacent stream indices
// across the whole state space.
inline std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

// splitmix64 step (Vigna). Used only for seeding the main generator.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic per-sample random stream: xoshiro256++ seeded from a
/// (seed, stream_index) pair via splitmix64. Identical pairs reproduce the
/// identical draw sequence on every run and worker layout; distinct stream
/// indices give statistically independent streams. All variate transforms
/// are implemented here rather than via <random> distributions so the byte
/// stream does not depend on the standard library version.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index)
      : seed_(seed), stream_index_(stream_index) {
    std::uint64_t init = seed ^ detail::fmix64(stream_index);
    for (auto& word : s_) word = detail::splitmix64(init);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard exponential via inversion.
  double exponential() { return -std::log1p(-uniform01()); }

  /// Complex Gaussian with independent N(0,1) real and imaginary parts
  /// (one Box-Muller pair per call).
  std::complex<double> complex_normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t s_[4];
};

}  // namespace qsl2q

#endif  // QSL2Q_RNG_HPP
