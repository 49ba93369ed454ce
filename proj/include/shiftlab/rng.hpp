#pragma once
// Deterministic stream RNG: xoshiro256++ with state derived from
// (master_seed, stream_id) through splitmix64.  A stream is addressable
// without generating its predecessors, so parallel workers can draw
// schedule-independent randomness.  The generator and the Gaussian transform
// (Marsaglia polar) are fixed algorithms; results are reproducible across
// runs of this implementation.

#include <cmath>
#include <cstdint>

namespace shiftlab {

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  SeedSpec stream(std::uint64_t offset) const {
    return SeedSpec{master_seed, stream_id + offset};
  }
};

// Vigna's splitmix64 step; used only for state expansion.
inline std::uint64_t splitmix64_next(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(SeedSpec seed) {
    std::uint64_t a = seed.master_seed;
    std::uint64_t b = seed.stream_id;
    // Mix both words before expansion so that nearby ids decorrelate.
    std::uint64_t st = splitmix64_next(a) ^ (splitmix64_next(b) + 0x9e3779b97f4a7c15ULL);
    for (auto& w : s_) w = splitmix64_next(st);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // xoshiro forbids the zero state
  }

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

  // Uniform on [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via the polar method; the rejection loop terminates with
  // probability 1 and the draw order is fixed.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  static constexpr const char* kAlgorithm = "xoshiro256++";
  static constexpr const char* kSeeding = "splitmix64(master_seed, stream_id)";
  static constexpr const char* kGaussian = "marsaglia-polar";

 private:
  static constexpr std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace shiftlab
