#pragma once

#include <cstdint>

namespace tailsmith {

// Counter-based splittable randomness built on the splitmix64 finalizer.
//
// A draw is a pure function of (key, counter): the k-th output of a stream
// with key K is mix64(K + (k+1)*kGoldenGamma).  Substreams are derived with
// derive_key, so the i-th Monte Carlo trial of stream `s` under master seed
// `seed` reads from key derive_key(derive_key(seed, s), i).  Partitioning the
// trial index range across workers therefore cannot change any draw.
inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_key(std::uint64_t key, std::uint64_t index) {
  return mix64(key + kGoldenGamma * (index + 1));
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // uniform in [0, 1), 53 random bits
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace tailsmith
