// Seeded pseudorandom stream for sampling sweeps.
//
// splitmix64 with the standard constants (Steele/Lea/Flood); fixed here so a
// given --seed reproduces the same draws, and hence the same verdicts and
// witnesses, on any platform. Indices are drawn as next() mod n.

#pragma once

#include <cstdint>
#include <string_view>

namespace nilvar {

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
  std::uint64_t state_;
};

// FNV-1a, for deriving per-(group, check) substreams from one seed.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace nilvar
