#pragma once

#include <cstdint>
#include <random>

namespace fishnets {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from (master, index). Used to split one
// experiment seed into per-dataset / per-edge seeds; the derivation is
// recorded in dataset metadata so any single dataset can be regenerated.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

inline Rng make_rng(std::uint64_t seed) {
  // mt19937_64 seeded with a single word has weakly-mixed early state;
  // run it through splitmix first.
  std::uint64_t s = seed;
  Rng rng(splitmix64(s));
  rng.discard(8);
  return rng;
}

inline double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

inline double normal(Rng& rng, double mean, double sd) {
  std::normal_distribution<double> d(mean, sd);
  return d(rng);
}

}  // namespace fishnets
