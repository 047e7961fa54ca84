// Counter-based randomness. Every random decision is a pure function of the
// root seed, a per-component stream tag, and the indices naming the
// decision, so any stage can be replayed in isolation.

#ifndef HOPSET_RANDOM_HPP
#define HOPSET_RANDOM_HPP

#include <cstdint>
#include <initializer_list>

namespace hopset {

enum class Stream : std::uint64_t {
  kHierarchyVertex = 1,
  kHierarchyPath = 2,
  kBackward = 3,
  kLargeBeta = 4,
  kFolklore = 5,
  kVerifySample = 6,
  kGenerator = 7,
  kSubBuild = 8,
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_counter(std::uint64_t seed, Stream stream,
                                     std::initializer_list<std::uint64_t> counters) {
  std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(stream)));
  for (std::uint64_t c : counters) h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
  return h;
}

// Uniform draw in [0, 1) with 53 bits of resolution.
constexpr double uniform01(std::uint64_t seed, Stream stream,
                           std::initializer_list<std::uint64_t> counters) {
  return static_cast<double>(hash_counter(seed, stream, counters) >> 11) * 0x1.0p-53;
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, Stream stream) {
  return hash_counter(seed, stream, {0});
}

// Sequential generator over the same hash, for graph generation and pair
// sampling where draws are naturally ordered.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, Stream stream) : seed_(seed), stream_(stream) {}

  std::uint64_t next() { return hash_counter(seed_, stream_, {counter_++}); }
  double next01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection (bound >= 1).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

 private:
  std::uint64_t seed_;
  Stream stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace hopset

#endif  // HOPSET_RANDOM_HPP
