#ifndef GAMMAFORGE_RNG_HPP
#define GAMMAFORGE_RNG_HPP

#include <cstdint>

namespace gammaforge {

// Default seed for every sampling suite; override per call or via the CLI.
inline constexpr std::uint64_t kDefaultSeed = 0xD151DED;

// splitmix64. Hand-rolled so that sampled test cases are byte-identical
// across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, bound); bound > 0. Modulo bias is irrelevant at the
  // tiny bounds used here, determinism is what matters.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Inclusive range.
  std::int64_t intIn(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

private:
  std::uint64_t state_;
};

// Derive an independent stream from a base seed (per axiom, per sample, ...).
inline std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream) {
  Rng r(seed ^ (0x632be59bd9b4e019ULL + stream * 0x9e3779b97f4a7c15ULL));
  return r.next();
}

}  // namespace gammaforge

#endif
