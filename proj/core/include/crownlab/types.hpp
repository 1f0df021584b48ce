#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crownlab {

// Vertices and colors are small nonnegative integers throughout.
using Vertex = int;
using Color = int;

// Internally, a solver instance maps colors to dense indices and stores
// color sets as bitmasks. 64 distinct colors per instance is far beyond
// any desk-scale run (the harness caps palettes at 8).
using ColorMask = std::uint64_t;

inline int popcount(ColorMask m) { return __builtin_popcountll(m); }
inline int lowest_bit(ColorMask m) { return __builtin_ctzll(m); }

enum class Errc {
  InvalidRotation,
  NonPlanarRotation,
  BadOuterFace,
  Disconnected,
  NotAChord,
  BadIntersection,
  ColorNotInList,
  ImproperColoring,
  HypothesisViolation,
  CapExceeded,
  BadPath,
  ParseError,
  UnknownFixture,
  UnknownTheorem,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// splitmix64: deterministic, platform-independent. All sampling goes
// through this; iostream/std::random distributions are never used.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, n); n is tiny here so modulo bias is
  // irrelevant and, crucially, the result is identical on every platform.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace crownlab
