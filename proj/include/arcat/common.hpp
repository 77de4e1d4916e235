#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arcat {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Error taxonomy, mirrored by the CLI exit codes:
//   ParseError      -> 2   malformed input
//   HypothesisError -> 3   a stated precondition does not hold for this input
//   InternalError   -> 4   a construction failed its own verification (bug signal)
struct ArcatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : ArcatError {
  using ArcatError::ArcatError;
};
struct HypothesisError : ArcatError {
  using ArcatError::ArcatError;
};
struct InternalError : ArcatError {
  using ArcatError::ArcatError;
};
// Enumeration ran past the dimension cap; usually means infinite representation type.
struct CapExceeded : ArcatError {
  using ArcatError::ArcatError;
};

[[noreturn]] inline void fail_internal(const std::string& msg) { throw InternalError(msg); }
[[noreturn]] inline void fail_hypothesis(const std::string& msg) { throw HypothesisError(msg); }

// Internal consistency checks stay on: everything here is desk scale and the
// whole point of the tool is that constructed objects verify themselves.
#define ARCAT_CHECK(cond, msg)                                                  \
  do {                                                                          \
    if (!(cond)) ::arcat::fail_internal(std::string("check failed: ") + (msg)); \
  } while (0)

#define ARCAT_REQUIRE(cond, msg)                                                  \
  do {                                                                            \
    if (!(cond)) ::arcat::fail_hypothesis(std::string("requires: ") + (msg));     \
  } while (0)

// Tiny deterministic PRNG (splitmix64) for the randomized iso/indecomposability
// fallbacks; seeded explicitly so identical runs stay byte-identical.
struct Rng {
  u64 state;
  explicit Rng(u64 seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  u32 below(u32 n) { return n ? static_cast<u32>(next() % n) : 0; }
};

}  // namespace arcat
