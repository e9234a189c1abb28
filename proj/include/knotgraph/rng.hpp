#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace knotgraph {

/// SplitMix64 finalizer; used to derive independent child seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Child seed for stream `stream` of `parent`. Every knot record gets the
/// stream `fnv1a64(name)`, and each shuffled version `k` of it the stream
/// `k` of the record seed.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream);

/// Seedable generator with platform-independent output. Built on
/// std::mt19937_64 (whose output sequence the standard fixes) with
/// hand-rolled range reduction, since the standard distributions are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace knotgraph
