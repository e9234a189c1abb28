#include "knotgraph/rng.hpp"

#include "knotgraph/error.hpp"

namespace knotgraph {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) {
  return splitmix64(splitmix64(parent) ^ splitmix64(stream ^ 0x6a09e667f3bcc909ULL));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw KnotError("Rng::below: empty range");
  // Reject the low 2^64 mod n values so the remainder is unbiased.
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x < threshold);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw KnotError("Rng::between: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<std::int64_t>(span == 0 ? next() : below(span));
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

}  // namespace knotgraph
