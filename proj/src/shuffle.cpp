#include <charconv>
#include <cmath>
#include <string>

#include "knotgraph/error.hpp"
#include "knotgraph/key_value.hpp"
#include "knotgraph/reidemeister.hpp"
#include "knotgraph/rng.hpp"

namespace knotgraph {
namespace {

std::string shortest(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::uint64_t parse_u64(std::string_view key, const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw KnotError(std::string(key) + ": not an unsigned 64-bit integer: '" + s + "'");
  }
  return v;
}

}  // namespace

void ShuffleConfig::validate() const {
  if (c < 1) throw KnotError("shuffle: complexity c must be >= 1");
  if (!(p_r1 >= 0.0 && p_r1 <= 1.0 && p_r2 >= 0.0 && p_r2 <= 1.0)) {
    throw KnotError("shuffle: move probabilities must lie in [0,1]");
  }
  if (std::abs(p_r1 + p_r2 - 1.0) > 1e-12) throw KnotError("shuffle: p_r1 + p_r2 must equal 1");
}

std::string ShuffleConfig::to_text() const {
  return "c=" + std::to_string(c) + "\np_r1=" + shortest(p_r1) + "\np_r2=" + shortest(p_r2) +
         "\nseed=" + std::to_string(seed) + "\n";
}

ShuffleConfig ShuffleConfig::from_text(std::string_view text) {
  const KeyValues kv = parse_key_values(text);
  for (const auto& [key, value] : kv) {
    if (key != "c" && key != "p_r1" && key != "p_r2" && key != "seed") {
      throw KnotError("shuffle config: unknown key '" + key + "'");
    }
  }
  ShuffleConfig cfg;
  cfg.c = static_cast<int>(kv_int(kv, "c", cfg.c));
  cfg.p_r1 = kv_double(kv, "p_r1", cfg.p_r1);
  cfg.p_r2 = kv_double(kv, "p_r2", 1.0 - cfg.p_r1);
  if (const auto it = kv.find("seed"); it != kv.end()) cfg.seed = parse_u64("seed", it->second);
  cfg.validate();
  return cfg;
}

Diagram shuffle(const Diagram& d, const ShuffleConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  Diagram current = d;

  const auto additive = [&] {
    MoveKind kind = rng.bernoulli(cfg.p_r1) ? MoveKind::R1Add : MoveKind::R2Add;
    std::size_t n = site_count(current, kind);
    if (n == 0) {
      kind = kind == MoveKind::R1Add ? MoveKind::R2Add : MoveKind::R1Add;
      n = site_count(current, kind);
    }
    current = apply(current, site_at(current, kind, rng.below(n)));
  };

  for (int k = 0; k < 2 * cfg.c; ++k) additive();
  for (int round = 0; round < cfg.c; ++round) {
    for (int k = 0; k < 5; ++k) additive();
    for (int k = 0; k < cfg.c / 20; ++k) {
      const std::size_t n = site_count(current, MoveKind::R3);
      if (n == 0) continue;
      current = apply(current, site_at(current, MoveKind::R3, rng.below(n)));
    }
  }
  return simplify(current).diagram;
}

}  // namespace knotgraph
