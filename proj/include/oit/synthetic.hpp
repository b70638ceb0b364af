#pragma once

#include "oit/information.hpp"

#include <cstdint>
#include <random>
#include <set>

namespace oit {

/// Seeded draws built only on the raw mt19937_64 stream, so a seed yields the
/// same instance on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct SyntheticProfile {
  std::int64_t entities = 6;
  std::int64_t media = 4;
  std::int64_t tick_span = 5;
  /// Upper bound on reflections per state; 1 makes the relation functional.
  std::int64_t replication = 2;
  /// Chance of multi-entity states, multi-media reflections and reflections
  /// shared between states. 0 gives singleton entity sets and singleton
  /// preimages.
  double aggregation = 0.3;
};

struct SyntheticCase {
  Information info;
  /// Random nonempty subset of `info`'s links.
  std::set<Link> sub_links;
};

/// Throws Error("degenerate profile") on non-positive counts or an
/// aggregation probability outside [0, 1].
SyntheticCase generate_synthetic(std::uint64_t seed, const SyntheticProfile& profile = {});

/// Random nonempty subset of `links`, each kept with probability `keep`.
std::set<Link> random_link_subset(Rng& rng, const std::set<Link>& links, double keep = 0.5);

}  // namespace oit
