#pragma once

#include "oit/information.hpp"

#include <array>
#include <map>
#include <set>

namespace oit {

/// Decoder from reflection records back to claimed states.
///
/// `Preimage` decodes through the instance's own relation and is therefore
/// exact. `Table` maps reflection identity triples to claimed state triples,
/// so one table applies to every sub-information of the instance it was
/// written for.
struct SemanticMapping {
  enum class Kind { Preimage, Table };

  Kind kind = Kind::Preimage;
  std::map<RecordKey, RecordKey> table;

  static SemanticMapping preimage() { return {}; }
  static SemanticMapping from_table(std::map<RecordKey, RecordKey> entries) {
    return {Kind::Table, std::move(entries)};
  }
};

/// Claimed state triples for all of `info`'s reflections.
/// Throws Error("partial decoder") when a table lacks an entry.
std::set<RecordKey> decode(const Information& info, const SemanticMapping& mapping);

enum class DistanceKind {
  /// 1 - |A n B| / |A u B| over record triples; 0 for two empty sets.
  Jaccard,
  /// Records are grouped by (token-set, tick). Each key present on both sides
  /// costs the Hausdorff distance between its value sets under
  /// min(1, |x - y|) (non-numeric values: 0 if equal, else 1); a key present on
  /// one side costs 1. The sum is divided by the number of distinct keys.
  NumericL1,
};

std::string to_string(DistanceKind kind);

/// Both kinds are metrics with values in [0, 1].
Rational record_distance(const std::set<RecordKey>& a, const std::set<RecordKey>& b, DistanceKind kind);

template <class T>
Rational jaccard_distance(const std::set<T>& a, const std::set<T>& b) {
  std::size_t common = 0;
  for (const auto& x : a) common += b.contains(x) ? 1 : 0;
  const std::size_t all = a.size() + b.size() - common;
  if (all == 0) return 0;
  return Rational(1) - Rational(common) / Rational(all);
}

/// Distance from the true state set to the decoded one. Lower is better;
/// 0 means the decoder recovers every state exactly.
Rational validity(const Information& info, const SemanticMapping& mapping, DistanceKind distance);

/// Demand-side sextuple that an information is compared against.
struct TargetSextuple {
  TokenSet ontology;
  std::set<Tick> occurrence_ticks;
  std::set<RecordKey> states;
  TokenSet carrier;
  std::set<Tick> reflection_ticks;
  std::set<RecordKey> reflections;
  std::set<std::pair<RecordKey, RecordKey>> links;

  static TargetSextuple from(const Information& info);

  /// Throws ValidationError when a component is empty.
  void check() const;
};

/// Component weights in sextuple order: ontology, occurrence ticks, states,
/// carrier, reflection ticks, reflections.
using SuitabilityWeights = std::array<Rational, 6>;

SuitabilityWeights equal_suitability_weights();

/// Weighted sum of per-component distances. Token and tick components use
/// Jaccard; the two record components use `distance`. Throws
/// Error("weights not normalized") unless the weights are nonnegative and sum
/// to exactly 1.
Rational suitability(const Information& info, const TargetSextuple& target, const SuitabilityWeights& weights,
                     DistanceKind distance = DistanceKind::Jaccard);

/// The six per-component distances, in the same order as the weights.
std::array<Rational, 6> suitability_components(const Information& info, const TargetSextuple& target,
                                               DistanceKind distance = DistanceKind::Jaccard);

}  // namespace oit
