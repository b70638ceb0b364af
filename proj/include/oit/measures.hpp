#pragma once

#include "oit/information.hpp"

#include <map>
#include <string>

namespace oit {

enum class Universe { Entities, Ticks, StateRecords, Media };
enum class MeasureKind { Counting, Weighted };

std::string to_string(Universe u);
std::string to_string(MeasureKind k);

/// Finite counting or weighted measure over one universe.
///
/// Elements are addressed by token: entity and media tokens, state record
/// ids, and decimal tick strings ("3", "-1"). A weighted measure must carry
/// a nonnegative weight for every element it is asked to measure.
class MeasureSpec {
 public:
  static MeasureSpec counting(Universe universe);
  /// Throws Error("negative weight").
  static MeasureSpec weighted(Universe universe, std::map<std::string, Rational> weights);

  Universe universe() const noexcept { return universe_; }
  MeasureKind kind() const noexcept { return kind_; }
  const std::map<std::string, Rational>& weights() const noexcept { return weights_; }

  /// Throws Error("uncovered element") when a weight entry is missing.
  Rational measure(const std::set<std::string>& elements) const;
  Rational measure(const std::set<Tick>& ticks) const;

  /// Short provenance string, e.g. "counting" or "weighted".
  std::string describe() const;

 private:
  MeasureSpec(Universe u, MeasureKind k, std::map<std::string, Rational> w)
      : universe_(u), kind_(k), weights_(std::move(w)) {}

  Universe universe_;
  MeasureKind kind_;
  std::map<std::string, Rational> weights_;
};

// All five take a measure over the universe named in the comment and throw
// Error("measure universe mismatch") otherwise.

Rational scope(const Information& info, const MeasureSpec& mu);            // entities
Rational granularity(const Information& info, const MeasureSpec& mu);      // entities
Rational sustainability(const Information& info, const MeasureSpec& tau);  // ticks
Rational richness(const Information& info, const MeasureSpec& rho);        // state records
Rational volume(const Information& info, const MeasureSpec& sigma);        // media

/// One computed metric with what is needed to reproduce it.
struct MetricReport {
  std::string name;
  Rational value;
  /// e.g. {"measure": "counting", "universe": "entities"} or {"mode": "replica"}.
  std::map<std::string, std::string> provenance;
  std::string instance_digest;
};

}  // namespace oit
