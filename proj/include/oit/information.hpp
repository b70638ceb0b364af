#pragma once

#include "oit/error.hpp"
#include "oit/value.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oit {

/// Valued observation of a set of entities at one occurrence tick.
struct StateRecord {
  RecordId id;
  TokenSet entities;
  Tick tick = 0;
  Value value;

  RecordKey key() const { return {entities, tick, value}; }
};

/// Valued record held by a set of media at one reflection tick.
struct ReflectionRecord {
  RecordId id;
  TokenSet media;
  Tick tick = 0;
  Value value;

  RecordKey key() const { return {media, tick, value}; }
};

/// One element of the state-to-reflection relation.
struct Link {
  RecordId state;
  RecordId reflection;

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

/// Unchecked sextuple description, typically straight out of a document.
/// Declared token lists are kept so closure violations can be reported.
struct RawSextuple {
  std::vector<EntityId> entities;
  std::vector<MediumId> media;
  std::vector<StateRecord> states;
  std::vector<ReflectionRecord> reflections;
  std::vector<Link> links;
};

/// Checks every Information invariant. An empty result means the candidate
/// is valid. Diagnostic paths use the document layout
/// (`/state_records/2`, `/links/0/from`, ...).
std::vector<Diagnostic> validate(const RawSextuple& candidate);

/// A validated, canonically closed sextuple together with its link relation.
///
/// Instances are immutable. The ontology, occurrence ticks, carrier and
/// reflection ticks are always the unions induced by the records, and the
/// relation is total on states and surjective onto reflections.
class Information {
 public:
  /// Throws ValidationError carrying every diagnostic.
  static Information from_raw(const RawSextuple& candidate);

  /// Builds from records and links; declared token sets are taken to be the
  /// induced ones, so only record, link, totality and surjectivity checks
  /// can fail.
  static Information from_parts(std::vector<StateRecord> states,
                                std::vector<ReflectionRecord> reflections,
                                std::vector<Link> links);

  const std::map<RecordId, StateRecord>& states() const noexcept { return states_; }
  const std::map<RecordId, ReflectionRecord>& reflections() const noexcept { return reflections_; }
  const std::set<Link>& links() const noexcept { return links_; }

  const TokenSet& ontology() const noexcept { return ontology_; }
  const std::set<Tick>& occurrence_ticks() const noexcept { return occurrence_ticks_; }
  const TokenSet& carrier() const noexcept { return carrier_; }
  const std::set<Tick>& reflection_ticks() const noexcept { return reflection_ticks_; }

  std::set<RecordKey> state_keys() const;
  std::set<RecordKey> reflection_keys() const;

  /// Links expressed as identity-triple pairs, independent of record ids.
  std::set<std::pair<RecordKey, RecordKey>> keyed_links() const;

  const StateRecord& state(const RecordId& id) const;
  const ReflectionRecord& reflection(const RecordId& id) const;

  /// Reflection ids linked from `state_id`, and state ids linked to `reflection_id`.
  const std::set<RecordId>& targets_of(const RecordId& state_id) const;
  const std::set<RecordId>& sources_of(const RecordId& reflection_id) const;

  RawSextuple to_raw() const;

  /// Structural equality: same records (by id and content) and same links.
  friend bool operator==(const Information& a, const Information& b);

 private:
  Information() = default;

  std::map<RecordId, StateRecord> states_;
  std::map<RecordId, ReflectionRecord> reflections_;
  std::set<Link> links_;
  TokenSet ontology_;
  std::set<Tick> occurrence_ticks_;
  TokenSet carrier_;
  std::set<Tick> reflection_ticks_;
  std::map<RecordId, std::set<RecordId>> forward_;
  std::map<RecordId, std::set<RecordId>> backward_;
};

}  // namespace oit
