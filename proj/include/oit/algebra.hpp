#pragma once

#include "oit/information.hpp"

#include <functional>
#include <set>
#include <vector>

namespace oit {

struct SubInformation {
  bool is_sub = false;
  /// At least one of the six component containments is strict.
  bool proper = false;
};

/// Link containment by identity triples plus the six component containments.
/// Record ids need not agree between the two operands.
SubInformation is_sub_information(const Information& candidate, const Information& parent);

/// Selects links of a parent instance. Receives the link's two endpoints.
using LinkSelector = std::function<bool(const StateRecord&, const ReflectionRecord&)>;

/// Induced sub-information of the selected links. Record ids are preserved.
/// Throws Error("empty sub-information") when nothing is selected.
Information restrict(const Information& parent, const LinkSelector& select);

/// Throws Error("unknown link") if `links` is not a subset of the parent's links.
Information restrict_to_links(const Information& parent, const std::set<Link>& links);

namespace select {
LinkSelector from_states(std::set<RecordId> state_ids);
LinkSelector occurrence_tick_at_most(Tick tick);
/// Links whose reflection record lies on at least one of `media`.
LinkSelector on_media(TokenSet media);
}  // namespace select

enum class CombineMode { Strict, Lax };

/// Union of two informations. Records with equal identity triples are merged
/// (the first operand's id wins). Strict mode additionally requires that each
/// state's links in the result equal its links in one operand alone.
///
/// Throws Error("record identity clash") when one id names different triples,
/// and Error("inconsistent overlap") in strict mode.
Information combine(const Information& a, const Information& b, CombineMode mode = CombineMode::Strict);

/// Relays `first` through `second`: second's states must match first's
/// reflections one-to-one by identity triple. Throws
/// Error("composition interface mismatch") listing the unmatched records.
Information compose(const Information& first, const Information& second);

struct Atom {
  Link link;
  Information info;
};

/// One atom per link, in link order.
std::vector<Atom> atoms(const Information& info);

/// State ids linked to any of `reflection_ids`. Throws on unknown ids.
std::set<RecordId> preimage(const Information& info, const std::set<RecordId>& reflection_ids);

/// Reflection ids linked from any of `state_ids`. Throws on unknown ids.
std::set<RecordId> image(const Information& info, const std::set<RecordId>& state_ids);

struct ReducibilityReport {
  bool functional = false;  // every state has exactly one reflection
  bool injective = false;   // every reflection has exactly one state
  bool reducible = false;   // both, i.e. preimage recovers each state exactly
  std::vector<RecordId> multi_target_states;
  std::vector<RecordId> multi_source_reflections;
};

ReducibilityReport reducibility(const Information& info);

}  // namespace oit
