#include "oit/algebra.hpp"

#include <algorithm>
#include <map>

namespace oit {

namespace {

template <class T>
bool subset_of(const std::set<T>& a, const std::set<T>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

}  // namespace

SubInformation is_sub_information(const Information& candidate, const Information& parent) {
  SubInformation result;
  if (!subset_of(candidate.keyed_links(), parent.keyed_links())) return result;

  const auto cs = candidate.state_keys();
  const auto ps = parent.state_keys();
  const auto cr = candidate.reflection_keys();
  const auto pr = parent.reflection_keys();
  // Implied by link containment and closure; kept explicit for clarity.
  result.is_sub = subset_of(candidate.ontology(), parent.ontology()) &&
                  subset_of(candidate.occurrence_ticks(), parent.occurrence_ticks()) &&
                  subset_of(cs, ps) && subset_of(candidate.carrier(), parent.carrier()) &&
                  subset_of(candidate.reflection_ticks(), parent.reflection_ticks()) && subset_of(cr, pr);
  result.proper = result.is_sub &&
                  (candidate.ontology() != parent.ontology() ||
                   candidate.occurrence_ticks() != parent.occurrence_ticks() || cs.size() != ps.size() ||
                   candidate.carrier() != parent.carrier() ||
                   candidate.reflection_ticks() != parent.reflection_ticks() || cr.size() != pr.size());
  return result;
}

Information restrict(const Information& parent, const LinkSelector& select) {
  std::vector<Link> chosen;
  std::set<RecordId> state_ids;
  std::set<RecordId> reflection_ids;
  for (const auto& l : parent.links()) {
    if (select(parent.state(l.state), parent.reflection(l.reflection))) {
      chosen.push_back(l);
      state_ids.insert(l.state);
      reflection_ids.insert(l.reflection);
    }
  }
  if (chosen.empty()) throw Error("empty sub-information", "empty sub-information: no link was selected");

  std::vector<StateRecord> states;
  for (const auto& id : state_ids) states.push_back(parent.state(id));
  std::vector<ReflectionRecord> reflections;
  for (const auto& id : reflection_ids) reflections.push_back(parent.reflection(id));
  return Information::from_parts(std::move(states), std::move(reflections), std::move(chosen));
}

Information restrict_to_links(const Information& parent, const std::set<Link>& links) {
  for (const auto& l : links) {
    if (!parent.links().contains(l)) {
      throw Error("unknown link", "link (" + l.state + ", " + l.reflection + ") is not in the parent");
    }
  }
  return restrict(parent, [&links](const StateRecord& s, const ReflectionRecord& r) {
    return links.contains(Link{s.id, r.id});
  });
}

namespace select {

LinkSelector from_states(std::set<RecordId> state_ids) {
  return [ids = std::move(state_ids)](const StateRecord& s, const ReflectionRecord&) {
    return ids.contains(s.id);
  };
}

LinkSelector occurrence_tick_at_most(Tick tick) {
  return [tick](const StateRecord& s, const ReflectionRecord&) { return s.tick <= tick; };
}

LinkSelector on_media(TokenSet media) {
  return [media = std::move(media)](const StateRecord&, const ReflectionRecord& r) {
    return std::any_of(r.media.begin(), r.media.end(), [&](const auto& m) { return media.contains(m); });
  };
}

}  // namespace select

namespace {

// Merges `incoming` records into `merged`, returning the id each incoming
// record ends up with.
template <class Record>
std::map<RecordId, RecordId> merge_records(std::map<RecordId, Record>& merged,
                                           const std::map<RecordId, Record>& incoming) {
  std::map<RecordKey, RecordId> by_key;
  for (const auto& [id, rec] : merged) by_key.emplace(rec.key(), id);

  std::map<RecordId, RecordId> renamed;
  for (const auto& [id, rec] : incoming) {
    const auto key = rec.key();
    if (auto it = by_key.find(key); it != by_key.end()) {
      renamed.emplace(id, it->second);
      continue;
    }
    if (auto clash = merged.find(id); clash != merged.end()) {
      throw Error("record identity clash", "record identity clash: id '" + id + "' names both " +
                                               clash->second.key().describe() + " and " + key.describe());
    }
    merged.emplace(id, rec);
    by_key.emplace(key, id);
    renamed.emplace(id, id);
  }
  return renamed;
}

}  // namespace

Information combine(const Information& a, const Information& b, CombineMode mode) {
  std::map<RecordId, StateRecord> states = a.states();
  std::map<RecordId, ReflectionRecord> reflections = a.reflections();
  // An id of b reused by a for a different triple is a clash even if b's
  // record itself gets merged under another id.
  for (const auto& [id, rec] : b.states()) {
    if (auto it = states.find(id); it != states.end() && !(it->second.key() == rec.key())) {
      throw Error("record identity clash", "record identity clash: state id '" + id + "' differs between operands");
    }
  }
  for (const auto& [id, rec] : b.reflections()) {
    if (auto it = reflections.find(id); it != reflections.end() && !(it->second.key() == rec.key())) {
      throw Error("record identity clash",
                  "record identity clash: reflection id '" + id + "' differs between operands");
    }
  }
  const auto state_ids = merge_records(states, b.states());
  const auto reflection_ids = merge_records(reflections, b.reflections());

  std::set<Link> b_links;
  for (const auto& l : b.links()) b_links.insert({state_ids.at(l.state), reflection_ids.at(l.reflection)});
  std::set<Link> links = a.links();
  links.insert(b_links.begin(), b_links.end());

  if (mode == CombineMode::Strict) {
    auto targets_in = [](const std::set<Link>& ls, const RecordId& s) {
      std::set<RecordId> out;
      for (const auto& l : ls) {
        if (l.state == s) out.insert(l.reflection);
      }
      return out;
    };
    std::vector<std::string> inconsistent;
    for (const auto& [id, rec] : states) {
      const auto merged = targets_in(links, id);
      if (merged != targets_in(a.links(), id) && merged != targets_in(b_links, id)) inconsistent.push_back(id);
    }
    if (!inconsistent.empty()) {
      throw Error("inconsistent overlap", "inconsistent overlap at " + join(inconsistent));
    }
  }

  std::vector<StateRecord> state_list;
  for (auto& [id, rec] : states) state_list.push_back(rec);
  std::vector<ReflectionRecord> reflection_list;
  for (auto& [id, rec] : reflections) reflection_list.push_back(rec);
  return Information::from_parts(std::move(state_list), std::move(reflection_list),
                                 std::vector<Link>(links.begin(), links.end()));
}

Information compose(const Information& first, const Information& second) {
  std::map<RecordKey, RecordId> relay_states;
  for (const auto& [id, s] : second.states()) relay_states.emplace(s.key(), id);

  std::map<RecordId, RecordId> matched;  // first reflection id -> second state id
  std::vector<std::string> unmatched;
  for (const auto& [id, r] : first.reflections()) {
    auto it = relay_states.find(r.key());
    if (it == relay_states.end()) {
      unmatched.push_back("reflection " + id + " of first");
      continue;
    }
    matched.emplace(id, it->second);
    relay_states.erase(it);
  }
  for (const auto& [key, id] : relay_states) unmatched.push_back("state " + id + " of second");
  if (!unmatched.empty()) {
    throw Error("composition interface mismatch", "composition interface mismatch: unmatched " + join(unmatched));
  }

  std::set<Link> links;
  for (const auto& l : first.links()) {
    for (const auto& target : second.targets_of(matched.at(l.reflection))) links.insert({l.state, target});
  }
  std::vector<StateRecord> states;
  for (const auto& [id, s] : first.states()) states.push_back(s);
  std::vector<ReflectionRecord> reflections;
  for (const auto& [id, r] : second.reflections()) reflections.push_back(r);
  return Information::from_parts(std::move(states), std::move(reflections),
                                 std::vector<Link>(links.begin(), links.end()));
}

std::vector<Atom> atoms(const Information& info) {
  std::vector<Atom> out;
  out.reserve(info.links().size());
  for (const auto& l : info.links()) out.push_back({l, restrict_to_links(info, {l})});
  return out;
}

std::set<RecordId> preimage(const Information& info, const std::set<RecordId>& reflection_ids) {
  std::set<RecordId> out;
  for (const auto& id : reflection_ids) {
    const auto& sources = info.sources_of(id);
    out.insert(sources.begin(), sources.end());
  }
  return out;
}

std::set<RecordId> image(const Information& info, const std::set<RecordId>& state_ids) {
  std::set<RecordId> out;
  for (const auto& id : state_ids) {
    const auto& targets = info.targets_of(id);
    out.insert(targets.begin(), targets.end());
  }
  return out;
}

ReducibilityReport reducibility(const Information& info) {
  ReducibilityReport report;
  for (const auto& [id, s] : info.states()) {
    if (info.targets_of(id).size() != 1) report.multi_target_states.push_back(id);
  }
  for (const auto& [id, r] : info.reflections()) {
    if (info.sources_of(id).size() != 1) report.multi_source_reflections.push_back(id);
  }
  report.functional = report.multi_target_states.empty();
  report.injective = report.multi_source_reflections.empty();
  report.reducible = report.functional && report.injective;
  return report;
}

}  // namespace oit
