#include "oit/information.hpp"

#include <algorithm>

namespace oit {

namespace {

std::string index_path(const char* section, std::size_t i) {
  return std::string("/") + section + "/" + std::to_string(i);
}

// Flags ids used twice within one record class.
template <class Record>
void check_record_ids(const std::vector<Record>& records, const char* section, const char* noun,
                      std::vector<Diagnostic>& out) {
  std::map<RecordId, std::size_t> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& id = records[i].id;
    if (id.empty()) {
      out.push_back({"empty-record-id", std::string(noun) + " record without id", {}, index_path(section, i)});
      continue;
    }
    auto [it, inserted] = seen.emplace(id, i);
    if (!inserted) {
      out.push_back({"record identity clash",
                     std::string(noun) + " record id '" + id + "' is declared more than once",
                     {id},
                     index_path(section, i) + "/id"});
    }
  }
}

template <class Record>
void check_record_keys(const std::vector<Record>& records, const char* section, const char* noun,
                       std::vector<Diagnostic>& out) {
  std::map<RecordKey, RecordId> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto key = records[i].key();
    auto [it, inserted] = seen.emplace(key, records[i].id);
    if (!inserted && it->second != records[i].id) {
      out.push_back({"duplicate-record-triple",
                     std::string(noun) + " records '" + it->second + "' and '" + records[i].id +
                         "' share the triple " + key.describe(),
                     {it->second, records[i].id},
                     index_path(section, i)});
    }
  }
}

void check_closure(const std::vector<std::string>& declared, const TokenSet& used,
                   const char* section, const char* noun, std::vector<Diagnostic>& out) {
  TokenSet declared_set;
  for (std::size_t i = 0; i < declared.size(); ++i) {
    if (!declared_set.insert(declared[i]).second) {
      out.push_back({"duplicate-token", std::string(noun) + " '" + declared[i] + "' declared twice",
                     {declared[i]}, index_path(section, i)});
    }
  }
  for (const auto& token : used) {
    if (!declared_set.contains(token)) {
      out.push_back({"closure", std::string(noun) + " '" + token + "' is used by a record but not declared",
                     {token}, std::string("/") + section});
    }
  }
  for (const auto& token : declared_set) {
    if (!used.contains(token)) {
      out.push_back({"closure", std::string(noun) + " '" + token + "' is declared but no record uses it",
                     {token}, std::string("/") + section});
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const RawSextuple& c) {
  std::vector<Diagnostic> out;

  if (c.entities.empty()) out.push_back({"nonvoid", "ontology is empty", {}, "/entities"});
  if (c.media.empty()) out.push_back({"nonvoid", "carrier is empty", {}, "/media"});
  if (c.states.empty()) out.push_back({"nonvoid", "state set is empty", {}, "/state_records"});
  if (c.reflections.empty()) out.push_back({"nonvoid", "reflection set is empty", {}, "/reflection_records"});
  if (c.links.empty()) out.push_back({"nonvoid", "link relation is empty", {}, "/links"});

  check_record_ids(c.states, "state_records", "state", out);
  check_record_ids(c.reflections, "reflection_records", "reflection", out);

  TokenSet used_entities;
  for (std::size_t i = 0; i < c.states.size(); ++i) {
    const auto& s = c.states[i];
    if (s.entities.empty()) {
      out.push_back({"empty-token-set", "state record '" + s.id + "' has no entities", {s.id},
                     index_path("state_records", i) + "/entities"});
    }
    used_entities.insert(s.entities.begin(), s.entities.end());
  }
  TokenSet used_media;
  for (std::size_t i = 0; i < c.reflections.size(); ++i) {
    const auto& r = c.reflections[i];
    if (r.media.empty()) {
      out.push_back({"empty-token-set", "reflection record '" + r.id + "' has no media", {r.id},
                     index_path("reflection_records", i) + "/media"});
    }
    used_media.insert(r.media.begin(), r.media.end());
  }
  check_record_keys(c.states, "state_records", "state", out);
  check_record_keys(c.reflections, "reflection_records", "reflection", out);
  check_closure(c.entities, used_entities, "entities", "entity", out);
  check_closure(c.media, used_media, "media", "medium", out);

  std::set<RecordId> state_ids;
  for (const auto& s : c.states) state_ids.insert(s.id);
  std::set<RecordId> reflection_ids;
  for (const auto& r : c.reflections) reflection_ids.insert(r.id);

  std::set<Link> seen_links;
  std::set<RecordId> linked_states;
  std::set<RecordId> linked_reflections;
  for (std::size_t i = 0; i < c.links.size(); ++i) {
    const auto& l = c.links[i];
    if (!seen_links.insert(l).second) {
      out.push_back({"duplicate-link", "link (" + l.state + ", " + l.reflection + ") listed twice",
                     {l.state, l.reflection}, index_path("links", i)});
    }
    if (!state_ids.contains(l.state)) {
      out.push_back({"dangling link source", "link source '" + l.state + "' is not a declared state record",
                     {l.state}, index_path("links", i) + "/from"});
    } else {
      linked_states.insert(l.state);
    }
    if (!reflection_ids.contains(l.reflection)) {
      out.push_back({"dangling link target",
                     "link target '" + l.reflection + "' is not a declared reflection record",
                     {l.reflection}, index_path("links", i) + "/to"});
    } else {
      linked_reflections.insert(l.reflection);
    }
  }
  // Totality and surjectivity are only meaningful once there is a relation.
  if (!c.links.empty()) {
    for (std::size_t i = 0; i < c.states.size(); ++i) {
      if (!c.states[i].id.empty() && !linked_states.contains(c.states[i].id)) {
        out.push_back({"totality", "state record '" + c.states[i].id + "' has no outgoing link",
                       {c.states[i].id}, index_path("state_records", i)});
      }
    }
    for (std::size_t i = 0; i < c.reflections.size(); ++i) {
      if (!c.reflections[i].id.empty() && !linked_reflections.contains(c.reflections[i].id)) {
        out.push_back({"surjectivity",
                       "reflection record '" + c.reflections[i].id + "' has no incoming link",
                       {c.reflections[i].id}, index_path("reflection_records", i)});
      }
    }
  }
  return out;
}

Information Information::from_raw(const RawSextuple& candidate) {
  auto diagnostics = validate(candidate);
  if (!diagnostics.empty()) throw ValidationError(std::move(diagnostics));

  Information info;
  for (const auto& s : candidate.states) {
    info.states_.emplace(s.id, s);
    info.ontology_.insert(s.entities.begin(), s.entities.end());
    info.occurrence_ticks_.insert(s.tick);
  }
  for (const auto& r : candidate.reflections) {
    info.reflections_.emplace(r.id, r);
    info.carrier_.insert(r.media.begin(), r.media.end());
    info.reflection_ticks_.insert(r.tick);
  }
  for (const auto& l : candidate.links) {
    info.links_.insert(l);
    info.forward_[l.state].insert(l.reflection);
    info.backward_[l.reflection].insert(l.state);
  }
  return info;
}

Information Information::from_parts(std::vector<StateRecord> states,
                                    std::vector<ReflectionRecord> reflections,
                                    std::vector<Link> links) {
  RawSextuple raw;
  TokenSet entities;
  for (const auto& s : states) entities.insert(s.entities.begin(), s.entities.end());
  TokenSet media;
  for (const auto& r : reflections) media.insert(r.media.begin(), r.media.end());
  raw.entities.assign(entities.begin(), entities.end());
  raw.media.assign(media.begin(), media.end());
  raw.states = std::move(states);
  raw.reflections = std::move(reflections);
  raw.links = std::move(links);
  return from_raw(raw);
}

std::set<RecordKey> Information::state_keys() const {
  std::set<RecordKey> out;
  for (const auto& [id, s] : states_) out.insert(s.key());
  return out;
}

std::set<RecordKey> Information::reflection_keys() const {
  std::set<RecordKey> out;
  for (const auto& [id, r] : reflections_) out.insert(r.key());
  return out;
}

std::set<std::pair<RecordKey, RecordKey>> Information::keyed_links() const {
  std::set<std::pair<RecordKey, RecordKey>> out;
  for (const auto& l : links_) out.emplace(state(l.state).key(), reflection(l.reflection).key());
  return out;
}

const StateRecord& Information::state(const RecordId& id) const {
  auto it = states_.find(id);
  if (it == states_.end()) throw Error("unknown record", "unknown state record '" + id + "'");
  return it->second;
}

const ReflectionRecord& Information::reflection(const RecordId& id) const {
  auto it = reflections_.find(id);
  if (it == reflections_.end()) throw Error("unknown record", "unknown reflection record '" + id + "'");
  return it->second;
}

const std::set<RecordId>& Information::targets_of(const RecordId& state_id) const {
  auto it = forward_.find(state_id);
  if (it == forward_.end()) throw Error("unknown record", "unknown state record '" + state_id + "'");
  return it->second;
}

const std::set<RecordId>& Information::sources_of(const RecordId& reflection_id) const {
  auto it = backward_.find(reflection_id);
  if (it == backward_.end()) {
    throw Error("unknown record", "unknown reflection record '" + reflection_id + "'");
  }
  return it->second;
}

RawSextuple Information::to_raw() const {
  RawSextuple raw;
  raw.entities.assign(ontology_.begin(), ontology_.end());
  raw.media.assign(carrier_.begin(), carrier_.end());
  for (const auto& [id, s] : states_) raw.states.push_back(s);
  for (const auto& [id, r] : reflections_) raw.reflections.push_back(r);
  raw.links.assign(links_.begin(), links_.end());
  return raw;
}

bool operator==(const Information& a, const Information& b) {
  if (a.links_ != b.links_) return false;
  if (a.states_.size() != b.states_.size() || a.reflections_.size() != b.reflections_.size()) return false;
  for (const auto& [id, s] : a.states_) {
    auto it = b.states_.find(id);
    if (it == b.states_.end() || !(it->second.key() == s.key())) return false;
  }
  for (const auto& [id, r] : a.reflections_) {
    auto it = b.reflections_.find(id);
    if (it == b.reflections_.end() || !(it->second.key() == r.key())) return false;
  }
  return true;
}

}  // namespace oit
