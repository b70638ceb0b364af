#include "oit/semantics.hpp"

#include <algorithm>

namespace oit {

std::set<RecordKey> decode(const Information& info, const SemanticMapping& mapping) {
  std::set<RecordKey> out;
  if (mapping.kind == SemanticMapping::Kind::Preimage) {
    for (const auto& [id, r] : info.reflections()) {
      for (const auto& s : info.sources_of(id)) out.insert(info.state(s).key());
    }
    return out;
  }
  for (const auto& [id, r] : info.reflections()) {
    auto it = mapping.table.find(r.key());
    if (it == mapping.table.end()) {
      throw Error("partial decoder", "partial decoder: no entry for reflection '" + id + "' " + r.key().describe());
    }
    out.insert(it->second);
  }
  return out;
}

std::string to_string(DistanceKind kind) { return kind == DistanceKind::Jaccard ? "jaccard" : "numeric-l1"; }

namespace {

Rational value_distance(const Value& a, const Value& b) {
  auto x = a.as_number();
  auto y = b.as_number();
  if (x && y) {
    Rational diff = *x > *y ? Rational(*x - *y) : Rational(*y - *x);
    return diff < 1 ? diff : Rational(1);
  }
  return a == b ? Rational(0) : Rational(1);
}

Rational hausdorff(const std::vector<Value>& a, const std::vector<Value>& b) {
  auto directed = [](const std::vector<Value>& from, const std::vector<Value>& to) {
    Rational worst = 0;
    for (const auto& x : from) {
      Rational nearest = 1;
      for (const auto& y : to) nearest = std::min(nearest, value_distance(x, y));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

Rational numeric_l1(const std::set<RecordKey>& a, const std::set<RecordKey>& b) {
  using Key = std::pair<TokenSet, Tick>;
  std::map<Key, std::vector<Value>> left;
  std::map<Key, std::vector<Value>> right;
  for (const auto& k : a) left[{k.tokens, k.tick}].push_back(k.value);
  for (const auto& k : b) right[{k.tokens, k.tick}].push_back(k.value);

  std::set<Key> keys;
  for (const auto& [k, v] : left) keys.insert(k);
  for (const auto& [k, v] : right) keys.insert(k);
  if (keys.empty()) return 0;

  Rational total = 0;
  for (const auto& k : keys) {
    auto l = left.find(k);
    auto r = right.find(k);
    total += (l != left.end() && r != right.end()) ? hausdorff(l->second, r->second) : Rational(1);
  }
  return total / Rational(keys.size());
}

}  // namespace

Rational record_distance(const std::set<RecordKey>& a, const std::set<RecordKey>& b, DistanceKind kind) {
  return kind == DistanceKind::Jaccard ? jaccard_distance(a, b) : numeric_l1(a, b);
}

Rational validity(const Information& info, const SemanticMapping& mapping, DistanceKind distance) {
  return record_distance(info.state_keys(), decode(info, mapping), distance);
}

TargetSextuple TargetSextuple::from(const Information& info) {
  return {info.ontology(),         info.occurrence_ticks(), info.state_keys(), info.carrier(),
          info.reflection_ticks(), info.reflection_keys(),  info.keyed_links()};
}

void TargetSextuple::check() const {
  std::vector<Diagnostic> out;
  if (ontology.empty()) out.push_back({"nonvoid", "target ontology is empty", {}, ""});
  if (occurrence_ticks.empty()) out.push_back({"nonvoid", "target occurrence ticks are empty", {}, ""});
  if (states.empty()) out.push_back({"nonvoid", "target state set is empty", {}, ""});
  if (carrier.empty()) out.push_back({"nonvoid", "target carrier is empty", {}, ""});
  if (reflection_ticks.empty()) out.push_back({"nonvoid", "target reflection ticks are empty", {}, ""});
  if (reflections.empty()) out.push_back({"nonvoid", "target reflection set is empty", {}, ""});
  if (!out.empty()) throw ValidationError(std::move(out));
}

SuitabilityWeights equal_suitability_weights() {
  SuitabilityWeights w;
  w.fill(Rational(1, 6));
  return w;
}

std::array<Rational, 6> suitability_components(const Information& info, const TargetSextuple& target,
                                               DistanceKind distance) {
  target.check();
  return {jaccard_distance(info.ontology(), target.ontology),
          jaccard_distance(info.occurrence_ticks(), target.occurrence_ticks),
          record_distance(info.state_keys(), target.states, distance),
          jaccard_distance(info.carrier(), target.carrier),
          jaccard_distance(info.reflection_ticks(), target.reflection_ticks),
          record_distance(info.reflection_keys(), target.reflections, distance)};
}

Rational suitability(const Information& info, const TargetSextuple& target, const SuitabilityWeights& weights,
                     DistanceKind distance) {
  Rational sum = 0;
  for (const auto& w : weights) {
    if (w < 0) throw Error("weights not normalized", "suitability weights must be nonnegative");
    sum += w;
  }
  if (sum != 1) {
    throw Error("weights not normalized", "suitability weights sum to " + format_rational(sum) + ", not 1");
  }
  const auto d = suitability_components(info, target, distance);
  Rational total = 0;
  for (std::size_t k = 0; k < d.size(); ++k) total += weights[k] * d[k];
  return total;
}

}  // namespace oit
