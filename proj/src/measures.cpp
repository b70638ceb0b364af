#include "oit/measures.hpp"

namespace oit {

std::string to_string(Universe u) {
  switch (u) {
    case Universe::Entities: return "entities";
    case Universe::Ticks: return "ticks";
    case Universe::StateRecords: return "state_records";
    case Universe::Media: return "media";
  }
  return "?";
}

std::string to_string(MeasureKind k) { return k == MeasureKind::Counting ? "counting" : "weighted"; }

MeasureSpec MeasureSpec::counting(Universe universe) { return MeasureSpec(universe, MeasureKind::Counting, {}); }

MeasureSpec MeasureSpec::weighted(Universe universe, std::map<std::string, Rational> weights) {
  for (const auto& [token, w] : weights) {
    if (w < 0) {
      throw Error("negative weight", "weight of '" + token + "' in " + to_string(universe) + " is negative");
    }
  }
  return MeasureSpec(universe, MeasureKind::Weighted, std::move(weights));
}

Rational MeasureSpec::measure(const std::set<std::string>& elements) const {
  if (kind_ == MeasureKind::Counting) return Rational(elements.size());
  Rational total = 0;
  for (const auto& e : elements) {
    auto it = weights_.find(e);
    if (it == weights_.end()) {
      throw Error("uncovered element", "uncovered element '" + e + "' in " + to_string(universe_) + " measure");
    }
    total += it->second;
  }
  return total;
}

Rational MeasureSpec::measure(const std::set<Tick>& ticks) const {
  std::set<std::string> tokens;
  for (Tick t : ticks) tokens.insert(std::to_string(t));
  return measure(tokens);
}

std::string MeasureSpec::describe() const { return to_string(kind_); }

namespace {

void require(const MeasureSpec& m, Universe expected) {
  if (m.universe() != expected) {
    throw Error("measure universe mismatch",
                "expected a measure over " + to_string(expected) + ", got " + to_string(m.universe()));
  }
}

}  // namespace

Rational scope(const Information& info, const MeasureSpec& mu) {
  require(mu, Universe::Entities);
  return mu.measure(info.ontology());
}

Rational granularity(const Information& info, const MeasureSpec& mu) {
  require(mu, Universe::Entities);
  // Atoms are single links, so an atom's ontology is its state's entity set.
  Rational best = 0;
  bool first = true;
  for (const auto& l : info.links()) {
    Rational m = mu.measure(info.state(l.state).entities);
    if (first || m > best) best = m;
    first = false;
  }
  return best;
}

Rational sustainability(const Information& info, const MeasureSpec& tau) {
  require(tau, Universe::Ticks);
  return tau.measure(info.occurrence_ticks());
}

Rational richness(const Information& info, const MeasureSpec& rho) {
  require(rho, Universe::StateRecords);
  std::set<std::string> ids;
  for (const auto& [id, s] : info.states()) ids.insert(id);
  return rho.measure(ids);
}

Rational volume(const Information& info, const MeasureSpec& sigma) {
  require(sigma, Universe::Media);
  return sigma.measure(info.carrier());
}

}  // namespace oit
