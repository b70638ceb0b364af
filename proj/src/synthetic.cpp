#include "oit/synthetic.hpp"

#include <map>
#include <vector>

namespace oit {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::int64_t>(engine_());
  return lo + static_cast<std::int64_t>(engine_() % span);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::set<Link> random_link_subset(Rng& rng, const std::set<Link>& links, double keep) {
  std::vector<Link> all(links.begin(), links.end());
  std::set<Link> out;
  for (const auto& l : all) {
    if (rng.chance(keep)) out.insert(l);
  }
  if (out.empty()) out.insert(all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))]);
  return out;
}

SyntheticCase generate_synthetic(std::uint64_t seed, const SyntheticProfile& p) {
  if (p.entities < 1 || p.media < 1 || p.tick_span < 1 || p.replication < 1 || !(p.aggregation >= 0.0) ||
      p.aggregation > 1.0) {
    throw Error("degenerate profile", "degenerate profile: counts must be positive and aggregation in [0, 1]");
  }
  Rng rng(seed);
  auto entity = [](std::int64_t i) { return "e" + std::to_string(i + 1); };
  auto medium = [](std::int64_t i) { return "m" + std::to_string(i + 1); };

  // One state per entity plus a few extras, so every entity is used.
  const std::int64_t state_count = p.entities + rng.uniform(0, p.entities / 2);
  std::vector<StateRecord> states;
  std::set<RecordKey> state_keys;
  for (std::int64_t i = 0; i < state_count; ++i) {
    StateRecord s;
    s.id = "s" + std::to_string(i + 1);
    const std::int64_t primary = i < p.entities ? i : rng.uniform(0, p.entities - 1);
    s.entities.insert(entity(primary));
    if (p.entities > 1 && rng.chance(p.aggregation)) s.entities.insert(entity(rng.uniform(0, p.entities - 1)));
    s.tick = rng.uniform(1, p.tick_span);
    s.value = Value::integer(rng.uniform(0, 9));
    while (!state_keys.insert(s.key()).second) s.value = Value::integer(std::get<std::int64_t>(s.value.storage()) + 10);
    states.push_back(std::move(s));
  }

  std::vector<ReflectionRecord> reflections;
  std::set<RecordKey> reflection_keys;
  std::set<Link> links;
  for (const auto& s : states) {
    const std::int64_t fanout = rng.uniform(1, p.replication);
    std::set<RecordId> targets;
    for (std::int64_t k = 0; k < fanout; ++k) {
      if (!reflections.empty() && rng.chance(p.aggregation)) {
        const auto& shared = reflections[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(reflections.size()) - 1))];
        targets.insert(shared.id);
        continue;
      }
      ReflectionRecord r;
      r.id = "r" + std::to_string(reflections.size() + 1);
      r.media.insert(medium(rng.uniform(0, p.media - 1)));
      if (p.media > 1 && rng.chance(p.aggregation)) r.media.insert(medium(rng.uniform(0, p.media - 1)));
      r.tick = s.tick + rng.uniform(-1, 3);
      r.value = Value::integer(rng.uniform(0, 9));
      while (!reflection_keys.insert(r.key()).second) {
        r.value = Value::integer(std::get<std::int64_t>(r.value.storage()) + 10);
      }
      targets.insert(r.id);
      reflections.push_back(std::move(r));
    }
    for (const auto& t : targets) links.insert({s.id, t});
  }

  auto info = Information::from_parts(std::move(states), std::move(reflections),
                                      std::vector<Link>(links.begin(), links.end()));
  auto sub = random_link_subset(rng, info.links());
  return {std::move(info), std::move(sub)};
}

}  // namespace oit
