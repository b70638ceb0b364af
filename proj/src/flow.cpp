#include "oit/flow.hpp"

#include "oit/algebra.hpp"

#include <algorithm>
#include <limits>

namespace oit {

std::int64_t delay(const Information& info) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& l : info.links()) {
    best = std::max(best, info.reflection(l.reflection).tick - info.state(l.state).tick);
  }
  return best;
}

std::string to_string(CoverageMode mode) { return mode == CoverageMode::Union ? "union" : "replica"; }

namespace {

// Ids in `info` of the target's state records, matched by identity triple.
std::set<RecordId> target_state_ids(const Information& info, const Information& target) {
  if (!is_sub_information(target, info).is_sub) {
    throw Error("not a sub-information", "target is not a sub-information of the instance");
  }
  std::map<RecordKey, RecordId> by_key;
  for (const auto& [id, s] : info.states()) by_key.emplace(s.key(), id);
  std::set<RecordId> out;
  for (const auto& [id, s] : target.states()) out.insert(by_key.at(s.key()));
  return out;
}

void check_guard(const Information& info, std::size_t candidate_links, std::size_t guard) {
  if (info.reflections().size() > guard || candidate_links > kMaxEnumeratedLinks) {
    throw Error("instance too large for exhaustive synonymy",
                "instance too large for exhaustive synonymy: " + std::to_string(info.reflections().size()) +
                    " reflection records (guard " + std::to_string(guard) + "), " +
                    std::to_string(candidate_links) + " candidate links (ceiling " +
                    std::to_string(kMaxEnumeratedLinks) + ")");
  }
}

}  // namespace

std::vector<Information> synonymy_class(const Information& info, const Information& target, std::size_t guard) {
  const auto wanted = target_state_ids(info, target);

  // A member's states are exactly `wanted`, so only links leaving `wanted`
  // can appear in it.
  std::vector<Link> candidates;
  for (const auto& l : info.links()) {
    if (wanted.contains(l.state)) candidates.push_back(l);
  }
  check_guard(info, candidates.size(), guard);

  std::vector<Information> members;
  const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::set<Link> chosen;
    std::set<RecordId> sources;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        chosen.insert(candidates[i]);
        sources.insert(candidates[i].state);
      }
    }
    if (sources == wanted) members.push_back(restrict_to_links(info, chosen));
  }
  std::sort(members.begin(), members.end(),
            [](const Information& a, const Information& b) { return a.links() < b.links(); });
  return members;
}

Rational coverage(const Information& info, const Information& target, CoverageMode mode,
                  const CoverageOptions& options) {
  const auto wanted = target_state_ids(info, target);
  const Rational total(info.carrier().size());

  if (mode == CoverageMode::Union) {
    TokenSet covered;
    if (options.exhaustive) {
      for (const auto& member : synonymy_class(info, target, options.guard)) {
        covered.insert(member.carrier().begin(), member.carrier().end());
      }
    } else {
      // Every link leaving a wanted state extends to a full member, so the
      // class covers exactly the media of the wanted states' image.
      for (const auto& r : image(info, wanted)) {
        const auto& media = info.reflection(r).media;
        covered.insert(media.begin(), media.end());
      }
    }
    return Rational(covered.size()) / total;
  }

  std::size_t hosting = 0;
  for (const auto& medium : info.carrier()) {
    std::set<RecordId> assembled;
    for (const auto& [id, r] : info.reflections()) {
      if (!r.media.contains(medium)) continue;
      const auto& sources = info.sources_of(id);
      if (std::includes(wanted.begin(), wanted.end(), sources.begin(), sources.end())) {
        assembled.insert(sources.begin(), sources.end());
      }
    }
    if (assembled == wanted) ++hosting;
  }
  return Rational(hosting) / total;
}

}  // namespace oit
