#include "oit/fixtures.hpp"

namespace oit::fixtures {

Information ex1() {
  std::vector<StateRecord> states = {
      {"s1", {"a"}, 1, Value::text("v1")},
      {"s2", {"b"}, 2, Value::text("v2")},
      {"s3", {"a", "b"}, 3, Value::text("v3")},
  };
  std::vector<ReflectionRecord> reflections = {
      {"r1", {"m1"}, 4, Value::text("v1")},
      {"r2", {"m2"}, 5, Value::text("v2")},
      {"r3", {"m3"}, 4, Value::text("v1")},
  };
  std::vector<Link> links = {{"s1", "r1"}, {"s1", "r3"}, {"s2", "r2"}, {"s3", "r2"}};
  return Information::from_parts(std::move(states), std::move(reflections), std::move(links));
}

Information identity_relay(const Information& info, const std::string& prefix, int first_index, Tick added_delay) {
  std::vector<StateRecord> states;
  std::vector<ReflectionRecord> reflections;
  std::vector<Link> links;
  int next = first_index;
  for (const auto& [id, r] : info.reflections()) {
    states.push_back({id, r.media, r.tick, r.value});
    reflections.push_back({id + "'", {prefix + std::to_string(next++)}, r.tick + added_delay, r.value});
    links.push_back({id, id + "'"});
  }
  return Information::from_parts(std::move(states), std::move(reflections), std::move(links));
}

}  // namespace oit::fixtures
