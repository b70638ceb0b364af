#include <doctest.h>

#include "oit/algebra.hpp"
#include "oit/fixtures.hpp"
#include "oit/semantics.hpp"
#include "oit/synthetic.hpp"

using namespace oit;

namespace {

RecordKey key(std::string token, Tick tick, Value v) { return {{std::move(token)}, tick, std::move(v)}; }

RecordKey state_key(const Information& info, const std::string& id) { return info.state(id).key(); }

SemanticMapping constant_s1(const Information& ex1) {
  std::map<RecordKey, RecordKey> table;
  for (const auto& [id, r] : ex1.reflections()) table[r.key()] = state_key(ex1, "s1");
  return SemanticMapping::from_table(table);
}

SemanticMapping mostly_right(const Information& ex1) {
  return SemanticMapping::from_table({{ex1.reflection("r1").key(), state_key(ex1, "s1")},
                                      {ex1.reflection("r3").key(), state_key(ex1, "s1")},
                                      {ex1.reflection("r2").key(), state_key(ex1, "s2")}});
}

std::set<RecordKey> random_triples(Rng& rng) {
  std::set<RecordKey> out;
  const auto n = rng.uniform(0, 6);
  for (int i = 0; i < n; ++i) {
    const std::string token(1, static_cast<char>('a' + rng.uniform(0, 2)));
    Value v = rng.chance(0.2) ? Value::text(rng.chance(0.5) ? "x" : "y")
                              : Value::rational(Rational(rng.uniform(-8, 8), rng.uniform(1, 4)));
    out.insert(key(token, rng.uniform(0, 2), v));
  }
  return out;
}

}  // namespace

TEST_CASE("decode") {
  const auto ex1 = fixtures::ex1();
  CHECK(decode(ex1, SemanticMapping::preimage()) == ex1.state_keys());
  CHECK(decode(ex1, constant_s1(ex1)) == std::set<RecordKey>{state_key(ex1, "s1")});

  auto partial = mostly_right(ex1);
  partial.table.erase(ex1.reflection("r3").key());
  CHECK_THROWS_WITH(decode(ex1, partial), doctest::Contains("partial decoder"));
}

TEST_CASE("validity") {
  const auto ex1 = fixtures::ex1();
  CHECK(validity(ex1, SemanticMapping::preimage(), DistanceKind::Jaccard) == 0);
  CHECK(validity(ex1, SemanticMapping::preimage(), DistanceKind::NumericL1) == 0);
  CHECK(validity(ex1, constant_s1(ex1), DistanceKind::Jaccard) == Rational(2, 3));
  CHECK(validity(ex1, mostly_right(ex1), DistanceKind::Jaccard) == Rational(1, 3));
}

TEST_CASE("validity is not forced to be monotone under sub-information") {
  const auto ex1 = fixtures::ex1();
  const auto s1_only = restrict(ex1, select::from_states({"s1"}));
  const auto s23 = restrict(ex1, select::from_states({"s2", "s3"}));
  // Shrinking can improve validity ...
  CHECK(validity(s1_only, constant_s1(ex1), DistanceKind::Jaccard) <
        validity(ex1, constant_s1(ex1), DistanceKind::Jaccard));
  // ... or make it worse.
  CHECK(validity(s23, mostly_right(ex1), DistanceKind::Jaccard) == Rational(1, 2));
  CHECK(validity(s23, mostly_right(ex1), DistanceKind::Jaccard) >
        validity(ex1, mostly_right(ex1), DistanceKind::Jaccard));
}

TEST_CASE("numeric-l1 distance by hand") {
  using V = Value;
  const std::set<RecordKey> a{key("a", 1, V::integer(1)), key("a", 2, V::integer(5))};
  const std::set<RecordKey> b{key("a", 1, V::rational(Rational(3, 2)))};
  CHECK(record_distance(a, b, DistanceKind::NumericL1) == Rational(3, 4));
  CHECK(record_distance(a, a, DistanceKind::NumericL1) == 0);

  // Same key, several values: Hausdorff distance of the value sets.
  const std::set<RecordKey> c{key("a", 1, V::integer(1)), key("a", 1, V::integer(2))};
  const std::set<RecordKey> d{key("a", 1, V::integer(1))};
  CHECK(record_distance(c, d, DistanceKind::NumericL1) == 1);
  const std::set<RecordKey> e{key("a", 1, V::integer(0)), key("a", 1, V::rational(Rational(1, 4)))};
  const std::set<RecordKey> f{key("a", 1, V::rational(Rational(1, 2)))};
  CHECK(record_distance(e, f, DistanceKind::NumericL1) == Rational(1, 2));

  // Non-numeric values compare discretely; large gaps saturate at 1.
  CHECK(record_distance({key("a", 1, V::text("x"))}, {key("a", 1, V::text("y"))}, DistanceKind::NumericL1) == 1);
  CHECK(record_distance({key("a", 1, V::integer(0))}, {key("a", 1, V::integer(100))}, DistanceKind::NumericL1) == 1);
  CHECK(record_distance({}, {}, DistanceKind::NumericL1) == 0);
  CHECK(to_string(DistanceKind::NumericL1) == "numeric-l1");
}

TEST_CASE("property: both distances are metrics on random triple sets") {
  Rng rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = random_triples(rng);
    const auto y = random_triples(rng);
    const auto z = random_triples(rng);
    for (auto kind : {DistanceKind::Jaccard, DistanceKind::NumericL1}) {
      CAPTURE(to_string(kind));
      const auto dxy = record_distance(x, y, kind);
      CHECK(record_distance(x, x, kind) == 0);
      CHECK((dxy == 0) == (x == y));
      CHECK(dxy == record_distance(y, x, kind));
      CHECK(record_distance(x, z, kind) <= dxy + record_distance(y, z, kind));
      CHECK(dxy <= 1);
    }
  }
}

TEST_CASE("suitability") {
  const auto ex1 = fixtures::ex1();
  const auto w = equal_suitability_weights();
  CHECK(suitability(ex1, TargetSextuple::from(ex1), w) == 0);

  const auto s1_links = restrict_to_links(ex1, {{"s1", "r1"}, {"s1", "r3"}});
  const auto parts = suitability_components(ex1, TargetSextuple::from(s1_links));
  const std::array<Rational, 6> expected{Rational(1, 2), Rational(2, 3), Rational(2, 3),
                                         Rational(1, 3), Rational(1, 2), Rational(1, 3)};
  CHECK(parts == expected);
  CHECK(suitability(ex1, TargetSextuple::from(s1_links), w) == Rational(1, 2));

  const auto far = Information::from_parts({{"x", {"z"}, 90, Value::integer(9)}}, {{"y", {"q"}, 91, Value::integer(9)}},
                                           {{"x", "y"}});
  CHECK(suitability(ex1, TargetSextuple::from(far), w) == 1);

  auto bad = w;
  bad[0] += 1;
  CHECK_THROWS_WITH(suitability(ex1, TargetSextuple::from(ex1), bad), doctest::Contains("not 1"));
  SuitabilityWeights negative{Rational(2), Rational(-1), 0, 0, 0, 0};
  CHECK_THROWS_WITH(suitability(ex1, TargetSextuple::from(ex1), negative), doctest::Contains("nonnegative"));

  // Shrinking towards the target helps; shrinking away from it hurts.
  const auto target = TargetSextuple::from(s1_links);
  CHECK(suitability(s1_links, target, w) < suitability(ex1, target, w));
  CHECK(suitability(restrict(ex1, select::from_states({"s2", "s3"})), target, w) > suitability(ex1, target, w));

  TargetSextuple empty;
  CHECK_THROWS_AS(empty.check(), ValidationError);
}

TEST_CASE("property: suitability identity, symmetry and range") {
  Rng rng(5);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto a = generate_synthetic(seed).info;
    const auto b = generate_synthetic(seed + 1000).info;
    SuitabilityWeights w;
    Rational total = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      w[i] = Rational(rng.uniform(0, 10), 60);
      total += w[i];
    }
    w[5] = 1 - total;
    for (auto kind : {DistanceKind::Jaccard, DistanceKind::NumericL1}) {
      CHECK(suitability(a, TargetSextuple::from(a), w, kind) == 0);
      const auto ab = suitability(a, TargetSextuple::from(b), w, kind);
      CHECK(ab == suitability(b, TargetSextuple::from(a), w, kind));
      CHECK(ab >= 0);
      CHECK(ab <= 1);
    }
  }
}

TEST_CASE("property: preimage decoding has validity zero") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto info = generate_synthetic(seed).info;
    CHECK(validity(info, SemanticMapping::preimage(), DistanceKind::Jaccard) == 0);
    CHECK(validity(info, SemanticMapping::preimage(), DistanceKind::NumericL1) == 0);
  }
}
