// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "oit/algebra.hpp"
#include "oit/classic.hpp"
#include "oit/cli.hpp"
#include "oit/fixtures.hpp"
#include "oit/flow.hpp"
#include "oit/instance_io.hpp"
#include "oit/measures.hpp"
#include "oit/semantics.hpp"
#include "oit/synthetic.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

using namespace oit;

namespace {

using Clock = std::chrono::steady_clock;

const std::string kFixtures = OIT_FIXTURE_DIR;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", number, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::map<std::string, Rational> random_weights(Rng& rng, const std::set<std::string>& keys) {
  std::map<std::string, Rational> w;
  for (const auto& k : keys) w[k] = Rational(rng.uniform(0, 50), rng.uniform(1, 9));
  return w;
}

std::set<std::string> tick_names(const std::set<Tick>& ticks) {
  std::set<std::string> out;
  for (Tick t : ticks) out.insert(std::to_string(t));
  return out;
}

std::set<std::string> state_ids(const Information& info) {
  std::set<std::string> out;
  for (const auto& [id, s] : info.states()) out.insert(id);
  return out;
}

bool atoms_contained(const Information& sub, const Information& parent) {
  std::set<std::pair<RecordKey, RecordKey>> parent_atoms;
  for (const auto& a : atoms(parent)) parent_atoms.insert(*a.info.keyed_links().begin());
  for (const auto& a : atoms(sub)) {
    if (!parent_atoms.contains(*a.info.keyed_links().begin())) return false;
  }
  return true;
}

// Counts violations of the five measure monotonicity properties and delay
// monotonicity for one measure choice.
int monotonicity_violations(const Information& info, const Information& sub, const MeasureSpec& mu,
                            const MeasureSpec& tau, const MeasureSpec& rho, const MeasureSpec& sigma) {
  int bad = 0;
  bad += scope(sub, mu) > scope(info, mu);
  bad += granularity(sub, mu) > granularity(info, mu);
  bad += sustainability(sub, tau) > sustainability(info, tau);
  bad += richness(sub, rho) > richness(info, rho);
  bad += volume(sub, sigma) > volume(info, sigma);
  return bad;
}

Outcome criterion_propositions() {
  const auto start = Clock::now();
  int violations = 0;
  int checks = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto c = generate_synthetic(seed);
    const auto sub = restrict_to_links(c.info, c.sub_links);
    if (!is_sub_information(sub, c.info).is_sub || !atoms_contained(sub, c.info)) ++violations;

    violations += monotonicity_violations(
        c.info, sub, MeasureSpec::counting(Universe::Entities), MeasureSpec::counting(Universe::Ticks),
        MeasureSpec::counting(Universe::StateRecords), MeasureSpec::counting(Universe::Media));
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    violations += monotonicity_violations(
        c.info, sub, MeasureSpec::weighted(Universe::Entities, random_weights(rng, c.info.ontology())),
        MeasureSpec::weighted(Universe::Ticks, random_weights(rng, tick_names(c.info.occurrence_ticks()))),
        MeasureSpec::weighted(Universe::StateRecords, random_weights(rng, state_ids(c.info))),
        MeasureSpec::weighted(Universe::Media, random_weights(rng, c.info.carrier())));
    violations += delay(sub) > delay(c.info);
    checks += 12;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << "1000 pairs, " << checks << " comparisons, " << violations << " violations, " << elapsed << " s (limit 30 s)";
  return {violations == 0 && elapsed < 30.0, d.str()};
}

Outcome criterion_replica_coverage() {
  SyntheticProfile profile;
  profile.replication = 3;
  profile.aggregation = 0;
  int violations = 0;
  int non_singleton = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto c = generate_synthetic(seed, profile);
    for (const auto& [id, r] : c.info.reflections()) non_singleton += c.info.sources_of(id).size() != 1;
    Rng rng(seed * 31 + 7);
    const auto outer = random_link_subset(rng, c.info.links(), 0.6);
    const auto inner = random_link_subset(rng, outer, 0.5);
    const auto i1 = restrict_to_links(c.info, outer);
    const auto i0 = restrict_to_links(c.info, inner);
    if (coverage(c.info, i1, CoverageMode::Replica) > coverage(c.info, i0, CoverageMode::Replica)) ++violations;
  }

  const auto ex1 = parse_instance(read_file(kFixtures + "/ex1.json"));
  const auto t0 = parse_instance(read_file(kFixtures + "/ex1_s1r1.json"));
  const auto t1 = parse_instance(read_file(kFixtures + "/ex1_s1r1_s2r2.json"));
  const Rational u0 = coverage(ex1, t0, CoverageMode::Union, {.exhaustive = true});
  const Rational u1 = coverage(ex1, t1, CoverageMode::Union, {.exhaustive = true});
  const Rational r0 = coverage(ex1, t0, CoverageMode::Replica);
  const Rational r1 = coverage(ex1, t1, CoverageMode::Replica);
  const bool fixture_ok = u0 == Rational(2, 3) && u1 == 1 && r0 == Rational(2, 3) && r1 == 0;

  std::ostringstream d;
  d << "1000 nested pairs, " << violations << " violations, " << non_singleton
    << " non-singleton preimages; EX1 union " << format_rational(u0) << " -> " << format_rational(u1) << ", replica "
    << format_rational(r0) << " -> " << format_rational(r1);
  return {violations == 0 && non_singleton == 0 && fixture_ok, d.str()};
}

Outcome criterion_union_oracle() {
  SyntheticProfile profile;
  profile.entities = 5;
  profile.media = 4;
  int cases = 0;
  int mismatches = 0;
  for (std::uint64_t seed = 1; cases < 200; ++seed) {
    const auto c = generate_synthetic(seed, profile);
    if (c.info.reflections().size() > 12) continue;
    const auto target = restrict_to_links(c.info, c.sub_links);
    const auto fast = coverage(c.info, target, CoverageMode::Union);
    const auto brute = coverage(c.info, target, CoverageMode::Union, {.exhaustive = true, .guard = 12});
    mismatches += fast != brute;
    ++cases;
  }
  std::ostringstream d;
  d << cases << " cases with <= 12 reflection records, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome criterion_ex1_vector() {
  const auto ex1 = parse_instance(read_file(kFixtures + "/ex1.json"));
  const Rational s = scope(ex1, MeasureSpec::counting(Universe::Entities));
  const Rational g = granularity(ex1, MeasureSpec::counting(Universe::Entities));
  const Rational t = sustainability(ex1, MeasureSpec::counting(Universe::Ticks));
  const Rational r = richness(ex1, MeasureSpec::counting(Universe::StateRecords));
  const Rational v = volume(ex1, MeasureSpec::counting(Universe::Media));
  const auto dl = delay(ex1);
  std::ostringstream d;
  d << "scope " << format_rational(s) << ", granularity " << format_rational(g) << ", sustainability "
    << format_rational(t) << ", richness " << format_rational(r) << ", volume " << format_rational(v) << ", delay "
    << dl;
  return {s == 2 && g == 2 && t == 3 && r == 3 && v == 3 && dl == 3, d.str()};
}

Outcome criterion_validity() {
  SyntheticProfile profile;
  profile.replication = 1;
  profile.aggregation = 0;
  int not_bijective = 0;
  int nonzero = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto info = generate_synthetic(seed, profile).info;
    not_bijective += !reducibility(info).reducible;
    nonzero += validity(info, SemanticMapping::preimage(), DistanceKind::Jaccard) != 0;
    nonzero += validity(info, SemanticMapping::preimage(), DistanceKind::NumericL1) != 0;
  }
  const auto ex1 = parse_instance(read_file(kFixtures + "/ex1.json"));
  const auto decoder = parse_decoder(read_file(kFixtures + "/ex1_decoder_constant.json"));
  const auto constant = validity(ex1, decoder, DistanceKind::Jaccard);
  std::ostringstream d;
  d << "500 bijective instances, " << not_bijective << " not reducible, " << nonzero
    << " nonzero validities; EX1 constant decoder " << format_rational(constant);
  return {not_bijective == 0 && nonzero == 0 && constant == Rational(2, 3), d.str()};
}

Outcome criterion_entropy() {
  const double coin = shannon_entropy(Distribution({0.5, 0.5}));
  const double skew = shannon_entropy(Distribution({0.5, 0.25, 0.25}));
  double worst_identity = 0;
  for (std::int64_t s = 2; s <= 6; ++s) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      const auto outcomes = static_cast<std::size_t>(std::llround(std::pow(double(s), double(n))));
      const double h = shannon_entropy(Distribution(std::vector<double>(outcomes, 1.0 / double(outcomes))));
      worst_identity = std::max(worst_identity, std::abs(h - hartley_information(n, s)));
    }
  }
  Rng rng(2718);
  int demo_failures = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto alphabet = static_cast<std::size_t>(rng.uniform(2, 10));
    std::vector<double> p(alphabet);
    double total = 0;
    for (auto& x : p) total += (x = rng.unit() + 1e-3);
    for (auto& x : p) x /= total;
    const auto demo = volume_entropy_demo(Distribution(p), rng.uniform(1, 40), seed);
    demo_failures += to_double(demo.volume) < demo.entropy_bound - 1e-9;
  }
  const bool ok = std::abs(coin - 1.0) < 1e-9 && std::abs(skew - 1.5) < 1e-9 && worst_identity < 1e-9 &&
                  demo_failures == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf, "H(1/2,1/2)=%.12g, H(1/2,1/4,1/4)=%.12g, uniform-vs-Hartley max error %.3g, "
                "%d/100 demo cases violate volume >= nH", coin, skew, worst_identity, demo_failures);
  return {ok, buf};
}

// Delay through a two-hop chain computed straight from the link pairs.
std::int64_t chain_delay_oracle(const Information& first, const Information& second) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& [s, r] : first.keyed_links()) {
    for (const auto& [s2, r2] : second.keyed_links()) {
      if (r == s2) best = std::max(best, r2.tick - s.tick);
    }
  }
  return best;
}

Outcome criterion_algebra() {
  const auto ex1 = fixtures::ex1();
  const auto rest = restrict_to_links(ex1, {{"s1", "r1"}, {"s2", "r2"}, {"s3", "r2"}});
  const auto replica = restrict_to_links(ex1, {{"s1", "r3"}});
  bool strict_rejects = false;
  try {
    combine(rest, replica, CombineMode::Strict);
  } catch (const Error& e) {
    strict_rejects = std::string(e.what()) == "inconsistent overlap at s1";
  }
  const bool lax_ok = combine(rest, replica, CombineMode::Lax) == ex1;

  bool preserved = true;
  bool delay_ok = true;
  std::int64_t ex1_chain_delay = 0;
  auto check_chain = [&](const Information& first, Tick added) {
    const auto relay = fixtures::identity_relay(first, "relay", 1, added);
    const auto composed = compose(first, relay);
    const auto mu = MeasureSpec::counting(Universe::Entities);
    preserved = preserved && scope(composed, mu) == scope(first, mu) &&
                granularity(composed, mu) == granularity(first, mu) &&
                sustainability(composed, MeasureSpec::counting(Universe::Ticks)) ==
                    sustainability(first, MeasureSpec::counting(Universe::Ticks)) &&
                richness(composed, MeasureSpec::counting(Universe::StateRecords)) ==
                    richness(first, MeasureSpec::counting(Universe::StateRecords));
    const auto expected = chain_delay_oracle(first, relay);
    delay_ok = delay_ok && delay(composed) == expected;
    return delay(composed);
  };
  ex1_chain_delay = check_chain(ex1, 2);
  delay_ok = delay_ok && ex1_chain_delay == 5;  // (s1, r1): 4 + 2 - 1
  check_chain(ex1, 0);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) check_chain(generate_synthetic(seed).info, Tick(seed % 4));

  std::ostringstream d;
  d << "strict rejects split replica: " << (strict_rejects ? "yes" : "no") << ", lax reassembles EX1: "
    << (lax_ok ? "yes" : "no") << ", state-side metrics preserved on 102 chains: " << (preserved ? "yes" : "no")
    << ", chain delay matches oracle: " << (delay_ok ? "yes" : "no") << " (EX1 +2 relay: " << ex1_chain_delay << ")";
  return {strict_rejects && lax_ok && preserved && delay_ok, d.str()};
}

std::string run_capture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome criterion_round_trip(Clock::time_point suite_start) {
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SyntheticProfile profile;
    profile.entities = 2 + static_cast<std::int64_t>(seed % 7);
    profile.media = 1 + static_cast<std::int64_t>(seed % 5);
    profile.aggregation = double(seed % 4) / 4.0;
    const auto info = generate_synthetic(seed, profile).info;
    const auto text = emit_instance(info);
    const auto once = parse_instance(text);
    const auto twice = parse_instance(emit_instance(once));
    mismatches += !(once == info) || !(twice == once) || emit_instance(twice) != text;
  }

  const auto dir = std::filesystem::temp_directory_path() / "oit-acceptance";
  std::filesystem::create_directories(dir);
  const auto generated = (dir / "gen.json").string();
  const auto sub = (dir / "sub.json").string();
  run_capture({"gen", "--seed", "2024", "-o", generated, "--sub-out", sub});
  const std::vector<std::vector<std::string>> invocations{
      {"metrics", kFixtures + "/ex1.json", "--out", "json"},
      {"metrics", kFixtures + "/ex1.json", "--weights", kFixtures + "/ex1_weights.json", "--target",
       kFixtures + "/ex1_s1r1.json", "--decoder", kFixtures + "/ex1_decoder_constant.json"},
      {"metrics", generated, "--target", sub, "--coverage-mode", "union", "--out", "json"},
      {"coverage", kFixtures + "/ex1.json", "--target", kFixtures + "/ex1_s1r1.json", "--mode", "union",
       "--brute-force"},
      {"demo", "shannon", "--probs", "0.9,0.1", "--n", "10", "--seed", "3", "--out", "json"},
  };
  int unstable = 0;
  for (const auto& args : invocations) {
    const auto first = run_capture(args);
    for (int i = 0; i < 3; ++i) unstable += run_capture(args) != first;
  }
  const double elapsed = seconds_since(suite_start);
  std::ostringstream d;
  d << "1000 round trips, " << mismatches << " mismatches; " << invocations.size() << " CLI invocations, " << unstable
    << " non-identical reruns; suite wall-clock " << elapsed << " s (limit 120 s)";
  return {mismatches == 0 && unstable == 0 && elapsed < 120.0, d.str()};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  report(1, "measure and delay propositions", criterion_propositions);
  report(2, "replica coverage under nested targets", criterion_replica_coverage);
  report(3, "union coverage closed form vs enumeration", criterion_union_oracle);
  report(4, "EX1 metric vector", criterion_ex1_vector);
  report(5, "reducibility and validity", criterion_validity);
  report(6, "entropy and Hartley", criterion_entropy);
  report(7, "combine and compose", criterion_algebra);
  report(8, "round trip and determinism", [&] { return criterion_round_trip(start); });
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
