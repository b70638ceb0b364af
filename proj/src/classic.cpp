#include "oit/classic.hpp"

#include "oit/measures.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace oit {

Distribution::Distribution(std::vector<double> probabilities) : p_(std::move(probabilities)) {
  std::vector<std::string> problems;
  if (p_.empty()) problems.push_back("no probabilities");
  double sum = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i]) || p_[i] < 0) {
      problems.push_back("p" + std::to_string(i + 1) + " is negative or not finite");
    }
    sum += p_[i];
  }
  if (!p_.empty() && std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream os;
    os.precision(17);
    os << "probabilities sum to " << sum << ", not 1";
    problems.push_back(os.str());
  }
  if (!problems.empty()) {
    std::string msg = "invalid distribution";
    for (const auto& p : problems) msg += "; " + p;
    throw Error("invalid distribution", msg);
  }
}

double shannon_entropy(const Distribution& dist, double base, double k) {
  if (!(base > 1.0)) throw Error("domain", "entropy base must exceed 1");
  if (!(k > 0.0)) throw Error("domain", "entropy scale k must be positive");
  double h = 0;
  for (double p : dist.probabilities()) {
    if (p > 0) h -= p * std::log(p);
  }
  return k * h / std::log(base);
}

double hartley_information(std::int64_t n, std::int64_t s, double base) {
  if (n < 1) throw Error("domain", "hartley: n must be at least 1");
  if (s < 2) throw Error("domain", "hartley: alphabet size must be at least 2");
  if (!(base > 1.0)) throw Error("domain", "hartley: base must exceed 1");
  return static_cast<double>(n) * std::log(static_cast<double>(s)) / std::log(base);
}

namespace {

// Inverse-CDF draw on the raw engine output so the sequence only depends on
// mt19937_64, which is fully specified.
std::size_t draw(std::mt19937_64& rng, const std::vector<double>& p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double acc = 0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) continue;
    last_positive = i;
    acc += p[i];
    if (u < acc) return i;
  }
  return last_positive;
}

std::string bits(std::size_t symbol, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if (symbol & (std::size_t{1} << (width - 1 - i))) out[i] = '1';
  }
  return out;
}

}  // namespace

VolumeEntropyDemo volume_entropy_demo(const Distribution& dist, std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw Error("domain", "demo: message length must be at least 1");
  const std::size_t alphabet = dist.size();
  if (alphabet < 2) throw Error("domain", "demo: alphabet must have at least 2 symbols");

  std::size_t width = 0;
  while ((std::size_t{1} << width) < alphabet) ++width;

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> message;
  std::vector<StateRecord> states;
  std::vector<ReflectionRecord> reflections;
  std::vector<Link> links;
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto symbol = draw(rng, dist.probabilities());
    message.push_back(symbol);
    const auto pos = std::to_string(i);
    states.push_back({"s" + pos, {"p" + pos}, i, Value::integer(static_cast<std::int64_t>(symbol))});
    TokenSet cells;
    for (std::size_t j = 1; j <= width; ++j) cells.insert("c" + pos + "." + std::to_string(j));
    reflections.push_back({"r" + pos, std::move(cells), i, Value::text(bits(symbol, width))});
    links.push_back({"s" + pos, "r" + pos});
  }

  auto info = Information::from_parts(std::move(states), std::move(reflections), std::move(links));
  const auto vol = volume(info, MeasureSpec::counting(Universe::Media));
  const double hartley = hartley_information(n, static_cast<std::int64_t>(alphabet), 2.0);
  const double bound = static_cast<double>(n) * shannon_entropy(dist, 2.0, 1.0);
  const double vol_d = to_double(vol);
  const bool rounds_up = (std::size_t{1} << width) != alphabet;

  return VolumeEntropyDemo{std::move(message),
                           alphabet,
                           width,
                           std::move(info),
                           vol,
                           hartley,
                           bound,
                           rounds_up,
                           vol_d > hartley + 1e-9,
                           vol_d >= bound - 1e-9};
}

}  // namespace oit
