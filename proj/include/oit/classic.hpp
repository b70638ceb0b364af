#pragma once

#include "oit/information.hpp"

#include <cstdint>
#include <vector>

namespace oit {

/// Finite probability distribution. Entries are nonnegative and sum to 1
/// within 1e-9.
class Distribution {
 public:
  /// Throws Error("invalid distribution") listing every violation.
  explicit Distribution(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }

 private:
  std::vector<double> p_;
};

/// -k * sum p_i log_base p_i, with 0 log 0 = 0.
double shannon_entropy(const Distribution& dist, double base = 2.0, double k = 1.0);

/// n * log_base(s) for n >= 1, s >= 2. Throws Error("domain").
double hartley_information(std::int64_t n, std::int64_t s, double base = 2.0);

/// A seeded message rendered as an information whose carrier is a set of
/// fixed-length binary code cells.
struct VolumeEntropyDemo {
  std::vector<std::size_t> message;  // symbol indices
  std::size_t alphabet = 0;
  std::size_t cells_per_symbol = 0;  // ceil(log2 alphabet)
  Information info;
  Rational volume;        // counting measure over the carrier
  double hartley = 0;     // n log2 S
  double entropy_bound = 0;  // n H(dist)
  bool rounds_up = false;    // log2 S is not an integer
  bool exceeds_hartley = false;
  bool bound_holds = false;  // volume >= n H(dist) - 1e-9
};

/// Throws Error("domain") when the alphabet has fewer than 2 symbols or n < 1.
VolumeEntropyDemo volume_entropy_demo(const Distribution& dist, std::int64_t n, std::uint64_t seed);

}  // namespace oit
