#pragma once

#include "oit/information.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oit {

/// Largest reflection-record count accepted by exhaustive enumeration.
inline constexpr std::size_t kDefaultEnumerationGuard = 15;

/// Hard ceiling on the number of candidate links enumerated for one target,
/// independent of the configurable guard.
inline constexpr std::size_t kMaxEnumeratedLinks = 24;

/// Maximum over atoms of (reflection tick - occurrence tick). Negative values
/// mean the carrier held the record before the state occurred. Every tick is
/// finite, so the unbounded-occurrence clause never applies here.
std::int64_t delay(const Information& info);

/// Every sub-information of `info` carrying exactly the target's state
/// content, found by enumerating link subsets. Members are sub-informations
/// whose own relation pulls their reflections back onto the target's state
/// set. Ordered by link set; always contains the target.
///
/// Throws Error("not a sub-information") and
/// Error("instance too large for exhaustive synonymy").
std::vector<Information> synonymy_class(const Information& info, const Information& target,
                                        std::size_t guard = kDefaultEnumerationGuard);

enum class CoverageMode {
  /// |union of carriers over the synonymy class| / |carrier|.
  Union,
  /// Fraction of media that on their own host records whose preimages
  /// assemble exactly the target's state set.
  Replica,
};

std::string to_string(CoverageMode mode);

struct CoverageOptions {
  /// Union mode only: evaluate through synonymy_class instead of the closed form.
  bool exhaustive = false;
  std::size_t guard = kDefaultEnumerationGuard;
};

/// Value in [0, 1]. Throws Error("not a sub-information") and, for exhaustive
/// union mode, the synonymy guard error.
Rational coverage(const Information& info, const Information& target, CoverageMode mode,
                  const CoverageOptions& options = {});

}  // namespace oit
