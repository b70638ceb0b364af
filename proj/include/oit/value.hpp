#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oit {

/// Exact rational arithmetic for every measure-based metric.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts integers ("3", "-2"), plain decimals ("0.125") and fractions
/// ("5/8"). Exponent notation is rejected. Throws oit::Error("bad rational").
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

using EntityId = std::string;
using MediumId = std::string;
using RecordId = std::string;
using Tick = std::int64_t;

/// Sorted set of entity or media tokens.
using TokenSet = std::set<std::string>;

struct Bytes {
  std::vector<std::uint8_t> data;

  friend bool operator==(const Bytes&, const Bytes&) = default;
  friend auto operator<=>(const Bytes&, const Bytes&) = default;
};

/// Opaque comparable scalar carried by state and reflection records.
///
/// Rationals with denominator 1 are stored as integers so that `2` and
/// `4/2` compare equal.
class Value {
 public:
  using Storage = std::variant<std::int64_t, Rational, std::string, Bytes>;

  Value() : storage_(std::int64_t{0}) {}

  static Value integer(std::int64_t v) { return Value(Storage(v)); }
  static Value rational(const Rational& r);
  static Value text(std::string s) { return Value(Storage(std::move(s))); }
  static Value bytes(std::vector<std::uint8_t> b) { return Value(Storage(Bytes{std::move(b)})); }

  const Storage& storage() const noexcept { return storage_; }

  bool is_numeric() const noexcept { return storage_.index() <= 1; }
  std::optional<Rational> as_number() const;

  /// Human-readable rendering for diagnostics and tables.
  std::string describe() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator<(const Value& a, const Value& b);

 private:
  explicit Value(Storage s) : storage_(std::move(s)) {}
  Storage storage_;
};

/// The (token-set, tick, value) identity triple of a record. Records are
/// compared across instances by key, never by id.
struct RecordKey {
  TokenSet tokens;
  Tick tick = 0;
  Value value;

  friend bool operator==(const RecordKey& a, const RecordKey& b) {
    return a.tick == b.tick && a.tokens == b.tokens && a.value == b.value;
  }
  friend bool operator<(const RecordKey& a, const RecordKey& b);

  std::string describe() const;
};

}  // namespace oit
