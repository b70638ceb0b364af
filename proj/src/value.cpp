#include "oit/value.hpp"

#include "oit/error.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace oit {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error("bad rational", "not an exact rational number: '" + std::string(text) + "'");
}

}  // namespace

std::string Diagnostic::to_string() const {
  std::string out = code + ": " + message;
  if (!path.empty()) out += " (at " + path + ")";
  return out;
}

namespace {
std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "invalid information";
  for (const auto& d : diagnostics) out += "\n  " + d.to_string();
  return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error("validation", join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    cpp_int d{std::string(den)};
    if (d == 0) bad_rational(text);
    result = Rational(cpp_int(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_rational(text);
    }
    cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(frac.size()));
    cpp_int digits{std::string(whole.empty() ? "0" : whole) + std::string(frac)};
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body)) bad_rational(text);
    result = Rational(cpp_int(std::string(body)));
  }
  return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Value Value::rational(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const auto num = boost::multiprecision::numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return Value(Storage(num.convert_to<std::int64_t>()));
    }
  }
  return Value(Storage(r));
}

std::optional<Rational> Value::as_number() const {
  if (const auto* i = std::get_if<std::int64_t>(&storage_)) return Rational(*i);
  if (const auto* r = std::get_if<Rational>(&storage_)) return *r;
  return std::nullopt;
}

std::string Value::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return format_rational(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return "\"" + v + "\"";
        } else {
          std::ostringstream os;
          os << "bytes[" << v.data.size() << "]";
          return os.str();
        }
      },
      storage_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.storage_.index() != b.storage_.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return lhs == std::get<T>(b.storage_);
      },
      a.storage_);
}

bool operator<(const Value& a, const Value& b) {
  if (a.storage_.index() != b.storage_.index()) return a.storage_.index() < b.storage_.index();
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return lhs < std::get<T>(b.storage_);
      },
      a.storage_);
}

bool operator<(const RecordKey& a, const RecordKey& b) {
  if (a.tokens != b.tokens) return a.tokens < b.tokens;
  if (a.tick != b.tick) return a.tick < b.tick;
  return a.value < b.value;
}

std::string RecordKey::describe() const {
  std::string out = "({";
  bool first = true;
  for (const auto& t : tokens) {
    if (!first) out += ",";
    out += t;
    first = false;
  }
  out += "}, " + std::to_string(tick) + ", " + value.describe() + ")";
  return out;
}

}  // namespace oit
