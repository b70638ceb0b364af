#include "oit/instance_io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace oit {

using nlohmann::json;

namespace {

std::string to_base64(const std::vector<std::uint8_t>& data) {
  std::string out(4 * ((data.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), data.data(),
                                static_cast<int>(data.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::optional<std::vector<std::uint8_t>> from_base64(const std::string& text) {
  if (text.size() % 4 != 0) return std::nullopt;
  std::vector<std::uint8_t> out(3 * text.size() / 4);
  const int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()),
                                static_cast<int>(text.size()));
  if (n < 0) return std::nullopt;
  std::size_t padding = 0;
  if (!text.empty() && text.back() == '=') ++padding;
  if (text.size() > 1 && text[text.size() - 2] == '=') ++padding;
  out.resize(static_cast<std::size_t>(n) - padding);
  return out;
}

json value_to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return x;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return json{{"rational", format_rational(x)}};
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return json{{"bytes", to_base64(x.data)}};
        }
      },
      v.storage());
}

// Collects schema problems while walking a document.
class Reader {
 public:
  std::vector<Diagnostic> diagnostics;

  void fail(const std::string& path, const std::string& message) {
    diagnostics.push_back({"schema", message, {}, path});
  }

  const json* member(const json& obj, const char* key, const std::string& path, bool required = true) {
    if (!obj.is_object()) {
      fail(path, "expected an object");
      return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path + "/" + key, std::string("missing member '") + key + "'");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> token(const json& j, const std::string& path) {
    if (!j.is_string() || j.get_ref<const std::string&>().empty()) {
      fail(path, "expected a nonempty string token");
      return std::nullopt;
    }
    return j.get<std::string>();
  }

  std::vector<std::string> tokens(const json* j, const std::string& path) {
    std::vector<std::string> out;
    if (j == nullptr) return out;
    if (!j->is_array()) {
      fail(path, "expected an array of tokens");
      return out;
    }
    for (std::size_t i = 0; i < j->size(); ++i) {
      if (auto t = token((*j)[i], path + "/" + std::to_string(i))) out.push_back(*t);
    }
    return out;
  }

  std::optional<Tick> tick(const json* j, const std::string& path) {
    if (j == nullptr) return std::nullopt;
    if (!j->is_number_integer()) {
      fail(path, "tick must be an integer");
      return std::nullopt;
    }
    return j->get<Tick>();
  }

  std::optional<Value> value(const json* j, const std::string& path) {
    if (j == nullptr) return std::nullopt;
    if (j->is_number_integer()) return Value::integer(j->get<std::int64_t>());
    if (j->is_string()) return Value::text(j->get<std::string>());
    if (j->is_object() && j->size() == 1) {
      if (auto b = j->find("bytes"); b != j->end() && b->is_string()) {
        if (auto data = from_base64(b->get<std::string>())) return Value::bytes(std::move(*data));
        fail(path + "/bytes", "invalid base64");
        return std::nullopt;
      }
      if (auto r = j->find("rational"); r != j->end() && r->is_string()) {
        try {
          return Value::rational(parse_rational(r->get<std::string>()));
        } catch (const Error& e) {
          fail(path + "/rational", e.what());
          return std::nullopt;
        }
      }
    }
    fail(path, "value must be an integer, a string, {\"bytes\": base64} or {\"rational\": \"p/q\"}");
    return std::nullopt;
  }

  std::optional<Rational> weight(const json& j, const std::string& path) {
    try {
      if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
      if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
      return std::nullopt;
    }
    fail(path, "weight must be an integer or a decimal/fraction string");
    return std::nullopt;
  }

  // Shared shape of state and reflection records.
  template <class Record>
  std::vector<Record> records(const json* j, const std::string& path, const char* token_member) {
    std::vector<Record> out;
    if (j == nullptr) return out;
    if (!j->is_array()) {
      fail(path, "expected an array of records");
      return out;
    }
    for (std::size_t i = 0; i < j->size(); ++i) {
      const auto p = path + "/" + std::to_string(i);
      const auto& rec = (*j)[i];
      if (!rec.is_object()) {
        fail(p, "expected a record object");
        continue;
      }
      auto id = member(rec, "id", p);
      auto toks = member(rec, token_member, p);
      auto t = tick(member(rec, "tick", p), p + "/tick");
      auto v = value(member(rec, "value", p), p + "/value");
      std::optional<std::string> rid = id ? token(*id, p + "/id") : std::nullopt;
      auto list = tokens(toks, p + "/" + token_member);
      if (!rid || !t || !v || toks == nullptr) continue;
      Record r;
      r.id = *rid;
      if constexpr (std::is_same_v<Record, StateRecord>) {
        r.entities = TokenSet(list.begin(), list.end());
      } else {
        r.media = TokenSet(list.begin(), list.end());
      }
      r.tick = *t;
      r.value = *v;
      out.push_back(std::move(r));
    }
    return out;
  }

  RecordKey key(const json& j, const std::string& path, const char* token_member) {
    RecordKey k;
    auto list = tokens(member(j, token_member, path), path + "/" + token_member);
    k.tokens = TokenSet(list.begin(), list.end());
    if (auto t = tick(member(j, "tick", path), path + "/tick")) k.tick = *t;
    if (auto v = value(member(j, "value", path), path + "/value")) k.value = *v;
    return k;
  }

  WeightTables weights(const json& j, const std::string& path) {
    static const std::pair<const char*, Universe> sections[] = {{"entities", Universe::Entities},
                                                                {"media", Universe::Media},
                                                                {"ticks", Universe::Ticks},
                                                                {"state_records", Universe::StateRecords}};
    WeightTables out;
    if (!j.is_object()) {
      fail(path, "weights must be an object");
      return out;
    }
    for (const auto& [key, table] : j.items()) {
      const auto* match = std::find_if(std::begin(sections), std::end(sections),
                                       [&](const auto& s) { return key == s.first; });
      if (match == std::end(sections)) {
        if (key != "version") fail(path + "/" + key, "unknown weight universe '" + key + "'");
        continue;
      }
      if (!table.is_object()) {
        fail(path + "/" + key, "weight table must be an object");
        continue;
      }
      auto& dest = out.tables[match->second];
      for (const auto& [token, w] : table.items()) {
        const auto p = path + "/" + key + "/" + token;
        if (auto r = weight(w, p)) {
          if (*r < 0) {
            fail(p, "weight must be nonnegative");
          } else {
            dest.emplace(token, *r);
          }
        }
      }
    }
    return out;
  }
};

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("malformed json", std::string("malformed json: ") + e.what());
  }
}

struct Parsed {
  RawSextuple raw;
  WeightTables weights;
  std::vector<Diagnostic> diagnostics;
};

Parsed read_document(std::string_view text) {
  const json doc = parse_json(text);
  Reader rd;
  Parsed out;
  if (!doc.is_object()) {
    rd.fail("", "instance document must be a JSON object");
    out.diagnostics = std::move(rd.diagnostics);
    return out;
  }
  if (auto v = rd.member(doc, "version", ""); v != nullptr) {
    if (!v->is_number_integer() || v->get<std::int64_t>() != kDocumentVersion) {
      rd.fail("/version", "unsupported version (expected 1)");
    }
  }
  out.raw.entities = rd.tokens(rd.member(doc, "entities", ""), "/entities");
  out.raw.media = rd.tokens(rd.member(doc, "media", ""), "/media");
  out.raw.states = rd.records<StateRecord>(rd.member(doc, "state_records", ""), "/state_records", "entities");
  out.raw.reflections =
      rd.records<ReflectionRecord>(rd.member(doc, "reflection_records", ""), "/reflection_records", "media");
  if (auto links = rd.member(doc, "links", ""); links != nullptr) {
    if (!links->is_array()) {
      rd.fail("/links", "expected an array of links");
    } else {
      for (std::size_t i = 0; i < links->size(); ++i) {
        const auto p = "/links/" + std::to_string(i);
        const auto* from = rd.member((*links)[i], "from", p);
        const auto* to = rd.member((*links)[i], "to", p);
        auto f = from ? rd.token(*from, p + "/from") : std::nullopt;
        auto t = to ? rd.token(*to, p + "/to") : std::nullopt;
        if (f && t) out.raw.links.push_back({*f, *t});
      }
    }
  }
  if (auto w = rd.member(doc, "weights", "", false); w != nullptr) out.weights = rd.weights(*w, "/weights");

  out.diagnostics = std::move(rd.diagnostics);
  // Invariant checks on a structurally broken document would only repeat
  // the schema problems.
  if (out.diagnostics.empty()) out.diagnostics = validate(out.raw);
  return out;
}

}  // namespace

std::optional<MeasureSpec> WeightTables::measure(Universe u) const {
  auto it = tables.find(u);
  if (it == tables.end()) return std::nullopt;
  return MeasureSpec::weighted(u, it->second);
}

std::vector<Diagnostic> check_instance_document(std::string_view text) {
  return read_document(text).diagnostics;
}

InstanceDocument parse_instance_document(std::string_view text) {
  auto parsed = read_document(text);
  if (!parsed.diagnostics.empty()) throw ValidationError(std::move(parsed.diagnostics));
  return {Information::from_raw(parsed.raw), std::move(parsed.weights)};
}

Information parse_instance(std::string_view text) { return parse_instance_document(text).info; }

std::string emit_instance(const Information& info, const WeightTables& weights) {
  json doc;
  doc["version"] = kDocumentVersion;
  doc["entities"] = json(std::vector<std::string>(info.ontology().begin(), info.ontology().end()));
  doc["media"] = json(std::vector<std::string>(info.carrier().begin(), info.carrier().end()));

  json states = json::array();
  for (const auto& [id, s] : info.states()) {
    states.push_back({{"id", id},
                      {"entities", std::vector<std::string>(s.entities.begin(), s.entities.end())},
                      {"tick", s.tick},
                      {"value", value_to_json(s.value)}});
  }
  doc["state_records"] = std::move(states);

  json reflections = json::array();
  for (const auto& [id, r] : info.reflections()) {
    reflections.push_back({{"id", id},
                           {"media", std::vector<std::string>(r.media.begin(), r.media.end())},
                           {"tick", r.tick},
                           {"value", value_to_json(r.value)}});
  }
  doc["reflection_records"] = std::move(reflections);

  json links = json::array();
  for (const auto& l : info.links()) links.push_back({{"from", l.state}, {"to", l.reflection}});
  doc["links"] = std::move(links);

  if (!weights.tables.empty()) {
    json w = json::object();
    for (const auto& [universe, table] : weights.tables) {
      json t = json::object();
      for (const auto& [token, value] : table) t[token] = format_rational(value);
      w[to_string(universe)] = std::move(t);
    }
    doc["weights"] = std::move(w);
  }
  return doc.dump(2) + "\n";
}

WeightTables parse_weights(std::string_view text) {
  const json doc = parse_json(text);
  Reader rd;
  auto out = rd.weights(doc, "");
  if (!rd.diagnostics.empty()) throw ValidationError(std::move(rd.diagnostics));
  return out;
}

SemanticMapping parse_decoder(std::string_view text) {
  const json doc = parse_json(text);
  Reader rd;
  SemanticMapping mapping;
  const auto* kind = rd.member(doc, "kind", "");
  if (kind != nullptr && *kind == "preimage") {
    mapping.kind = SemanticMapping::Kind::Preimage;
  } else if (kind != nullptr && *kind == "table") {
    mapping.kind = SemanticMapping::Kind::Table;
    const auto* entries = rd.member(doc, "entries", "");
    if (entries != nullptr && entries->is_array()) {
      for (std::size_t i = 0; i < entries->size(); ++i) {
        const auto p = "/entries/" + std::to_string(i);
        const auto* from = rd.member((*entries)[i], "reflection", p);
        const auto* to = rd.member((*entries)[i], "state", p);
        if (from == nullptr || to == nullptr) continue;
        auto k = rd.key(*from, p + "/reflection", "media");
        auto v = rd.key(*to, p + "/state", "entities");
        if (!mapping.table.emplace(std::move(k), std::move(v)).second) {
          rd.fail(p, "duplicate decoder entry for the same reflection triple");
        }
      }
    } else if (entries != nullptr) {
      rd.fail("/entries", "expected an array");
    }
  } else if (kind != nullptr) {
    rd.fail("/kind", "decoder kind must be 'preimage' or 'table'");
  }
  if (!rd.diagnostics.empty()) throw ValidationError(std::move(rd.diagnostics));
  return mapping;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace oit
