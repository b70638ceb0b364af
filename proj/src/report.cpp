#include "oit/report.hpp"

#include "oit/algebra.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace oit {

std::string instance_digest(const Information& info) {
  const auto text = emit_instance(info);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  os << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

namespace {

std::string join_weights(const SuitabilityWeights& w) {
  std::string out;
  for (const auto& x : w) {
    if (!out.empty()) out += ",";
    out += format_rational(x);
  }
  return out;
}

}  // namespace

MetricsResult compute_metrics(const Information& info, const MetricsRequest& request) {
  MetricsResult result;
  auto& report = result.report;
  report.instance_digest = instance_digest(info);

  auto add = [&](std::string name, Rational value, std::map<std::string, std::string> provenance) {
    report.metrics.push_back({std::move(name), std::move(value), std::move(provenance), report.instance_digest});
  };

  using Metric = Rational (*)(const Information&, const MeasureSpec&);
  struct Entry {
    const char* name;
    Metric fn;
    Universe universe;
  };
  static constexpr Entry kMeasured[] = {{"scope", &scope, Universe::Entities},
                                        {"granularity", &granularity, Universe::Entities},
                                        {"sustainability", &sustainability, Universe::Ticks},
                                        {"richness", &richness, Universe::StateRecords},
                                        {"volume", &volume, Universe::Media}};
  for (const auto& e : kMeasured) {
    add(e.name, e.fn(info, MeasureSpec::counting(e.universe)),
        {{"measure", "counting"}, {"universe", to_string(e.universe)}});
  }
  for (const auto& e : kMeasured) {
    if (auto spec = request.weights.measure(e.universe)) {
      add(e.name, e.fn(info, *spec), {{"measure", "weighted"}, {"universe", to_string(e.universe)}});
    }
  }
  add("delay", Rational(delay(info)), {{"atoms", "per-link"}, {"unit", "ticks"}});

  if (request.target) {
    const auto& target = *request.target;
    if (is_sub_information(target, info).is_sub) {
      const bool exhaustive = request.coverage_options.exhaustive && request.coverage_mode == CoverageMode::Union;
      add("coverage", coverage(info, target, request.coverage_mode, request.coverage_options),
          {{"mode", to_string(request.coverage_mode)},
           {"evaluation", exhaustive ? "exhaustive" : "closed-form"},
           {"target", instance_digest(target)}});
    } else {
      result.notes.push_back("coverage skipped: target is not a sub-information of the instance");
    }
    add("suitability",
        suitability(info, TargetSextuple::from(target), request.suitability_weights, request.distance),
        {{"distance", to_string(request.distance)},
         {"weights", join_weights(request.suitability_weights)},
         {"target", instance_digest(target)},
         {"orientation", "lower is closer"}});
  }
  if (request.decoder) {
    add("validity", validity(info, *request.decoder, request.distance),
        {{"decoder", request.decoder->kind == SemanticMapping::Kind::Preimage ? "preimage" : "table"},
         {"distance", to_string(request.distance)},
         {"orientation", "lower is better"}});
  }
  return result;
}

std::string emit_report_json(const ReportDocument& report) {
  nlohmann::json doc;
  doc["version"] = kDocumentVersion;
  doc["tool"] = kToolVersion;
  doc["instance"] = report.instance_digest;
  auto metrics = nlohmann::json::array();
  for (const auto& m : report.metrics) {
    metrics.push_back({{"name", m.name},
                       {"value", format_rational(m.value)},
                       {"approx", to_double(m.value)},
                       {"provenance", m.provenance}});
  }
  doc["metrics"] = std::move(metrics);
  return doc.dump(2) + "\n";
}

std::string emit_report_table(const ReportDocument& report) {
  std::ostringstream os;
  os << "instance " << report.instance_digest << "\n";
  os << std::left << std::setw(16) << "metric" << std::setw(12) << "value" << std::setw(14) << "approx"
     << "provenance\n";
  for (const auto& m : report.metrics) {
    std::string prov;
    for (const auto& [k, v] : m.provenance) {
      if (!prov.empty()) prov += " ";
      prov += k + "=" + v;
    }
    std::ostringstream approx;
    approx << std::setprecision(10) << to_double(m.value);
    os << std::left << std::setw(16) << m.name << std::setw(12) << format_rational(m.value) << std::setw(14)
       << approx.str() << prov << "\n";
  }
  return os.str();
}

}  // namespace oit
