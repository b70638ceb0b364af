#include "oit/cli.hpp"

#include "oit/algebra.hpp"
#include "oit/classic.hpp"
#include "oit/flow.hpp"
#include "oit/instance_io.hpp"
#include "oit/report.hpp"
#include "oit/synthetic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace oit {

namespace {

// Bad flag values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<double> parse_probs(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_csv(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--probs: '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw UsageError("--probs: no probabilities given");
  return out;
}

SuitabilityWeights parse_suit_weights(const std::string& text) {
  const auto items = split_csv(text);
  if (items.size() != 6) throw UsageError("--suit-weights expects six comma-separated values");
  SuitabilityWeights w;
  for (std::size_t i = 0; i < 6; ++i) {
    try {
      w[i] = parse_rational(items[i]);
    } catch (const Error& e) {
      throw UsageError(std::string("--suit-weights: ") + e.what());
    }
  }
  return w;
}

std::size_t default_guard() {
  if (const char* env = std::getenv("OIT_GUARD"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw UsageError("OIT_GUARD must be a positive integer");
  }
  return kDefaultEnumerationGuard;
}

CoverageMode parse_mode(const std::string& s) { return s == "union" ? CoverageMode::Union : CoverageMode::Replica; }

DistanceKind parse_distance(const std::string& s) {
  return s == "numeric-l1" ? DistanceKind::NumericL1 : DistanceKind::Jaccard;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("io", "cannot write '" + path + "'");
  f << text;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

InstanceDocument load(const std::string& path) { return parse_instance_document(read_file(path)); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Objective information sextuples: validation, algebra and metrics", "oit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const std::vector<std::string> formats = {"json", "table"};
  const std::vector<std::string> modes = {"union", "replica"};
  const std::vector<std::string> distances = {"jaccard", "numeric-l1"};

  std::string file, file_b, output, target, weights_file, decoder_file, suit_weights;
  std::string format = "table", mode = "replica", distance = "jaccard", probs;
  bool lax = false, brute_force = false;
  std::size_t guard = 0;
  std::int64_t n = 0, s = 0;
  double base = 2.0, k_scale = 1.0;
  std::uint64_t seed = 0;
  SyntheticProfile profile;
  std::string sub_output;

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance document");
  validate_cmd->add_option("file", file, "Instance document")->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "Compute every applicable metric");
  metrics_cmd->add_option("file", file, "Instance document")->required();
  metrics_cmd->add_option("--weights", weights_file, "Weight tables (overrides the document's)");
  metrics_cmd->add_option("--coverage-mode", mode, "Coverage mode")->check(CLI::IsMember(modes));
  metrics_cmd->add_option("--target", target, "Target instance for coverage and suitability");
  metrics_cmd->add_option("--decoder", decoder_file, "Decoder document for validity");
  metrics_cmd->add_option("--suit-weights", suit_weights, "Six suitability weights w1,...,w6");
  metrics_cmd->add_option("--distance", distance, "Record distance")->check(CLI::IsMember(distances));
  metrics_cmd->add_flag("--brute-force", brute_force, "Evaluate union coverage by exhaustive enumeration");
  metrics_cmd->add_option("--guard", guard, "Enumeration guard (reflection records)");
  metrics_cmd->add_option("--out", format, "Output format")->check(CLI::IsMember(formats));

  auto* atoms_cmd = app.add_subcommand("atoms", "List the atomic sub-informations");
  atoms_cmd->add_option("file", file, "Instance document")->required();

  auto* compose_cmd = app.add_subcommand("compose", "Relay the first instance through the second");
  compose_cmd->add_option("a", file, "First instance")->required();
  compose_cmd->add_option("b", file_b, "Second instance")->required();
  compose_cmd->add_option("-o,--output", output, "Output document (stdout if omitted)");

  auto* combine_cmd = app.add_subcommand("combine", "Combine two instances");
  combine_cmd->add_option("a", file, "First instance")->required();
  combine_cmd->add_option("b", file_b, "Second instance")->required();
  combine_cmd->add_flag("--lax", lax, "Allow a state's links to come from both operands");
  combine_cmd->add_option("-o,--output", output, "Output document (stdout if omitted)");

  auto* coverage_cmd = app.add_subcommand("coverage", "Coverage of a target sub-information");
  coverage_cmd->add_option("file", file, "Instance document")->required();
  coverage_cmd->add_option("--target", target, "Target sub-information")->required();
  coverage_cmd->add_option("--mode", mode, "Coverage mode")->check(CLI::IsMember(modes));
  coverage_cmd->add_flag("--brute-force", brute_force, "Exhaustive enumeration (union mode)");
  coverage_cmd->add_option("--guard", guard, "Enumeration guard (reflection records)");
  coverage_cmd->add_option("--out", format, "Output format")->check(CLI::IsMember(formats));

  auto* entropy_cmd = app.add_subcommand("entropy", "Shannon entropy of a distribution");
  entropy_cmd->add_option("--probs", probs, "p1,p2,...")->required();
  entropy_cmd->add_option("--base", base, "Logarithm base");
  entropy_cmd->add_option("--k", k_scale, "Scale constant");

  auto* hartley_cmd = app.add_subcommand("hartley", "Hartley information n log S");
  hartley_cmd->add_option("--n", n, "Message length")->required();
  hartley_cmd->add_option("--s", s, "Alphabet size")->required();
  hartley_cmd->add_option("--base", base, "Logarithm base");

  auto* demo_cmd = app.add_subcommand("demo", "Demonstrations");
  demo_cmd->require_subcommand(1);
  auto* shannon_cmd = demo_cmd->add_subcommand("shannon", "Carrier volume of a coded message vs. entropy");
  shannon_cmd->add_option("--probs", probs, "p1,p2,...")->required();
  shannon_cmd->add_option("--n", n, "Message length")->required();
  shannon_cmd->add_option("--seed", seed, "Sampling seed")->required();
  shannon_cmd->add_option("--out", format, "Output format")->check(CLI::IsMember(formats));
  shannon_cmd->add_option("--emit-instance", output, "Also write the message instance here");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded synthetic instance");
  gen_cmd->add_option("--seed", seed, "Seed")->required();
  gen_cmd->add_option("--entities", profile.entities, "Entity count");
  gen_cmd->add_option("--media", profile.media, "Media count");
  gen_cmd->add_option("--span", profile.tick_span, "Occurrence tick span");
  gen_cmd->add_option("--replication", profile.replication, "Maximum reflections per state");
  gen_cmd->add_option("--aggregation", profile.aggregation, "Aggregation probability");
  gen_cmd->add_option("-o,--output", output, "Output document (stdout if omitted)");
  gen_cmd->add_option("--sub-out", sub_output, "Also write the random sub-information here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (guard == 0) guard = default_guard();

    if (*validate_cmd) {
      const auto diagnostics = check_instance_document(read_file(file));
      if (!diagnostics.empty()) {
        for (const auto& d : diagnostics) err << d.to_string() << "\n";
        return kExitInvalid;
      }
      const auto info = parse_instance(read_file(file));
      out << "valid: " << info.states().size() << " state records, " << info.reflections().size()
          << " reflection records, " << info.links().size() << " links\n";
      return kExitOk;
    }

    if (*metrics_cmd) {
      auto doc = load(file);
      MetricsRequest request;
      request.weights = weights_file.empty() ? doc.weights : parse_weights(read_file(weights_file));
      if (!target.empty()) request.target = load(target).info;
      if (!decoder_file.empty()) request.decoder = parse_decoder(read_file(decoder_file));
      if (!suit_weights.empty()) request.suitability_weights = parse_suit_weights(suit_weights);
      request.coverage_mode = parse_mode(mode);
      request.coverage_options = {brute_force, guard};
      request.distance = parse_distance(distance);
      auto result = compute_metrics(doc.info, request);
      for (const auto& note : result.notes) err << note << "\n";
      out << (format == "json" ? emit_report_json(result.report) : emit_report_table(result.report));
      return kExitOk;
    }

    if (*atoms_cmd) {
      const auto info = load(file).info;
      nlohmann::json doc;
      doc["instance"] = instance_digest(info);
      auto list = nlohmann::json::array();
      for (const auto& a : atoms(info)) list.push_back({{"from", a.link.state}, {"to", a.link.reflection}});
      doc["count"] = list.size();
      doc["atoms"] = std::move(list);
      out << doc.dump(2) << "\n";
      return kExitOk;
    }

    if (*compose_cmd) {
      write_output(output, emit_instance(compose(load(file).info, load(file_b).info)), out);
      return kExitOk;
    }

    if (*combine_cmd) {
      const auto result = combine(load(file).info, load(file_b).info, lax ? CombineMode::Lax : CombineMode::Strict);
      write_output(output, emit_instance(result), out);
      return kExitOk;
    }

    if (*coverage_cmd) {
      const auto info = load(file).info;
      const auto tgt = load(target).info;
      const auto m = parse_mode(mode);
      ReportDocument report;
      report.instance_digest = instance_digest(info);
      const bool exhaustive = brute_force && m == CoverageMode::Union;
      report.metrics.push_back({"coverage",
                                coverage(info, tgt, m, {brute_force, guard}),
                                {{"mode", mode},
                                 {"evaluation", exhaustive ? "exhaustive" : "closed-form"},
                                 {"target", instance_digest(tgt)}},
                                report.instance_digest});
      out << (format == "json" ? emit_report_json(report) : emit_report_table(report));
      return kExitOk;
    }

    if (*entropy_cmd) {
      out << format_double(shannon_entropy(Distribution(parse_probs(probs)), base, k_scale)) << "\n";
      return kExitOk;
    }

    if (*hartley_cmd) {
      out << format_double(hartley_information(n, s, base)) << "\n";
      return kExitOk;
    }

    if (*shannon_cmd) {
      const auto demo = volume_entropy_demo(Distribution(parse_probs(probs)), n, seed);
      if (!output.empty()) write_output(output, emit_instance(demo.info), out);
      if (format == "json") {
        nlohmann::json doc;
        doc["alphabet"] = demo.alphabet;
        doc["message_length"] = demo.message.size();
        doc["cells_per_symbol"] = demo.cells_per_symbol;
        doc["volume"] = format_rational(demo.volume);
        doc["hartley"] = demo.hartley;
        doc["entropy_bound"] = demo.entropy_bound;
        doc["rounds_up"] = demo.rounds_up;
        doc["bound_holds"] = demo.bound_holds;
        out << doc.dump(2) << "\n";
      } else {
        out << "alphabet        " << demo.alphabet << "\n"
            << "message length  " << demo.message.size() << "\n"
            << "volume          " << format_rational(demo.volume) << "\n"
            << "hartley         " << format_double(demo.hartley) << "\n"
            << "entropy bound   " << format_double(demo.entropy_bound) << "\n"
            << "rounds up       " << (demo.rounds_up ? "yes" : "no") << "\n";
      }
      if (!demo.bound_holds) {
        err << "volume is below the entropy bound\n";
        return kExitInvalid;
      }
      return kExitOk;
    }

    if (*gen_cmd) {
      const auto generated = generate_synthetic(seed, profile);
      write_output(output, emit_instance(generated.info), out);
      if (!sub_output.empty()) {
        write_output(sub_output, emit_instance(restrict_to_links(generated.info, generated.sub_links)), out);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    for (const auto& d : e.diagnostics()) err << d.to_string() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    const std::string message = e.what();
    if (message.rfind(e.kind(), 0) != 0) err << e.kind() << ": ";
    err << message << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace oit
