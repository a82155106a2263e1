#include "monopath/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "monopath/arrangements.hpp"
#include "monopath/cli/serialize.hpp"
#include "monopath/cli/svg.hpp"
#include "monopath/coherence.hpp"
#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"
#include "monopath/flips.hpp"
#include "monopath/geometry.hpp"
#include "monopath/subdivisions.hpp"
#include "monopath/verify.hpp"

namespace monopath::cli {

namespace {

struct RunConfig {
  std::string lambda_text;
  std::string word_text;
  std::string partition_text;
  std::optional<int> cap;
  std::string out_path;
  std::string format = "json";

  // subcommand extras
  bool partitions = false;
  bool coherent_only = false;
  std::optional<std::uint64_t> prime;
  std::string s_text;
  double window = 0;
  bool timing = false;
  std::string suite = "all";

  Caps caps;
};

Composition require_lambda(const RunConfig& cfg) {
  if (cfg.lambda_text.empty()) throw InvalidInput("--lambda is required");
  return Composition::parse(cfg.lambda_text);
}

LambdaWord parse_word(const RunConfig& cfg) {
  if (cfg.lambda_text.empty()) return LambdaWord::parse(cfg.word_text);
  return LambdaWord::parse(cfg.word_text, Composition::parse(cfg.lambda_text));
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw InvalidInput("format '" + cfg.format + "' is not available for this command");
}

Json parts_json(const Composition& lambda) { return Json(lambda.parts()); }

// --- count ---------------------------------------------------------------

std::string cmd_count(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const Composition lambda = require_lambda(cfg);
  const Polynomial chi = char_poly_closed(lambda);
  Json out{{"lambda", parts_json(lambda)},
           {"n", lambda.n()},
           {"d", lambda.d()},
           {"multinomial", to_json(multinomial_count(lambda))},
           {"coherent", to_json(coherent_count_formula(lambda))},
           {"regions", to_json(region_count(lambda))},
           {"charpoly", to_json(chi)}};
  if (cfg.prime) {
    out["finite_field"] = {{"q", *cfg.prime},
                           {"count", to_json(char_poly_finite_field(lambda, *cfg.prime, cfg.caps))},
                           {"closed", to_json(chi.evaluate(BigInt(std::to_string(*cfg.prime))))}};
  }
  return out.dump(2) + "\n";
}

// --- check ---------------------------------------------------------------

Json check_word(const LambdaWord& w) {
  const auto system = path_coherence_system(w);
  const auto result = is_coherent_path(w);
  Json out{{"input", "word"},
           {"word", w.to_string()},
           {"lambda", parts_json(w.composition())},
           {"coherent", result.coherent},
           {"non_nesting", is_non_nesting(w)},
           {"nesting_count", nesting_count(w)}};
  if (result.coherent) {
    out["witness"] = {{"aprime", to_json(result.witness->aprime())},
                      {"c", to_json(result.witness->coefficients())},
                      {"delta", to_json(delta_sequence(w, *result.witness))}};
  } else {
    const auto weight = certificate_weight(system, result.feasibility.certificate);
    out["certificate"] = {
        {"cycle", certificate_json(system, result.feasibility.certificate, "y")},
        {"offset_sum", weight.offset},
        {"strict_edges", weight.strict_edges}};
  }
  return out;
}

Json check_partition(const OrderedPartition& rho) {
  const auto system = subdivision_coherence_system(rho);
  const auto result = is_coherent_subdivision(rho);
  Json out{{"input", "partition"},
           {"partition", rho.to_string()},
           {"lambda", parts_json(rho.composition())},
           {"blocks", rho.block_count()},
           {"coherent", result.coherent}};
  if (result.coherent) {
    out["dimension"] = result.dimension;
    out["witness"] = to_json(result.feasibility.witness);
  } else {
    const auto weight = certificate_weight(system, result.feasibility.certificate);
    out["certificate"] = {
        {"cycle", certificate_json(system, result.feasibility.certificate, "x")},
        {"offset_sum", weight.offset},
        {"strict_edges", weight.strict_edges}};
  }
  return out;
}

std::string cmd_check(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  if (cfg.word_text.empty() == cfg.partition_text.empty()) {
    throw InvalidInput("check needs exactly one of --word or --partition");
  }
  if (!cfg.word_text.empty()) return check_word(parse_word(cfg)).dump(2) + "\n";
  const OrderedPartition rho = cfg.lambda_text.empty()
                                   ? OrderedPartition::parse(cfg.partition_text)
                                   : OrderedPartition::parse(cfg.partition_text,
                                                             Composition::parse(cfg.lambda_text));
  return check_partition(rho).dump(2) + "\n";
}

// --- vertices ------------------------------------------------------------

std::string cmd_vertices(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const Composition lambda = require_lambda(cfg);
  Json list = Json::array();
  std::ostringstream csv;
  csv << "word";
  for (int c = 1; c <= lambda.d() + 1; ++c) csv << ",I" << c;
  csv << "\n";
  for_each_word(lambda, [&](std::span<const int> letters) {
    if (!is_non_nesting(letters, lambda.d())) return;
    const LambdaWord w({letters.begin(), letters.end()}, lambda);
    const RationalVector point = path_average(w);
    list.push_back({{"word", w.to_string()}, {"I", to_json(point)}});
    csv << '"' << w.to_string() << '"';
    for (const auto& s : point.to_strings()) csv << ',' << s;
    csv << "\n";
  }, cfg.caps);
  return cfg.format == "csv" ? csv.str() : list.dump(2) + "\n";
}

// --- enumerate -----------------------------------------------------------

std::string cmd_enumerate(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const Composition lambda = require_lambda(cfg);
  Json list = Json::array();
  std::ostringstream csv;
  if (cfg.partitions) {
    csv << "partition,coherent,dimension\n";
    for_each_proper_partition(lambda, [&](const OrderedPartition& rho) {
      const auto result = is_coherent_subdivision(rho);
      if (cfg.coherent_only && !result.coherent) return;
      list.push_back({{"partition", rho.to_string()},
                      {"coherent", result.coherent},
                      {"dimension", result.coherent ? Json(result.dimension) : Json(nullptr)}});
      csv << '"' << rho.to_string() << "\"," << (result.coherent ? "true" : "false") << ','
          << (result.coherent ? std::to_string(result.dimension) : "") << "\n";
    }, cfg.caps);
  } else {
    csv << "word,non_nesting,nesting_count\n";
    WordEnumerator words(lambda, cfg.caps);
    while (auto w = words.next()) {
      const bool coherent = is_non_nesting(*w);
      if (cfg.coherent_only && !coherent) continue;
      const auto nestings = nesting_count(*w);
      list.push_back({{"word", w->to_string()}, {"non_nesting", coherent},
                      {"nesting_count", nestings}});
      csv << '"' << w->to_string() << "\"," << (coherent ? "true" : "false") << ',' << nestings
          << "\n";
    }
  }
  return cfg.format == "csv" ? csv.str() : list.dump(2) + "\n";
}

// --- incoherency ---------------------------------------------------------

std::string cmd_incoherency(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  if (!cfg.word_text.empty()) {
    require_format(cfg, {"json"});
    const LambdaWord w = parse_word(cfg);
    Json out{{"word", w.to_string()},
             {"incoherency", incoherency(w, cfg.caps)},
             {"nesting_count", nesting_count(w)},
             {"non_nesting", is_non_nesting(w)}};
    return out.dump(2) + "\n";
  }
  const Composition lambda = require_lambda(cfg);
  const auto table = incoherency_table(lambda, cfg.caps);
  int maximum = 0;
  for (int v : table) maximum = std::max(maximum, v);
  std::map<int, std::uint64_t> histogram;
  Json attainers = Json::array();
  std::ostringstream csv;
  csv << "word,incoherency\n";
  std::uint64_t rank = 0;
  for_each_word(lambda, [&](std::span<const int> letters) {
    const int value = table[rank++];
    ++histogram[value];
    const LambdaWord w({letters.begin(), letters.end()}, lambda);
    if (value == maximum) attainers.push_back(w.to_string());
    csv << '"' << w.to_string() << "\"," << value << "\n";
  }, Caps::with_length_cap(cfg.caps.bfs_length));
  if (cfg.format == "csv") return csv.str();
  Json hist = Json::object();
  for (const auto& [k, v] : histogram) hist[std::to_string(k)] = v;
  Json out{{"lambda", parts_json(lambda)},
           {"maximum", maximum},
           {"attainers", attainers},
           {"histogram", hist}};
  return out.dump(2) + "\n";
}

// --- coset ---------------------------------------------------------------

std::string cmd_coset(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  if (!cfg.word_text.empty()) {
    const LambdaWord w = parse_word(cfg);
    const CosetLabel label = coset_map(w);
    Json out{{"word", w.to_string()},
             {"modulus", label.modulus()},
             {"representative", label.representative()},
             {"canonical", label.canonical()}};
    return out.dump(2) + "\n";
  }
  const Composition lambda = require_lambda(cfg);
  Json labels = Json::array();
  for_each_word(lambda, [&](std::span<const int> letters) {
    if (!is_non_nesting(letters, lambda.d())) return;
    const LambdaWord w({letters.begin(), letters.end()}, lambda);
    const CosetLabel label = coset_map(w);
    labels.push_back({{"word", w.to_string()},
                      {"representative", label.representative()},
                      {"canonical", label.canonical()}});
  }, cfg.caps);
  Json out{{"lambda", parts_json(lambda)},
           {"modulus", lambda.n() + 1},
           {"count", labels.size()},
           {"bijection", verify_coset_bijection(lambda, cfg.caps)},
           {"labels", labels}};
  return out.dump(2) + "\n";
}

// --- zonotope ------------------------------------------------------------

std::string cmd_zonotope(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const Composition lambda = require_lambda(cfg);
  std::optional<Rational> s;
  if (!cfg.s_text.empty()) s = parse_rational(cfg.s_text);
  const ZonotopeSpec spec = zonotope_generators(lambda, s);
  Json pairs = Json::array();
  for (const auto& g : spec.pair_generators) {
    pairs.push_back({{"i", g.i}, {"j", g.j}, {"k", g.k}, {"l", g.l}, {"vector", to_json(g.direction)}});
  }
  Json generators = Json::array();
  for (const auto& g : spec.generators()) generators.push_back(to_json(g));
  Json out{{"lambda", parts_json(lambda)},
           {"count", spec.generator_count()},
           {"s", to_json(spec.vertical)},
           {"scale", to_json(spec.scale)},
           {"pairs", pairs},
           {"generators", generators}};
  return out.dump(2) + "\n";
}

// --- plot ----------------------------------------------------------------

std::string cmd_plot(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "svg") require_format(cfg, {"svg"});
  const Composition lambda = require_lambda(cfg);
  const double window = cfg.window > 0 ? cfg.window : lambda.n();
  return slice_svg(lambda, window);
}

// --- verify --------------------------------------------------------------

std::string cmd_verify(const RunConfig& cfg, bool& all_passed) {
  require_format(cfg, {"json"});
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(cfg.suite);
  }
  Json suites = Json::array();
  all_passed = true;
  for (const auto& name : names) {
    const SuiteReport report = run_suite(name, cfg.caps);
    all_passed = all_passed && report.passed();
    suites.push_back(to_json(report, cfg.timing));
  }
  Json out = names.size() == 1 ? suites.front() : Json{{"passed", all_passed}, {"suites", suites}};
  return out.dump(2) + "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw InvalidInput("cannot write " + cfg.out_path);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Monotone path polytopes of lifted piles of cubes: coherence, counts, geometry",
               "monopath"};
  app.require_subcommand(1);
  app.add_option("--lambda", cfg.lambda_text, "composition, e.g. 2,2,2");
  app.add_option("--word", cfg.word_text, "lambda-permutation, e.g. 1,2,1,3,2,3 or 121323");
  app.add_option("--partition", cfg.partition_text, "ordered partition, e.g. 1|1,2|2|1,2|1");
  app.add_option("--cap", cfg.cap, "limit on n for exhaustive scans (overrides MONOPATH_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_path, "write output to FILE");
  app.add_option("--format", cfg.format, "json | csv | svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}));

  auto* count = app.add_subcommand("count", "multinomial, coherent, region counts and chi");
  count->add_option("--prime", cfg.prime, "also count points over F_q");
  auto* check = app.add_subcommand("check", "coherence of a word or a partition");
  auto* vertices = app.add_subcommand("vertices", "I-points of all coherent words");
  auto* enumerate = app.add_subcommand("enumerate", "list words or proper ordered partitions");
  enumerate->add_flag("--partitions", cfg.partitions, "enumerate proper ordered partitions");
  enumerate->add_flag("--coherent-only", cfg.coherent_only, "keep coherent items only");
  auto* incoh = app.add_subcommand("incoherency", "flip distance to a coherent word");
  auto* coset = app.add_subcommand("coset", "first-position coset labels of regions");
  auto* zonotope = app.add_subcommand("zonotope", "generators of Z_d(lambda)");
  zonotope->add_option("--s", cfg.s_text, "length of the vertical summand (rational)");
  auto* plot = app.add_subcommand("plot", "SVG of a d = 3 arrangement on x1+x2+x3=0");
  plot->add_option("--window", cfg.window, "half width of the plotted square");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "suite name or 'all'");
  verify->add_flag("--timing", cfg.timing, "include run times in the report");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (const char* env = std::getenv("MONOPATH_CAP"); env && *env && !cfg.cap) {
      try {
        cfg.cap = std::stoi(env);
      } catch (const std::exception&) {
        throw InvalidInput("MONOPATH_CAP must be an integer");
      }
      if (*cfg.cap < 1) throw InvalidInput("MONOPATH_CAP must be positive");
    }
    if (cfg.cap) {
      cfg.caps.word_length = *cfg.cap;
      cfg.caps.bfs_length = *cfg.cap;
      cfg.caps.partition_length = *cfg.cap;
    }

    std::string text;
    int code = kOk;
    if (count->parsed()) text = cmd_count(cfg);
    else if (check->parsed()) text = cmd_check(cfg);
    else if (vertices->parsed()) text = cmd_vertices(cfg);
    else if (enumerate->parsed()) text = cmd_enumerate(cfg);
    else if (incoh->parsed()) text = cmd_incoherency(cfg);
    else if (coset->parsed()) text = cmd_coset(cfg);
    else if (zonotope->parsed()) text = cmd_zonotope(cfg);
    else if (plot->parsed()) text = cmd_plot(cfg);
    else if (verify->parsed()) {
      bool passed = false;
      text = cmd_verify(cfg, passed);
      code = passed ? kOk : kVerificationFailed;
    }
    emit(cfg, text, out);
    return code;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace monopath::cli
