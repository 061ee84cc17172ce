// vtypes: classify graphs by vertex type, build extremal constructions,
// enumerate small graphs and run the exhaustive verification suite.
//
// Exit codes: 0 success / all claims pass, 1 a claim failed, 2 usage or
// parse error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "vtypes/json.hpp"
#include "vtypes/vtypes.hpp"

namespace {

using namespace vtypes;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommandConfig {
  std::string input;
  std::string output;
  std::string format = "graph6";
  int jobs = 1;
  int guard = kDefaultEnumGuard;
  bool allow_large = false;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output stream: the --output file when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int checked_guard(const CommandConfig& cfg) {
  if (cfg.guard > kDefaultEnumGuard && !cfg.allow_large)
    throw UsageError("--guard above " + std::to_string(kDefaultEnumGuard) +
                     " needs --allow-large-guard");
  if (cfg.guard > kMaxOrder) throw UsageError("--guard cannot exceed " + std::to_string(kMaxOrder));
  return cfg.guard;
}

void write_graph(std::ostream& os, const WideGraph& g, const std::string& format) {
  if (format == "graph6") {
    os << emit_graph6(g) << '\n';
  } else if (format == "edge-list") {
    os << emit_edge_list(g);
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["graph6"] = emit_graph6(g);
    j["order"] = g.order();
    j["size"] = g.size();
    j["edges"] = g.edges();
    os << j.dump() << '\n';
  } else {
    throw UsageError("unknown --format " + format);
  }
}

int cmd_classify(const CommandConfig& cfg) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!cfg.input.empty() && cfg.input != "-") {
    file.open(cfg.input);
    if (!file) throw UsageError("cannot open " + cfg.input);
    in = &file;
  }
  Sink sink(cfg.output);
  if (cfg.format == "edge-list") {
    sink.out() << classification_json(parse_edge_list<WideGraph>(*in)).dump() << '\n';
    return 0;
  }
  if (cfg.format != "graph6") throw UsageError("classify reads graph6 or edge-list");
  int status = 0;
  std::string line;
  for (int lineno = 1; std::getline(*in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      sink.out() << classification_json(parse_graph6<WideGraph>(line)).dump() << '\n';
    } catch (const GraphError& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      status = kExitUsage;
    }
  }
  return status;
}

int cmd_construct(const CommandConfig& cfg, const std::string& family, int n, bool check) {
  WideGraph g;
  std::string check_line;
  try {
    if (family == "vt") {
      g = vt_extremal<WideGraph>(n);
      check_line = "very_typical=" + std::to_string(type_tuple(g)[VertexType::VeryTypical]);
    } else if (family == "t") {
      g = t_extremal<WideGraph>(n);
      check_line = "typical=" + std::to_string(type_tuple(g)[VertexType::Typical]);
    } else if (family == "pantypical") {
      g = pantypical_graph<WideGraph>(n);
      check_line = std::string("pantypical=") + (is_pantypical(g) ? "true" : "false");
    } else {
      throw UsageError("unknown family " + family + " (vt | t | pantypical)");
    }
  } catch (const GraphError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  Sink sink(cfg.output);
  write_graph(sink.out(), g, cfg.format);
  if (check) sink.out() << check_line << '\n';
  return 0;
}

int cmd_enumerate(const CommandConfig& cfg, int n, int min_degree, int max_degree,
                  bool count_only) {
  EnumConstraint c;
  if (min_degree >= 0) c.min_degree = min_degree;
  if (max_degree >= 0) c.max_degree = max_degree;
  EnumOptions opt;
  opt.jobs = cfg.jobs;
  opt.ordered = true;
  opt.guard = checked_guard(cfg);
  Sink sink(cfg.output);
  std::ostream& os = sink.out();
  std::uint64_t total = 0;
  if (count_only) {
    total = enumerate_graphs(n, c, [](const Graph&) {}, opt);
    os << total << '\n';
    return 0;
  }
  enumerate_graphs(
      n, c, [&](const Graph& g) { write_graph(os, convert<WideGraph>(g), cfg.format); }, opt);
  return 0;
}

int cmd_verify(const CommandConfig& cfg, const std::string& claim, int n_max, bool timing) {
  SweepOptions so;
  so.jobs = cfg.jobs;
  so.guard = checked_guard(cfg);
  SweepCache cache(so);
  std::vector<VerifyReport> reports;
  auto add = [&](std::vector<VerifyReport> more) {
    reports.insert(reports.end(), more.begin(), more.end());
  };
  auto need = [&](int n) {
    if (n > so.guard)
      throw UsageError("n_max " + std::to_string(n) + " exceeds guard " +
                       std::to_string(so.guard));
  };
  const bool all = claim == "all";
  if (all || claim == "theorem1") {
    const int m = n_max > 0 ? n_max : 9;
    need(m);
    add(verify_theorem1(m, cache));
  }
  if (all || claim == "theorem3") {
    const int m = n_max > 0 ? n_max : 9;
    need(m);
    add(verify_theorem3(m, cache));
  }
  if (all || claim == "corollary2") {
    need(9);
    add(verify_corollary2(cache));
  }
  if (all || claim == "figure1") add({verify_figure1(so)});
  if (all || claim == "pansize") {
    const int m = n_max > 0 ? n_max : kMinPantypicalOrder;
    need(m);
    add(verify_pansize(m, cache));
  }
  if (reports.empty())
    throw UsageError("unknown claim " + claim +
                     " (theorem1 | theorem3 | corollary2 | figure1 | pansize | all)");
  Sink sink(cfg.output);
  bool ok = true;
  for (auto& r : reports) {
    if (!timing) r.millis = 0;
    ok &= r.pass;
    sink.out() << to_json(r).dump() << '\n';
  }
  if (!sink.out()) throw std::runtime_error("report write failed");
  return ok ? 0 : kExitFail;
}

// Regenerates witness fixtures: one JSON document per objective in the
// output directory, and optionally the embedded C++ table.
int cmd_search(const CommandConfig& cfg, const std::string& which, const std::string& header) {
  SearchOptions opt;
  opt.seed = cfg.seed;
  opt.jobs = cfg.jobs;
  SweepOptions so;
  so.jobs = cfg.jobs;
  SweepCache cache(so);
  std::vector<std::pair<std::string, std::vector<FixtureRecord>>> groups;
  const bool all = which == "all";
  if (all || which == "t") groups.emplace_back(objective::kTMax, search_t_fixtures(cache));
  if (all || which == "vt") groups.emplace_back(objective::kVtMax, search_vt_fixtures(cache, opt));
  if (all || which == "pantypical")
    groups.emplace_back(objective::kPantypical, search_pantypical_fixture(opt));
  if (all || which == "figure1")
    groups.emplace_back(objective::kFigure1, search_figure1_fixture(opt));
  if (groups.empty()) throw UsageError("unknown objective " + which + " (vt | t | pantypical | figure1 | all)");

  const std::filesystem::path dir = cfg.output.empty() ? "." : cfg.output;
  std::filesystem::create_directories(dir);
  for (const auto& [name, records] : groups) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : records) doc.push_back(to_json(r));
    std::ofstream f(dir / (name + ".json"));
    f << doc.dump(2) << '\n';
    std::cerr << "wrote " << (dir / (name + ".json")).string() << '\n';
  }
  if (!header.empty()) {
    std::ostringstream rows;
    int count = 0;
    for (const auto& [name, records] : groups)
      for (const auto& r : records)
        for (std::size_t i = 0; i < r.graph6.size(); ++i, ++count)
          rows << "    {\"" << r.objective << "\", " << r.order << ", \"" << r.graph6[i]
               << "\", " << r.achieved[i] << "},\n";
    std::ofstream h(header);
    h << "#pragma once\n\n#include <array>\n#include <span>\n#include <string_view>\n\n"
         "namespace vtypes {\n\n"
         "/// Small-order witness graphs found by exhaustive or targeted search and\n"
         "/// frozen here. `vtypes search all --output fixtures` regenerates them; the\n"
         "/// JSON files under fixtures/ mirror this table.\n"
         "struct WitnessFixture {\n  std::string_view objective;\n  int order;\n"
         "  std::string_view graph6;\n  int achieved;\n};\n\n"
         "inline constexpr int kFixtureGeneratorVersion = "
      << kFixtureGeneratorVersion
      << ";\n\n// clang-format off\ninline constexpr std::array<WitnessFixture, " << count
      << "> kWitnessFixtures = {{\n"
      << rows.str()
      << "}};\n// clang-format on\n\n"
         "inline std::span<const WitnessFixture> witness_fixtures() { return kWitnessFixtures; }\n\n"
         "}  // namespace vtypes\n";
    std::cerr << "wrote " << header << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-type classification, extremal constructions and exhaustive checks"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Output path (default: stdout)");
    sub->add_option("-j,--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--guard", cfg.guard, "Largest order enumerated exhaustively");
    sub->add_flag("--allow-large-guard", cfg.allow_large, "Acknowledge a guard above the default");
  };

  auto* classify = app.add_subcommand("classify", "Classify graphs read one per line");
  classify->add_option("input", cfg.input, "Input file (default: stdin)");
  classify->add_option("--format", cfg.format, "graph6 | edge-list");
  add_common(classify);

  std::string family;
  int order = 0;
  bool check = false;
  auto* construct = app.add_subcommand("construct", "Emit an extremal construction");
  construct->add_option("family", family, "vt | t | pantypical")->required();
  construct->add_option("n", order, "Order")->required();
  construct->add_flag("--check", check, "Re-classify and print the achieved count");
  construct->add_option("--format", cfg.format, "graph6 | edge-list | json");
  add_common(construct);

  int min_degree = -1;
  int max_degree = -1;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream one graph per isomorphism class");
  enumerate->add_option("n", order, "Order")->required();
  enumerate->add_option("--min-degree", min_degree, "Minimum degree filter");
  enumerate->add_option("--max-degree", max_degree, "Maximum degree bound (prunes)");
  enumerate->add_flag("--count", count_only, "Print only the number of classes");
  enumerate->add_option("--format", cfg.format, "graph6 | edge-list | json");
  add_common(enumerate);
  add_guard(enumerate);

  std::string claim;
  int n_max = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Check a claim; JSON report per line");
  verify->add_option("claim", claim, "theorem1 | theorem3 | corollary2 | figure1 | pansize | all")
      ->required();
  verify->add_option("--n-max", n_max, "Largest order checked exhaustively");
  verify->add_flag("--timing", timing, "Record elapsed milliseconds (otherwise 0)");
  add_common(verify);
  add_guard(verify);

  std::string objective_name;
  std::string header;
  auto* search = app.add_subcommand("search", "Regenerate witness fixtures");
  search->add_option("objective", objective_name, "vt | t | pantypical | figure1 | all")
      ->required();
  search->add_option("--seed", cfg.seed, "Seed for randomized search");
  search->add_option("--header", header, "Also write the embedded fixture table here");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(cfg);
    if (*construct) return cmd_construct(cfg, family, order, check);
    if (*enumerate) return cmd_enumerate(cfg, order, min_degree, max_degree, count_only);
    if (*verify) return cmd_verify(cfg, claim, n_max, timing);
    if (*search) return cmd_search(cfg, objective_name, header);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
