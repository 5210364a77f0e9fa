#include "gemcalc/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gemcalc/cycle_decomp.hpp"
#include "gemcalc/dim4.hpp"
#include "gemcalc/embeddings.hpp"
#include "gemcalc/generator.hpp"
#include "gemcalc/report.hpp"
#include "gemcalc/verify.hpp"

namespace gemcalc {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path.string());
  out << text;
  if (!out) throw PreconditionError("failed writing " + path.string());
}

// Prints a report, or writes it to `path` and prints where it went.
void emit(std::ostream& out, const std::string& path, const std::string& body) {
  if (path.empty()) {
    out << body;
  } else {
    write_file(path, body);
    out << "wrote " << path << "\n";
  }
}

std::string render(const Json& j, const std::string& text, const std::string& format) {
  return format == "json" ? j.dump(2) + "\n" : text;
}

std::string cycle_text(const HamCycle& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "-" : "") + std::to_string(c[i]);
  return s;
}

struct AnalyzeArgs {
  std::string path, metadata, out, format = "text";
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const ColoredGraph g = parse_gem(read_file(a.path));
  std::optional<Metadata> metadata;
  if (!a.metadata.empty()) metadata = parse_metadata(read_file(a.metadata));
  const auto report = analyze(g, metadata);
  emit(out, a.out, render(report.to_json(), report.to_text(), a.format));
  if (!report.ok()) {
    err << "violation: " << report.first_violation() << " fails on " << serialize_gem(g) << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

struct VerifyArgs {
  int d = 4;
  std::string mode = "random";
  std::size_t p = 0, min_p = 0, max_p = 0, count = 1000;
  std::uint64_t seed = 1;
  bool bipartite = false;
  unsigned threads = 0;
  std::string out, format = "text";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  CampaignOptions o;
  o.d = a.d;
  o.mode = a.mode == "exhaustive" ? CampaignMode::exhaustive : CampaignMode::random;
  if (a.p > 0) {
    o.min_p = o.max_p = a.p;
  } else {
    o.max_p = a.max_p > 0 ? a.max_p : (o.mode == CampaignMode::exhaustive ? 2 : 4);
    o.min_p = a.min_p > 0 ? a.min_p : 1;
  }
  o.count = a.count;
  o.seed = a.seed;
  o.bipartite_only = a.bipartite;
  o.threads = a.threads;
  const auto report = run_campaign(o);
  emit(out, a.out, render(report.to_json(), report.to_text(), a.format));
  if (!report.ok()) {
    err << "violation: " << report.counterexample->check << " fails on " << report.counterexample->gem << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

struct DecomposeArgs {
  int n = 0;
  bool full = false;
  std::string out, format = "text";
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "decompose";
  j["n"] = a.n;
  std::ostringstream text;
  auto class_lines = [&](const DecompositionClass& c, std::size_t index) {
    text << "class " << index << ":";
    for (const auto& cycle : c.cycles) text << " " << cycle_text(cycle);
    text << "\n";
  };

  if (a.full) {
    if (a.n < 3 || a.n > 7) throw PreconditionError("full partitions are available for 3 <= n <= 7");
    const PermPartition& partition = canonical_partition(a.n);
    if (!validate_partition(partition)) {
      err << "violation: partition of K_" << a.n << " failed validation\n";
      return kExitViolation;
    }
    j["partition"] = to_json(partition);
    text << "n = " << a.n << ", " << partition.classes.size() << " classes, each edge covered "
         << (a.n % 2 == 1 ? "once" : "twice") << " per class\n";
    for (std::size_t i = 0; i < partition.classes.size(); ++i) class_lines(partition.classes[i], i);
  } else {
    DecompositionClass c;
    if (a.n % 2 == 1) {
      if (a.n < 3 || a.n > static_cast<int>(kMaxColors)) {
        throw PreconditionError("Walecki decompositions are available for odd 3 <= n <= " + std::to_string(kMaxColors));
      }
      c = walecki_decomposition(a.n);
      j["construction"] = "walecki";
    } else {
      if (a.n != 4 && a.n != 6) throw PreconditionError("even n must be 4 or 6");
      c = canonical_partition(a.n).classes.front();
      j["construction"] = "first_class";
    }
    if (!validate_class(c)) {
      err << "violation: class for K_" << a.n << " failed validation\n";
      return kExitViolation;
    }
    j["class"] = to_json(c);
    class_lines(c, 0);
  }
  emit(out, a.out, render(j, text.str(), a.format));
  return kExitOk;
}

struct GenerateArgs {
  int d = 4;
  std::size_t p = 1, count = 1;
  std::uint64_t seed = 0;
  bool bipartite = false, nonbipartite = false, allow_disconnected = false;
  std::string out = ".", format = "text";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream&) {
  GenSpec spec;
  spec.d = a.d;
  spec.p = a.p;
  spec.count = a.count;
  spec.seed = a.seed;
  spec.connected_only = !a.allow_disconnected;
  spec.bipartite_only = a.bipartite;
  spec.nonbipartite_only = a.nonbipartite;
  const auto graphs = random_gem(spec);

  const std::filesystem::path dir(a.out);
  std::filesystem::create_directories(dir);
  const int width = std::max<int>(4, static_cast<int>(std::to_string(graphs.size()).size()));
  Json files = Json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::ostringstream name;
    name << "gem_" << std::setw(width) << std::setfill('0') << i + 1 << ".json";
    write_file(dir / name.str(), serialize_gem(graphs[i]) + "\n");
    files.push_back({{"file", name.str()},
                     {"bipartite", is_bipartite(graphs[i])},
                     {"connected", is_connected(graphs[i])},
                     {"euler_characteristic", euler_characteristic_complex(graphs[i])}});
  }
  Json manifest;
  manifest["schema"] = kReportSchema;
  manifest["command"] = "generate";
  manifest["spec"] = {{"d", spec.d},
                      {"p", spec.p},
                      {"count", spec.count},
                      {"seed", spec.seed},
                      {"connected_only", spec.connected_only},
                      {"bipartite_only", spec.bipartite_only},
                      {"nonbipartite_only", spec.nonbipartite_only}};
  manifest["files"] = files;
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  std::ostringstream text;
  text << "wrote " << graphs.size() << " gems (d = " << spec.d << ", p = " << spec.p << ", seed = " << spec.seed
       << ") and manifest.json to " << dir.string() << "\n";
  out << render(manifest, text.str(), a.format);
  return kExitOk;
}

struct SearchOddArgs {
  int d = 4;
  std::size_t max_p = 8;
  std::string out, format = "text";
};

int cmd_search_odd(const SearchOddArgs& a, std::ostream& out, std::ostream& err) {
  if (a.d != 4 && a.d != 6) throw PreconditionError("search-odd supports d = 4 or d = 6");
  if (a.max_p < 1) throw PreconditionError("search-odd needs --max-p >= 1");
  const auto found = search_odd_reduced(a.d, a.max_p);
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "search-odd";
  j["d"] = a.d;
  j["max_p"] = a.max_p;
  j["found"] = found.has_value();
  std::ostringstream text;
  if (!found) {
    j["gem"] = nullptr;
    text << "none found for d = " << a.d << ", p <= " << a.max_p << "\n";
    out << render(j, text.str(), a.format);
    return kExitOk;
  }
  const auto& g = *found;
  const std::int64_t reduced = reduced_g_degree(g);
  const bool bipartite = is_bipartite(g);
  const bool singular = a.d == 4 && is_singular_4_manifold(g);
  j["gem"] = Json::parse(serialize_gem(g));
  Json v;
  v["p"] = g.half_order();
  v["reduced_g_degree"] = reduced;
  v["odd"] = reduced % 2 != 0;
  v["bipartite"] = bipartite;
  if (a.d == 4) v["singular_manifold"] = singular;
  j["verification"] = v;
  if (!a.out.empty()) write_file(a.out, serialize_gem(g) + "\n");

  text << "witness for d = " << a.d << " at p = " << g.half_order() << ": reduced degree " << reduced
       << ", bipartite " << (bipartite ? "yes" : "no");
  if (a.d == 4) text << ", singular manifold " << (singular ? "yes" : "no");
  text << "\n" << serialize_gem(g) << "\n";
  if (!a.out.empty()) text << "wrote " << a.out << "\n";
  out << render(j, text.str(), a.format);
  if (bipartite || singular) {
    err << "violation: odd reduced degree on a " << (bipartite ? "bipartite" : "singular-manifold") << " graph\n";
    return kExitViolation;
  }
  return kExitOk;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Invariants of edge-colored graphs encoding PL pseudomanifolds", "gemcalc");
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report every invariant of one gem file");
  analyze_cmd->add_option("gem", analyze_args.path, "Gem JSON file")->required();
  analyze_cmd->add_option("--metadata", analyze_args.metadata, "Crystallization metadata JSON file");
  analyze_cmd->add_option("--out", analyze_args.out, "Write the report here");
  add_format(analyze_cmd, analyze_args.format);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check every identity over a corpus of gems");
  verify_cmd->add_option("--d", verify_args.d, "Dimension")->check(CLI::Range(2, kMaxDimension));
  verify_cmd->add_option("--mode", verify_args.mode, "Corpus")->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--p", verify_args.p, "Single half-order");
  verify_cmd->add_option("--min-p", verify_args.min_p, "Smallest half-order (default 1)");
  verify_cmd->add_option("--max-p", verify_args.max_p, "Largest half-order (default 2 exhaustive, 4 random)");
  verify_cmd->add_option("--count", verify_args.count, "Random samples per half-order")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_args.seed, "Random seed");
  verify_cmd->add_flag("--bipartite", verify_args.bipartite, "Sample bipartite gems only");
  verify_cmd->add_option("--threads", verify_args.threads, "Workers (default GEMCALC_THREADS or all cores)");
  verify_cmd->add_option("--out", verify_args.out, "Write the report here");
  add_format(verify_cmd, verify_args.format);

  DecomposeArgs decompose_args;
  auto* decompose_cmd = app.add_subcommand("decompose", "Hamiltonian cycle decompositions of K_n");
  decompose_cmd->add_option("--n,n", decompose_args.n, "Number of vertices")->required();
  decompose_cmd->add_flag("--full", decompose_args.full, "Partition every Hamiltonian cycle into classes");
  decompose_cmd->add_option("--out", decompose_args.out, "Write the dump here");
  add_format(decompose_cmd, decompose_args.format);

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand("generate", "Write random gems and a manifest");
  generate_cmd->add_option("--d", generate_args.d, "Dimension")->check(CLI::Range(2, kMaxDimension));
  generate_cmd->add_option("--p", generate_args.p, "Half-order")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--count", generate_args.count, "Number of gems")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", generate_args.seed, "Random seed");
  auto* bip = generate_cmd->add_flag("--bipartite", generate_args.bipartite, "Bipartite gems only");
  generate_cmd->add_flag("--nonbipartite", generate_args.nonbipartite, "Non-bipartite gems only")->excludes(bip);
  generate_cmd->add_flag("--allow-disconnected", generate_args.allow_disconnected, "Keep disconnected draws");
  generate_cmd->add_option("--out", generate_args.out, "Output directory");
  add_format(generate_cmd, generate_args.format);

  SearchOddArgs search_args;
  auto* search_cmd = app.add_subcommand("search-odd", "Find a gem with odd reduced G-degree");
  search_cmd->add_option("--d", search_args.d, "Dimension (4 or 6)")->check(CLI::IsMember({4, 6}));
  search_cmd->add_option("--max-p", search_args.max_p, "Largest half-order searched");
  search_cmd->add_option("--out", search_args.out, "Write the witness gem here");
  add_format(search_cmd, search_args.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out, err);
    if (*verify_cmd) return cmd_verify(verify_args, out, err);
    if (*decompose_cmd) return cmd_decompose(decompose_args, out, err);
    if (*generate_cmd) return cmd_generate(generate_args, out, err);
    if (*search_cmd) return cmd_search_odd(search_args, out, err);
  } catch (const InvariantViolation& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const GemError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gemcalc
