#include "rainbow/cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/dot.hpp"
#include "rainbow/extractor.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/family_io.hpp"
#include "rainbow/frankenstein.hpp"

namespace rainbow {

namespace {

struct Globals {
  int threads = 1;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};

// Bad input data rather than bad flags.
struct InputError {
  std::string message;
  std::string label = "malformed input";
};

struct UsageError {
  std::string message;
};

Family load_family(const std::string& path) {
  try {
    return read_family_file(path);
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError{"cannot write " + path};
  file << text;
}

LengthClass parse_class(const std::string& text) {
  try {
    return LengthClass::parse(text);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

int cmd_check(const Globals& g, const std::string& in, const std::string& cls_text,
              const std::string& out_path, std::ostream& out) {
  const auto fam = load_family(in);
  const auto cls = parse_class(cls_text);
  DetectOptions opts;
  opts.max_cycles = g.budget;
  try {
    const auto w = find_rainbow_a_cycle(fam, cls, opts);
    if (!w) {
      emit(out_path, "none\n", out);
      return kExitNone;
    }
    emit(out_path, nlohmann::json{{"result", "witness"}, {"witness", witness_to_json(*w)}}.dump() + "\n",
         out);
    return kExitWitness;
  } catch (const Error& e) {
    if (e.code() != Errc::kSearchBudgetExceeded) throw;
    emit(out_path, "unknown\n", out);
    return kExitUnknown;
  }
}

int cmd_extract(const std::string& in, const std::string& trace_path, const std::string& out_path,
                std::ostream& out) {
  const auto fam = load_family(in);
  std::optional<std::ofstream> trace;
  ExtractOptions opts;
  if (!trace_path.empty()) {
    trace.emplace(trace_path);
    if (!*trace) throw UsageError{"cannot write " + trace_path};
    opts.trace = &*trace;
  }
  ExtractResult r;
  try {
    r = extract_rainbow_even_cycle(fam, opts);
  } catch (const Error& e) {
    if (e.code() == Errc::kPreconditionViolated) throw InputError{e.what(), "input violates precondition"};
    throw;
  }
  nlohmann::json j{{"result", "witness"},
                   {"witness", witness_to_json(r.witness)},
                   {"source", r.source},
                   {"iterations", r.iterations},
                   {"bound", r.bound}};
  if (!trace_path.empty()) j["trace"] = trace_path;
  emit(out_path, j.dump() + "\n", out);
  return kExitWitness;
}

int cmd_tight(int n, const std::string& kind, const std::string& out_path, std::ostream& out) {
  Family fam;
  if (kind == "even") {
    if (n < 4) throw UsageError{"no even cycle exists when n <= 3"};
    fam = tight_even_family(n);
  } else if (kind == "odd" || kind == "any" || kind == "all") {
    if (n < 3) throw UsageError{"no cycle exists when n <= 2"};
    fam = coincident_tight_family(kind == "odd" ? CoincidentKind::Odd : CoincidentKind::Any, n);
  } else {
    throw UsageError{"unknown kind " + kind};
  }
  emit(out_path, family_to_json(fam).dump() + "\n", out);
  return kExitWitness;
}

int cmd_extremal(const Globals& g, int n, const std::string& cls_text, int max_size,
                 const std::string& canon, const std::string& out_path, std::ostream& out) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.cls = parse_class(cls_text);
  cfg.max_family_size = max_size;
  cfg.thread_count = g.threads;
  cfg.node_budget = g.budget;
  try {
    cfg.canonicalization = canonicalization_from_string(canon);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  SearchResult r;
  try {
    r = max_rainbow_free(cfg);
  } catch (const Error& e) {
    if (e.code() == Errc::kUnsupportedN || e.code() == Errc::kInvalidArgument) throw UsageError{e.what()};
    throw;
  }
  auto report = search_report(cfg, r);
  report["seed"] = g.seed;
  emit(out_path, report.dump(2) + "\n", out);
  return r.exhaustive ? kExitWitness : kExitUnknown;
}

int cmd_export_dot(const std::string& in, const std::string& partition, const std::string& out_path,
                   std::ostream& out) {
  const auto fam = load_family(in);
  if (partition.empty()) {
    emit(out_path, family_to_dot(fam), out);
    return kExitWitness;
  }
  FrankensteinGraph fg;
  try {
    std::ifstream file(partition);
    if (!file) throw InputError{"cannot read " + partition};
    fg = partition_from_json(nlohmann::json::parse(file), fam.n());
  } catch (const nlohmann::json::exception& e) {
    throw InputError{partition + ": " + e.what()};
  } catch (const Error& e) {
    throw InputError{partition + ": " + e.what()};
  }
  emit(out_path, partition_to_dot(fg), out);
  return kExitWitness;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow cycles in families of monochromatic cycles"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for extremal search")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Node or cycle budget, 0 for none");
  app.add_option("--seed", g.seed, "Seed recorded in reports");

  std::string in, out_path, cls = "even", trace, kind = "even", canon = "color_multiset", partition;
  int n = 0;
  int max_size = 0;

  auto* check = app.add_subcommand("check", "Search a family for a rainbow cycle");
  check->add_option("--in", in, "Family JSON")->required();
  check->add_option("--class", cls, "all|odd|even|exactly:k|set:a,b");
  check->add_option("--out", out_path, "Output file");

  auto* extract = app.add_subcommand("extract", "Constructive rainbow even cycle above the threshold");
  extract->add_option("--in", in, "Family JSON")->required();
  extract->add_option("--trace", trace, "JSONL move log");
  extract->add_option("--out", out_path, "Output file");

  auto* tight = app.add_subcommand("tight", "Write a tight family");
  tight->add_option("--n", n, "Vertex count")->required();
  tight->add_option("--kind", kind, "even|odd|any");
  tight->add_option("--out", out_path, "Output file");

  auto* extremal = app.add_subcommand("extremal", "Exhaustive f(n, class) search");
  extremal->add_option("--n", n, "Vertex count")->required();
  extremal->add_option("--class", cls, "all|odd|even|...");
  extremal->add_option("--max-size", max_size, "Largest family size tried, 0 for the formula value");
  extremal->add_option("--canon", canon, "none|color_multiset|vertex_permutation");
  extremal->add_option("--out", out_path, "Output file");

  auto* dot = app.add_subcommand("export-dot", "Render a family or partition as DOT");
  dot->add_option("--in", in, "Family JSON")->required();
  dot->add_option("--partition", partition, "Partition JSON");
  dot->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return cmd_check(g, in, cls, out_path, out);
    if (*extract) return cmd_extract(in, trace, out_path, out);
    if (*tight) return cmd_tight(n, kind, out_path, out);
    if (*extremal) return cmd_extremal(g, n, cls, max_size, canon, out_path, out);
    if (*dot) return cmd_export_dot(in, partition, out_path, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << e.label << ": " << e.message << "\n";
    return kExitMalformed;
  } catch (const Error& e) {
    err << "internal error (" << to_string(e.code()) << "): " << e.what() << "\n";
    if (!e.detail().empty()) err << e.detail() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace rainbow
