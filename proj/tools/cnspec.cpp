// Command-line front end: build groups, emit graphs, compute spectra and
// energies, classify, and run verification sweeps.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cnspec/cache.hpp"
#include "cnspec/family_args.hpp"
#include "cnspec/pipeline.hpp"
#include "cnspec/sweeps.hpp"

namespace {

using namespace cnspec;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitTooLarge = 3;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::TooLarge: return kExitTooLarge;
    case ErrorKind::NoConvergence:
    case ErrorKind::AmbiguousCluster: return kExitMismatch;
    default: return kExitInvalid;
  }
}

struct Options {
  std::vector<std::string> families;
  ParamRanges ranges;
  std::string abelian;
  std::string spec;
  std::string graph;
  std::string preset;
  std::string method = "both";
  std::string cn_mode = "all-pairs";
  std::string format;
  std::string output;
  std::string cache;
  std::string metadata;
  double tolerance = 1e-8;
  unsigned jobs = 0;
  bool table = false;
};

void add_input_options(CLI::App* cmd, Options& o, bool allow_graph) {
  cmd->add_option("--family", o.families, "group family (" + [] {
    std::string s;
    for (const auto& f : cli_families()) s += (s.empty() ? "" : ", ") + f.name;
    return s;
  }() + ")")->delimiter(',');
  for (const char* p : {"m", "n", "k", "q", "p", "z", "s", "t"})
    cmd->add_option(std::string("--") + p, o.ranges[p], std::string("parameter ") + p + ": 4, 4..7 or 2,3,5");
  cmd->add_option("--abelian", o.abelian, "cyclic orders of an abelian direct factor, e.g. 2,3");
  cmd->add_option("--spec", o.spec, "group spec as JSON text or a path to a JSON file");
  if (allow_graph) cmd->add_option("--graph", o.graph, "edge-list JSON file {\"n\", \"edges\", \"labels\"}");
}

void add_run_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "exact, numeric or both")->check(CLI::IsMember({"exact", "numeric", "both"}));
  cmd->add_option("--cn-mode", o.cn_mode, "common-neighbour counting: all-pairs or adjacent")
      ->check(CLI::IsMember({"all-pairs", "adjacent"}));
  cmd->add_option("--tolerance", o.tolerance, "per-eigenvalue tolerance, numeric vs exact")->check(CLI::PositiveNumber);
  cmd->add_option("--cache", o.cache, "Cayley-table cache directory (default: $CN_SPECTRA_CACHE)");
}

PipelineOptions pipeline_options(const Options& o) {
  PipelineOptions p;
  p.method = o.method == "exact" ? Method::Exact : o.method == "numeric" ? Method::Numeric : Method::Both;
  p.mode = o.cn_mode == "adjacent" ? CnMode::AdjacentOnly : CnMode::AllPairs;
  p.eigenvalue_tolerance = o.tolerance;
  return p;
}

std::vector<std::uint32_t> parse_abelian(const std::string& text) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = parse_range(item);
    if (r.size() != 1 || r[0] < 1) throw Error(ErrorKind::InvalidParams, "bad --abelian entry \"" + item + "\"");
    out.push_back(static_cast<std::uint32_t>(r[0]));
  }
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<GroupSpec> collect_specs(const Options& o) {
  std::vector<GroupSpec> out;
  if (!o.spec.empty()) {
    const std::string text = std::filesystem::exists(o.spec) ? read_text(o.spec) : o.spec;
    try {
      out.push_back(group_spec_from_json(nlohmann::json::parse(text)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::MalformedInput, e.what());
    }
  }
  const auto abelian = parse_abelian(o.abelian);
  for (const auto& f : o.families)
    for (auto& s : expand_family(f, o.ranges, abelian)) out.push_back(std::move(s));
  if (o.preset == "agreement")
    for (auto& s : agreement_instances()) out.push_back(std::move(s));
  if (o.preset == "verdict")
    for (auto& s : verdict_instances()) out.push_back(std::move(s));
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorKind::InvalidParams, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

GroupTable load_table(const GroupSpec& spec, TableCache* cache) {
  if (expected_order(spec) > kMaxGroupOrder) throw Error(ErrorKind::TooLarge, display_name(spec) + " exceeds order 4096");
  return cache ? cache->load_or_build(spec) : build_family(spec);
}

void report_problems(const InstanceResult& r) {
  for (const auto& m : r.analysis.mismatches) std::cerr << Json{{"group", r.name}, {"mismatch", to_json(m)}}.dump() << "\n";
  for (const auto& m : r.mismatches) std::cerr << Json{{"group", r.name}, {"mismatch", to_json(m)}}.dump() << "\n";
  if (r.formula)
    for (const auto& d : r.formula->discrepancies)
      if (!is_explained(d)) std::cerr << Json{{"group", r.name}, {"discrepancy", to_json(d)}}.dump() << "\n";
  for (const auto& v : r.verdict_mismatches)
    if (!v.explained) std::cerr << Json{{"group", r.name}, {"verdict_mismatch", to_json(v)}}.dump() << "\n";
}

/// Single-input commands: exactly one group or one graph.
struct Single {
  std::optional<InstanceResult> instance;
  std::optional<GroupTable> table;
  CommutingGraph graph;
  std::string name;
};

Single single_input(const Options& o, std::unique_ptr<TableCache>& cache) {
  Single s;
  if (!o.graph.empty()) {
    if (!o.families.empty() || !o.spec.empty()) throw Error(ErrorKind::InvalidParams, "give either --graph or a group, not both");
    s.graph = ingest_graph(read_text(o.graph));
    s.name = o.graph;
    return s;
  }
  auto specs = collect_specs(o);
  if (specs.size() != 1)
    throw Error(ErrorKind::InvalidParams, "expected exactly one group, got " + std::to_string(specs.size()));
  s.table = load_table(specs[0], cache.get());
  s.name = display_name(specs[0]);
  s.instance.emplace(specs[0]);
  return s;
}

int run_pipeline_single(const Options& o, std::unique_ptr<TableCache>& cache, const std::string& command, Output& out) {
  Single s = single_input(o, cache);
  const PipelineOptions popt = pipeline_options(o);
  Json doc;
  int code = kExitOk;
  const GraphAnalysis* a = nullptr;
  GraphAnalysis graph_analysis;
  if (s.instance) {
    *s.instance = run_instance(s.instance->spec, *s.table, popt);
    a = &s.instance->analysis;
    doc["group"] = s.name;
    if (!s.instance->ok()) {
      report_problems(*s.instance);
      code = kExitMismatch;
    }
  } else {
    graph_analysis = analyze_graph(s.graph, popt);
    a = &graph_analysis;
    doc["graph"] = s.name;
    for (const auto& m : a->mismatches) std::cerr << Json{{"graph", s.name}, {"mismatch", to_json(m)}}.dump() << "\n";
    if (!a->mismatches.empty()) code = kExitMismatch;
  }
  if (command == "spectrum") {
    doc["cnl"] = matrix_json("CNL", a->cnl, a->delta);
    doc["cnsl"] = matrix_json("CNSL", a->cnsl, a->delta);
  } else if (command == "energy") {
    doc.update(energy_json(*a));
  } else {
    doc["verdict"] = to_json(a->verdict);
    if (s.instance && s.instance->asserted) {
      doc["family"] = s.instance->family();
      doc["params"] = s.instance->params();
      doc["published_verdict"] = to_json(*s.instance->asserted);
      Json vm = Json::array();
      for (const auto& v : s.instance->verdict_mismatches) vm.push_back(to_json(v));
      doc["verdict_mismatches"] = vm;
    }
  }
  if (o.format == "text") {
    for (auto& [k, v] : doc.items()) out.stream() << k << ": " << v.dump() << "\n";
  } else {
    out.stream() << doc.dump() << "\n";
  }
  return code;
}

int cmd_build(const Options& o, std::unique_ptr<TableCache>& cache, Output& out) {
  auto specs = collect_specs(o);
  if (specs.size() != 1)
    throw Error(ErrorKind::InvalidParams, "expected exactly one group, got " + std::to_string(specs.size()));
  const GroupTable g = load_table(specs[0], cache.get());
  const auto z = center(g);
  Json sizes = Json::array();
  for (const auto& c : distinct_centralizers(g)) sizes.push_back(c.size);
  const auto q = invariants(central_quotient(g));
  Json hist = Json::object();
  for (auto [ord, cnt] : invariants(g).order_histogram) hist[std::to_string(ord)] = cnt;
  Json qhist = Json::object();
  for (auto [ord, cnt] : q.order_histogram) qhist[std::to_string(ord)] = cnt;
  Json doc = {{"group", display_name(specs[0])},
              {"spec", to_json(specs[0])},
              {"order", g.order()},
              {"center_size", z.count()},
              {"abelian", is_abelian(g)},
              {"ac", is_ac(g)},
              {"centralizer_sizes", sizes},
              {"order_histogram", hist},
              {"central_quotient", {{"order", q.order}, {"abelian", q.abelian}, {"order_histogram", qhist}}}};
  if (o.table) doc["table"] = table_to_json(g);
  if (o.format == "text") {
    for (auto& [k, v] : doc.items()) out.stream() << k << ": " << v.dump() << "\n";
  } else {
    out.stream() << doc.dump() << "\n";
  }
  return kExitOk;
}

int cmd_graph(const Options& o, std::unique_ptr<TableCache>& cache, Output& out) {
  Single s = single_input(o, cache);
  const CommutingGraph g = s.table ? commuting_graph(*s.table) : s.graph;
  if (o.format == "dot") {
    out.stream() << export_dot(g);
  } else {
    out.stream() << export_edge_list(g).dump() << "\n";
  }
  return kExitOk;
}

/// Runs every instance on a worker pool; results come back in input order.
int run_many(const Options& o, std::unique_ptr<TableCache>& cache, bool default_csv, Output& out) {
  const auto specs = collect_specs(o);
  if (specs.empty()) throw Error(ErrorKind::InvalidParams, "no instances selected (use --family or --preset)");
  const PipelineOptions popt = pipeline_options(o);
  struct Slot {
    std::optional<InstanceResult> result;
    std::optional<Error> error;
  };
  std::vector<Slot> slots(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        slots[i].result = run_instance(specs[i], load_table(specs[i], cache.get()), popt);
      } catch (const Error& e) {
        slots[i].error = e;
      }
    }
  };
  unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, specs.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const bool csv = o.format == "csv" || (o.format.empty() && default_csv);
  int code = kExitOk;
  std::size_t unexplained = 0;
  Json rows = Json::array();
  if (csv) out.stream() << csv_header() << "\n";
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (slots[i].error) {
      const auto& e = *slots[i].error;
      std::cerr << Json{{"group", display_name(specs[i])}, {"error", e.what()}}.dump() << "\n";
      if (code == kExitOk || (code == kExitInvalid && exit_code(e.kind()) == kExitTooLarge)) code = exit_code(e.kind());
      if (!csv) rows.push_back({{"group", display_name(specs[i])}, {"error", e.what()}});
      continue;
    }
    const auto& r = *slots[i].result;
    if (!r.ok()) {
      report_problems(r);
      unexplained += r.unexplained();
    }
    if (csv) {
      out.stream() << csv_row(r) << "\n";
    } else {
      rows.push_back(summary_json(r));
    }
  }
  if (!csv) out.stream() << Json{{"instances", rows}, {"unexplained", unexplained}}.dump() << "\n";
  if (unexplained > 0) code = kExitMismatch;
  return code;
}

std::string iso_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting-graph CN Laplacian spectra, energies and verdicts"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--output,-o", o.output, "write the document here instead of stdout");
  app.add_option("--metadata", o.metadata, "write a metadata sidecar (command, timestamps) to this path");

  auto* build = app.add_subcommand("build", "construct a group and summarize it");
  add_input_options(build, o, false);
  add_run_options(build, o);
  build->add_flag("--table", o.table, "include the Cayley table");
  build->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* graph = app.add_subcommand("graph", "emit the commuting graph");
  add_input_options(graph, o, true);
  add_run_options(graph, o);
  graph->add_option("--format", o.format, "json (edge list) or dot")->check(CLI::IsMember({"json", "dot"}));

  std::vector<CLI::App*> single;
  const std::pair<const char*, const char*> singles[] = {{"spectrum", "CNL and CNSL spectra"},
                                                         {"energy", "energies, delta and baseline"},
                                                         {"classify", "hyper/border/below verdicts"}};
  for (const auto& [name, what] : singles) {
    auto* cmd = app.add_subcommand(name, std::string(what) + " of a group or an ingested graph");
    add_input_options(cmd, o, true);
    add_run_options(cmd, o);
    cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    single.push_back(cmd);
  }

  auto* verify = app.add_subcommand("verify", "three-route check over parameter ranges; exit 1 on mismatch");
  auto* sweep = app.add_subcommand("sweep", "verdict table over families and ranges");
  for (auto* cmd : {verify, sweep}) {
    add_input_options(cmd, o, false);
    add_run_options(cmd, o);
    cmd->add_option("--preset", o.preset, "built-in instance list: agreement or verdict")
        ->check(CLI::IsMember({"agreement", "verdict"}));
    cmd->add_option("--jobs,-j", o.jobs, "worker threads (default: available parallelism)");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  const std::string started = o.metadata.empty() ? "" : iso_now();
  int code = kExitOk;
  try {
    std::unique_ptr<TableCache> cache;
    if (auto dir = TableCache::resolve(o.cache)) cache = std::make_unique<TableCache>(*dir);
    Output out(o.output);
    if (build->parsed()) {
      code = cmd_build(o, cache, out);
    } else if (graph->parsed()) {
      code = cmd_graph(o, cache, out);
    } else if (verify->parsed()) {
      code = run_many(o, cache, false, out);
    } else if (sweep->parsed()) {
      code = run_many(o, cache, true, out);
    } else {
      for (auto* cmd : single)
        if (cmd->parsed()) code = run_pipeline_single(o, cache, cmd->get_name(), out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kExitInvalid;
  }

  if (!o.metadata.empty()) {
    std::string cmdline;
    for (int i = 0; i < argc; ++i) cmdline += (i ? " " : "") + std::string(argv[i]);
    std::ofstream meta(o.metadata);
    meta << Json{{"command", cmdline}, {"started", started}, {"finished", iso_now()}, {"exit_code", code}}.dump(2) << "\n";
  }
  return code;
}
