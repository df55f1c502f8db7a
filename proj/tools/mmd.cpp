// mmd: mixed metric dimension solver and bound-verification harness.
//
//   mmd compute --graph6 'C~' --dims mixed,vertex,edge
//   mmd theta-scan --max-total 15
//   mmd verify --enumerate 6 --csv --workers 8
//   mmd check-theorems
//
// Exit codes: 0 all pass, 1 finding or failed suite, 2 parse error,
// 3 invalid input graph, 4 IO error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mmd/connectivity.hpp"
#include "mmd/enumerate.hpp"
#include "mmd/families.hpp"
#include "mmd/graph6.hpp"
#include "mmd/harness.hpp"
#include "mmd/metric.hpp"
#include "mmd/suites.hpp"
#include "mmd/validation.hpp"

namespace {

enum ExitCode : int { kOk = 0, kFinding = 1, kParseError = 2, kInvalidGraph = 3, kIoError = 4 };

/// Thrown to unwind to main with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

struct SearchFlags {
  bool no_prune = false;
  std::uint64_t max_nodes = 50'000'000;

  mmd::SearchOptions options() const {
    mmd::SearchOptions o = no_prune ? mmd::SearchOptions::unpruned() : mmd::validated_search_options();
    o.max_nodes = max_nodes;
    return o;
  }
};

struct OutputFlags {
  bool json = false;
  bool csv = false;
  std::string out_path;
};

/// Destination stream: --out FILE or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Exit{kIoError, "cannot open " + path + " for writing"};
  }

  std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : std::cout; }

  void finish() {
    stream().flush();
    if (!stream()) throw Exit{kIoError, "write failed"};
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kIoError, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

mmd::ThetaSpec parse_theta_flag(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Exit{kParseError, "--theta expects a,b,c, got '" + text + "'"};
    }
  }
  if (values.size() != 3) throw Exit{kParseError, "--theta expects three lengths"};
  try {
    return mmd::ThetaSpec::make(values[0], values[1], values[2]);
  } catch (const mmd::FamilyError& e) {
    throw Exit{kInvalidGraph, e.what()};
  }
}

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_flag("--no-prune", flags.no_prune, "Disable all search pruning");
  cmd->add_option("--max-nodes", flags.max_nodes, "Per-graph subset budget (0 = unlimited)");
}

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  auto* json = cmd->add_flag("--json", flags.json, "JSON lines output");
  auto* csv = cmd->add_flag("--csv", flags.csv, "CSV output");
  json->excludes(csv);
  cmd->add_option("--out", flags.out_path, "Write the report to FILE");
}

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string input;
  std::string graph6;
  std::string theta;
  std::vector<std::string> dims{"mixed"};
  SearchFlags search;
  OutputFlags output;
};

int run_compute(const ComputeArgs& args) {
  mmd::Graph g;
  std::string id;
  try {
    if (!args.theta.empty()) {
      auto spec = parse_theta_flag(args.theta);
      g = mmd::theta(spec).graph;
      id = mmd::to_string(spec);
    } else if (!args.graph6.empty()) {
      g = mmd::parse_graph6_or_sparse6(args.graph6);
      id = args.graph6;
    } else if (!args.input.empty()) {
      auto records = mmd::read_graph_records(read_file(args.input));
      if (records.empty()) throw Exit{kParseError, args.input + ": no graph found"};
      auto& rec = records.front();
      if (rec.parse_error) throw *rec.parse_error;
      if (rec.graph_error) throw *rec.graph_error;
      g = *rec.graph;
      id = args.input + ":" + std::to_string(rec.line);
    } else {
      throw Exit{kParseError, "compute needs --input, --graph6 or --theta"};
    }
  } catch (const mmd::IoError& e) {
    throw Exit{kParseError, e.what()};
  } catch (const mmd::GraphError& e) {
    throw Exit{kInvalidGraph, e.what()};
  }
  if (!g.is_connected()) throw Exit{kInvalidGraph, "input graph is disconnected"};

  const auto options = args.search.options();
  Output out(args.output.out_path);
  auto report = mmd::verify_graph(g, id, options);

  nlohmann::ordered_json extra;
  for (const auto& dim : args.dims) {
    if (dim == "mixed") continue;
    mmd::Variant variant = dim == "vertex" ? mmd::Variant::VertexOnly : mmd::Variant::EdgeOnly;
    try {
      auto w = mmd::metric_dimension(g, variant, options);
      extra[dim == "vertex" ? "vdim" : "edim"] = w.dimension;
      extra[dim == "vertex" ? "vdim_witness" : "edim_witness"] = w.witness;
    } catch (const mmd::SearchBudgetExceeded&) {
      extra[dim == "vertex" ? "vdim" : "edim"] = nullptr;
    }
  }
  const bool want_mixed = std::find(args.dims.begin(), args.dims.end(), "mixed") != args.dims.end();

  if (args.output.json) {
    auto j = mmd::to_json(report);
    if (!want_mixed) {
      j.erase("mdim");
      j.erase("witness");
    }
    for (auto& [k, v] : extra.items()) j[k] = v;
    out.stream() << j.dump() << '\n';
  } else if (args.output.csv) {
    out.stream() << mmd::kReportCsvHeader << '\n' << mmd::to_csv_row(report) << '\n';
  } else {
    auto& os = out.stream();
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    os << "id: " << report.id << '\n'
       << "graph6: " << report.graph6 << '\n'
       << "n: " << report.n << '\n'
       << "m: " << report.m << '\n'
       << "L1: " << opt(report.leaves) << '\n'
       << "c: " << opt(report.cyclomatic) << '\n'
       << "kappa: " << opt(report.kappa) << '\n';
    if (want_mixed) {
      os << "mdim: " << opt(report.mdim) << '\n' << "mdim_witness: " << mmd::format_witness(report.witness) << '\n';
    }
    for (auto& [k, v] : extra.items()) {
      if (v.is_array()) {
        os << k << ": " << mmd::format_witness(v.get<std::vector<mmd::Vertex>>()) << '\n';
      } else {
        os << k << ": " << (v.is_null() ? std::string("timeout") : v.dump()) << '\n';
      }
    }
    os << "bound: " << opt(report.bound) << '\n'
       << "status: " << mmd::to_string(report.status) << '\n'
       << "ms: " << mmd::format_ms(report.ms) << '\n';
  }
  out.finish();
  return report.status == mmd::Status::Timeout ? kFinding : kOk;
}

// ---------------------------------------------------------------------------
// theta-scan

struct ThetaScanArgs {
  std::size_t max_total = 15;
  unsigned workers = default_workers();
  SearchFlags search;
  OutputFlags output;
};

int run_theta_scan(const ThetaScanArgs& args) {
  if (args.max_total < 5) throw Exit{kParseError, "--max-total must be at least 5"};
  if (args.max_total > 60) throw Exit{kParseError, "--max-total is capped at 60"};
  const auto specs = mmd::theta_specs_up_to(args.max_total);
  const auto options = args.search.options();
  Output out(args.output.out_path);
  auto& os = out.stream();
  if (!args.output.json) os << mmd::kThetaCsvHeader << '\n';
  std::size_t failed = 0;
  mmd::ordered_parallel_map<mmd::ThetaScanRow>(
      specs.size(), args.workers, [&](std::size_t i) { return mmd::scan_theta(specs[i], options); },
      [&](std::size_t, mmd::ThetaScanRow row) {
        if (!row.verdict_ok) ++failed;
        if (args.output.json)
          os << mmd::to_json(row).dump() << '\n';
        else
          os << mmd::to_csv_row(row) << '\n';
      });
  out.finish();
  std::cerr << "# theta-scan: " << specs.size() << " thetas, " << failed << " failed verdicts\n";
  return failed == 0 ? kOk : kFinding;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string input;
  std::size_t enumerate = 0;
  unsigned workers = default_workers();
  SearchFlags search;
  OutputFlags output;
};

struct Item {
  std::string id;
  std::optional<mmd::Graph> graph;
};

int run_verify(const VerifyArgs& args) {
  mmd::VerificationSummary summary;
  std::vector<Item> items;
  if (!args.input.empty()) {
    for (auto& rec : mmd::read_graph_records(read_file(args.input))) {
      const std::string id = "line" + std::to_string(rec.line);
      if (rec.parse_error) {
        ++summary.parse_errors;
        std::cerr << "# parse error at " << id << ": " << rec.parse_error->what() << '\n';
      } else if (rec.graph_error) {
        ++summary.invalid_graphs;
        std::cerr << "# invalid graph at " << id << ": " << rec.graph_error->what() << '\n';
      } else {
        items.push_back({id, std::move(rec.graph)});
      }
    }
  } else if (args.enumerate > 0) {
    try {
      for (std::size_t n = 1; n <= args.enumerate; ++n) {
        auto level = mmd::enumerate_connected(n);
        for (std::size_t i = 0; i < level.size(); ++i)
          items.push_back({"n" + std::to_string(n) + "-" + std::to_string(i), std::move(level[i])});
      }
    } catch (const mmd::IoError& e) {
      throw Exit{kParseError, e.what()};
    }
  } else {
    throw Exit{kParseError, "verify needs --input or --enumerate"};
  }

  const auto options = args.search.options();
  Output out(args.output.out_path);
  auto& os = out.stream();
  if (!args.output.json) os << mmd::kReportCsvHeader << '\n';
  mmd::ordered_parallel_map<mmd::VerificationReport>(
      items.size(), args.workers, [&](std::size_t i) { return mmd::verify_graph(*items[i].graph, items[i].id, options); },
      [&](std::size_t, mmd::VerificationReport report) {
        summary.add(report);
        if (args.output.json)
          os << mmd::to_json(report).dump() << '\n';
        else
          os << mmd::to_csv_row(report) << '\n';
        if (report.is_finding()) std::cerr << "# FINDING " << mmd::to_json(report).dump() << '\n';
      });
  out.finish();
  std::cerr << "# summary: " << summary.to_text() << '\n';
  return summary.findings == 0 && summary.count(mmd::Status::Timeout) == 0 ? kOk : kFinding;
}

// ---------------------------------------------------------------------------
// check-theorems

struct CheckArgs {
  std::size_t tree_max_n = 7;
  std::size_t cycle_max_n = 12;
  std::size_t cactus_max_n = 12;
  std::size_t kappa3_max_n = 7;
  std::size_t triple_max_n = 13;
  std::size_t theta_max_total = 15;
  std::size_t enclosure_samples = 10'000;
  std::uint64_t seed = 20240601;
  std::vector<std::string> suites;
  unsigned workers = default_workers();
  SearchFlags search;
};

int run_check(const CheckArgs& args) {
  const auto options = args.search.options();
  auto wanted = [&](const std::string& name) {
    return args.suites.empty() || std::find(args.suites.begin(), args.suites.end(), name) != args.suites.end();
  };
  std::vector<mmd::SuiteResult> results;
  auto run = [&](const std::string& name, auto&& body) {
    if (!wanted(name)) return;
    results.push_back(body());
    std::cout << results.back().line() << std::endl;
  };
  run("leaf-forcing", [&] { return mmd::leaf_forcing_suite(6); });
  run("trees", [&] { return mmd::tree_suite(args.tree_max_n, options); });
  run("cycles", [&] { return mmd::cycle_suite(3, args.cycle_max_n, options); });
  run("cactus", [&] {
    mmd::CactusPopulationLimits limits;
    limits.max_order = args.cactus_max_n;
    return mmd::cactus_suite(limits, options, args.workers);
  });
  run("3-connected", [&] { return mmd::kappa3_suite(args.kappa3_max_n, options); });
  run("balanced-theta-triples", [&] { return mmd::theta_triple_suite(args.triple_max_n); });
  run("theta-dichotomy", [&] { return mmd::theta_suite(args.theta_max_total, options); });
  run("enclosure", [&] { return mmd::enclosure_suite(args.enclosure_samples, args.seed); });
  if (results.empty()) throw Exit{kParseError, "no suite matched --suite"};
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  std::cout << (ok ? "all suites passed" : "some suites FAILED") << std::endl;
  return ok ? kOk : kFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed metric dimension solver and verification harness"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Invariants and metric dimensions of one graph");
  compute_cmd->add_option("--input", compute.input, "graph6/sparse6/edge-list file (first graph is used)");
  compute_cmd->add_option("--graph6", compute.graph6, "graph6 or sparse6 string");
  compute_cmd->add_option("--theta", compute.theta, "Theta graph path lengths a,b,c");
  compute_cmd->add_option("--dims", compute.dims, "Dimensions to compute: mixed,vertex,edge")
      ->delimiter(',')
      ->check(CLI::IsMember({"mixed", "vertex", "edge"}));
  add_search_flags(compute_cmd, compute.search);
  add_output_flags(compute_cmd, compute.output);

  ThetaScanArgs scan;
  auto* scan_cmd = app.add_subcommand("theta-scan", "Exact mdim over all Theta graphs with a+b+c <= max-total");
  scan_cmd->add_option("max_total,--max-total", scan.max_total, "Largest a+b+c");
  scan_cmd->add_option("--workers", scan.workers, "Worker threads");
  add_search_flags(scan_cmd, scan.search);
  add_output_flags(scan_cmd, scan.output);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check mdim <= L1 + 2c and the equality classification");
  auto* verify_input = verify_cmd->add_option("--input", verify.input, "graph6/sparse6 stream or edge-list file");
  auto* verify_enum = verify_cmd->add_option("--enumerate", verify.enumerate, "All connected graphs with n <= N (N <= 7)");
  verify_input->excludes(verify_enum);
  verify_cmd->add_option("--workers", verify.workers, "Worker threads");
  add_search_flags(verify_cmd, verify.search);
  add_output_flags(verify_cmd, verify.output);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check-theorems", "Run the theorem-reproduction suites");
  check_cmd->add_option("--tree-max-n", check.tree_max_n, "Largest labeled tree order");
  check_cmd->add_option("--cycle-max-n", check.cycle_max_n, "Largest cycle length");
  check_cmd->add_option("--cactus-max-n", check.cactus_max_n, "Largest cactus order");
  check_cmd->add_option("--kappa3-max-n", check.kappa3_max_n, "Largest 3-connected graph order (<= 7)");
  check_cmd->add_option("--triple-max-n", check.triple_max_n, "Largest balanced theta order");
  check_cmd->add_option("--theta-max-total", check.theta_max_total, "Largest a+b+c for the theta dichotomy");
  check_cmd->add_option("--enclosure-samples", check.enclosure_samples, "Random (graph, S, pair) samples");
  check_cmd->add_option("--seed", check.seed, "RNG seed for sampled suites");
  check_cmd->add_option("--suite", check.suites, "Run only the named suites");
  check_cmd->add_option("--workers", check.workers, "Worker threads");
  add_search_flags(check_cmd, check.search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*scan_cmd) return run_theta_scan(scan);
    if (*verify_cmd) return run_verify(verify);
    if (*check_cmd) return run_check(check);
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const mmd::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const mmd::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidGraph;
  }
  return kOk;
}
