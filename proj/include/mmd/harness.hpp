#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mmd/connectivity.hpp"
#include "mmd/families.hpp"
#include "mmd/graph6.hpp"
#include "mmd/metric.hpp"

namespace mmd {

/// Outcome of testing mdim(G) <= L1(G) + 2c(G) on one graph.
enum class Status { StrictlyBelow, Equality, Violation, SkippedCycle, SkippedDisconnected, Timeout };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::StrictlyBelow: return "StrictlyBelow";
    case Status::Equality: return "Equality";
    case Status::Violation: return "VIOLATION";
    case Status::SkippedCycle: return "SkippedCycle";
    case Status::SkippedDisconnected: return "SkippedDisconnected";
    case Status::Timeout: return "Timeout";
  }
  return "?";
}

inline constexpr Status kAllStatuses[] = {Status::StrictlyBelow, Status::Equality, Status::Violation,
                                          Status::SkippedCycle, Status::SkippedDisconnected, Status::Timeout};

/// Whether an equality case is one of the two known extremal families.
struct EqualityClassification {
  bool is_equality = false;
  /// Cactus in which every cycle has exactly one vertex of degree >= 3
  /// (trees included).
  bool is_qualifying_cactus = false;
  bool is_balanced_theta = false;
  /// is_equality <=> (is_qualifying_cactus || is_balanced_theta).
  bool equality_consistent = true;
};

inline EqualityClassification classify(const Graph& g, bool is_equality) {
  EqualityClassification c;
  c.is_equality = is_equality;
  c.is_qualifying_cactus = every_cycle_has_one_branch_vertex(g);
  auto shape = theta_shape(g);
  c.is_balanced_theta = shape && is_balanced(*shape);
  c.equality_consistent = is_equality == (c.is_qualifying_cactus || c.is_balanced_theta);
  return c;
}

struct VerificationReport {
  std::string id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> leaves;
  std::optional<std::size_t> cyclomatic;
  std::optional<std::size_t> kappa;
  std::optional<std::size_t> mdim;
  std::optional<std::size_t> bound;
  std::vector<Vertex> witness;
  Status status = Status::StrictlyBelow;
  EqualityClassification classification;
  double ms = 0.0;
  std::string graph6;

  /// A violation of the inequality, or an equality case outside the
  /// predicted families (or a predicted family member that misses equality).
  bool is_finding() const {
    if (status == Status::Violation) return true;
    const bool evaluated = status == Status::StrictlyBelow || status == Status::Equality;
    return evaluated && !classification.equality_consistent;
  }
};

/// Computes every field of the report for one graph. Cycles are evaluated
/// but marked SkippedCycle since the inequality excludes them.
inline VerificationReport verify_graph(const Graph& g, std::string id, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = std::move(id);
  r.n = g.order();
  r.m = g.size();
  r.graph6 = g.order() <= detail::kMaxHeaderN ? encode_graph6(g) : std::string{};
  auto finish = [&] {
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  if (!g.is_connected()) {
    r.status = Status::SkippedDisconnected;
    return finish();
  }
  r.leaves = leaf_count(g);
  r.cyclomatic = cyclomatic_number(g);
  r.kappa = vertex_connectivity(g);
  r.bound = *r.leaves + 2 * *r.cyclomatic;
  try {
    auto w = mixed_metric_dimension(g, options);
    r.mdim = w.dimension;
    r.witness = std::move(w.witness);
  } catch (const SearchBudgetExceeded&) {
    r.status = Status::Timeout;
    return finish();
  }
  const bool equality = *r.mdim == *r.bound;
  if (is_cycle_graph(g)) {
    r.status = Status::SkippedCycle;
    r.classification.is_equality = equality;
    return finish();
  }
  r.classification = classify(g, equality);
  r.status = *r.mdim > *r.bound ? Status::Violation : equality ? Status::Equality : Status::StrictlyBelow;
  return finish();
}

// ---------------------------------------------------------------------------
// Serialization

inline std::string format_witness(const std::vector<Vertex>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

inline std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr std::string_view kReportCsvHeader = "id,n,m,L1,c,kappa,mdim,bound,status,witness,ms";

inline std::string to_csv_row(const VerificationReport& r) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string{}; };
  std::ostringstream out;
  out << csv_escape(r.id) << ',' << r.n << ',' << r.m << ',' << opt(r.leaves) << ',' << opt(r.cyclomatic) << ','
      << opt(r.kappa) << ',' << opt(r.mdim) << ',' << opt(r.bound) << ',' << to_string(r.status) << ','
      << format_witness(r.witness) << ',' << format_ms(r.ms);
  return out.str();
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  auto opt = [](const std::optional<std::size_t>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["L1"] = opt(r.leaves);
  j["c"] = opt(r.cyclomatic);
  j["kappa"] = opt(r.kappa);
  j["mdim"] = opt(r.mdim);
  j["bound"] = opt(r.bound);
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["ms"] = std::stod(format_ms(r.ms));
  j["qualifying_cactus"] = r.classification.is_qualifying_cactus;
  j["balanced_theta"] = r.classification.is_balanced_theta;
  j["equality_consistent"] = r.classification.equality_consistent;
  j["graph6"] = r.graph6;
  return j;
}

/// Aggregate counts over a verification run.
struct VerificationSummary {
  std::map<Status, std::size_t> counts;
  std::size_t parse_errors = 0;
  std::size_t invalid_graphs = 0;
  std::size_t equality_inconsistent = 0;
  std::size_t findings = 0;

  void add(const VerificationReport& r) {
    ++counts[r.status];
    if (r.is_finding()) ++findings;
    if ((r.status == Status::StrictlyBelow || r.status == Status::Equality) &&
        !r.classification.equality_consistent)
      ++equality_inconsistent;
  }

  std::size_t count(Status s) const {
    auto it = counts.find(s);
    return it == counts.end() ? 0 : it->second;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (auto& [s, c] : counts) t += c;
    return t;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "graphs=" << total();
    for (Status s : kAllStatuses) out << ' ' << to_string(s) << '=' << count(s);
    out << " parse_errors=" << parse_errors << " invalid_graphs=" << invalid_graphs
        << " equality_inconsistent=" << equality_inconsistent << " findings=" << findings;
    return out.str();
  }
};

// ---------------------------------------------------------------------------
// Theta scan

struct ThetaScanRow {
  ThetaSpec spec;
  bool balanced = false;
  std::size_t mdim = 0;
  std::vector<Vertex> witness;
  /// The set built from the balanced / unbalanced construction.
  std::vector<Vertex> constructive;
  bool constructive_ok = false;
  /// For unbalanced thetas, that no 2-subset resolves the graph.
  bool lower_bound_ok = true;
  bool verdict_ok = false;
  double ms = 0.0;
};

inline ThetaScanRow scan_theta(const ThetaSpec& spec, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ThetaScanRow row;
  row.spec = spec;
  const ThetaGraph t = theta(spec);
  const DistanceTable dt(t.graph);
  row.balanced = is_balanced(spec);
  auto w = mixed_metric_dimension(t.graph, options);
  row.mdim = w.dimension;
  row.witness = std::move(w.witness);
  row.constructive = row.balanced ? balanced_theta_generator(t) : unbalanced_theta_generator(t);
  row.constructive_ok = is_mixed_generator(dt, row.constructive);
  if (!row.balanced) row.lower_bound_ok = generators_of_size(dt, 2).empty();
  const std::size_t expected = row.balanced ? 4 : 3;
  row.verdict_ok =
      row.mdim == expected && row.constructive.size() == expected && row.constructive_ok && row.lower_bound_ok;
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

inline constexpr std::string_view kThetaCsvHeader = "a,b,c,n,m,balanced,mdim,expected,constructive,constructive_ok,verdict,witness,ms";

inline std::string to_csv_row(const ThetaScanRow& r) {
  std::ostringstream out;
  out << r.spec.a << ',' << r.spec.b << ',' << r.spec.c << ',' << r.spec.order() << ',' << r.spec.size() << ','
      << (r.balanced ? "true" : "false") << ',' << r.mdim << ',' << (r.balanced ? 4 : 3) << ','
      << format_witness(r.constructive) << ',' << (r.constructive_ok ? "true" : "false") << ','
      << (r.verdict_ok ? "OK" : "FAIL") << ',' << format_witness(r.witness) << ',' << format_ms(r.ms);
  return out.str();
}

inline nlohmann::ordered_json to_json(const ThetaScanRow& r) {
  nlohmann::ordered_json j;
  j["a"] = r.spec.a;
  j["b"] = r.spec.b;
  j["c"] = r.spec.c;
  j["n"] = r.spec.order();
  j["m"] = r.spec.size();
  j["balanced"] = r.balanced;
  j["mdim"] = r.mdim;
  j["expected"] = r.balanced ? 4 : 3;
  j["constructive"] = r.constructive;
  j["constructive_ok"] = r.constructive_ok;
  j["lower_bound_ok"] = r.lower_bound_ok;
  j["verdict"] = r.verdict_ok ? "OK" : "FAIL";
  j["witness"] = r.witness;
  j["ms"] = std::stod(format_ms(r.ms));
  return j;
}

// ---------------------------------------------------------------------------
// Parallel map with in-order emission

/// Runs work(i) for i in [0, count) on `workers` threads and hands results to
/// sink(i, result) on the calling thread in index order. Workers never run
/// more than `window` items ahead of the sink. The first exception thrown by
/// work or sink is rethrown after all threads have stopped.
template <typename Out, typename Work, typename Sink>
void ordered_parallel_map(std::size_t count, unsigned workers, Work&& work, Sink&& sink, std::size_t window = 256) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) sink(i, work(i));
    return;
  }
  std::mutex mu;
  std::condition_variable ready, space;
  std::map<std::size_t, Out> done;
  std::size_t next = 0;
  std::size_t emitted = 0;
  std::exception_ptr error;

  auto worker = [&] {
    while (true) {
      std::size_t i = 0;
      {
        std::unique_lock lock(mu);
        space.wait(lock, [&] { return error || next >= count || next < emitted + window; });
        if (error || next >= count) return;
        i = next++;
      }
      try {
        Out result = work(i);
        std::lock_guard lock(mu);
        done.emplace(i, std::move(result));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  {
    std::unique_lock lock(mu);
    while (emitted < count) {
      ready.wait(lock, [&] { return error || done.count(emitted) > 0; });
      if (error) break;
      auto node = done.extract(emitted);
      lock.unlock();
      try {
        sink(emitted, std::move(node.mapped()));
      } catch (...) {
        lock.lock();
        error = std::current_exception();
        break;
      }
      lock.lock();
      ++emitted;
      space.notify_all();
    }
  }
  space.notify_all();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace mmd
