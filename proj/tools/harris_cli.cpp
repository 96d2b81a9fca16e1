// harris: check graphs, run the census, generate families and apply transforms.
// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 ceiling exceeded.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "harris/barnacles.hpp"
#include "harris/constructions.hpp"
#include "harris/enumeration.hpp"
#include "harris/families.hpp"
#include "harris/graph6.hpp"
#include "harris/properties.hpp"
#include "harris/report.hpp"

namespace fs = std::filesystem;
using namespace harris;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCeiling = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_threads() {
  if (const char* env = std::getenv("HARRIS_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring HARRIS_THREADS='" << env << "'\n";
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(trim(line));
  return lines;
}

std::vector<std::string> read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_lines(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_lines(in);
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// ---- check ---------------------------------------------------------------

struct CheckOutcome {
  json record;
  int status = kExitOk;
};

CheckOutcome check_line(const std::string& text, std::size_t line_no) {
  try {
    Graph g = parse_graph6(text);
    return {check_report(text, g), kExitOk};
  } catch (const CeilingExceeded& e) {
    return {{{"line", line_no}, {"input", text}, {"error", e.what()}, {"kind", "ceiling"}}, kExitCeiling};
  } catch (const GraphError& e) {
    return {{{"line", line_no}, {"input", text}, {"error", e.what()}, {"kind", "parse"}}, kExitInvalid};
  }
}

int cmd_check(const std::string& path, bool harris_only, bool strict, int threads) {
  const auto lines = read_input(path);
  std::vector<std::size_t> index;  // non-blank lines
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!lines[i].empty()) index.push_back(i);
  }
  int exit_code = kExitOk;
  const std::size_t batch = 64 * static_cast<std::size_t>(std::max(threads, 1));
  for (std::size_t start = 0; start < index.size(); start += batch) {
    const std::size_t count = std::min(batch, index.size() - start);
    std::vector<CheckOutcome> out(count);
    parallel_for(count, threads, [&](std::size_t i) {
      const std::size_t at = index[start + i];
      out[i] = check_line(lines[at], at + 1);
    });
    for (const auto& o : out) {
      if (o.status != kExitOk) {
        std::cerr << "line " << o.record["line"] << ": " << o.record["error"].get<std::string>() << "\n";
        std::cout << o.record.dump() << "\n";
        if (exit_code == kExitOk || o.status == kExitInvalid) exit_code = o.status;
        if (strict) return exit_code;
        continue;
      }
      if (harris_only && !o.record["harris"].get<bool>()) continue;
      std::cout << o.record.dump() << "\n";
    }
  }
  return exit_code;
}

// ---- enumerate -----------------------------------------------------------

int cmd_enumerate(int n, const fs::path& out_dir, int threads, const std::string& checkpoint,
                  int prefix_bits, std::uint64_t max_units, bool beyond_desk) {
  const int ceiling = beyond_desk ? kCensusMaxOrder : kCensusDeskMaxOrder;
  if (n < 7 || n > ceiling) {
    throw UsageError("enumerate supports orders 7.." + std::to_string(ceiling) +
                     (beyond_desk ? "" : " (desk-scale ceiling; --beyond-desk-scale allows up to " +
                                             std::to_string(kCensusMaxOrder) + ")") +
                     ", got " + std::to_string(n));
  }
  CensusOptions options;
  options.threads = threads;
  options.checkpoint_path = checkpoint;
  options.prefix_bits = prefix_bits;
  options.max_units = max_units;

  CensusResult result;
  if (!checkpoint.empty() && fs::exists(checkpoint)) {
    CensusCheckpoint cp;
    try {
      cp = CensusCheckpoint::load(checkpoint);
    } catch (const std::exception& e) {
      throw GraphError(std::string("unreadable checkpoint: ") + e.what());
    }
    if (cp.order != n) {
      throw GraphError("checkpoint " + checkpoint + " is for order " + std::to_string(cp.order) +
                       ", not " + std::to_string(n));
    }
    std::cerr << "resuming from " << checkpoint << " (" << cp.completed_units.size() << "/"
              << cp.unit_count() << " units done)\n";
    try {
      result = resume(cp, options);
    } catch (const GraphError&) {
      throw;
    } catch (const CeilingExceeded&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw GraphError(std::string("incompatible checkpoint: ") + e.what());
    }
  } else {
    result = enumerate_harris(n, options);
  }

  if (!result.complete) {
    std::cerr << "stopped after " << result.units_done << "/" << result.units_total
              << " units; rerun with the same --checkpoint to continue\n";
    return kExitOk;
  }
  fs::create_directories(out_dir);
  write_catalog(out_dir, result);
  write_summary(out_dir, result);
  update_counts_csv(out_dir, result);
  std::cout << result.harris_count << "\n";
  return kExitOk;
}

// ---- family --------------------------------------------------------------

int cmd_family(const std::string& name, int steps, int n, bool verify, const std::string& out_path) {
  std::vector<LabeledFamilyState> states;
  if (name == "hirotaka" || name == "shaw") {
    if (steps < 0) throw UsageError("--steps must be non-negative");
    states = name == "hirotaka" ? hirotaka_family(steps) : shaw_family(steps);
  } else {
    if (n < 3 || n % 2 == 0) throw UsageError("justine needs an odd --n >= 3, got " + std::to_string(n));
    states.push_back(justine_labeled(n));
  }
  std::ofstream out;
  if (!out_path.empty()) {
    out.open(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
  }
  for (const auto& s : states) {
    json record = to_json(s);
    if (verify) record["harris"] = is_harris(s.graph, false).is_harris;
    std::cout << record.dump() << "\n";
    if (out) out << emit_graph6(s.graph) << "\n";
  }
  return kExitOk;
}

// ---- transform -----------------------------------------------------------

Edge edge_or_first(const Graph& g, const std::vector<int>& endpoints, const char* which) {
  if (endpoints.empty()) {
    const auto edges = g.edges();
    if (edges.empty()) throw GraphError(std::string(which) + " has no edges to subdivide");
    return edges.front();
  }
  Edge e{endpoints[0], endpoints[1]};
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw GraphError(std::string(which) + " has no edge {" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + "}");
  }
  return e;
}

void emit_transformed(const Graph& g, bool verify) {
  if (!verify) {
    std::cout << emit_graph6(g) << "\n";
    return;
  }
  json record = {{"graph6", emit_graph6(g)}, {"order", g.order()}, {"harris", is_harris(g, false).is_harris}};
  std::cout << record.dump() << "\n";
}

// Applies op to each positional graph, or to every stdin line when none is given.
template <typename Op>
int for_each_input(const std::vector<std::string>& inputs, Op op) {
  std::vector<std::string> items = inputs;
  if (items.empty()) {
    for (auto& line : read_lines(std::cin)) {
      if (!line.empty()) items.push_back(line);
    }
  }
  for (const auto& text : items) op(parse_graph6(text));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify, construct and enumerate Harris graphs (tough, Eulerian, non-Hamiltonian)."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "harris 1.0.0");

  int threads = default_threads();

  auto* check = app.add_subcommand("check", "Check graph6 lines; one JSON report per line");
  std::string check_path;
  bool harris_only = false;
  bool strict = false;
  check->add_option("input", check_path, "graph6 file ('-' or omitted: stdin)");
  check->add_flag("--harris-only", harris_only, "Only print reports of Harris graphs");
  check->add_flag("--strict", strict, "Stop at the first unparsable line");
  check->add_option("--threads", threads, "Worker threads (default: HARRIS_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "Census of Harris graphs of one order");
  int order = 0;
  std::string out_dir = ".";
  std::string checkpoint;
  int prefix_bits = -1;
  std::uint64_t max_units = 0;
  bool beyond_desk = false;
  enumerate->add_option("n", order, "Order")->required();
  enumerate->add_option("--out", out_dir, "Output directory for harris-<n>.g6, harris-<n>.json, counts.csv");
  enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--checkpoint", checkpoint, "Checkpoint file; resumed when it exists");
  enumerate->add_option("--prefix-bits", prefix_bits, "Work units = 2^bits (default min(dim, 10))");
  enumerate->add_option("--max-units", max_units, "Stop after this many work units");
  enumerate->add_flag("--beyond-desk-scale", beyond_desk, "Allow orders 11 and 12");

  auto* family = app.add_subcommand("family", "Generate a named family; one JSON record per member");
  std::string family_name;
  int steps = 1;
  int justine_n = 3;
  bool family_verify = false;
  std::string family_out;
  family->add_option("name", family_name, "hirotaka, shaw or justine")
      ->required()
      ->check(CLI::IsMember({"hirotaka", "shaw", "justine"}));
  family->add_option("--steps", steps, "Iterations after the base (hirotaka, shaw)");
  family->add_option("--n", justine_n, "Odd cycle length (justine)");
  family->add_flag("--verify", family_verify, "Run the Harris check on every member");
  family->add_option("--out", family_out, "Also write the members as graph6 lines to this file");

  auto* transform = app.add_subcommand("transform", "Apply a Harris-preserving construction");
  transform->require_subcommand(1);
  bool verify = false;
  transform->add_flag("--verify", verify, "Run the Harris check on the output")->configurable();

  auto* graft_cmd = transform->add_subcommand("graft", "Graft two graphs through 5-wheel subdivisions");
  std::string graft_g, graft_h;
  std::vector<int> edge_g, edge_h;
  graft_cmd->add_option("first", graft_g, "First graph G (graph6)")->required();
  graft_cmd->add_option("second", graft_h, "Second graph H (graph6)")->required();
  graft_cmd->add_option("--edge-g", edge_g, "Edge of g to subdivide (default: first edge)")->expected(2);
  graft_cmd->add_option("--edge-h", edge_h, "Edge of h to subdivide (default: first edge)")->expected(2);
  graft_cmd->add_flag("--verify", verify, "Run the Harris check on the output");

  auto* flower_cmd = transform->add_subcommand("flower", "Even out odd degrees with 2-barnacles");
  std::vector<std::string> flower_inputs;
  flower_cmd->add_option("graphs", flower_inputs, "graph6 inputs (default: stdin lines)");
  flower_cmd->add_flag("--verify", verify, "Run the Harris check on the output");

  auto* simplify_cmd = transform->add_subcommand("simplify", "Shrink every barnacle to a 2-barnacle");
  std::vector<std::string> simplify_inputs;
  simplify_cmd->add_option("graphs", simplify_inputs, "graph6 inputs (default: stdin lines)");
  simplify_cmd->add_flag("--verify", verify, "Run the Harris check on the output");

  auto* grow_cmd = transform->add_subcommand("grow", "Subdivide one barnacle");
  std::vector<std::string> grow_inputs;
  int barnacle_index = 0;
  int extra = 1;
  grow_cmd->add_option("graphs", grow_inputs, "graph6 inputs (default: stdin lines)");
  grow_cmd->add_option("--barnacle", barnacle_index, "Barnacle index in find order")->check(CLI::NonNegativeNumber);
  grow_cmd->add_option("--extra", extra, "Vertices to insert")->check(CLI::PositiveNumber);
  grow_cmd->add_flag("--verify", verify, "Run the Harris check on the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(check_path, harris_only, strict, threads);
    if (*enumerate) {
      return cmd_enumerate(order, out_dir, threads, checkpoint, prefix_bits, max_units, beyond_desk);
    }
    if (*family) return cmd_family(family_name, steps, justine_n, family_verify, family_out);
    if (*graft_cmd) {
      const Graph g = parse_graph6(graft_g);
      const Graph h = parse_graph6(graft_h);
      emit_transformed(graft(g, edge_or_first(g, edge_g, "g"), h, edge_or_first(h, edge_h, "h")), verify);
      return kExitOk;
    }
    if (*flower_cmd) {
      return for_each_input(flower_inputs, [&](const Graph& g) { emit_transformed(flower(g), verify); });
    }
    if (*simplify_cmd) {
      return for_each_input(simplify_inputs, [&](const Graph& g) {
        const auto barnacles = find_barnacles(g);
        const bool reducible =
            std::any_of(barnacles.begin(), barnacles.end(), [](const Barnacle& b) { return b.k() > 2; });
        if (barnacles.empty()) {
          std::cerr << "warning: " << emit_graph6(g) << " is barnacle-free; output unchanged\n";
        } else if (!reducible) {
          std::cerr << "warning: " << emit_graph6(g) << " has only 2-barnacles; output unchanged\n";
        }
        emit_transformed(simplify_all(g), verify);
      });
    }
    if (*grow_cmd) {
      return for_each_input(grow_inputs, [&](const Graph& g) {
        const auto barnacles = find_barnacles(g);
        if (barnacle_index >= static_cast<int>(barnacles.size())) {
          throw GraphError(emit_graph6(g) + " has " + std::to_string(barnacles.size()) +
                           " barnacles; index " + std::to_string(barnacle_index) + " is out of range");
        }
        emit_transformed(grow_barnacle(g, barnacles[barnacle_index], extra), verify);
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CeilingExceeded& e) {
    std::cerr << "ceiling exceeded: " << e.what() << "\n";
    return kExitCeiling;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
