// Harris census over the cycle space of K_n.
//
// Every even-degree labeled graph on n vertices is a sum of triangles {0,i,j},
// 1 <= i < j < n, and these C(n-1,2) triangles form a basis. A Gray-code walk over
// the coefficient vector visits each such graph once, changing three edges per
// step. The walk is split into 2^prefix_bits work units by fixing the top basis
// coefficients.
//
// Per labeled graph, in order: minimum degree >= 2 with degrees non-increasing in
// the label (every isomorphism class has such a labeling), connectivity,
// 2-connectivity, and the heuristic Hamiltonian hunt. Survivors are reduced to
// canonical forms; exhaustive Hamiltonicity and toughness then run once per class.

#include "harris/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "harris/canonical.hpp"
#include "harris/graph6.hpp"
#include "harris/properties.hpp"

namespace harris {

void StageStatistics::add_labeled(const StageStatistics& o) {
  labeled_even += o.labeled_even;
  degree_ordered += o.degree_ordered;
  connected += o.connected;
  biconnected += o.biconnected;
  heuristic_hamiltonian += o.heuristic_hamiltonian;
}

nlohmann::json to_json(const StageStatistics& s) {
  return {{"labeled_even", s.labeled_even},
          {"degree_ordered", s.degree_ordered},
          {"connected", s.connected},
          {"biconnected", s.biconnected},
          {"heuristic_hamiltonian", s.heuristic_hamiltonian},
          {"candidate_classes", s.candidate_classes},
          {"hamiltonian_classes", s.hamiltonian_classes},
          {"not_tough_classes", s.not_tough_classes},
          {"harris_classes", s.harris_classes}};
}

StageStatistics stage_statistics_from_json(const nlohmann::json& j) {
  StageStatistics s;
  auto get = [&j](const char* key) { return j.value(key, std::uint64_t{0}); };
  s.labeled_even = get("labeled_even");
  s.degree_ordered = get("degree_ordered");
  s.connected = get("connected");
  s.biconnected = get("biconnected");
  s.heuristic_hamiltonian = get("heuristic_hamiltonian");
  s.candidate_classes = get("candidate_classes");
  s.hamiltonian_classes = get("hamiltonian_classes");
  s.not_tough_classes = get("not_tough_classes");
  s.harris_classes = get("harris_classes");
  return s;
}

namespace {

const char* verdict_name(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::Harris: return "harris";
    case ClassVerdict::Hamiltonian: return "hamiltonian";
    case ClassVerdict::NotTough: return "not_tough";
  }
  return "?";
}

ClassVerdict verdict_from_name(const std::string& s) {
  if (s == "harris") return ClassVerdict::Harris;
  if (s == "hamiltonian") return ClassVerdict::Hamiltonian;
  if (s == "not_tough") return ClassVerdict::NotTough;
  throw std::runtime_error("checkpoint: unknown class verdict '" + s + "'");
}

void check_order(int n, int max_order) {
  if (n < kCensusMinOrder) {
    throw GraphError("census order must be at least " + std::to_string(kCensusMinOrder));
  }
  if (n > max_order) {
    throw CeilingExceeded("census order " + std::to_string(n) + " exceeds the supported ceiling of " +
                          std::to_string(max_order));
  }
}

struct Triangle {
  int i;
  int j;
};

std::vector<Triangle> basis(int n) {
  std::vector<Triangle> out;
  for (int j = 2; j < n; ++j) {
    for (int i = 1; i < j; ++i) out.push_back({i, j});
  }
  return out;
}

struct Scanner {
  int n;
  int prefix_bits;
  bool require_biconnected;
  std::vector<Triangle> triangles;

  Scanner(int order, int prefix, bool biconnected)
      : n(order), prefix_bits(prefix), require_biconnected(biconnected), triangles(basis(order)) {}

  static void toggle(std::uint32_t* adj, Triangle t) {
    adj[0] ^= (1U << t.i) | (1U << t.j);
    adj[t.i] ^= 1U | (1U << t.j);
    adj[t.j] ^= 1U | (1U << t.i);
  }

  static std::uint32_t flood(const std::uint32_t* adj, std::uint32_t alive, std::uint32_t seed) {
    std::uint32_t seen = seed;
    std::uint32_t frontier = seed;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  // Returns true when the labeled graph survives the structural filters.
  bool structural(const std::uint32_t* adj, StageStatistics& st) const {
    int prev = n;
    for (int v = 0; v < n; ++v) {
      const int d = std::popcount(adj[v]);
      if (d < 2 || d > prev) return false;
      prev = d;
    }
    ++st.degree_ordered;
    const std::uint32_t all = (1U << n) - 1;
    if (flood(adj, all, 1U) != all) return false;
    ++st.connected;
    if (require_biconnected) {
      for (int v = 0; v < n; ++v) {
        const std::uint32_t alive = all & ~(1U << v);
        if (flood(adj, alive, alive & (0U - alive)) != alive) return false;
      }
      ++st.biconnected;
    }
    return true;
  }

  template <class OnSurvivor>
  void scan(std::uint64_t unit, StageStatistics& st, OnSurvivor&& on_survivor) const {
    const int dim = static_cast<int>(triangles.size());
    const int low_bits = dim - prefix_bits;
    std::uint32_t adj[32] = {};
    for (int b = 0; b < prefix_bits; ++b) {
      if ((unit >> b) & 1U) toggle(adj, triangles[low_bits + b]);
    }
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    VertexSet rows[32];
    for (std::uint64_t c = 0; c < steps; ++c) {
      if (c != 0) toggle(adj, triangles[std::countr_zero(c)]);
      if (!structural(adj, st)) continue;
      for (int v = 0; v < n; ++v) rows[v] = adj[v];
      on_survivor(Graph::from_adjacency(std::span<const VertexSet>(rows, static_cast<std::size_t>(n))));
    }
    st.labeled_even += steps;
  }
};

int default_prefix_bits(int dim) { return std::min(dim, 10); }

struct UnitOutcome {
  StageStatistics labeled;
  std::set<std::string> classes;
};

UnitOutcome process_unit(const Scanner& scanner, std::uint64_t unit) {
  UnitOutcome out;
  scanner.scan(unit, out.labeled, [&](const Graph& g) {
    if (heuristic_hamiltonian_cycle(g)) {
      ++out.labeled.heuristic_hamiltonian;
      return;
    }
    out.classes.insert(canonical_form(g).bytes);
  });
  return out;
}

ClassVerdict classify(const std::string& g6) {
  const Graph g = parse_graph6(g6);
  if (exhaustive_hamiltonian_cycle(g).hamiltonian) return ClassVerdict::Hamiltonian;
  return is_tough(g).tough ? ClassVerdict::Harris : ClassVerdict::NotTough;
}

CensusResult summarize(const CensusCheckpoint& cp) {
  CensusResult r;
  r.order = cp.order;
  r.stats = cp.labeled;
  r.stats.candidate_classes = cp.classes.size();
  for (const auto& [g6, verdict] : cp.classes) {
    switch (verdict) {
      case ClassVerdict::Harris:
        ++r.stats.harris_classes;
        r.catalog.push_back(g6);
        break;
      case ClassVerdict::Hamiltonian: ++r.stats.hamiltonian_classes; break;
      case ClassVerdict::NotTough: ++r.stats.not_tough_classes; break;
    }
  }
  r.harris_count = r.catalog.size();
  r.units_done = cp.completed_units.size();
  r.units_total = cp.unit_count();
  r.complete = cp.complete();
  return r;
}

CensusResult run_census(CensusCheckpoint cp, const CensusOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const Scanner scanner(cp.order, cp.prefix_bits, true);

  std::vector<std::uint64_t> pending;
  for (std::uint64_t u = 0; u < cp.unit_count(); ++u) {
    if (!cp.completed_units.contains(u)) pending.push_back(u);
  }
  if (options.max_units > 0 && pending.size() > options.max_units) pending.resize(options.max_units);

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      for (std::size_t idx = next++; idx < pending.size(); idx = next++) {
        const std::uint64_t unit = pending[idx];
        UnitOutcome outcome = process_unit(scanner, unit);

        std::vector<std::string> fresh;
        {
          std::lock_guard lock(mu);
          for (const auto& c : outcome.classes) {
            if (!cp.classes.contains(c)) fresh.push_back(c);
          }
        }
        std::vector<ClassVerdict> verdicts;
        verdicts.reserve(fresh.size());
        for (const auto& c : fresh) verdicts.push_back(classify(c));

        std::lock_guard lock(mu);
        for (std::size_t i = 0; i < fresh.size(); ++i) cp.classes.emplace(fresh[i], verdicts[i]);
        cp.labeled.add_labeled(outcome.labeled);
        cp.completed_units.insert(unit);
        if (!options.checkpoint_path.empty()) cp.save(options.checkpoint_path);
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next = pending.size();
    }
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (!options.checkpoint_path.empty()) cp.save(options.checkpoint_path);

  CensusResult r = summarize(cp);
  r.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

}  // namespace

int cycle_space_dimension(int n) { return (n - 1) * (n - 2) / 2; }

std::vector<Graph> enumerate_even_connected(int n) {
  check_order(n, kCensusDeskMaxOrder);
  const int dim = cycle_space_dimension(n);
  const int prefix = default_prefix_bits(dim);
  const Scanner scanner(n, prefix, false);
  std::map<std::string, Graph> classes;
  StageStatistics st;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << prefix); ++u) {
    scanner.scan(u, st, [&](const Graph& g) {
      auto canon = canonical_labeling(g);
      classes.try_emplace(std::move(canon.form.bytes), std::move(canon.graph));
    });
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [_, g] : classes) out.push_back(std::move(g));
  return out;
}

CensusResult enumerate_harris(int n, const CensusOptions& options) {
  check_order(n, kCensusMaxOrder);
  CensusCheckpoint cp;
  cp.order = n;
  const int dim = cycle_space_dimension(n);
  cp.prefix_bits = options.prefix_bits < 0 ? default_prefix_bits(dim) : options.prefix_bits;
  if (cp.prefix_bits > dim || cp.prefix_bits > 30) {
    throw GraphError("prefix_bits must be at most min(" + std::to_string(dim) + ", 30)");
  }
  return run_census(std::move(cp), options);
}

CensusResult resume(const CensusCheckpoint& checkpoint, const CensusOptions& options) {
  if (checkpoint.version != kCheckpointVersion) {
    throw std::runtime_error("checkpoint version " + std::to_string(checkpoint.version) +
                             " does not match " + std::to_string(kCheckpointVersion));
  }
  if (checkpoint.pipeline != kCensusPipeline) {
    throw std::runtime_error("checkpoint pipeline '" + checkpoint.pipeline + "' does not match '" +
                             kCensusPipeline + "'");
  }
  check_order(checkpoint.order, kCensusMaxOrder);
  if (checkpoint.prefix_bits > cycle_space_dimension(checkpoint.order) ||
      checkpoint.prefix_bits > 30 || checkpoint.prefix_bits < 0) {
    throw std::runtime_error("checkpoint prefix_bits out of range");
  }
  if (options.prefix_bits >= 0 && options.prefix_bits != checkpoint.prefix_bits) {
    throw std::runtime_error("checkpoint prefix_bits " + std::to_string(checkpoint.prefix_bits) +
                             " does not match requested " + std::to_string(options.prefix_bits));
  }
  for (std::uint64_t u : checkpoint.completed_units) {
    if (u >= checkpoint.unit_count()) throw std::runtime_error("checkpoint unit out of range");
  }
  return run_census(checkpoint, options);
}

nlohmann::json CensusCheckpoint::to_json() const {
  nlohmann::json classes_json = nlohmann::json::object();
  for (const auto& [g6, v] : classes) classes_json[g6] = verdict_name(v);
  return {{"format", "harris-census-checkpoint"},
          {"version", version},
          {"pipeline", pipeline},
          {"order", order},
          {"prefix_bits", prefix_bits},
          {"completed_units", completed_units},
          {"labeled_statistics", harris::to_json(labeled)},
          {"classes", classes_json}};
}

CensusCheckpoint CensusCheckpoint::from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "harris-census-checkpoint") {
    throw std::runtime_error("not a census checkpoint");
  }
  CensusCheckpoint cp;
  cp.version = j.at("version").get<int>();
  cp.pipeline = j.at("pipeline").get<std::string>();
  cp.order = j.at("order").get<int>();
  cp.prefix_bits = j.at("prefix_bits").get<int>();
  cp.completed_units = j.at("completed_units").get<std::set<std::uint64_t>>();
  cp.labeled = stage_statistics_from_json(j.at("labeled_statistics"));
  for (const auto& [g6, v] : j.at("classes").items()) {
    cp.classes.emplace(g6, verdict_from_name(v.get<std::string>()));
  }
  return cp;
}

void CensusCheckpoint::save(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << to_json().dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

CensusCheckpoint CensusCheckpoint::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  return from_json(nlohmann::json::parse(in));
}

std::vector<DegreeSequence> census_degree_histogram(const CensusResult& result) {
  std::vector<DegreeSequence> out;
  out.reserve(result.catalog.size());
  for (const auto& g6 : result.catalog) out.push_back(degree_sequence(parse_graph6(g6)));
  std::sort(out.begin(), out.end());
  return out;
}

std::filesystem::path write_catalog(const std::filesystem::path& dir, const CensusResult& result) {
  std::filesystem::create_directories(dir);
  const auto path = dir / ("harris-" + std::to_string(result.order) + ".g6");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  for (const auto& line : result.catalog) out << line << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
  return path;
}

std::filesystem::path write_summary(const std::filesystem::path& dir, const CensusResult& result) {
  std::filesystem::create_directories(dir);
  const auto path = dir / ("harris-" + std::to_string(result.order) + ".json");
  const nlohmann::json j = {{"order", result.order},
                            {"count", result.harris_count},
                            {"complete", result.complete},
                            {"stage_statistics", to_json(result.stats)},
                            {"wall_time", result.wall_time_seconds}};
  std::ofstream out(path, std::ios::trunc);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
  return path;
}

std::filesystem::path update_counts_csv(const std::filesystem::path& dir, const CensusResult& result) {
  std::filesystem::create_directories(dir);
  const auto path = dir / "counts.csv";
  std::map<int, std::uint64_t> rows;
  if (std::ifstream in(path); in) {
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string order, count;
      if (std::getline(fields, order, ',') && std::getline(fields, count)) {
        rows[std::stoi(order)] = std::stoull(count);
      }
    }
  }
  rows[result.order] = result.harris_count;
  std::ofstream out(path, std::ios::trunc);
  out << "order,harris_count\n";
  for (const auto& [order, count] : rows) out << order << ',' << count << '\n';
  return path;
}

}  // namespace harris
