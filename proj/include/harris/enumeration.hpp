#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "harris/graph.hpp"

namespace harris {

/// Orders the cycle-space scan accepts. Desk scale ends at 10; 11 and 12 run but
/// are far beyond practical wall time (2^45 and 2^55 labeled graphs).
inline constexpr int kCensusMinOrder = 3;
inline constexpr int kCensusMaxOrder = 12;
inline constexpr int kCensusDeskMaxOrder = 10;

inline constexpr int kCheckpointVersion = 1;
inline constexpr const char* kCensusPipeline = "cycle-space-gray/degree-ordered/v1";

/// Counters per filter stage. Labeled counters count labeled graphs; class counters
/// count isomorphism classes.
struct StageStatistics {
  std::uint64_t labeled_even = 0;          // every cycle-space element visited
  std::uint64_t degree_ordered = 0;        // min degree >= 2, degrees non-increasing by label
  std::uint64_t connected = 0;
  std::uint64_t biconnected = 0;
  std::uint64_t heuristic_hamiltonian = 0; // rejected by the rotation-extension hunt
  std::uint64_t candidate_classes = 0;     // distinct survivors sent to exhaustive checks
  std::uint64_t hamiltonian_classes = 0;   // rejected by the exhaustive search
  std::uint64_t not_tough_classes = 0;
  std::uint64_t harris_classes = 0;

  void add_labeled(const StageStatistics& other);
  friend bool operator==(const StageStatistics&, const StageStatistics&) = default;
};

nlohmann::json to_json(const StageStatistics& s);
StageStatistics stage_statistics_from_json(const nlohmann::json& j);

enum class ClassVerdict { Harris, Hamiltonian, NotTough };

struct CensusOptions {
  int threads = 1;
  /// Checkpoint file rewritten after every completed work unit; empty disables.
  std::filesystem::path checkpoint_path;
  /// Work units = 2^prefix_bits; -1 picks min(dimension, 10).
  int prefix_bits = -1;
  /// Stop after this many units in this call (0 = run to completion).
  std::uint64_t max_units = 0;
};

/// Progress of a census: which work units are finished and what they found.
struct CensusCheckpoint {
  int version = kCheckpointVersion;
  std::string pipeline = kCensusPipeline;
  int order = 0;
  int prefix_bits = 0;
  std::set<std::uint64_t> completed_units;
  std::map<std::string, ClassVerdict> classes;  // canonical graph6 -> verdict
  StageStatistics labeled;                      // labeled-stage counters only

  std::uint64_t unit_count() const { return std::uint64_t{1} << prefix_bits; }
  bool complete() const { return completed_units.size() == unit_count(); }

  nlohmann::json to_json() const;
  static CensusCheckpoint from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static CensusCheckpoint load(const std::filesystem::path& path);
};

struct CensusResult {
  int order = 0;
  std::uint64_t harris_count = 0;
  std::vector<std::string> catalog;  // canonical graph6, ascending
  StageStatistics stats;
  double wall_time_seconds = 0.0;
  bool complete = false;
  std::uint64_t units_done = 0;
  std::uint64_t units_total = 0;
};

/// Dimension of the cycle space of K_n: C(n-1, 2).
int cycle_space_dimension(int n);

/// One canonical representative per class of connected even graphs with minimum
/// degree >= 2 on n vertices, sorted by canonical graph6.
std::vector<Graph> enumerate_even_connected(int n);

CensusResult enumerate_harris(int n, const CensusOptions& options = {});

/// Continues a checkpoint. Refuses checkpoints from another pipeline or version.
CensusResult resume(const CensusCheckpoint& checkpoint, const CensusOptions& options = {});

/// Degree sequences of the catalog members, sorted.
std::vector<DegreeSequence> census_degree_histogram(const CensusResult& result);

/// harris-<n>.g6, one line per catalog entry.
std::filesystem::path write_catalog(const std::filesystem::path& dir, const CensusResult& result);
/// harris-<n>.json: {order, count, stage_statistics, wall_time, complete}.
std::filesystem::path write_summary(const std::filesystem::path& dir, const CensusResult& result);
/// counts.csv with header "order,harris_count"; merges with rows already present.
std::filesystem::path update_counts_csv(const std::filesystem::path& dir, const CensusResult& result);

}  // namespace harris
