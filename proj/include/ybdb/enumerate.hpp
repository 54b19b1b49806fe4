#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ybdb/canon.hpp"
#include "ybdb/perm.hpp"
#include "ybdb/tables.hpp"
#include "ybdb/yb.hpp"

namespace ybdb {

enum class SearchKind : uint8_t { cycle_set, rack, skew_over_rack };

enum class SymmetryMode : uint8_t {
  automatic,        // full centralizer while its order stays small, else support-k
  full_centralizer,
  generators_only,
  support_k,        // elements moving <= support_k points, plus generators
};

struct ProgressInfo {
  uint64_t nodes = 0;
  uint64_t raw_found = 0;
  double elapsed_s = 0;
  double nodes_per_s = 0;
  size_t tasks_done = 0, tasks_total = 0;
};

struct SearchConfig {
  int n = 0;
  SearchKind kind = SearchKind::cycle_set;
  SymmetryMode symmetry = SymmetryMode::automatic;
  int support_k = 3;
  // When set, only diagonals of these conjugacy classes are searched.
  std::optional<std::vector<CycleType>> diagonal_filter;
  int jobs = 0;                // 0 = all hardware threads
  uint64_t node_budget = 0;    // 0 = unlimited
  double time_budget_s = 0;    // 0 = unlimited
  std::function<void(const ProgressInfo&)> progress;  // called every ~2s when set
};

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t constraint_prunes = 0;
  uint64_t symmetry_prunes = 0;
  uint64_t raw_outputs = 0;
  uint64_t deduped_outputs = 0;
  double wall_s = 0;

  void merge(const SearchStats& o);
  std::string to_text() const;
};

/// classes holds exactly one canonical representative per isomorphism class.
/// complete == false means a node or time budget cut the run short; classes
/// then holds a sound but possibly incomplete batch.
template <class T>
struct EnumResult {
  std::vector<T> classes;
  SearchStats stats;
  bool complete = true;
};

EnumResult<Mat> enumerate_cycle_sets(const SearchConfig& cfg);
EnumResult<Mat> enumerate_racks(const SearchConfig& cfg);

/// All skew cycle sets over one fixed rack, up to isomorphism; symmetry
/// breaking uses the rack's automorphism group.
EnumResult<SkewCycleSet> enumerate_skew_cycle_sets(const Mat& rack, const SearchConfig& cfg);

/// Union over every rack of size cfg.n (enumerated internally). Excluding the
/// trivial rack yields exactly the non-involutive classes.
EnumResult<SkewCycleSet> enumerate_all_skew(const SearchConfig& cfg, bool include_trivial_rack,
                                            bool quandle_racks_only);

enum class SolutionFamily : uint8_t { involutive, non_involutive, biquandle, all };

/// Converts enumerated tables to verified solution maps. biquandle means
/// non-involutive biquandles; involutive solutions are all biquandles.
EnumResult<SolutionMap> enumerate_solutions(int n, SolutionFamily family, SearchConfig cfg = {});

/// The symmetry set a search with this configuration would use for diagonal
/// class representative t (identity excluded). Exposed for tests and the CLI.
std::vector<Perm> symmetry_set_for(const Perm& t, const SearchConfig& cfg);

}  // namespace ybdb
