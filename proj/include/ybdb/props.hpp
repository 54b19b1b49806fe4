#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ybdb/tables.hpp"
#include "ybdb/yb.hpp"

namespace ybdb {

/// Signals a broken structural assumption (for example a retraction whose
/// induced operation is not well-defined): always an upstream bug, never
/// user error.
struct integrity_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Closure of a generating set of permutations: order plus the orbit
/// partition of {0..n-1}. Orbits come first and are cheap; the order is
/// computed lazily on first access.
class GroupInfo {
public:
  GroupInfo(int n, std::vector<Perm> generators);

  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  bool transitive() const { return orbits_.size() == 1; }
  uint64_t order() const;  // full closure; cached

private:
  int n_;
  std::vector<Perm> gens_;
  std::vector<std::vector<int>> orbits_;
  mutable uint64_t order_ = 0;
};

/// Group generated by the rows of m (equivalently by the tau family).
GroupInfo permutation_group(const Mat& m);

bool is_square_free(const Mat& m);     // m[i][i] = i for all i
bool is_indecomposable(const Mat& m);  // permutation group transitive
bool is_irretractable(const Mat& m);   // all rows pairwise distinct

/// Quotient by the row-equality relation. Classes are indexed by their
/// smallest member. Throws integrity_error if the induced operation is not
/// well-defined and std::invalid_argument if the result fails the axioms.
Mat retract(const Mat& m);

/// Smallest k with |Ret^k| = 1; absent when iteration stalls at size > 1.
/// Size-1 input has level 0.
std::optional<int> multipermutation_level(const Mat& m);

/// The associated rack is a quandle. Involutive solutions always qualify.
bool is_biquandle(const SolutionMap& s);

struct ClassificationRecord {
  bool involutive = false;
  bool square_free = false;
  bool indecomposable = false;
  bool irretractable = false;
  std::optional<int> multipermutation_level;
  bool biquandle = false;
  bool gi_counterexample = false;
  uint64_t permutation_group_order = 1;
};

ClassificationRecord classify(const Mat& cycle_set);
ClassificationRecord classify(const SkewCycleSet& sc);

struct GiResult {
  uint64_t count = 0;
  std::vector<size_t> indices;  // positions in the database
};

/// Counterexamples to the square-free-implies-retractable conjecture inside
/// a complete involutive database of size n: square-free and irretractable,
/// n >= 2.
GiResult gi_counterexamples(std::span<const Mat> database);

}  // namespace ybdb
