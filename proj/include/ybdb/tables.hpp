#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ybdb/perm.hpp"

namespace ybdb {

/// Dense n x n table over {0..n-1}, row-major, one byte per entry.
/// operator<=> is the flattened row-major lexicographic order the
/// symmetry-breaking code relies on.
struct Mat {
  int n = 0;
  std::vector<uint8_t> a;

  Mat() = default;
  explicit Mat(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

  uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }

  auto operator<=>(const Mat&) const = default;
};

using CycleSetTable = Mat;  // m[i][j] = i . j
using RackTable = Mat;      // r[i][j] = i |> j

/// Pair (rack, cycle-set-like table) encoding an arbitrary non-degenerate
/// solution; the rack is trivial exactly for involutive solutions.
struct SkewCycleSet {
  Mat r;
  Mat m;
  auto operator<=>(const SkewCycleSet&) const = default;
};

enum class Violation : uint8_t {
  none = 0,
  malformed_entry,         // entry outside {0..n-1}: file corruption, not math
  row_not_bijective,
  diagonal_not_bijective,
  cycle_set_axiom,         // (i.j).(i.k) = (j.i).(j.k)
  rack_axiom,              // i|>(j|>k) = (i|>j)|>(i|>k)
  skew_main_axiom,         // (i.(i|>j)).(i.k) = (j.i).(j.k)
  skew_compat_axiom,       // i.(j|>k) = (i.j)|>(i.k)
};

struct CheckReport {
  Violation code = Violation::none;
  int i = -1, j = -1, k = -1;  // witness, 0-based

  bool ok() const { return code == Violation::none; }
  explicit operator bool() const { return ok(); }
  std::string describe() const;
};

CheckReport check_cycle_set(const Mat& m);
CheckReport check_rack(const Mat& r);
/// The rack is validated first; the main skew axiom is the algebraic
/// identity (x.(x|>y)).(x.z) = (y.x).(y.z).
CheckReport check_skew_cycle_set(const Mat& m, const Mat& r);

bool is_quandle(const Mat& r);  // r must be a valid rack

Mat trivial_cycle_set(int n);  // m[i][j] = j
Mat trivial_rack(int n);       // r[i][j] = j
bool is_trivial_rack(const Mat& r);

/// The diagonal as a permutation; throws std::invalid_argument if it is not
/// a bijection.
Perm diagonal_of(const Mat& m);

/// Row i as a permutation (the left translation phi_i).
Perm row_perm(const Mat& m, int i);

}  // namespace ybdb
