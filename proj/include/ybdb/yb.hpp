#pragma once

#include <string>
#include <vector>

#include "ybdb/perm.hpp"
#include "ybdb/tables.hpp"

namespace ybdb {

/// Solution-side representation: r(x,y) = (sigma[x](y), tau[y](x)).
/// Non-degeneracy (every sigma_x and tau_y bijective) is enforced by Perm.
struct SolutionMap {
  int n = 0;
  std::vector<Perm> sigma;
  std::vector<Perm> tau;

  auto operator<=>(const SolutionMap&) const = default;
};

struct YbeReport {
  bool ok = true;
  bool braid = true;      // both braid compositions agree on every triple
  bool bijective = true;  // r is a bijection of X x X
  int x = -1, y = -1, z = -1;  // witness triple when braid fails

  explicit operator bool() const { return ok; }
  std::string describe() const;
};

/// Evaluates (r x id)(id x r)(r x id) and (id x r)(r x id)(id x r) on all n^3
/// triples and checks that r is bijective on pairs.
YbeReport verify_ybe(const SolutionMap& s);

/// r(r(x,y)) = (x,y) for all pairs.
bool is_involutive(const SolutionMap& s);

/// r(x,y) = (y,x); the simplest involutive solution.
SolutionMap flip_solution(int n);

SolutionMap cycle_set_to_solution(const Mat& m);
/// m[x][y] = tau_x^{-1}(y); throws std::invalid_argument on non-involutive input.
Mat solution_to_cycle_set(const SolutionMap& s);

SkewCycleSet solution_to_skew_cycle_set(const SolutionMap& s);
SolutionMap skew_cycle_set_to_solution(const SkewCycleSet& sc);

}  // namespace ybdb
