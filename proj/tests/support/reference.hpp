#pragma once

#include <utility>
#include <vector>

#include "ybdb/tables.hpp"

// Slow, self-contained reference enumeration used as the oracle for the main
// engine and as the serial baseline in benchmarks. Deliberately independent
// of the engine: no symmetry breaking, no canonical forms; isomorphism is
// decided by scanning all n! relabelings, and the axioms are re-stated
// inline instead of calling the library checkers.
namespace ybdb::ref {

// every valid table, all labelings
std::vector<Mat> all_cycle_set_tables(int n);
std::vector<Mat> all_rack_tables(int n);
// every valid pair (rack, m), all labelings
std::vector<std::pair<Mat, Mat>> all_skew_pairs(int n);

// f with b[f(i)][f(j)] = f(a[i][j]) for all i,j
bool isomorphic(const Mat& a, const Mat& b);
// one f relabeling both components at once
bool isomorphic(const std::pair<Mat, Mat>& a, const std::pair<Mat, Mat>& b);

std::vector<Mat> cycle_set_classes(int n);
std::vector<Mat> rack_classes(int n);
std::vector<std::pair<Mat, Mat>> skew_classes(int n);  // trivial rack included

}  // namespace ybdb::ref
