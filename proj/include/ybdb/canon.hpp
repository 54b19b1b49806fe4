#pragma once

#include <span>
#include <string>
#include <vector>

#include "ybdb/perm.hpp"
#include "ybdb/tables.hpp"

namespace ybdb {

/// Relabeling action: (M^g)[i][j] = g^{-1}(M[g(i)][g(j)]).
/// Convention check: act(act(m,g),h) == act(m, compose(g,h)) with
/// compose(g,h)(x) = g(h(x)).
Mat act(const Mat& m, const Perm& g);

/// Simultaneous action on both components.
SkewCycleSet act(const SkewCycleSet& sc, const Perm& g);

/// m <=lex act(m,g) for every g in s, comparing flattened row-major entries.
bool is_lex_min(const Mat& m, std::span<const Perm> s);

/// Canonical key: two tables are isomorphic iff their keys are equal. The
/// matrix is the lex-minimal image among all relabelings that carry the
/// diagonal to its conjugacy-class representative.
struct CanonicalKey {
  CycleType diag_class;
  Mat canon;

  std::string bytes() const;
  auto operator<=>(const CanonicalKey&) const = default;
};

/// Requires a bijective diagonal (throws std::invalid_argument otherwise).
CanonicalKey canonical_form(const Mat& m);

/// Canonical key for a skew pair: minimizes the concatenation (R, M)
/// lexicographically, acting on both components at once, over all
/// relabelings carrying the rack diagonal to its class representative.
struct SkewCanonicalKey {
  CycleType rack_diag_class;
  Mat rack_canon;
  Mat m_canon;

  std::string bytes() const;
  auto operator<=>(const SkewCanonicalKey&) const = default;
};

SkewCanonicalKey canonical_form(const SkewCycleSet& sc);

bool are_isomorphic(const Mat& a, const Mat& b);
bool are_isomorphic(const SkewCycleSet& a, const SkewCycleSet& b);

/// All g with act(r,g) == r; forms a group under compose.
std::vector<Perm> rack_automorphisms(const Mat& r);

/// Lex-minimal act(m,g) over g in aut; used to pick one representative per
/// orbit when the rack (and hence its automorphism group) is fixed.
Mat min_in_orbit(const Mat& m, std::span<const Perm> aut);

}  // namespace ybdb
