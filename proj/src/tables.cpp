#include "ybdb/tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybdb {

std::string CheckReport::describe() const {
  auto w = [&] {
    return " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
           std::to_string(k + 1) + ")";
  };
  switch (code) {
    case Violation::none: return std::string("ok");
    case Violation::malformed_entry:
      return "entry out of range at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    case Violation::row_not_bijective:
      return "row " + std::to_string(i + 1) + " is not a permutation";
    case Violation::diagonal_not_bijective: return std::string("diagonal is not a permutation");
    case Violation::cycle_set_axiom: return "cycle-set axiom fails" + w();
    case Violation::rack_axiom: return "rack axiom fails" + w();
    case Violation::skew_main_axiom: return "skew cycle-set axiom fails" + w();
    case Violation::skew_compat_axiom: return "rack compatibility axiom fails" + w();
  }
  return "?";
}

namespace {

CheckReport shape_check(const Mat& m) {
  int n = m.n;
  if (n <= 0 || m.a.size() != static_cast<size_t>(n) * n)
    return {Violation::malformed_entry, 0, 0, -1};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) >= n) return {Violation::malformed_entry, i, j, -1};
  std::vector<bool> seen(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      if (seen[m.at(i, j)]) return {Violation::row_not_bijective, i, -1, -1};
      seen[m.at(i, j)] = true;
    }
  }
  std::fill(seen.begin(), seen.end(), false);
  for (int i = 0; i < n; ++i) {
    if (seen[m.at(i, i)]) return {Violation::diagonal_not_bijective, -1, -1, -1};
    seen[m.at(i, i)] = true;
  }
  return {};
}

}  // namespace

CheckReport check_cycle_set(const Mat& m) {
  if (auto r = shape_check(m); !r) return r;
  int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      uint8_t a = m.at(i, j), b = m.at(j, i);
      for (int k = 0; k < n; ++k)
        if (m.at(a, m.at(i, k)) != m.at(b, m.at(j, k)))
          return {Violation::cycle_set_axiom, i, j, k};
    }
  return {};
}

CheckReport check_rack(const Mat& r) {
  if (auto rep = shape_check(r); !rep) return rep;
  int n = r.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (r.at(i, r.at(j, k)) != r.at(r.at(i, j), r.at(i, k)))
          return {Violation::rack_axiom, i, j, k};
  return {};
}

CheckReport check_skew_cycle_set(const Mat& m, const Mat& r) {
  if (auto rep = check_rack(r); !rep) return rep;
  if (m.n != r.n) return {Violation::malformed_entry, 0, 0, -1};
  if (auto rep = shape_check(m); !rep) return rep;
  int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      uint8_t a = m.at(i, r.at(i, j)), b = m.at(j, i);
      for (int k = 0; k < n; ++k)
        if (m.at(a, m.at(i, k)) != m.at(b, m.at(j, k)))
          return {Violation::skew_main_axiom, i, j, k};
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m.at(i, r.at(j, k)) != r.at(m.at(i, j), m.at(i, k)))
          return {Violation::skew_compat_axiom, i, j, k};
  return {};
}

bool is_quandle(const Mat& r) {
  for (int i = 0; i < r.n; ++i)
    if (r.at(i, i) != i) return false;
  return true;
}

Mat trivial_cycle_set(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<uint8_t>(j);
  return m;
}

Mat trivial_rack(int n) { return trivial_cycle_set(n); }

bool is_trivial_rack(const Mat& r) { return r == trivial_rack(r.n); }

Perm diagonal_of(const Mat& m) {
  std::vector<uint8_t> img(static_cast<size_t>(m.n));
  for (int i = 0; i < m.n; ++i) img[static_cast<size_t>(i)] = m.at(i, i);
  return Perm(std::move(img));  // throws if not a bijection
}

Perm row_perm(const Mat& m, int i) {
  std::vector<uint8_t> img(m.a.begin() + static_cast<size_t>(i) * m.n,
                           m.a.begin() + static_cast<size_t>(i + 1) * m.n);
  return Perm(std::move(img));
}

}  // namespace ybdb
