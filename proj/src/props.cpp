#include "ybdb/props.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ybdb {

GroupInfo::GroupInfo(int n, std::vector<Perm> generators)
    : n_(n), gens_(std::move(generators)) {
  // union-find over x ~ g(x)
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const Perm& g : gens_)
    for (int x = 0; x < n; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[static_cast<size_t>(a)] = b;
    }
  std::vector<std::vector<int>> by_root(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) by_root[static_cast<size_t>(find(x))].push_back(x);
  for (auto& blk : by_root)
    if (!blk.empty()) orbits_.push_back(std::move(blk));
}

uint64_t GroupInfo::order() const {
  if (order_) return order_;
  std::set<Perm> closure;
  std::vector<Perm> frontier{Perm::identity(n_)};
  closure.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& h : frontier)
      for (const Perm& g : gens_) {
        Perm p = compose(g, h);
        if (closure.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  order_ = closure.size();
  return order_;
}

GroupInfo permutation_group(const Mat& m) {
  std::vector<Perm> gens;
  gens.reserve(static_cast<size_t>(m.n));
  for (int i = 0; i < m.n; ++i) gens.push_back(row_perm(m, i));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return GroupInfo(m.n, std::move(gens));
}

bool is_square_free(const Mat& m) {
  for (int i = 0; i < m.n; ++i)
    if (m.at(i, i) != i) return false;
  return true;
}

bool is_indecomposable(const Mat& m) { return permutation_group(m).transitive(); }

bool is_irretractable(const Mat& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (std::equal(m.a.begin() + static_cast<size_t>(i) * m.n,
                     m.a.begin() + static_cast<size_t>(i + 1) * m.n,
                     m.a.begin() + static_cast<size_t>(j) * m.n))
        return false;
  return true;
}

namespace {

// class index per element, classes numbered by smallest member, row equality
std::pair<std::vector<int>, int> row_classes(const Mat& m) {
  int n = m.n;
  std::vector<int> cls(static_cast<size_t>(n), -1);
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[static_cast<size_t>(i)] >= 0) continue;
    cls[static_cast<size_t>(i)] = count;
    for (int j = i + 1; j < n; ++j)
      if (cls[static_cast<size_t>(j)] < 0 &&
          std::equal(m.a.begin() + static_cast<size_t>(i) * n,
                     m.a.begin() + static_cast<size_t>(i + 1) * n,
                     m.a.begin() + static_cast<size_t>(j) * n))
        cls[static_cast<size_t>(j)] = count;
    ++count;
  }
  return {std::move(cls), count};
}

}  // namespace

Mat retract(const Mat& m) {
  auto [cls, count] = row_classes(m);
  int n = m.n;
  Mat out(count);
  std::vector<bool> defined(static_cast<size_t>(count) * count, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cx = cls[static_cast<size_t>(x)], cy = cls[static_cast<size_t>(y)];
      int cv = cls[static_cast<size_t>(m.at(x, y))];
      size_t slot = static_cast<size_t>(cx) * count + cy;
      if (!defined[slot]) {
        defined[slot] = true;
        out.at(cx, cy) = static_cast<uint8_t>(cv);
      } else if (out.at(cx, cy) != cv) {
        throw integrity_error("retract: induced operation is not well-defined");
      }
    }
  if (auto rep = check_cycle_set(out); !rep)
    throw std::invalid_argument("retract: quotient fails cycle-set axioms: " + rep.describe());
  return out;
}

std::optional<int> multipermutation_level(const Mat& m) {
  Mat cur = m;
  int level = 0;
  while (cur.n > 1) {
    Mat next = retract(cur);
    if (next.n == cur.n) return std::nullopt;
    cur = std::move(next);
    ++level;
  }
  return level;
}

bool is_biquandle(const SolutionMap& s) {
  return is_quandle(solution_to_skew_cycle_set(s).r);
}

ClassificationRecord classify(const Mat& cycle_set) {
  ClassificationRecord rec;
  rec.involutive = true;
  rec.square_free = is_square_free(cycle_set);
  GroupInfo g = permutation_group(cycle_set);
  rec.indecomposable = g.transitive();
  rec.irretractable = is_irretractable(cycle_set);
  rec.multipermutation_level = multipermutation_level(cycle_set);
  rec.biquandle = true;  // involutive solutions are biquandles
  rec.gi_counterexample = cycle_set.n >= 2 && rec.square_free && rec.irretractable;
  rec.permutation_group_order = g.order();
  return rec;
}

ClassificationRecord classify(const SkewCycleSet& sc) {
  if (is_trivial_rack(sc.r)) {
    ClassificationRecord rec = classify(sc.m);
    return rec;
  }
  ClassificationRecord rec;
  SolutionMap s = skew_cycle_set_to_solution(sc);
  rec.involutive = false;  // non-trivial rack
  bool sf = true;
  for (int x = 0; x < s.n && sf; ++x)
    if (s.sigma[static_cast<size_t>(x)](x) != x || s.tau[static_cast<size_t>(x)](x) != x)
      sf = false;
  rec.square_free = sf;
  std::vector<Perm> gens = s.sigma;
  gens.insert(gens.end(), s.tau.begin(), s.tau.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  GroupInfo g(s.n, std::move(gens));
  rec.indecomposable = g.transitive();
  rec.irretractable = is_irretractable(sc.m);  // rows of m are the tau^{-1}
  rec.multipermutation_level = std::nullopt;   // defined here for involutive solutions only
  rec.biquandle = is_quandle(sc.r);
  rec.gi_counterexample = false;
  rec.permutation_group_order = g.order();
  return rec;
}

GiResult gi_counterexamples(std::span<const Mat> database) {
  GiResult out;
  for (size_t i = 0; i < database.size(); ++i) {
    const Mat& m = database[i];
    if (m.n >= 2 && is_square_free(m) && is_irretractable(m)) {
      ++out.count;
      out.indices.push_back(i);
    }
  }
  return out;
}

}  // namespace ybdb
