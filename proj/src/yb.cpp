#include "ybdb/yb.hpp"

#include <numeric>
#include <stdexcept>

namespace ybdb {

std::string YbeReport::describe() const {
  if (ok) return "ok";
  if (!bijective) return "r is not bijective on pairs";
  return "braid relation fails at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
         std::to_string(z + 1) + ")";
}

namespace {

void require_families(const SolutionMap& s) {
  if (s.n <= 0 || s.sigma.size() != static_cast<size_t>(s.n) ||
      s.tau.size() != static_cast<size_t>(s.n))
    throw std::invalid_argument("SolutionMap: need n sigma and n tau permutations");
  for (const Perm& p : s.sigma)
    if (p.size() != s.n) throw std::invalid_argument("SolutionMap: sigma size mismatch");
  for (const Perm& p : s.tau)
    if (p.size() != s.n) throw std::invalid_argument("SolutionMap: tau size mismatch");
}

}  // namespace

YbeReport verify_ybe(const SolutionMap& s) {
  require_families(s);
  int n = s.n;
  YbeReport rep;

  std::vector<bool> hit(static_cast<size_t>(n) * n, false);
  for (int x = 0; x < n && rep.bijective; ++x)
    for (int y = 0; y < n; ++y) {
      size_t p = static_cast<size_t>(s.sigma[x](y)) * n + s.tau[y](x);
      if (hit[p]) {
        rep.bijective = false;
        break;
      }
      hit[p] = true;
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a1 = s.sigma[x](y), b1 = s.tau[y](x);
      for (int z = 0; z < n; ++z) {
        // left: (r x id)(id x r)(r x id)
        int l1 = a1, l2 = s.sigma[b1](z), l3 = s.tau[z](b1);
        int L1 = s.sigma[l1](l2), L2 = s.tau[l2](l1), L3 = l3;
        // right: (id x r)(r x id)(id x r)
        int r2 = s.sigma[y](z), r3 = s.tau[z](y);
        int R1 = s.sigma[x](r2), rb = s.tau[r2](x);
        int R2 = s.sigma[rb](r3), R3 = s.tau[r3](rb);
        if (L1 != R1 || L2 != R2 || L3 != R3) {
          rep.braid = false;
          rep.x = x;
          rep.y = y;
          rep.z = z;
          rep.ok = false;
          return rep;
        }
      }
    }
  rep.ok = rep.braid && rep.bijective;
  return rep;
}

bool is_involutive(const SolutionMap& s) {
  require_families(s);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int u = s.sigma[x](y), v = s.tau[y](x);
      if (s.sigma[u](v) != x || s.tau[v](u) != y) return false;
    }
  return true;
}

SolutionMap flip_solution(int n) {
  SolutionMap s;
  s.n = n;
  s.sigma.assign(static_cast<size_t>(n), Perm::identity(n));
  s.tau.assign(static_cast<size_t>(n), Perm::identity(n));
  return s;
}

namespace {

// Inverses of all rows, precomputed: inv[i][v] = j with m[i][j] = v.
std::vector<Perm> row_inverses(const Mat& m) {
  std::vector<Perm> inv;
  inv.reserve(static_cast<size_t>(m.n));
  for (int i = 0; i < m.n; ++i) inv.push_back(row_perm(m, i).inverse());
  return inv;
}

}  // namespace

SolutionMap cycle_set_to_solution(const Mat& m) {
  int n = m.n;
  auto inv = row_inverses(m);
  SolutionMap s;
  s.n = n;
  s.tau = inv;  // tau_x = phi_x^{-1}
  s.sigma.reserve(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<uint8_t> img(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) {
      int z = inv[static_cast<size_t>(y)](x);  // y * x
      img[static_cast<size_t>(y)] = m.at(z, y);
    }
    s.sigma.emplace_back(std::move(img));
  }
  return s;
}

Mat solution_to_cycle_set(const SolutionMap& s) {
  require_families(s);
  if (!is_involutive(s))
    throw std::invalid_argument("solution_to_cycle_set: solution is not involutive");
  Mat m(s.n);
  for (int x = 0; x < s.n; ++x) {
    Perm ti = s.tau[static_cast<size_t>(x)].inverse();
    for (int y = 0; y < s.n; ++y) m.at(x, y) = static_cast<uint8_t>(ti(y));
  }
  return m;
}

SkewCycleSet solution_to_skew_cycle_set(const SolutionMap& s) {
  require_families(s);
  int n = s.n;
  SkewCycleSet sc;
  sc.m = Mat(n);
  sc.r = Mat(n);
  std::vector<Perm> tinv;
  tinv.reserve(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) tinv.push_back(s.tau[static_cast<size_t>(x)].inverse());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      sc.m.at(x, y) = static_cast<uint8_t>(tinv[static_cast<size_t>(x)](y));
      // x |> y = tau_x(sigma_{tau_y^{-1}(x)}(y))
      int w = tinv[static_cast<size_t>(y)](x);
      sc.r.at(x, y) = static_cast<uint8_t>(s.tau[static_cast<size_t>(x)](s.sigma[static_cast<size_t>(w)](y)));
    }
  return sc;
}

SolutionMap skew_cycle_set_to_solution(const SkewCycleSet& sc) {
  int n = sc.m.n;
  if (sc.r.n != n) throw std::invalid_argument("skew_cycle_set_to_solution: size mismatch");
  auto inv = row_inverses(sc.m);
  SolutionMap s;
  s.n = n;
  s.tau = inv;  // tau_y(x) = y * x
  s.sigma.reserve(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<uint8_t> img(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) {
      int z = inv[static_cast<size_t>(y)](x);  // y * x
      img[static_cast<size_t>(y)] = sc.m.at(z, sc.r.at(z, y));
    }
    s.sigma.emplace_back(std::move(img));
  }
  return s;
}

}  // namespace ybdb
