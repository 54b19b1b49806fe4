#include "ybdb/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ybdb {

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint8_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("Perm: image vector is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<uint8_t> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), uint8_t{0});
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (img_[static_cast<size_t>(x)] != x) return false;
  return true;
}

int Perm::support_size() const {
  int moved = 0;
  for (int x = 0; x < size(); ++x)
    if (img_[static_cast<size_t>(x)] != x) ++moved;
  return moved;
}

Perm Perm::inverse() const {
  std::vector<uint8_t> inv(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) inv[img_[x]] = static_cast<uint8_t>(x);
  return Perm(std::move(inv));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<size_t>(start)] || (*this)(start) == start) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      cyc.push_back(x);
      seen[static_cast<size_t>(x)] = true;
      x = (*this)(x);
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "id";
  std::string out;
  for (const auto& c : cyc) {
    out += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

Perm Perm::parse_cycles(const std::string& text, int n) {
  std::vector<uint8_t> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), uint8_t{0});
  std::vector<bool> used(static_cast<size_t>(n), false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("parse_cycles: trailing input after 'id'");
    return Perm(std::move(img));
  }

  bool any = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
      if (pos < text.size() && text[pos] == ')') { ++pos; break; }
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("parse_cycles: expected point or ')'");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > n) throw std::invalid_argument("parse_cycles: point out of range");
      if (used[static_cast<size_t>(v - 1)])
        throw std::invalid_argument("parse_cycles: point repeated across cycles");
      used[static_cast<size_t>(v - 1)] = true;
      cyc.push_back(v - 1);
    }
    if (cyc.size() == size_t{0}) throw std::invalid_argument("parse_cycles: empty cycle");
    for (size_t i = 0; i < cyc.size(); ++i)
      img[static_cast<size_t>(cyc[i])] = static_cast<uint8_t>(cyc[(i + 1) % cyc.size()]);
    any = true;
  }
  if (!any) throw std::invalid_argument("parse_cycles: empty input");
  return Perm(std::move(img));
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<uint8_t> img(static_cast<size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) img[static_cast<size_t>(x)] = static_cast<uint8_t>(a(b(x)));
  return Perm(std::move(img));
}

int CycleType::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string CycleType::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

CycleType cycle_type_of(const Perm& p) {
  std::vector<int> parts;
  std::vector<bool> seen(static_cast<size_t>(p.size()), false);
  for (int start = 0; start < p.size(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int len = 0, x = start;
    do {
      seen[static_cast<size_t>(x)] = true;
      ++len;
      x = p(x);
    } while (x != start);
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return CycleType{std::move(parts)};
}

namespace {

void partitions_rec(int remaining, int maxpart, std::vector<int>& cur,
                    std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back(CycleType{cur});
    return;
  }
  for (int p = std::min(remaining, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CycleType> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions: n must be positive");
  std::vector<CycleType> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Perm class_representative(const CycleType& t) {
  std::vector<uint8_t> img(static_cast<size_t>(t.n()));
  int pos = 0;
  for (int part : t.parts) {
    for (int i = 0; i < part; ++i)
      img[static_cast<size_t>(pos + i)] = static_cast<uint8_t>(pos + (i + 1) % part);
    pos += part;
  }
  return Perm(std::move(img));
}

std::vector<Perm> class_representatives(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("class_representatives: need 1 <= n <= 12");
  std::vector<Perm> out;
  for (const auto& t : partitions(n)) out.push_back(class_representative(t));
  return out;
}

namespace {

// Cycles of t including fixed points, sorted by length descending then by
// smallest point. This fixed order is shared by diag_conjugator and
// CentralizerGroup so that conjugators and centralizer elements line up.
std::vector<std::vector<int>> full_cycles_sorted(const Perm& t) {
  std::vector<std::vector<int>> cyc;
  std::vector<bool> seen(static_cast<size_t>(t.size()), false);
  for (int start = 0; start < t.size(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> c;
    int x = start;
    do {
      c.push_back(x);
      seen[static_cast<size_t>(x)] = true;
      x = t(x);
    } while (x != start);
    cyc.push_back(std::move(c));
  }
  std::stable_sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a[0] < b[0];
  });
  return cyc;
}

}  // namespace

Perm diag_conjugator(const Perm& t) {
  Perm rep = class_representative(cycle_type_of(t));
  auto rep_cycles = full_cycles_sorted(rep);
  auto t_cycles = full_cycles_sorted(t);
  std::vector<uint8_t> img(static_cast<size_t>(t.size()));
  for (size_t c = 0; c < t_cycles.size(); ++c)
    for (size_t k = 0; k < t_cycles[c].size(); ++k)
      img[static_cast<size_t>(rep_cycles[c][k])] = static_cast<uint8_t>(t_cycles[c][k]);
  return Perm(std::move(img));
}

CentralizerGroup::CentralizerGroup(Perm t) : t_(std::move(t)) {
  auto cyc = full_cycles_sorted(t_);
  for (auto& c : cyc) {
    if (classes_.empty() || classes_.back()[0].size() != c.size()) classes_.emplace_back();
    classes_.back().push_back(std::move(c));
  }
}

uint64_t CentralizerGroup::order() const {
  uint64_t ord = 1;
  for (const auto& cls : classes_) {
    uint64_t len = cls[0].size();
    for (size_t j = 0; j < cls.size(); ++j) ord *= len * (j + 1);
  }
  return ord;
}

std::vector<Perm> CentralizerGroup::generators() const {
  std::vector<Perm> gens;
  int n = degree();
  auto push = [&](const std::vector<uint8_t>& img) {
    Perm g{std::vector<uint8_t>(img)};
    if (!g.is_identity()) gens.push_back(std::move(g));
  };
  for (const auto& cls : classes_) {
    size_t len = cls[0].size(), m = cls.size();
    std::vector<uint8_t> img(static_cast<size_t>(n));
    if (len > 1) {
      // rotate the first cycle of the class
      std::iota(img.begin(), img.end(), uint8_t{0});
      for (size_t k = 0; k < len; ++k)
        img[static_cast<size_t>(cls[0][k])] = static_cast<uint8_t>(cls[0][(k + 1) % len]);
      push(img);
    }
    if (m >= 2) {
      // swap the first two cycles pointwise
      std::iota(img.begin(), img.end(), uint8_t{0});
      for (size_t k = 0; k < len; ++k) {
        img[static_cast<size_t>(cls[0][k])] = static_cast<uint8_t>(cls[1][k]);
        img[static_cast<size_t>(cls[1][k])] = static_cast<uint8_t>(cls[0][k]);
      }
      push(img);
    }
    if (m >= 3) {
      // rotate all cycles of the class one step
      std::iota(img.begin(), img.end(), uint8_t{0});
      for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < len; ++k)
          img[static_cast<size_t>(cls[j][k])] = static_cast<uint8_t>(cls[(j + 1) % m][k]);
      push(img);
    }
  }
  return gens;
}

bool CentralizerGroup::contains(const Perm& g) const {
  if (g.size() != degree()) return false;
  for (int x = 0; x < degree(); ++x)
    if (g(t_(x)) != t_(g(x))) return false;
  return true;
}

void CentralizerGroup::for_each_element(const std::function<bool(const Perm&)>& fn) const {
  int n = degree();
  std::vector<uint8_t> img(static_cast<size_t>(n));

  // Per class: an assignment of cycles to cycles plus a rotation offset per
  // cycle. Classes are filled recursively; the leaf emits the element.
  std::function<bool(size_t)> rec = [&](size_t ci) -> bool {
    if (ci == classes_.size()) return fn(Perm{std::vector<uint8_t>(img)});
    const auto& cls = classes_[ci];
    size_t len = cls[0].size(), m = cls.size();
    std::vector<size_t> target(m);
    std::iota(target.begin(), target.end(), size_t{0});
    std::vector<size_t> rot(m, 0);
    do {
      while (true) {
        for (size_t j = 0; j < m; ++j)
          for (size_t k = 0; k < len; ++k)
            img[static_cast<size_t>(cls[j][k])] =
                static_cast<uint8_t>(cls[target[j]][(k + rot[j]) % len]);
        if (!rec(ci + 1)) return false;
        // odometer over rotations
        size_t j = 0;
        while (j < m && ++rot[j] == len) rot[j++] = 0;
        if (j == m) break;
      }
    } while (std::next_permutation(target.begin(), target.end()));
    return true;
  };
  rec(0);
}

std::vector<Perm> CentralizerGroup::elements() const {
  std::vector<Perm> out;
  out.reserve(order());
  for_each_element([&](const Perm& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<Perm> support_filter(const Group& g, int k) {
  if (k < 0) throw std::invalid_argument("support_filter: k must be non-negative");
  int n = g.degree();
  std::set<Perm> out;

  constexpr uint64_t kStreamLimit = 500000;
  if (g.order() <= kStreamLimit) {
    g.for_each_element([&](const Perm& e) {
      if (!e.is_identity() && e.support_size() <= k) out.insert(e);
      return true;
    });
  } else {
    // The group is too large to stream; enumerate all permutations of Sym_n
    // with small support instead and keep those that belong to g.
    std::vector<int> subset;
    std::function<void(int)> pick = [&](int from) {
      int s = static_cast<int>(subset.size());
      if (s >= 2) {
        std::vector<uint8_t> vals(subset.begin(), subset.end());
        std::sort(vals.begin(), vals.end());
        do {
          bool derangement = true;
          for (int i = 0; i < s && derangement; ++i)
            if (vals[static_cast<size_t>(i)] == subset[static_cast<size_t>(i)]) derangement = false;
          if (!derangement) continue;
          std::vector<uint8_t> img(static_cast<size_t>(n));
          std::iota(img.begin(), img.end(), uint8_t{0});
          for (int i = 0; i < s; ++i)
            img[static_cast<size_t>(subset[static_cast<size_t>(i)])] = vals[static_cast<size_t>(i)];
          Perm cand{std::move(img)};
          if (g.contains(cand)) out.insert(std::move(cand));
        } while (std::next_permutation(vals.begin(), vals.end()));
      }
      if (s == k) return;
      for (int x = from; x < n; ++x) {
        subset.push_back(x);
        pick(x + 1);
        subset.pop_back();
      }
    };
    if (k >= 2) pick(0);
  }

  for (auto& gen : g.generators())
    if (!gen.is_identity()) out.insert(gen);
  return std::vector<Perm>(out.begin(), out.end());
}

}  // namespace ybdb
