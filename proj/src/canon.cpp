#include "ybdb/canon.hpp"

#include <stdexcept>

namespace ybdb {

Mat act(const Mat& m, const Perm& g) {
  if (m.n != g.size()) throw std::invalid_argument("act: size mismatch");
  Mat out(m.n);
  Perm gi = g.inverse();
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out.at(i, j) = static_cast<uint8_t>(gi(m.at(g(i), g(j))));
  return out;
}

SkewCycleSet act(const SkewCycleSet& sc, const Perm& g) { return {act(sc.r, g), act(sc.m, g)}; }

bool is_lex_min(const Mat& m, std::span<const Perm> s) {
  for (const Perm& g : s) {
    Perm gi = g.inverse();
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) {
        uint8_t mine = m.at(i, j);
        uint8_t theirs = static_cast<uint8_t>(gi(m.at(g(i), g(j))));
        if (mine < theirs) goto next_g;
        if (mine > theirs) return false;
      }
  next_g:;
  }
  return true;
}

namespace {

// Computes act(base, c) lazily against the current best image of the coset
// scan. blocks = one or two matrices compared in concatenation order.
// Returns -1/0/+1 for candidate < / == / > best and fills out on "<".
int compare_image(std::span<const Mat* const> blocks, const Perm& c,
                  std::span<const Mat* const> best, std::vector<Mat>* out) {
  Perm ci = c.inverse();
  for (size_t b = 0; b < blocks.size(); ++b) {
    const Mat& src = *blocks[b];
    const Mat& ref = *best[b];
    for (int i = 0; i < src.n; ++i)
      for (int j = 0; j < src.n; ++j) {
        uint8_t v = static_cast<uint8_t>(ci(src.at(c(i), c(j))));
        uint8_t w = ref.at(i, j);
        if (v != w) {
          if (v > w) return 1;
          // candidate wins: materialize it fully
          out->clear();
          for (size_t bb = 0; bb < blocks.size(); ++bb) out->push_back(act(*blocks[bb], c));
          return -1;
        }
      }
  }
  return 0;
}

// Minimizes the concatenation of blocks over all relabelings carrying the
// diagonal of blocks[0] to its class representative. Streams the centralizer
// of the representative; candidates are abandoned at the first losing entry.
std::vector<Mat> minimize_over_diag_coset(std::span<const Mat* const> blocks) {
  Perm diag = diagonal_of(*blocks[0]);
  Perm gamma = diag_conjugator(diag);
  std::vector<Mat> best;
  best.reserve(blocks.size());
  for (const Mat* b : blocks) best.push_back(act(*b, gamma));

  std::vector<Mat> base = best;
  std::vector<const Mat*> base_ptrs, best_ptrs;
  for (const Mat& b : base) base_ptrs.push_back(&b);
  for (const Mat& b : best) best_ptrs.push_back(&b);

  CentralizerGroup cz(class_representative(cycle_type_of(diag)));
  std::vector<Mat> cand;
  cz.for_each_element([&](const Perm& c) {
    if (compare_image(base_ptrs, c, best_ptrs, &cand) < 0)
      for (size_t b = 0; b < best.size(); ++b) best[b] = cand[b];  // keep addresses stable
    return true;
  });
  return best;
}

}  // namespace

std::string CanonicalKey::bytes() const {
  return std::string(canon.a.begin(), canon.a.end());
}

CanonicalKey canonical_form(const Mat& m) {
  const Mat* blocks[] = {&m};
  auto best = minimize_over_diag_coset(blocks);
  return {cycle_type_of(diagonal_of(m)), std::move(best[0])};
}

std::string SkewCanonicalKey::bytes() const {
  std::string out(rack_canon.a.begin(), rack_canon.a.end());
  out.append(m_canon.a.begin(), m_canon.a.end());
  return out;
}

SkewCanonicalKey canonical_form(const SkewCycleSet& sc) {
  const Mat* blocks[] = {&sc.r, &sc.m};
  auto best = minimize_over_diag_coset(blocks);
  return {cycle_type_of(diagonal_of(sc.r)), std::move(best[0]), std::move(best[1])};
}

bool are_isomorphic(const Mat& a, const Mat& b) {
  if (a.n != b.n) throw std::invalid_argument("are_isomorphic: size mismatch");
  if (cycle_type_of(diagonal_of(a)) != cycle_type_of(diagonal_of(b))) return false;
  return canonical_form(a) == canonical_form(b);
}

bool are_isomorphic(const SkewCycleSet& a, const SkewCycleSet& b) {
  if (a.m.n != b.m.n) throw std::invalid_argument("are_isomorphic: size mismatch");
  if (cycle_type_of(diagonal_of(a.r)) != cycle_type_of(diagonal_of(b.r))) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Perm> rack_automorphisms(const Mat& r) {
  // Every automorphism commutes with the diagonal map, so it is enough to
  // scan the centralizer of the diagonal.
  CentralizerGroup cz(diagonal_of(r));
  std::vector<Perm> out;
  cz.for_each_element([&](const Perm& g) {
    for (int i = 0; i < r.n; ++i)
      for (int j = 0; j < r.n; ++j)
        if (g(r.at(i, j)) != r.at(g(i), g(j))) return true;  // not an automorphism
    out.push_back(g);
    return true;
  });
  return out;
}

Mat min_in_orbit(const Mat& m, std::span<const Perm> aut) {
  Mat best = m;
  const Mat* base_ptrs[] = {&m};
  const Mat* best_ptrs[] = {&best};
  std::vector<Mat> cand;
  for (const Perm& g : aut)
    if (compare_image(base_ptrs, g, best_ptrs, &cand) < 0) best = std::move(cand[0]);
  return best;
}

}  // namespace ybdb
