#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ybdb {

/// Permutation of {0..n-1}. Values are 0-based in memory; every textual
/// interface (cycle notation, dataset files) speaks 1-based.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<uint8_t> images);
  static Perm identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
  const std::vector<uint8_t>& images() const { return img_; }

  bool is_identity() const;
  int support_size() const;  // number of moved points
  Perm inverse() const;

  // Nontrivial cycles, each starting at its smallest point, ordered by that
  // point. Fixed points are omitted.
  std::vector<std::vector<int>> cycles() const;

  std::string cycle_string() const;  // "(1 2 7 8)(3 4 5 6)", "id" for identity
  static Perm parse_cycles(const std::string& text, int n);

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<uint8_t> img_;
};

/// (a*b)(x) = a(b(x))
Perm compose(const Perm& a, const Perm& b);

/// Partition of n by cycle lengths, parts descending.
struct CycleType {
  std::vector<int> parts;

  int n() const;
  std::string to_string() const;  // "3+2+1"
  auto operator<=>(const CycleType&) const = default;
};

CycleType cycle_type_of(const Perm& p);

/// All partitions of n, in the order class_representatives uses.
std::vector<CycleType> partitions(int n);

/// One permutation per conjugacy class of Sym_n: consecutive-integer cycles,
/// longest cycle first. Partition 3+2 of 5 gives (1 2 3)(4 5).
std::vector<Perm> class_representatives(int n);
Perm class_representative(const CycleType& t);

/// gamma such that class_representative(cycle_type_of(t)) == gamma^-1 * t * gamma.
Perm diag_conjugator(const Perm& t);

/// Minimal group interface used by the enumeration and filtering code.
struct Group {
  virtual ~Group() = default;
  virtual int degree() const = 0;
  virtual uint64_t order() const = 0;
  virtual std::vector<Perm> generators() const = 0;
  virtual bool contains(const Perm& g) const = 0;
  /// Streams every element (identity included); return false to stop early.
  virtual void for_each_element(const std::function<bool(const Perm&)>& fn) const = 0;
};

/// Centralizer of a fixed permutation in Sym_n. Elements are streamed, never
/// materialized: the order reaches n! when the pivot is the identity.
class CentralizerGroup final : public Group {
public:
  explicit CentralizerGroup(Perm t);

  const Perm& pivot() const { return t_; }
  int degree() const override { return t_.size(); }
  uint64_t order() const override;
  std::vector<Perm> generators() const override;
  bool contains(const Perm& g) const override;
  void for_each_element(const std::function<bool(const Perm&)>& fn) const override;

  /// Materializes all elements; caller is responsible for order() being small.
  std::vector<Perm> elements() const;

private:
  Perm t_;
  // Cycles of t (fixed points included), grouped by length, longest class
  // first; cycles inside a class ordered by smallest point.
  std::vector<std::vector<std::vector<int>>> classes_;
};

class TrivialGroup final : public Group {
public:
  explicit TrivialGroup(int n) : n_(n) {}
  int degree() const override { return n_; }
  uint64_t order() const override { return 1; }
  std::vector<Perm> generators() const override { return {}; }
  bool contains(const Perm& g) const override { return g.is_identity(); }
  void for_each_element(const std::function<bool(const Perm&)>& fn) const override {
    fn(Perm::identity(n_));
  }

private:
  int n_;
};

/// All elements of g moving at most k points, plus a generating set of g,
/// duplicates removed, identity excluded. Sorted by image vector.
std::vector<Perm> support_filter(const Group& g, int k = 3);

}  // namespace ybdb
