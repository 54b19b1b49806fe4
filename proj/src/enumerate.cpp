#include "ybdb/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace ybdb {

void SearchStats::merge(const SearchStats& o) {
  nodes += o.nodes;
  constraint_prunes += o.constraint_prunes;
  symmetry_prunes += o.symmetry_prunes;
  raw_outputs += o.raw_outputs;
  deduped_outputs += o.deduped_outputs;
}

std::string SearchStats::to_text() const {
  std::string s;
  s += "nodes " + std::to_string(nodes);
  s += "  constraint-prunes " + std::to_string(constraint_prunes);
  s += "  symmetry-prunes " + std::to_string(symmetry_prunes);
  s += "  raw " + std::to_string(raw_outputs);
  s += "  classes " + std::to_string(deduped_outputs);
  s += "  wall " + std::to_string(wall_s) + "s";
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr uint8_t UNSET = 0xFF;
constexpr int kWhereNone = -4, kWhereDone = -3, kWhereDead = -2;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shared budget/abort/progress state for one enumeration run.
struct RunControl {
  std::atomic<uint64_t> nodes{0};
  std::atomic<uint64_t> raw{0};
  std::atomic<bool> abort{false};
  std::atomic<size_t> tasks_done{0};
  size_t tasks_total = 0;
  uint64_t node_budget = 0;
  double time_budget_s = 0;
  Clock::time_point t0 = Clock::now();
  const std::function<void(const ProgressInfo&)>* progress = nullptr;
  std::mutex mu;
  double last_report = 0;

  void configure(const SearchConfig& cfg) {
    node_budget = cfg.node_budget;
    time_budget_s = cfg.time_budget_s;
    if (cfg.progress) progress = &cfg.progress;
  }

  // Called with batches of node counts; cheap enough for the inner loop.
  void tick(uint64_t batch) {
    uint64_t total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
    if (node_budget && total > node_budget) abort.store(true, std::memory_order_relaxed);
    double el = seconds_since(t0);
    if (time_budget_s > 0 && el > time_budget_s) abort.store(true, std::memory_order_relaxed);
    if (progress) {
      std::unique_lock lk(mu, std::try_to_lock);
      if (lk.owns_lock() && el - last_report >= 2.0) {
        last_report = el;
        ProgressInfo info;
        info.nodes = total;
        info.raw_found = raw.load(std::memory_order_relaxed);
        info.elapsed_s = el;
        info.nodes_per_s = el > 0 ? static_cast<double>(total) / el : 0;
        info.tasks_done = tasks_done.load(std::memory_order_relaxed);
        info.tasks_total = tasks_total;
        (*progress)(info);
      }
    }
  }

  bool aborted() const { return abort.load(std::memory_order_relaxed); }
};

// Symmetry-breaking data shared by all tasks of one diagonal class (or one
// rack): the permutations plus flattened lookup tables for the lex test.
struct SymData {
  std::vector<Perm> perms;
  std::vector<std::vector<int32_t>> src;   // src[g][p] = g(i)*n + g(j) for p=(i,j)
  std::vector<std::vector<uint8_t>> ginv;  // ginv[g][v] = g^{-1}(v)

  void build(std::vector<Perm> s, int n) {
    // identity contributes nothing to the lex-leader condition
    std::erase_if(s, [](const Perm& g) { return g.is_identity(); });
    perms = std::move(s);
    src.resize(perms.size());
    ginv.resize(perms.size());
    for (size_t g = 0; g < perms.size(); ++g) {
      const Perm& p = perms[g];
      src[g].resize(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          src[g][static_cast<size_t>(i) * n + j] = p(i) * n + p(j);
      ginv[g] = p.inverse().images();
    }
  }
};

// One backtracking searcher over an n x n matrix with rows forced to be
// permutations. Propagation: every ternary axiom instance fires as soon as
// its referenced cells are assigned, forcing the one missing outer cell when
// possible; partial lex-leader tests run incrementally against the symmetry
// set with per-permutation resume state.
class Searcher {
public:
  Searcher(int n, SearchKind kind) : n_(n), nn_(n * n), kind_(kind) {}

  void set_diagonal(const Perm& t) { diag_ = t; }
  void set_rack(const Mat& r) {
    rack_ = &r;
    rack_rowinv_ = Mat(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) rack_rowinv_.at(i, r.at(i, j)) = static_cast<uint8_t>(j);
  }
  void set_symmetry(const SymData* sym) { sym_ = sym; }
  void set_control(RunControl* rc, SearchStats* st) {
    rc_ = rc;
    st_ = st;
  }
  void set_sink(std::function<void(const uint8_t*)> sink) { sink_ = std::move(sink); }

  bool init();
  // prefixes cover the first `blocks` row/column blocks of the decision order
  void collect_prefixes(std::vector<std::vector<std::pair<int, uint8_t>>>& out, int blocks);
  bool replay(const std::vector<std::pair<int, uint8_t>>& decisions);
  void run() { dfs(0, static_cast<int>(order_.size()), nullptr); }

private:
  struct Inst {
    // E = (row(er), col(ec)), F = (row(fr), col(fc)); the axiom is
    // cell[E] == cell[F]. Components >= 0 are constants; -(pos+1) reads the
    // value of cell pos.
    int16_t er, ec, fr, fc;
  };
  struct Compat {
    // cell[p3] == rack(cell[p1], cell[p2])
    int16_t p1, p2, p3;
  };
  struct Undo {
    uint8_t tag;  // 0 cell, 1 watch, 2 lex move, 3 lex eq
    int32_t a, b;
  };

  bool assign(int pos, uint8_t v);
  bool propagate();
  bool fire_main(int32_t idx);
  bool fire_compat(int32_t idx);
  bool lex_advance(int g);
  void lex_move(int g, int where);
  void undo_to(size_t mark);
  // decisions follow a bordered order (row 0, column 0, row 1, column 1, ...)
  // so that completed rows force whole columns through the axiom instances
  int next_decision(int oidx) const {
    while (oidx < static_cast<int>(order_.size()) &&
           cell_[static_cast<size_t>(order_[static_cast<size_t>(oidx)])] != UNSET)
      ++oidx;
    return oidx;
  }
  void build_order();
  void build_instances();
  void dfs(int oidx, int stop_idx, std::vector<std::vector<std::pair<int, uint8_t>>>* prefix_out);

  int n_, nn_;
  SearchKind kind_;
  Perm diag_;                 // cycle_set / rack modes
  const Mat* rack_ = nullptr; // skew mode
  Mat rack_rowinv_;
  const SymData* sym_ = nullptr;
  RunControl* rc_ = nullptr;
  SearchStats* st_ = nullptr;
  std::function<void(const uint8_t*)> sink_;

  std::vector<uint8_t> cell_;
  std::vector<uint16_t> row_used_;
  uint16_t diag_used_ = 0;  // skew mode: the free diagonal must stay bijective

  std::vector<Inst> insts_;
  std::vector<Compat> compats_;
  std::vector<std::vector<int32_t>> static_trig_;  // >=0: insts_, <0: compats_ (-ref-1)
  std::vector<std::vector<int32_t>> watch_;

  std::vector<int> lex_eq_;
  std::vector<int> lex_where_;
  std::vector<std::vector<int32_t>> lex_wait_;

  std::vector<Undo> ulog_;
  std::vector<int32_t> queue_;
  size_t qhead_ = 0;
  std::vector<std::pair<int, uint8_t>> decisions_;
  std::vector<int32_t> order_;        // decision positions, bordered
  std::vector<int32_t> block_ends_;   // order_ index after each row/column block
  uint64_t local_nodes_ = 0;
};

void Searcher::build_order() {
  std::vector<bool> seen(static_cast<size_t>(nn_), false);
  auto push = [&](int pos) {
    if (!seen[static_cast<size_t>(pos)]) {
      seen[static_cast<size_t>(pos)] = true;
      order_.push_back(pos);
    }
  };
  for (int k = 0; k < n_; ++k) {
    for (int c = 0; c < n_; ++c) push(k * n_ + c);
    block_ends_.push_back(static_cast<int32_t>(order_.size()));
    for (int r = 0; r < n_; ++r) push(r * n_ + k);
    block_ends_.push_back(static_cast<int32_t>(order_.size()));
  }
}

void Searcher::build_instances() {
  static_trig_.assign(static_cast<size_t>(nn_), {});
  auto cellref = [this](int i, int j) { return static_cast<int16_t>(-(i * n_ + j) - 1); };
  auto reg = [this](int32_t ref, std::initializer_list<int> positions) {
    for (int p : positions) {
      auto& lst = static_trig_[static_cast<size_t>(p)];
      if (std::find(lst.begin(), lst.end(), ref) == lst.end()) lst.push_back(ref);
    }
  };

  if (kind_ == SearchKind::cycle_set) {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          insts_.push_back({cellref(i, j), cellref(i, k), cellref(j, i), cellref(j, k)});
          reg(static_cast<int32_t>(insts_.size()) - 1,
              {i * n_ + j, i * n_ + k, j * n_ + i, j * n_ + k});
        }
  } else if (kind_ == SearchKind::rack) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          insts_.push_back({static_cast<int16_t>(i), cellref(j, k), cellref(i, j), cellref(i, k)});
          reg(static_cast<int32_t>(insts_.size()) - 1, {j * n_ + k, i * n_ + j, i * n_ + k});
        }
  } else {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          int rij = rack_->at(i, j);
          insts_.push_back({cellref(i, rij), cellref(i, k), cellref(j, i), cellref(j, k)});
          reg(static_cast<int32_t>(insts_.size()) - 1,
              {i * n_ + rij, i * n_ + k, j * n_ + i, j * n_ + k});
        }
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          int rjk = rack_->at(j, k);
          compats_.push_back({static_cast<int16_t>(i * n_ + j), static_cast<int16_t>(i * n_ + k),
                              static_cast<int16_t>(i * n_ + rjk)});
          reg(-static_cast<int32_t>(compats_.size()),
              {i * n_ + j, i * n_ + k, i * n_ + rjk});
        }
  }
}

bool Searcher::init() {
  cell_.assign(static_cast<size_t>(nn_), UNSET);
  row_used_.assign(static_cast<size_t>(n_), 0);
  diag_used_ = 0;
  watch_.assign(static_cast<size_t>(nn_), {});
  build_order();
  build_instances();

  size_t ng = sym_ ? sym_->perms.size() : 0;
  lex_eq_.assign(ng, 0);
  lex_where_.assign(ng, kWhereNone);
  lex_wait_.assign(static_cast<size_t>(nn_), {});

  if (kind_ != SearchKind::skew_over_rack) {
    for (int i = 0; i < n_; ++i)
      if (!assign(i * n_ + i, static_cast<uint8_t>(diag_(i)))) return false;
  }
  if (!propagate()) return false;
  for (size_t g = 0; g < ng; ++g)
    if (!lex_advance(static_cast<int>(g))) return false;
  return propagate();
}

bool Searcher::assign(int pos, uint8_t v) {
  uint8_t cur = cell_[static_cast<size_t>(pos)];
  if (cur != UNSET) return cur == v;
  int r = pos / n_, c = pos % n_;
  if (row_used_[static_cast<size_t>(r)] & (1u << v)) return false;
  if (kind_ == SearchKind::skew_over_rack && r == c) {
    if (diag_used_ & (1u << v)) return false;
    diag_used_ |= static_cast<uint16_t>(1u << v);
  }
  cell_[static_cast<size_t>(pos)] = v;
  row_used_[static_cast<size_t>(r)] |= static_cast<uint16_t>(1u << v);
  ulog_.push_back({0, pos, 0});
  queue_.push_back(pos);
  return true;
}

bool Searcher::fire_main(int32_t idx) {
  const Inst& t = insts_[static_cast<size_t>(idx)];
  int vals[4];
  const int16_t refs[4] = {t.er, t.ec, t.fr, t.fc};
  for (int q = 0; q < 4; ++q) {
    int16_t e = refs[q];
    if (e >= 0) {
      vals[q] = e;
    } else {
      uint8_t v = cell_[static_cast<size_t>(-e - 1)];
      if (v == UNSET) return true;  // referenced cell pending; a later trigger rechecks
      vals[q] = v;
    }
  }
  int epos = vals[0] * n_ + vals[1], fpos = vals[2] * n_ + vals[3];
  if (epos == fpos) return true;
  if (vals[0] == vals[2]) {
    // same row, different columns: equality would break row bijectivity
    ++st_->constraint_prunes;
    return false;
  }
  uint8_t ev = cell_[static_cast<size_t>(epos)], fv = cell_[static_cast<size_t>(fpos)];
  if (ev != UNSET && fv != UNSET) {
    if (ev != fv) {
      ++st_->constraint_prunes;
      return false;
    }
    return true;
  }
  if (ev != UNSET || fv != UNSET) {
    int target = ev != UNSET ? fpos : epos;
    uint8_t v = ev != UNSET ? ev : fv;
    if (!assign(target, v)) {
      ++st_->constraint_prunes;
      return false;
    }
    return true;
  }
  // Both outer cells open. They must end up equal, and the free sets of
  // their rows only ever shrink, so an empty intersection is a definite
  // conflict and a singleton forces both cells now.
  uint16_t inter = static_cast<uint16_t>(~(row_used_[static_cast<size_t>(vals[0])] |
                                           row_used_[static_cast<size_t>(vals[2])]) &
                                         ((1u << n_) - 1));
  if (inter == 0) {
    ++st_->constraint_prunes;
    return false;
  }
  if ((inter & (inter - 1)) == 0) {
    uint8_t v = static_cast<uint8_t>(__builtin_ctz(inter));
    if (!assign(epos, v) || !assign(fpos, v)) {
      ++st_->constraint_prunes;
      return false;
    }
    return true;
  }
  watch_[static_cast<size_t>(epos)].push_back(idx);
  ulog_.push_back({1, epos, 0});
  watch_[static_cast<size_t>(fpos)].push_back(idx);
  ulog_.push_back({1, fpos, 0});
  return true;
}

bool Searcher::fire_compat(int32_t idx) {
  const Compat& t = compats_[static_cast<size_t>(idx)];
  uint8_t v1 = cell_[static_cast<size_t>(t.p1)];
  uint8_t v2 = cell_[static_cast<size_t>(t.p2)];
  uint8_t v3 = cell_[static_cast<size_t>(t.p3)];
  if (v1 != UNSET && v2 != UNSET) {
    uint8_t want = rack_->at(v1, v2);
    if (v3 == UNSET) {
      if (!assign(t.p3, want)) {
        ++st_->constraint_prunes;
        return false;
      }
      return true;
    }
    if (v3 != want) {
      ++st_->constraint_prunes;
      return false;
    }
    return true;
  }
  if (v1 != UNSET && v3 != UNSET && v2 == UNSET) {
    // rows of the rack are invertible: the middle cell is determined
    if (!assign(t.p2, rack_rowinv_.at(v1, v3))) {
      ++st_->constraint_prunes;
      return false;
    }
  }
  return true;  // p1 unknown: its own static trigger revisits this instance
}

void Searcher::lex_move(int g, int where) {
  ulog_.push_back({2, g, lex_where_[static_cast<size_t>(g)]});
  if (where >= 0) lex_wait_[static_cast<size_t>(where)].push_back(g);
  lex_where_[static_cast<size_t>(g)] = where;
}

bool Searcher::lex_advance(int g) {
  int p = lex_eq_[static_cast<size_t>(g)];
  const int old = p;
  const auto& src = sym_->src[static_cast<size_t>(g)];
  const auto& ginv = sym_->ginv[static_cast<size_t>(g)];
  bool result = true;
  while (true) {
    if (p == nn_) {
      lex_move(g, kWhereDone);
      break;
    }
    uint8_t mine = cell_[static_cast<size_t>(p)];
    if (mine == UNSET) {
      lex_move(g, p);
      break;
    }
    uint8_t at_src = cell_[static_cast<size_t>(src[static_cast<size_t>(p)])];
    if (at_src == UNSET) {
      lex_move(g, src[static_cast<size_t>(p)]);
      break;
    }
    uint8_t theirs = ginv[at_src];
    if (mine < theirs) {
      lex_move(g, kWhereDead);  // M < M^g on a decided prefix: g can never prune here
      break;
    }
    if (mine > theirs) {
      ++st_->symmetry_prunes;
      result = false;
      break;
    }
    ++p;
  }
  if (p != old) {
    ulog_.push_back({3, g, old});
    lex_eq_[static_cast<size_t>(g)] = p;
  }
  return result;
}

bool Searcher::propagate() {
  while (qhead_ < queue_.size()) {
    int pos = queue_[qhead_++];
    for (int32_t ref : static_trig_[static_cast<size_t>(pos)]) {
      bool ok = ref >= 0 ? fire_main(ref) : fire_compat(-ref - 1);
      if (!ok) return false;
    }
    // watchers stay registered; entries fire again only after backtracking
    // unassigns and reassigns this cell, which is exactly when a recheck is due
    auto& wl = watch_[static_cast<size_t>(pos)];
    for (size_t q = 0; q < wl.size(); ++q)
      if (!fire_main(wl[q])) return false;
    auto& lw = lex_wait_[static_cast<size_t>(pos)];
    for (size_t q = 0; q < lw.size(); ++q) {
      int g = lw[q];
      if (lex_where_[static_cast<size_t>(g)] != pos) continue;  // dormant entry
      if (!lex_advance(g)) return false;
    }
  }
  return true;
}

void Searcher::undo_to(size_t mark) {
  while (ulog_.size() > mark) {
    Undo u = ulog_.back();
    ulog_.pop_back();
    switch (u.tag) {
      case 0: {
        uint8_t v = cell_[static_cast<size_t>(u.a)];
        int r = u.a / n_, c = u.a % n_;
        row_used_[static_cast<size_t>(r)] &= static_cast<uint16_t>(~(1u << v));
        if (kind_ == SearchKind::skew_over_rack && r == c)
          diag_used_ &= static_cast<uint16_t>(~(1u << v));
        cell_[static_cast<size_t>(u.a)] = UNSET;
        break;
      }
      case 1:
        watch_[static_cast<size_t>(u.a)].pop_back();
        break;
      case 2: {
        int cur = lex_where_[static_cast<size_t>(u.a)];
        if (cur >= 0) lex_wait_[static_cast<size_t>(cur)].pop_back();
        lex_where_[static_cast<size_t>(u.a)] = u.b;
        break;
      }
      case 3:
        lex_eq_[static_cast<size_t>(u.a)] = u.b;
        break;
    }
  }
}

void Searcher::dfs(int oidx, int stop_idx,
                   std::vector<std::vector<std::pair<int, uint8_t>>>* prefix_out) {
  if (rc_ && rc_->aborted()) return;
  oidx = next_decision(oidx);
  if (oidx >= stop_idx) {
    if (prefix_out) {
      prefix_out->push_back(decisions_);
    } else if (oidx == static_cast<int>(order_.size()) && sink_) {
      ++st_->raw_outputs;
      if (rc_) rc_->raw.fetch_add(1, std::memory_order_relaxed);
      sink_(cell_.data());
    }
    return;
  }
  int pos = order_[static_cast<size_t>(oidx)];
  int r = pos / n_, c = pos % n_;
  bool diag_cell = kind_ == SearchKind::skew_over_rack && r == c;
  for (uint8_t v = 0; v < n_; ++v) {
    if (row_used_[static_cast<size_t>(r)] & (1u << v)) continue;
    if (diag_cell && (diag_used_ & (1u << v))) continue;
    ++st_->nodes;
    if ((++local_nodes_ & 0x3F) == 0 && rc_) {
      rc_->tick(0x40);
      if (rc_->aborted()) return;
    }
    size_t mark = ulog_.size();
    size_t qmark = queue_.size();
    decisions_.emplace_back(pos, v);
    if (assign(pos, v) && propagate()) dfs(oidx + 1, stop_idx, prefix_out);
    decisions_.pop_back();
    undo_to(mark);
    queue_.resize(qmark);
    qhead_ = qmark;
  }
}

void Searcher::collect_prefixes(std::vector<std::vector<std::pair<int, uint8_t>>>& out,
                                int blocks) {
  blocks = std::min(blocks, static_cast<int>(block_ends_.size()));
  dfs(0, block_ends_[static_cast<size_t>(blocks - 1)], &out);
}

bool Searcher::replay(const std::vector<std::pair<int, uint8_t>>& decisions) {
  for (auto [pos, v] : decisions)
    if (!assign(pos, v) || !propagate()) return false;
  return true;
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return omp_get_max_threads();
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 12)
    throw std::invalid_argument("enumerate: table size must be between 1 and 12");
  if (cfg.support_k < 0) throw std::invalid_argument("enumerate: support_k must be >= 0");
}

// Runs phase 1 (splitting into first-row prefixes) and phase 2 (parallel
// subtree searches) for one fixed symmetry context. raw tables are appended
// per task and merged in task order, so results are deterministic.
struct TaskBatch {
  std::vector<Mat> raw;
  SearchStats stats;
  bool complete = true;
};

template <class Setup>
TaskBatch run_search_context(int n, SearchKind kind, const SymData& sym, RunControl& rc,
                             int jobs, const Setup& setup) {
  TaskBatch batch;
  std::vector<std::vector<std::pair<int, uint8_t>>> prefixes;
  // Split after the first row; go deeper while that yields too few tasks to
  // keep the workers busy (single-long-cycle diagonals often force row 0).
  for (int blocks = 1;; ++blocks) {
    prefixes.clear();
    SearchStats phase;
    Searcher s(n, kind);
    setup(s);
    s.set_symmetry(&sym);
    s.set_control(&rc, &phase);
    if (s.init()) s.collect_prefixes(prefixes, blocks);
    if (static_cast<int>(prefixes.size()) >= 4 * resolve_jobs(jobs) || blocks >= 2 * n ||
        rc.aborted()) {
      batch.stats.merge(phase);
      break;
    }
  }
  if (rc.aborted()) {
    batch.complete = false;
    return batch;
  }

  rc.tasks_total += prefixes.size();

  std::vector<std::vector<Mat>> found(prefixes.size());
  std::vector<SearchStats> stats(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
  for (size_t ti = 0; ti < prefixes.size(); ++ti) {
    if (rc.aborted()) continue;
    Searcher s(n, kind);
    setup(s);
    s.set_symmetry(&sym);
    s.set_control(&rc, &stats[ti]);
    s.set_sink([&, ti](const uint8_t* cells) {
      Mat m(n);
      std::memcpy(m.a.data(), cells, static_cast<size_t>(n) * n);
      found[ti].push_back(std::move(m));
    });
    if (s.init() && s.replay(prefixes[ti])) s.run();
    rc.tasks_done.fetch_add(1);
  }

  for (size_t ti = 0; ti < prefixes.size(); ++ti) {
    batch.stats.merge(stats[ti]);
    for (auto& m : found[ti]) batch.raw.push_back(std::move(m));
  }
  batch.complete = !rc.aborted();
  return batch;
}

std::vector<Perm> diagonal_reps(const SearchConfig& cfg) {
  std::vector<Perm> reps = class_representatives(cfg.n);
  if (cfg.diagonal_filter) {
    std::erase_if(reps, [&](const Perm& t) {
      auto ty = cycle_type_of(t);
      const auto& want = *cfg.diagonal_filter;
      return std::find(want.begin(), want.end(), ty) == want.end();
    });
  }
  return reps;
}

EnumResult<Mat> run_table_enumeration(const SearchConfig& cfg, SearchKind kind) {
  validate_config(cfg);
  auto t0 = Clock::now();
  RunControl rc;
  rc.configure(cfg);

  EnumResult<Mat> result;
  std::unordered_set<std::string> seen;

  for (const Perm& t : diagonal_reps(cfg)) {
    if (rc.aborted()) {
      result.complete = false;
      break;
    }
    SymData sym;
    sym.build(symmetry_set_for(t, cfg), cfg.n);
    TaskBatch batch = run_search_context(cfg.n, kind, sym, rc, cfg.jobs,
                                         [&](Searcher& s) { s.set_diagonal(t); });
    result.stats.merge(batch.stats);
    if (!batch.complete) result.complete = false;
    for (const Mat& m : batch.raw) {
      CheckReport rep = kind == SearchKind::cycle_set ? check_cycle_set(m) : check_rack(m);
      if (!rep) throw std::logic_error("enumerate: engine emitted an invalid table: " + rep.describe());
      CanonicalKey key = canonical_form(m);
      if (seen.insert(key.bytes()).second) result.classes.push_back(std::move(key.canon));
    }
  }

  std::sort(result.classes.begin(), result.classes.end());
  result.stats.deduped_outputs = result.classes.size();
  result.stats.wall_s = seconds_since(t0);
  return result;
}

}  // namespace

std::vector<Perm> symmetry_set_for(const Perm& t, const SearchConfig& cfg) {
  CentralizerGroup cz(t);
  SymmetryMode mode = cfg.symmetry;
  if (mode == SymmetryMode::automatic)
    mode = cz.order() <= 10000 ? SymmetryMode::full_centralizer : SymmetryMode::support_k;
  switch (mode) {
    case SymmetryMode::full_centralizer: {
      if (cz.order() > 2000000)
        throw std::invalid_argument(
            "symmetry_set_for: centralizer too large to materialize; use support mode");
      auto els = cz.elements();
      std::erase_if(els, [](const Perm& g) { return g.is_identity(); });
      return els;
    }
    case SymmetryMode::generators_only:
      return cz.generators();
    case SymmetryMode::support_k:
    default:
      return support_filter(cz, cfg.support_k);
  }
}

EnumResult<Mat> enumerate_cycle_sets(const SearchConfig& cfg) {
  SearchConfig c = cfg;
  c.kind = SearchKind::cycle_set;
  return run_table_enumeration(c, SearchKind::cycle_set);
}

EnumResult<Mat> enumerate_racks(const SearchConfig& cfg) {
  SearchConfig c = cfg;
  c.kind = SearchKind::rack;
  return run_table_enumeration(c, SearchKind::rack);
}

EnumResult<SkewCycleSet> enumerate_skew_cycle_sets(const Mat& rack, const SearchConfig& cfg) {
  validate_config(cfg);
  if (rack.n != cfg.n) throw std::invalid_argument("enumerate_skew_cycle_sets: size mismatch");
  if (auto rep = check_rack(rack); !rep)
    throw std::invalid_argument("enumerate_skew_cycle_sets: invalid rack: " + rep.describe());
  auto t0 = Clock::now();
  RunControl rc;
  rc.configure(cfg);

  std::vector<Perm> aut = rack_automorphisms(rack);
  std::vector<Perm> sym_perms = aut;
  if (cfg.symmetry == SymmetryMode::support_k ||
      (cfg.symmetry == SymmetryMode::automatic && aut.size() > 10000)) {
    std::erase_if(sym_perms, [&](const Perm& g) { return g.support_size() > cfg.support_k; });
  }
  SymData sym;
  sym.build(std::move(sym_perms), cfg.n);

  TaskBatch batch = run_search_context(cfg.n, SearchKind::skew_over_rack, sym, rc, cfg.jobs,
                                       [&](Searcher& s) { s.set_rack(rack); });

  EnumResult<SkewCycleSet> result;
  result.stats = batch.stats;
  result.complete = batch.complete;
  std::unordered_set<std::string> seen;
  for (const Mat& m : batch.raw) {
    if (auto rep = check_skew_cycle_set(m, rack); !rep)
      throw std::logic_error("enumerate: engine emitted an invalid skew pair: " + rep.describe());
    Mat mc = min_in_orbit(m, aut);
    if (seen.insert(std::string(mc.a.begin(), mc.a.end())).second)
      result.classes.push_back({rack, std::move(mc)});
  }
  std::sort(result.classes.begin(), result.classes.end());
  result.stats.deduped_outputs = result.classes.size();
  result.stats.wall_s = seconds_since(t0);
  return result;
}

EnumResult<SkewCycleSet> enumerate_all_skew(const SearchConfig& cfg, bool include_trivial_rack,
                                            bool quandle_racks_only) {
  validate_config(cfg);
  auto t0 = Clock::now();
  EnumResult<SkewCycleSet> result;

  EnumResult<Mat> racks = enumerate_racks(cfg);
  result.stats.merge(racks.stats);
  result.complete = racks.complete;

  for (const Mat& rack : racks.classes) {
    if (!result.complete) break;
    if (!include_trivial_rack && is_trivial_rack(rack)) continue;
    if (quandle_racks_only && !is_quandle(rack)) continue;
    SearchConfig sub = cfg;
    sub.diagonal_filter.reset();
    if (cfg.time_budget_s > 0) {
      sub.time_budget_s = cfg.time_budget_s - seconds_since(t0);
      if (sub.time_budget_s <= 0) {
        result.complete = false;
        break;
      }
    }
    if (cfg.node_budget > 0) {
      uint64_t used = result.stats.nodes;
      if (used >= cfg.node_budget) {
        result.complete = false;
        break;
      }
      sub.node_budget = cfg.node_budget - used;
    }
    EnumResult<SkewCycleSet> one = enumerate_skew_cycle_sets(rack, sub);
    result.stats.merge(one.stats);
    if (!one.complete) result.complete = false;
    for (auto& sc : one.classes) result.classes.push_back(std::move(sc));
  }

  std::sort(result.classes.begin(), result.classes.end());
  result.stats.deduped_outputs = result.classes.size();
  result.stats.wall_s = seconds_since(t0);
  return result;
}

EnumResult<SolutionMap> enumerate_solutions(int n, SolutionFamily family, SearchConfig cfg) {
  cfg.n = n;
  EnumResult<SolutionMap> result;
  auto t0 = Clock::now();

  auto push_checked = [&](SolutionMap s) {
    YbeReport rep = verify_ybe(s);
    if (!rep) throw std::logic_error("enumerate_solutions: converter produced a non-solution: " +
                                     rep.describe());
    result.classes.push_back(std::move(s));
  };

  if (family == SolutionFamily::involutive || family == SolutionFamily::all) {
    EnumResult<Mat> cs = enumerate_cycle_sets(cfg);
    result.stats.merge(cs.stats);
    if (!cs.complete) result.complete = false;
    for (const Mat& m : cs.classes) push_checked(cycle_set_to_solution(m));
  }
  if (family != SolutionFamily::involutive) {
    bool quandles_only = family == SolutionFamily::biquandle;
    EnumResult<SkewCycleSet> sk = enumerate_all_skew(cfg, false, quandles_only);
    result.stats.merge(sk.stats);
    if (!sk.complete) result.complete = false;
    for (const SkewCycleSet& sc : sk.classes) push_checked(skew_cycle_set_to_solution(sc));
  }

  result.stats.deduped_outputs = result.classes.size();
  result.stats.wall_s = seconds_since(t0);
  return result;
}

}  // namespace ybdb
