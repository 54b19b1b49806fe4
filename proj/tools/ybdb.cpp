#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ybdb/canon.hpp"
#include "ybdb/enumerate.hpp"
#include "ybdb/store.hpp"
#include "ybdb/yb.hpp"

namespace {

using namespace ybdb;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void print_progress(const ProgressInfo& p) {
  std::fprintf(stderr, "progress: nodes %llu (%.1fM/s) raw %llu tasks %zu/%zu elapsed %.0fs\n",
               static_cast<unsigned long long>(p.nodes), p.nodes_per_s / 1e6,
               static_cast<unsigned long long>(p.raw_found), p.tasks_done, p.tasks_total,
               p.elapsed_s);
}

void emit_dataset(const std::string& out_path, DatasetHeader header,
                  const std::vector<StoreRecord>& records, bool sorted) {
  if (out_path.empty())
    write_dataset(std::cout, std::move(header), records, sorted);
  else
    write_dataset(out_path, std::move(header), records, sorted);
}

struct EnumerateArgs {
  std::string kind = "cycleset";
  int n = 0;
  std::string diagonal;
  std::string symmetry = "auto";
  int jobs = 0;
  std::string out;
  uint64_t budget_nodes = 0;
  double budget_secs = 0;
  bool quiet = false;
};

int run_enumerate(const EnumerateArgs& a) {
  SearchConfig cfg;
  cfg.n = a.n;
  cfg.jobs = a.jobs;
  cfg.node_budget = a.budget_nodes;
  cfg.time_budget_s = a.budget_secs;
  if (!a.quiet) cfg.progress = print_progress;
  if (a.symmetry == "auto")
    cfg.symmetry = SymmetryMode::automatic;
  else if (a.symmetry == "full")
    cfg.symmetry = SymmetryMode::full_centralizer;
  else if (a.symmetry == "gens")
    cfg.symmetry = SymmetryMode::generators_only;
  else if (a.symmetry == "support3")
    cfg.symmetry = SymmetryMode::support_k;
  else
    throw CLI::ValidationError("--symmetry must be auto|full|gens|support3");
  if (!a.diagonal.empty())
    cfg.diagonal_filter =
        std::vector<CycleType>{cycle_type_of(Perm::parse_cycles(a.diagonal, a.n))};

  DatasetHeader header;
  header.n = a.n;
  header.producer = "ybdb enumerate --kind " + a.kind + " --n " + std::to_string(a.n);

  std::vector<StoreRecord> records;
  SearchStats stats;
  bool complete = true;

  if (a.kind == "cycleset" || a.kind == "rack") {
    header.kind = a.kind == "cycleset" ? DatasetKind::cycleset : DatasetKind::rack;
    EnumResult<Mat> r =
        a.kind == "cycleset" ? enumerate_cycle_sets(cfg) : enumerate_racks(cfg);
    for (const Mat& m : r.classes) records.push_back(to_record(m));
    stats = r.stats;
    complete = r.complete;
  } else if (a.kind == "noninvolutive" || a.kind == "biquandle") {
    header.kind = DatasetKind::skewcycleset;
    EnumResult<SkewCycleSet> r = enumerate_all_skew(cfg, false, a.kind == "biquandle");
    for (const SkewCycleSet& sc : r.classes) records.push_back(to_record(sc));
    stats = r.stats;
    complete = r.complete;
  } else {
    throw CLI::ValidationError("--kind must be cycleset|rack|noninvolutive|biquandle");
  }

  header.partial = !complete;
  emit_dataset(a.out, header, records, /*sorted=*/true);
  std::fprintf(stderr, "%s\n", stats.to_text().c_str());
  if (!complete) {
    std::fprintf(stderr, "budget exceeded; output is a sound partial batch\n");
    return kExitBudget;
  }
  return kExitOk;
}

std::string classification_line(uint64_t idx, const ClassificationRecord& c) {
  std::string s = std::to_string(idx);
  s += " involutive=" + std::to_string(c.involutive ? 1 : 0);
  s += " square_free=" + std::to_string(c.square_free ? 1 : 0);
  s += " indecomposable=" + std::to_string(c.indecomposable ? 1 : 0);
  s += " irretractable=" + std::to_string(c.irretractable ? 1 : 0);
  s += " mplevel=";
  s += c.multipermutation_level ? std::to_string(*c.multipermutation_level) : "-";
  s += " biquandle=" + std::to_string(c.biquandle ? 1 : 0);
  s += " gi=" + std::to_string(c.gi_counterexample ? 1 : 0);
  s += " group_order=" + std::to_string(c.permutation_group_order);
  return s;
}

int run_classify(const std::string& in, const std::string& out) {
  Dataset ds = read_dataset(in);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) throw io_error("cannot open '" + out + "' for writing");
    os = &file;
  }
  *os << "#ybdb-classify v1 kind=" << to_string(ds.header.kind) << " n=" << ds.header.n
      << " count=" << ds.records.size() << "\n";
  for (size_t i = 0; i < ds.records.size(); ++i)
    *os << classification_line(i, classify_record(ds.header, ds.records[i])) << "\n";
  os->flush();
  return kExitOk;
}

int run_verify(const std::string& in) {
  try {
    uint64_t count = 0;
    DatasetHeader h;
    for_each_record(in, /*validate=*/true, [&](const StoreRecord&, uint64_t) { ++count; }, &h);
    std::fprintf(stderr, "verify: %llu records ok\n", static_cast<unsigned long long>(count));
    return kExitOk;
  } catch (const format_error& e) {
    std::fprintf(stderr, "verify: %s\n", e.what());
    return kExitVerification;
  }
}

int run_convert(const std::string& in, const std::string& to, const std::string& out) {
  Dataset ds = read_dataset(in);
  DatasetHeader header = ds.header;
  header.producer = "ybdb convert --to " + to;
  header.partial = ds.header.partial;
  std::vector<StoreRecord> records;
  records.reserve(ds.records.size());

  auto bad = [&](uint64_t idx, const std::string& what) {
    throw format_error("record " + std::to_string(idx) + ": " + what);
  };

  for (size_t i = 0; i < ds.records.size(); ++i) {
    const StoreRecord& r = ds.records[i];
    if (to == "solution") {
      header.kind = DatasetKind::solution;
      switch (ds.header.kind) {
        case DatasetKind::cycleset: records.push_back(to_record(cycle_set_to_solution(r.a))); break;
        case DatasetKind::skewcycleset:
          records.push_back(to_record(skew_cycle_set_to_solution(record_to_skew(r))));
          break;
        case DatasetKind::solution: records.push_back(r); break;
        case DatasetKind::rack:
          throw CLI::ValidationError("rack datasets have no solution conversion");
      }
    } else if (to == "cycleset") {
      header.kind = DatasetKind::cycleset;
      switch (ds.header.kind) {
        case DatasetKind::cycleset: records.push_back(r); break;
        case DatasetKind::solution: {
          SolutionMap s = record_to_solution(r);
          if (!is_involutive(s)) bad(i, "solution is not involutive");
          records.push_back(to_record(solution_to_cycle_set(s)));
          break;
        }
        case DatasetKind::skewcycleset:
          if (!is_trivial_rack(r.a)) bad(i, "skew record has a non-trivial rack");
          records.push_back(to_record(r.b));
          break;
        case DatasetKind::rack:
          throw CLI::ValidationError("rack datasets have no cycleset conversion");
      }
    } else if (to == "skew") {
      header.kind = DatasetKind::skewcycleset;
      switch (ds.header.kind) {
        case DatasetKind::cycleset:
          records.push_back(to_record(SkewCycleSet{trivial_rack(r.a.n), r.a}));
          break;
        case DatasetKind::solution:
          records.push_back(to_record(solution_to_skew_cycle_set(record_to_solution(r))));
          break;
        case DatasetKind::skewcycleset: records.push_back(r); break;
        case DatasetKind::rack:
          throw CLI::ValidationError("rack datasets have no skew conversion");
      }
    } else {
      throw CLI::ValidationError("--to must be solution|cycleset|skew");
    }
  }
  emit_dataset(out, header, records, /*sorted=*/false);
  return kExitOk;
}

int run_canon(const std::string& in, const std::string& out) {
  Dataset ds = read_dataset(in);
  DatasetHeader header = ds.header;
  header.producer = "ybdb canon";
  std::vector<StoreRecord> records;
  for (const StoreRecord& r : ds.records) {
    switch (ds.header.kind) {
      case DatasetKind::cycleset:
      case DatasetKind::rack:
        records.push_back(to_record(canonical_form(r.a).canon));
        break;
      case DatasetKind::skewcycleset: {
        SkewCanonicalKey key = canonical_form(record_to_skew(r));
        records.push_back(to_record(SkewCycleSet{key.rack_canon, key.m_canon}));
        break;
      }
      case DatasetKind::solution: {
        SkewCanonicalKey key = canonical_form(solution_to_skew_cycle_set(record_to_solution(r)));
        records.push_back(
            to_record(skew_cycle_set_to_solution({key.rack_canon, key.m_canon})));
        break;
      }
    }
  }
  std::sort(records.begin(), records.end());
  auto last = std::unique(records.begin(), records.end());
  uint64_t dropped = static_cast<uint64_t>(std::distance(last, records.end()));
  records.erase(last, records.end());
  emit_dataset(out, header, records, /*sorted=*/false);
  if (dropped)
    std::fprintf(stderr, "canon: dropped %llu duplicate class(es)\n",
                 static_cast<unsigned long long>(dropped));
  return kExitOk;
}

int run_isomorphic(const std::string& in, const std::string& in2, uint64_t ia, uint64_t ib) {
  Dataset da = read_dataset(in);
  Dataset db = in2.empty() ? da : read_dataset(in2);
  if (da.header.kind != db.header.kind || da.header.n != db.header.n)
    throw CLI::ValidationError("datasets have different kind or size");
  if (ia >= da.records.size() || ib >= db.records.size())
    throw CLI::ValidationError("record index out of range");
  const StoreRecord& ra = da.records[ia];
  const StoreRecord& rb = db.records[ib];
  bool iso = false;
  switch (da.header.kind) {
    case DatasetKind::cycleset:
    case DatasetKind::rack:
      iso = are_isomorphic(ra.a, rb.a);
      break;
    case DatasetKind::skewcycleset:
      iso = are_isomorphic(record_to_skew(ra), record_to_skew(rb));
      break;
    case DatasetKind::solution:
      iso = are_isomorphic(solution_to_skew_cycle_set(record_to_solution(ra)),
                           solution_to_skew_cycle_set(record_to_solution(rb)));
      break;
  }
  std::printf("%s\n", iso ? "yes" : "no");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ybdb: enumerate and classify finite set-theoretic Yang-Baxter solutions"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate tables up to isomorphism");
  enumerate->add_option("--kind", ea.kind, "cycleset|rack|noninvolutive|biquandle");
  enumerate->add_option("--n", ea.n, "table size")->required()->check(CLI::Range(1, 12));
  enumerate->add_option("--diagonal", ea.diagonal,
                        "restrict to the conjugacy class of this permutation, e.g. \"(1 2 3)\"");
  enumerate->add_option("--symmetry", ea.symmetry, "auto|full|gens|support3");
  enumerate->add_option("--jobs", ea.jobs, "worker threads (0 = all)")->envname("YBDB_JOBS");
  enumerate->add_option("--out", ea.out, "output dataset (stdout when omitted)");
  enumerate->add_option("--budget-nodes", ea.budget_nodes, "abort after this many search nodes");
  enumerate->add_option("--budget-secs", ea.budget_secs, "abort after this many seconds");
  enumerate->add_flag("--quiet", ea.quiet, "no progress reporting");

  std::string in, in2, out, to;
  uint64_t ia = 0, ib = 0;

  auto* classify_cmd = app.add_subcommand("classify", "classification line per record");
  classify_cmd->add_option("--in", in)->required();
  classify_cmd->add_option("--out", out);

  auto* stats_cmd = app.add_subcommand("stats", "summary table of a dataset");
  stats_cmd->add_option("--in", in)->required();

  auto* verify_cmd = app.add_subcommand("verify", "re-check axioms and the braid relation");
  verify_cmd->add_option("--in", in)->required();

  auto* convert_cmd = app.add_subcommand("convert", "convert between representations");
  convert_cmd->add_option("--in", in)->required();
  convert_cmd->add_option("--to", to, "solution|cycleset|skew")->required();
  convert_cmd->add_option("--out", out);

  auto* canon_cmd = app.add_subcommand("canon", "canonical, sorted, deduplicated dataset");
  canon_cmd->add_option("--in", in)->required();
  canon_cmd->add_option("--out", out);

  auto* iso_cmd = app.add_subcommand("isomorphic", "are records A and B isomorphic?");
  iso_cmd->add_option("a", ia, "first record index (0-based)")->required();
  iso_cmd->add_option("b", ib, "second record index (0-based)")->required();
  iso_cmd->add_option("--in", in)->required();
  iso_cmd->add_option("--in2", in2, "take B from this dataset instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(ea);
    if (classify_cmd->parsed()) return run_classify(in, out);
    if (stats_cmd->parsed()) {
      std::printf("%s", dataset_stats(in).to_text().c_str());
      return kExitOk;
    }
    if (verify_cmd->parsed()) return run_verify(in);
    if (convert_cmd->parsed()) return run_convert(in, to, out);
    if (canon_cmd->parsed()) return run_canon(in, out);
    if (iso_cmd->parsed()) return run_isomorphic(in, in2, ia, ib);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const format_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerification;
  } catch (const io_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitVerification;
  }
  return kExitUsage;
}
