#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybdb/props.hpp"
#include "ybdb/tables.hpp"
#include "ybdb/yb.hpp"

namespace ybdb {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct format_error : io_error {
  using io_error::io_error;
};

enum class DatasetKind : uint8_t { cycleset, rack, skewcycleset, solution };

std::string to_string(DatasetKind k);
DatasetKind dataset_kind_from_string(const std::string& s);

/// Header line: `#ybdb v1 kind=<kind> n=<n> [count=<c>] [partial=1] [producer="..."]`
struct DatasetHeader {
  int format_version = 1;
  DatasetKind kind = DatasetKind::cycleset;
  int n = 0;
  std::optional<uint64_t> count;
  std::string producer;  // free-form, no quotes or newlines
  bool partial = false;  // a budget cut the producing run short
};

/// Uniform record carrier. cycleset/rack use block a alone; skewcycleset
/// holds (R, M) and solution holds (sigma rows, tau rows) in (a, b).
struct StoreRecord {
  Mat a;
  Mat b;

  auto operator<=>(const StoreRecord&) const = default;
};

struct Dataset {
  DatasetHeader header;
  std::vector<StoreRecord> records;
};

StoreRecord to_record(const Mat& table);
StoreRecord to_record(const SkewCycleSet& sc);
StoreRecord to_record(const SolutionMap& s);
SkewCycleSet record_to_skew(const StoreRecord& r);
SolutionMap record_to_solution(const StoreRecord& r);

/// Re-checks a record against the axiom checker of its kind (verify_ybe for
/// solutions); throws format_error naming the record index on failure.
void validate_record(const DatasetHeader& h, const StoreRecord& r, uint64_t index);

/// Writes the dataset; returns the record count. With sort_records the
/// records are sorted by content first, making files byte-comparable across
/// runs and machines. The header count is always filled in.
uint64_t write_dataset(const std::string& path, DatasetHeader header,
                       std::span<const StoreRecord> records, bool sort_records = false);
uint64_t write_dataset(std::ostream& os, DatasetHeader header,
                       std::span<const StoreRecord> records, bool sort_records = false);

/// Streams records (constant memory per record); validation is on unless
/// disabled. The header is parsed before the first callback.
void for_each_record(const std::string& path, bool validate,
                     const std::function<void(const StoreRecord&, uint64_t)>& fn,
                     DatasetHeader* header_out = nullptr);

Dataset read_dataset(const std::string& path, bool validate = true);

struct DatasetStats {
  DatasetKind kind = DatasetKind::cycleset;
  int n = 0;
  uint64_t records = 0;
  uint64_t involutive = 0;
  uint64_t square_free = 0;
  uint64_t indecomposable = 0;
  uint64_t multipermutation = 0;
  uint64_t irretractable = 0;
  uint64_t biquandle = 0;
  uint64_t square_free_and_irretractable = 0;  // counterexample crosstab (n >= 2)

  std::string to_text() const;
};

ClassificationRecord classify_record(const DatasetHeader& h, const StoreRecord& r);
DatasetStats dataset_stats(const Dataset& ds);
DatasetStats dataset_stats(const std::string& path);

}  // namespace ybdb
