#include "ybdb/store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ybdb {

std::string to_string(DatasetKind k) {
  switch (k) {
    case DatasetKind::cycleset: return "cycleset";
    case DatasetKind::rack: return "rack";
    case DatasetKind::skewcycleset: return "skewcycleset";
    case DatasetKind::solution: return "solution";
  }
  return "?";
}

DatasetKind dataset_kind_from_string(const std::string& s) {
  if (s == "cycleset") return DatasetKind::cycleset;
  if (s == "rack") return DatasetKind::rack;
  if (s == "skewcycleset") return DatasetKind::skewcycleset;
  if (s == "solution") return DatasetKind::solution;
  throw format_error("unknown dataset kind '" + s + "'");
}

StoreRecord to_record(const Mat& table) { return {table, Mat{}}; }
StoreRecord to_record(const SkewCycleSet& sc) { return {sc.r, sc.m}; }

StoreRecord to_record(const SolutionMap& s) {
  StoreRecord rec{Mat(s.n), Mat(s.n)};
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      rec.a.at(x, y) = static_cast<uint8_t>(s.sigma[static_cast<size_t>(x)](y));
      rec.b.at(x, y) = static_cast<uint8_t>(s.tau[static_cast<size_t>(x)](y));
    }
  return rec;
}

SkewCycleSet record_to_skew(const StoreRecord& r) { return {r.a, r.b}; }

SolutionMap record_to_solution(const StoreRecord& r) {
  SolutionMap s;
  s.n = r.a.n;
  for (int x = 0; x < s.n; ++x) {
    s.sigma.push_back(row_perm(r.a, x));
    s.tau.push_back(row_perm(r.b, x));
  }
  return s;
}

void validate_record(const DatasetHeader& h, const StoreRecord& r, uint64_t index) {
  auto fail = [&](const std::string& what) {
    throw format_error("record " + std::to_string(index) + ": " + what);
  };
  switch (h.kind) {
    case DatasetKind::cycleset:
      if (auto rep = check_cycle_set(r.a); !rep) fail(rep.describe());
      break;
    case DatasetKind::rack:
      if (auto rep = check_rack(r.a); !rep) fail(rep.describe());
      break;
    case DatasetKind::skewcycleset:
      if (auto rep = check_skew_cycle_set(r.b, r.a); !rep) fail(rep.describe());
      break;
    case DatasetKind::solution: {
      SolutionMap s;
      try {
        s = record_to_solution(r);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      if (auto rep = verify_ybe(s); !rep) fail(rep.describe());
      break;
    }
  }
}

namespace {

int blocks_for(DatasetKind k) {
  return k == DatasetKind::skewcycleset || k == DatasetKind::solution ? 2 : 1;
}

void write_block(std::ostream& os, const Mat& m) {
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (j) os << ' ';
      os << static_cast<int>(m.at(i, j)) + 1;
    }
    os << '\n';
  }
}

std::string header_line(const DatasetHeader& h) {
  std::string line = "#ybdb v" + std::to_string(h.format_version) +
                     " kind=" + to_string(h.kind) + " n=" + std::to_string(h.n);
  if (h.count) line += " count=" + std::to_string(*h.count);
  if (h.partial) line += " partial=1";
  if (!h.producer.empty()) line += " producer=\"" + h.producer + "\"";
  return line;
}

DatasetHeader parse_header(const std::string& line) {
  DatasetHeader h;
  if (line.rfind("#ybdb ", 0) != 0) throw format_error("missing #ybdb header");
  std::string rest = line.substr(6);

  // producer="..." may contain spaces; strip it before tokenizing
  if (auto p = rest.find(" producer=\""); p != std::string::npos) {
    auto endq = rest.find('"', p + 11);
    if (endq == std::string::npos) throw format_error("unterminated producer string");
    h.producer = rest.substr(p + 11, endq - (p + 11));
    rest.erase(p, endq - p + 1);
  }

  std::istringstream in(rest);
  std::string tok;
  bool have_version = false, have_kind = false, have_n = false;
  while (in >> tok) {
    if (tok.rfind('v', 0) == 0 && !have_version) {
      h.format_version = std::stoi(tok.substr(1));
      if (h.format_version != 1) throw format_error("unsupported format version " + tok);
      have_version = true;
    } else if (tok.rfind("kind=", 0) == 0) {
      h.kind = dataset_kind_from_string(tok.substr(5));
      have_kind = true;
    } else if (tok.rfind("n=", 0) == 0) {
      h.n = std::stoi(tok.substr(2));
      have_n = true;
    } else if (tok.rfind("count=", 0) == 0) {
      h.count = std::stoull(tok.substr(6));
    } else if (tok.rfind("partial=", 0) == 0) {
      h.partial = tok.substr(8) == "1";
    } else {
      throw format_error("unrecognized header field '" + tok + "'");
    }
  }
  if (!have_version || !have_kind || !have_n) throw format_error("incomplete header");
  if (h.n < 1 || h.n > 255) throw format_error("header n out of range");
  return h;
}

// One row of 1-based entries; throws on anything that is not n integers in range.
void parse_row(const std::string& line, Mat& m, int row, uint64_t record_index) {
  auto fail = [&](const std::string& what) {
    throw format_error("record " + std::to_string(record_index) + ": " + what);
  };
  const char* p = line.data();
  const char* end = p + line.size();
  for (int j = 0; j < m.n; ++j) {
    while (p < end && *p == ' ') ++p;
    int v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) fail("expected integer in row " + std::to_string(row + 1));
    p = next;
    if (v < 1 || v > m.n)
      fail("entry out of range in row " + std::to_string(row + 1) + " (got " + std::to_string(v) +
           ")");
    m.at(row, j) = static_cast<uint8_t>(v - 1);
  }
  while (p < end && (*p == ' ' || *p == '\r')) ++p;
  if (p != end) fail("trailing input in row " + std::to_string(row + 1));
}

}  // namespace

uint64_t write_dataset(std::ostream& os, DatasetHeader header,
                       std::span<const StoreRecord> records, bool sort_records) {
  std::vector<StoreRecord> sorted;
  std::span<const StoreRecord> out = records;
  if (sort_records) {
    sorted.assign(records.begin(), records.end());
    std::sort(sorted.begin(), sorted.end());
    out = sorted;
  }
  header.count = records.size();

  os << header_line(header) << '\n';
  bool first = true;
  for (const StoreRecord& rec : out) {
    if (!first) os << '\n';
    first = false;
    write_block(os, rec.a);
    if (blocks_for(header.kind) == 2) write_block(os, rec.b);
  }
  os.flush();
  if (!os) throw io_error("dataset write failed");
  return records.size();
}

uint64_t write_dataset(const std::string& path, DatasetHeader header,
                       std::span<const StoreRecord> records, bool sort_records) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("cannot open '" + path + "' for writing");
  return write_dataset(os, std::move(header), records, sort_records);
}

void for_each_record(const std::string& path, bool validate,
                     const std::function<void(const StoreRecord&, uint64_t)>& fn,
                     DatasetHeader* header_out) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(is, line)) throw format_error("empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  DatasetHeader h = parse_header(line);
  if (header_out) *header_out = h;

  int nblocks = blocks_for(h.kind);
  uint64_t index = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;  // separator
    StoreRecord rec{Mat(h.n), nblocks == 2 ? Mat(h.n) : Mat{}};
    int total_rows = h.n * nblocks;
    for (int row = 0; row < total_rows; ++row) {
      if (row > 0) {
        if (!std::getline(is, line)) throw format_error("record " + std::to_string(index) +
                                                        ": truncated");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) throw format_error("record " + std::to_string(index) +
                                             ": unexpected blank line inside record");
      }
      Mat& block = row < h.n ? rec.a : rec.b;
      parse_row(line, block, row % h.n, index);
    }
    if (validate) validate_record(h, rec, index);
    fn(rec, index);
    ++index;
  }
  if (h.count && *h.count != index)
    throw format_error("header count " + std::to_string(*h.count) + " but file holds " +
                       std::to_string(index) + " records");
}

Dataset read_dataset(const std::string& path, bool validate) {
  Dataset ds;
  for_each_record(
      path, validate, [&](const StoreRecord& r, uint64_t) { ds.records.push_back(r); },
      &ds.header);
  return ds;
}

ClassificationRecord classify_record(const DatasetHeader& h, const StoreRecord& r) {
  switch (h.kind) {
    case DatasetKind::cycleset: return classify(r.a);
    case DatasetKind::skewcycleset: return classify(record_to_skew(r));
    case DatasetKind::solution: return classify(solution_to_skew_cycle_set(record_to_solution(r)));
    case DatasetKind::rack: break;
  }
  throw std::invalid_argument("classification applies to solution-bearing datasets, not racks");
}

DatasetStats dataset_stats(const Dataset& ds) {
  DatasetStats st;
  st.kind = ds.header.kind;
  st.n = ds.header.n;
  st.records = ds.records.size();
  if (ds.header.kind == DatasetKind::rack) return st;
  for (const StoreRecord& r : ds.records) {
    ClassificationRecord c = classify_record(ds.header, r);
    st.involutive += c.involutive;
    st.square_free += c.square_free;
    st.indecomposable += c.indecomposable;
    st.multipermutation += c.multipermutation_level.has_value();
    st.irretractable += c.irretractable;
    st.biquandle += c.biquandle;
    st.square_free_and_irretractable += c.square_free && c.irretractable && st.n >= 2;
  }
  return st;
}

DatasetStats dataset_stats(const std::string& path) { return dataset_stats(read_dataset(path)); }

std::string DatasetStats::to_text() const {
  std::string out;
  out += "kind " + to_string(kind) + " n " + std::to_string(n) + "\n";
  if (kind == DatasetKind::rack) {
    out += "racks " + std::to_string(records) + "\n";
    return out;
  }
  out += "solutions " + std::to_string(records) + "\n";
  out += "involutive " + std::to_string(involutive) + "\n";
  out += "square-free " + std::to_string(square_free) + "\n";
  out += "indecomposable " + std::to_string(indecomposable) + "\n";
  out += "multipermutation " + std::to_string(multipermutation) + "\n";
  out += "irretractable " + std::to_string(irretractable) + "\n";
  out += "biquandle " + std::to_string(biquandle) + "\n";
  out += "square-free-and-irretractable " + std::to_string(square_free_and_irretractable) + "\n";
  return out;
}

}  // namespace ybdb
