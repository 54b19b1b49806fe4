#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "ybdb/enumerate.hpp"
#include "ybdb/store.hpp"

using namespace ybdb;

namespace {

struct TempDir {
  std::filesystem::path dir;
  TempDir() {
    dir = std::filesystem::temp_directory_path() /
          ("ybdb_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir);
  }
  ~TempDir() { std::filesystem::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::vector<StoreRecord> cycle_set_records(int n) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.jobs = 2;
  std::vector<StoreRecord> out;
  for (const Mat& m : enumerate_cycle_sets(cfg).classes) out.push_back(to_record(m));
  return out;
}

}  // namespace

TEST_CASE("write then read is the identity") {
  TempDir tmp;
  DatasetHeader h;
  h.kind = DatasetKind::cycleset;
  h.n = 3;
  h.producer = "unit test";
  auto recs = cycle_set_records(3);
  REQUIRE(recs.size() == 5);
  CHECK(write_dataset(tmp.path("a.ybdb"), h, recs) == 5);

  Dataset ds = read_dataset(tmp.path("a.ybdb"));
  CHECK(ds.header.kind == DatasetKind::cycleset);
  CHECK(ds.header.n == 3);
  CHECK(ds.header.count == 5);
  CHECK(ds.header.producer == "unit test");
  CHECK(ds.records == recs);
}

TEST_CASE("empty dataset") {
  TempDir tmp;
  DatasetHeader h;
  h.kind = DatasetKind::rack;
  h.n = 4;
  CHECK(write_dataset(tmp.path("e.ybdb"), h, {}) == 0);
  Dataset ds = read_dataset(tmp.path("e.ybdb"));
  CHECK(ds.records.empty());
  CHECK(ds.header.count == 0);
  DatasetStats st = dataset_stats(ds);
  CHECK(st.records == 0);
  CHECK(st.square_free == 0);
}

TEST_CASE("skew records round trip with both blocks") {
  TempDir tmp;
  SearchConfig cfg;
  cfg.n = 3;
  cfg.jobs = 2;
  std::vector<StoreRecord> recs;
  for (const auto& sc : enumerate_all_skew(cfg, false, false).classes)
    recs.push_back(to_record(sc));
  REQUIRE(recs.size() == 21);
  DatasetHeader h;
  h.kind = DatasetKind::skewcycleset;
  h.n = 3;
  write_dataset(tmp.path("s.ybdb"), h, recs);
  Dataset ds = read_dataset(tmp.path("s.ybdb"));
  CHECK(ds.records == recs);
}

TEST_CASE("solution records validate through the braid checker") {
  TempDir tmp;
  SearchConfig cfg;
  std::vector<StoreRecord> recs;
  for (const auto& s : enumerate_solutions(3, SolutionFamily::all, cfg).classes)
    recs.push_back(to_record(s));
  DatasetHeader h;
  h.kind = DatasetKind::solution;
  h.n = 3;
  write_dataset(tmp.path("sol.ybdb"), h, recs);
  Dataset ds = read_dataset(tmp.path("sol.ybdb"));
  CHECK(ds.records.size() == 26);
}

TEST_CASE("sorted files are byte-identical regardless of record order") {
  TempDir tmp;
  auto recs = cycle_set_records(4);
  auto shuffled = recs;
  std::mt19937_64 rng(9);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  DatasetHeader h;
  h.kind = DatasetKind::cycleset;
  h.n = 4;
  write_dataset(tmp.path("one.ybdb"), h, recs, /*sort=*/true);
  write_dataset(tmp.path("two.ybdb"), h, shuffled, /*sort=*/true);
  std::ifstream a(tmp.path("one.ybdb")), b(tmp.path("two.ybdb"));
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
}

TEST_CASE("validation distinguishes corruption from axiom failure") {
  TempDir tmp;
  auto recs = cycle_set_records(3);
  DatasetHeader h;
  h.kind = DatasetKind::cycleset;
  h.n = 3;
  write_dataset(tmp.path("v.ybdb"), h, recs);

  // out-of-range entry
  {
    std::ifstream in(tmp.path("v.ybdb"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = text.find("\n1 ");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\n9 ");
    std::ofstream out(tmp.path("corrupt.ybdb"));
    out << text;
  }
  CHECK_THROWS_WITH_AS(read_dataset(tmp.path("corrupt.ybdb")),
                       doctest::Contains("out of range"), format_error);

  // swap two entries so rows stay in range but the axioms break
  {
    Dataset ds = read_dataset(tmp.path("v.ybdb"));
    std::swap(ds.records[3].a.at(0, 0), ds.records[3].a.at(0, 1));
    write_dataset(tmp.path("broken.ybdb"), ds.header, ds.records);
  }
  CHECK_THROWS_AS(read_dataset(tmp.path("broken.ybdb")), format_error);
  // fast load skips validation
  CHECK_NOTHROW(read_dataset(tmp.path("broken.ybdb"), /*validate=*/false));
}

TEST_CASE("malformed headers are rejected") {
  TempDir tmp;
  {
    std::ofstream out(tmp.path("h.ybdb"));
    out << "#notybdb v1 kind=cycleset n=3\n";
  }
  CHECK_THROWS_AS(read_dataset(tmp.path("h.ybdb")), format_error);
  {
    std::ofstream out(tmp.path("h2.ybdb"));
    out << "#ybdb v2 kind=cycleset n=3\n";
  }
  CHECK_THROWS_AS(read_dataset(tmp.path("h2.ybdb")), format_error);
  {
    std::ofstream out(tmp.path("h3.ybdb"));
    out << "#ybdb v1 kind=cycleset n=3 count=7\n";  // header promises 7, file has 0
  }
  CHECK_THROWS_AS(read_dataset(tmp.path("h3.ybdb")), format_error);
  CHECK_THROWS_AS(read_dataset(tmp.path("missing.ybdb")), io_error);
}

TEST_CASE("dataset stats reproduce the n=5 classification row") {
  TempDir tmp;
  auto recs = cycle_set_records(5);
  DatasetHeader h;
  h.kind = DatasetKind::cycleset;
  h.n = 5;
  write_dataset(tmp.path("five.ybdb"), h, recs);
  DatasetStats st = dataset_stats(tmp.path("five.ybdb"));
  CHECK(st.records == 88);
  CHECK(st.square_free == 17);
  CHECK(st.indecomposable == 1);
  CHECK(st.multipermutation == 84);
  CHECK(st.irretractable == 4);
  CHECK(st.biquandle == 88);
  CHECK(st.square_free_and_irretractable == 0);
  CHECK(st.to_text().find("solutions 88") != std::string::npos);
}
