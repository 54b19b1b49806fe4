#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include <random>

#include "reference.hpp"
#include "ybdb/canon.hpp"
#include "ybdb/enumerate.hpp"
#include "ybdb/props.hpp"
#include "ybdb/yb.hpp"

using namespace ybdb;

namespace {

std::vector<Mat> db(int n) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.jobs = 2;
  return enumerate_cycle_sets(cfg).classes;
}

Perm random_perm(int n, std::mt19937_64& rng) {
  std::vector<uint8_t> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), uint8_t{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("square free") {
  CHECK(is_square_free(trivial_cycle_set(4)));
  size_t count = 0;
  for (const Mat& m : db(5))
    if (is_square_free(m)) ++count;
  CHECK(count == 17);
}

TEST_CASE("permutation group and indecomposability") {
  GroupInfo triv = permutation_group(trivial_cycle_set(4));
  CHECK(triv.order() == 1);
  CHECK(triv.orbits().size() == 4);

  // n=2 non-trivial cycle set: both rows are the transposition
  Mat m(2);
  m.at(0, 0) = 1; m.at(0, 1) = 0; m.at(1, 0) = 1; m.at(1, 1) = 0;
  REQUIRE(check_cycle_set(m).ok());
  GroupInfo g = permutation_group(m);
  CHECK(g.order() == 2);
  CHECK(g.transitive());

  size_t count = 0;
  for (const Mat& d : db(5))
    if (is_indecomposable(d)) ++count;
  CHECK(count == 1);
}

TEST_CASE("retract") {
  // trivial cycle set: all rows equal, single class
  Mat sz1 = retract(trivial_cycle_set(5));
  CHECK(sz1.n == 1);

  for (const Mat& m : db(4)) {
    Mat r = retract(m);
    CHECK(check_cycle_set(r).ok());
    if (is_irretractable(m))
      CHECK(r.n == m.n);
    else
      CHECK(r.n < m.n);
  }
}

TEST_CASE("multipermutation level") {
  Mat one(1);
  one.at(0, 0) = 0;
  CHECK(multipermutation_level(one) == 0);
  CHECK(multipermutation_level(trivial_cycle_set(4)) == 1);

  size_t mp = 0;
  for (const Mat& m : db(5)) {
    auto level = multipermutation_level(m);
    if (level) {
      ++mp;
      CHECK(*level <= 4);
    }
    if (is_irretractable(m) && m.n > 1) CHECK(!level);
  }
  CHECK(mp == 84);
}

TEST_CASE("irretractable counts") {
  CHECK(!is_irretractable(trivial_cycle_set(3)));
  size_t c4 = 0, c5 = 0;
  for (const Mat& m : db(4)) c4 += is_irretractable(m);
  for (const Mat& m : db(5)) c5 += is_irretractable(m);
  CHECK(c4 == 2);
  CHECK(c5 == 4);
}

TEST_CASE("gi counterexamples vanish up to n=5 here") {
  for (int n = 2; n <= 5; ++n) {
    auto d = db(n);
    CHECK(gi_counterexamples(d).count == 0);
  }
}

TEST_CASE("biquandle predicate") {
  for (const Mat& m : db(4)) CHECK(is_biquandle(cycle_set_to_solution(m)));

  SearchConfig cfg;
  cfg.n = 3;
  cfg.jobs = 2;
  size_t bq = 0;
  for (const auto& sc : enumerate_all_skew(cfg, false, false).classes)
    bq += is_biquandle(skew_cycle_set_to_solution(sc));
  CHECK(bq == 10);
}

TEST_CASE("classification is isomorphism-invariant") {
  std::mt19937_64 rng(23);
  auto compare = [](const ClassificationRecord& a, const ClassificationRecord& b) {
    CHECK(a.involutive == b.involutive);
    CHECK(a.square_free == b.square_free);
    CHECK(a.indecomposable == b.indecomposable);
    CHECK(a.irretractable == b.irretractable);
    CHECK(a.multipermutation_level == b.multipermutation_level);
    CHECK(a.biquandle == b.biquandle);
    CHECK(a.gi_counterexample == b.gi_counterexample);
    CHECK(a.permutation_group_order == b.permutation_group_order);
  };
  for (const Mat& m : db(5)) {
    Perm g = random_perm(5, rng);
    compare(classify(m), classify(act(m, g)));
  }
  SearchConfig cfg;
  cfg.n = 3;
  cfg.jobs = 2;
  for (const auto& sc : enumerate_all_skew(cfg, false, false).classes) {
    Perm g = random_perm(3, rng);
    compare(classify(sc), classify(act(sc, g)));
  }
}

TEST_CASE("fixtures classify as indecomposable multipermutation solutions") {
  // built from the size-8 fixture of test_yb via its sigma family
  SolutionMap s;
  s.n = 8;
  auto sig = [&](const char* c) { return Perm::parse_cycles(c, 8); };
  Perm s1 = sig("(1 6 3 4 5 2 7 8)"), s2 = sig("(1 2 7 4 5 6 3 8)");
  Perm s3 = sig("(1 2 3 8 5 6 7 4)"), s4 = sig("(1 6 7 8 5 2 3 4)");
  s.sigma = {s1, s2, s3, s4, s1, s2, s3, s4};
  Perm t1 = sig("(1 8 3 6 5 4 7 2)"), t2 = sig("(1 4 7 6 5 8 3 2)");
  Perm t3 = sig("(1 4 3 2 5 8 7 6)"), t4 = sig("(1 8 7 2 5 4 3 6)");
  s.tau = {t1, t2, t3, t4, t1, t2, t3, t4};
  REQUIRE(verify_ybe(s).ok);

  Mat m = solution_to_cycle_set(s);
  ClassificationRecord rec = classify(m);
  CHECK(rec.indecomposable);
  CHECK(rec.multipermutation_level.has_value());

  // sigmas coincide in pairs: the first retract has size 4
  CHECK(retract(m).n == 4);
}
