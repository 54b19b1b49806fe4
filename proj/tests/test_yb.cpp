#include <doctest.h>

#include <stdexcept>

#include "reference.hpp"
#include "ybdb/enumerate.hpp"
#include "ybdb/yb.hpp"

using namespace ybdb;

namespace {

// The two size-8 fixtures used throughout the suite.
SolutionMap fixture_a() {
  SolutionMap s;
  s.n = 8;
  auto sig = [&](const char* c) { return Perm::parse_cycles(c, 8); };
  Perm s1 = sig("(1 6 3 4 5 2 7 8)"), s2 = sig("(1 2 7 4 5 6 3 8)");
  Perm s3 = sig("(1 2 3 8 5 6 7 4)"), s4 = sig("(1 6 7 8 5 2 3 4)");
  s.sigma = {s1, s2, s3, s4, s1, s2, s3, s4};
  Perm t1 = sig("(1 8 3 6 5 4 7 2)"), t2 = sig("(1 4 7 6 5 8 3 2)");
  Perm t3 = sig("(1 4 3 2 5 8 7 6)"), t4 = sig("(1 8 7 2 5 4 3 6)");
  s.tau = {t1, t2, t3, t4, t1, t2, t3, t4};
  return s;
}

SolutionMap fixture_b() {
  SolutionMap s;
  s.n = 8;
  auto sig = [&](const char* c) { return Perm::parse_cycles(c, 8); };
  Perm s1 = sig("(1 2 7 8)(3 4 5 6)"), s2 = sig("(1 2 3 8)(4 5 6 7)");
  Perm s3 = sig("(1 2 3 4)(5 6 7 8)"), s4 = sig("(1 6 7 8)(2 3 4 5)");
  s.sigma = {s1, s2, s3, s4, s1, s2, s3, s4};
  Perm t1 = sig("(1 8 3 2)(4 7 6 5)"), t2 = sig("(1 4 3 2)(5 8 7 6)");
  Perm t3 = sig("(1 8 7 6)(2 5 4 3)"), t4 = sig("(1 8 7 2)(3 6 5 4)");
  s.tau = {t1, t2, t3, t4, t1, t2, t3, t4};
  return s;
}

}  // namespace

TEST_CASE("flip solution") {
  SolutionMap flip = flip_solution(5);
  CHECK(verify_ybe(flip).ok);
  CHECK(is_involutive(flip));
  SkewCycleSet sc = solution_to_skew_cycle_set(flip);
  CHECK(sc.m == trivial_cycle_set(5));
  CHECK(is_trivial_rack(sc.r));
}

TEST_CASE("size-8 fixtures are involutive solutions") {
  for (const SolutionMap& s : {fixture_a(), fixture_b()}) {
    auto rep = verify_ybe(s);
    CHECK(rep.ok);
    CHECK(is_involutive(s));
  }
  // fixture A: sigmas coincide in pairs, so the cycle set has 4 distinct rows
  Mat m = solution_to_cycle_set(fixture_a());
  CHECK(check_cycle_set(m).ok());
}

TEST_CASE("a non-solution gets a witness") {
  // constant families r(x,y) = (f(y), g(x)) solve the braid exactly when f
  // and g commute; a non-commuting pair must fail with a concrete witness
  SolutionMap s;
  s.n = 3;
  s.sigma.assign(3, Perm::parse_cycles("(1 2)", 3));
  s.tau.assign(3, Perm::parse_cycles("(1 2 3)", 3));
  auto rep = verify_ybe(s);
  CHECK(!rep.ok);
  CHECK(!rep.braid);
  CHECK(rep.x >= 0);

  // and the commuting shift pair from the same family does solve it
  SolutionMap ok;
  ok.n = 3;
  ok.sigma.assign(3, Perm::identity(3));
  ok.tau.assign(3, Perm::parse_cycles("(1 2 3)", 3));
  CHECK(verify_ybe(ok).ok);
  CHECK(!is_involutive(ok));
}

TEST_CASE("cycle set <-> solution correspondence") {
  CHECK(cycle_set_to_solution(trivial_cycle_set(4)) == flip_solution(4));

  for (int n = 2; n <= 4; ++n) {
    auto classes = ref::cycle_set_classes(n);
    for (const Mat& m : classes) {
      SolutionMap s = cycle_set_to_solution(m);
      CHECK(verify_ybe(s).ok);
      CHECK(is_involutive(s));
      CHECK(solution_to_cycle_set(s) == m);
      // the diagonal is the T map of the solution: m[x][x] = tau_x^{-1}(x)
      for (int x = 0; x < n; ++x)
        CHECK(m.at(x, x) == s.tau[static_cast<size_t>(x)].inverse()(x));
    }
  }
  CHECK(ref::cycle_set_classes(2).size() == 2);
}

TEST_CASE("solution_to_cycle_set rejects non-involutive input") {
  Mat rack(2), m(2);
  rack.at(0, 0) = 1; rack.at(0, 1) = 0; rack.at(1, 0) = 1; rack.at(1, 1) = 0;
  m = rack;  // rows both (2 1): a valid non-involutive skew pair of size 2
  REQUIRE(check_skew_cycle_set(m, rack).ok());
  SolutionMap s = skew_cycle_set_to_solution({rack, m});
  CHECK(verify_ybe(s).ok);
  CHECK(!is_involutive(s));
  CHECK_THROWS_AS(solution_to_cycle_set(s), std::invalid_argument);
}

TEST_CASE("skew <-> solution round trip") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [r, m] : ref::skew_classes(n)) {
      SkewCycleSet sc{r, m};
      SolutionMap s = skew_cycle_set_to_solution(sc);
      CHECK(verify_ybe(s).ok);
      SkewCycleSet back = solution_to_skew_cycle_set(s);
      CHECK(back.r == sc.r);
      CHECK(back.m == sc.m);
      CHECK(is_involutive(s) == is_trivial_rack(r));
    }
  }
}

TEST_CASE("involutive solutions have trivial rack") {
  SkewCycleSet sc = solution_to_skew_cycle_set(fixture_a());
  CHECK(is_trivial_rack(sc.r));
  CHECK(solution_to_cycle_set(fixture_a()) == sc.m);
}

TEST_CASE("checker and braid verifier agree on every row-bijective 3x3 table") {
  // m passes check_cycle_set exactly when the converted map is a well-defined
  // involutive solution
  std::vector<std::vector<uint8_t>> perms;
  std::vector<uint8_t> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  Mat m(3);
  for (const auto& r0 : perms)
    for (const auto& r1 : perms)
      for (const auto& r2 : perms) {
        std::copy(r0.begin(), r0.end(), m.a.begin());
        std::copy(r1.begin(), r1.end(), m.a.begin() + 3);
        std::copy(r2.begin(), r2.end(), m.a.begin() + 6);
        bool valid = check_cycle_set(m).ok();
        bool solves = false;
        try {
          SolutionMap s = cycle_set_to_solution(m);
          solves = verify_ybe(s).ok && is_involutive(s);
        } catch (const std::invalid_argument&) {
          solves = false;  // some sigma was not bijective
        }
        CHECK(valid == solves);
      }
}

TEST_CASE("trivial-rack skew conversion matches the involutive one") {
  for (const Mat& m : ref::cycle_set_classes(3)) {
    SolutionMap via_skew = skew_cycle_set_to_solution({trivial_rack(3), m});
    CHECK(via_skew == cycle_set_to_solution(m));
  }
}
