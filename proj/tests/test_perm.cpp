#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "ybdb/perm.hpp"

using namespace ybdb;

namespace {

Perm P(const std::string& s, int n) { return Perm::parse_cycles(s, n); }

uint64_t closure_order(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen{Perm::identity(n)};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& h : frontier)
      for (const auto& g : gens) {
        Perm p = compose(g, h);
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("compose and inverse") {
  CHECK(compose(P("(1 2)", 3), P("(1 2)", 3)) == Perm::identity(3));
  CHECK(compose(P("(1 2 3)", 3), Perm::identity(3)) == P("(1 2 3)", 3));
  // (12)(13): 1 -> 3, 3 -> 2, 2 -> 1
  CHECK(compose(P("(1 2)", 3), P("(1 3)", 3)) == P("(1 3 2)", 3));
  CHECK(Perm::identity(4).inverse() == Perm::identity(4));
  CHECK(P("(1 2)", 4).inverse() == P("(1 2)", 4));
  CHECK(P("(1 2 3)", 3).inverse() == P("(1 3 2)", 3));
  CHECK_THROWS_AS(compose(Perm::identity(2), Perm::identity(3)), std::invalid_argument);
}

TEST_CASE("cycle notation round trip") {
  CHECK(P("(1 2 7 8)(3 4 5 6)", 8).cycle_string() == "(1 2 7 8)(3 4 5 6)");
  CHECK(Perm::identity(5).cycle_string() == "id");
  CHECK(P("id", 6) == Perm::identity(6));
  CHECK(P("(2 1)", 3) == P("(1 2)", 3));
  CHECK_THROWS_AS(P("(1 2)(2 3)", 4), std::invalid_argument);  // repeated point
  CHECK_THROWS_AS(P("(1 9)", 4), std::invalid_argument);       // out of range
  CHECK_THROWS_AS(P("", 4), std::invalid_argument);
}

TEST_CASE("class representatives count p(n)") {
  const int p[] = {0, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n)
    CHECK(class_representatives(n).size() == static_cast<size_t>(p[n]));
  CHECK(class_representatives(1) == std::vector<Perm>{Perm::identity(1)});
  // partition 3+2 of 5 -> (1 2 3)(4 5)
  CHECK(class_representative(CycleType{{3, 2}}) == P("(1 2 3)(4 5)", 5));
  CHECK_THROWS_AS(class_representatives(13), std::invalid_argument);
}

TEST_CASE("cycle type and diag conjugator") {
  Perm t = P("(1 5)(2 7 3)", 8);
  CHECK(cycle_type_of(t).parts == std::vector<int>{3, 2, 1, 1, 1});
  for (const Perm& s : {t, P("(1 2 3 4 5 6)", 8), Perm::identity(8)}) {
    Perm gamma = diag_conjugator(s);
    Perm rep = class_representative(cycle_type_of(s));
    CHECK(compose(gamma.inverse(), compose(s, gamma)) == rep);
  }
}

TEST_CASE("centralizer order and elements") {
  CHECK(CentralizerGroup(Perm::identity(3)).order() == 6);
  CentralizerGroup c12(P("(1 2)", 3));
  CHECK(c12.order() == 2);
  auto els = c12.elements();
  CHECK(els.size() == 2);
  CHECK(std::count(els.begin(), els.end(), Perm::identity(3)) == 1);
  CHECK(std::count(els.begin(), els.end(), P("(1 2)", 3)) == 1);
  CHECK(CentralizerGroup(P("(1 2 3 4 5 6 7 8 9)", 9)).order() == 9);

  // every streamed element commutes with the pivot; the stream has order() many
  for (const char* ts : {"(1 2 3)(4 5)(6 7)", "(1 2 3 4)(5 6 7 8)", "id"}) {
    CentralizerGroup cz(P(ts, 8));
    uint64_t count = 0;
    cz.for_each_element([&](const Perm& g) {
      ++count;
      CHECK(compose(compose(g, cz.pivot()), g.inverse()) == cz.pivot());
      return true;
    });
    CHECK(count == cz.order());
    CHECK(closure_order(cz.generators(), 8) == cz.order());
  }
}

TEST_CASE("support filter") {
  auto s3 = support_filter(CentralizerGroup(Perm::identity(3)), 2);
  // the three transpositions plus the generators that move three points
  CHECK(std::count_if(s3.begin(), s3.end(), [](const Perm& g) { return g.support_size() == 2; }) ==
        3);
  for (const Perm& g : s3) CHECK(!g.is_identity());
  CHECK(closure_order(s3, 3) == 6);  // still generates Sym_3

  auto nine = support_filter(CentralizerGroup(P("(1 2 3 4 5 6 7 8 9)", 9)), 3);
  CHECK(nine == std::vector<Perm>{P("(1 2 3 4 5 6 7 8 9)", 9)});

  CHECK(support_filter(TrivialGroup(4), 3).empty());

  // output is a subset of the group and still generates it
  for (const char* ts : {"(1 2)(3 4)", "(1 2 3)(4 5 6)", "(1 2)", "id"}) {
    CentralizerGroup cz(P(ts, 8));
    auto out = support_filter(cz, 3);
    for (const Perm& g : out) CHECK(cz.contains(g));
    CHECK(closure_order(out, 8) == cz.order());
  }
}

TEST_CASE("support filter on a large group uses membership search") {
  // Sym_10 cannot be streamed; the subset route must give exactly the
  // small-support elements plus generators.
  auto out = support_filter(CentralizerGroup(Perm::identity(10)), 2);
  size_t transpositions = 0;
  for (const Perm& g : out)
    if (g.support_size() == 2) ++transpositions;
  CHECK(transpositions == 45);
}
