#include <doctest.h>

#include <algorithm>

#include "lpo/cyclic.hpp"
#include "lpo/paths.hpp"

using namespace lpo;

namespace {

CyclicOperad<int> associativeOperad() {
  CyclicOperad<int> P;
  P.compose = [](int m, int, int n) { return m + n - 1; };
  P.arity = [](int m) { return m; };
  P.tau = [](int m) { return m; };
  P.unit = [] { return 1; };
  P.equal = [](int a, int b) { return a == b; };
  P.describe = [](int m) { return "mu_" + std::to_string(m); };
  return P;
}

}  // namespace

TEST_CASE("cyclic parse and format") {
  auto x = parseCyclicPath("1|^2^1|^3|123");
  CHECK(formatCyclicPath(x) == "1|^2^1|^3|123");
  CHECK(x.markers() == std::vector<int>{1, 0, 0});
  CHECK(formatPath(x.base()) == "1|21|3|123");
  CHECK_THROWS_AS(parseCyclicPath("^^12"), ParseError);
  for (const auto& y : smallCyclicPaths(4, 2)) CHECK(parseCyclicPath(formatCyclicPath(y)) == y);
}

TEST_CASE("cyclic composition example") {
  auto r = composeCyclic(parseCyclicPath("1|^2^1|^3|123"), 1, parseCyclicPath("2|^1|^212"));
  CHECK(formatCyclicPath(r) == "^212|^32|^4|^134");
}

TEST_CASE("cyclic unit and agreement with plain composition") {
  auto xs = smallCyclicPaths(4, 1);
  for (const auto& x : xs) {
    CHECK(composeCyclic(cyclicIdentity(x.arityOut()), 1, x) == x);
    for (int i = 1; i <= x.colours(); ++i)
      CHECK(composeCyclic(x, i, cyclicIdentity(x.base().arityIn(i))) == x);
  }
  auto ps = smallPaths(4, 1);
  for (const auto& x : ps)
    for (const auto& y : ps)
      for (int i = 1; i <= x.colours(); ++i) {
        if (x.arityIn(i) != y.arityOut()) continue;
        auto r = composeCyclic(CyclicLatticePath::plain(x), i, CyclicLatticePath::plain(y));
        CHECK(r == CyclicLatticePath::plain(compose(x, i, y)));
      }
}

TEST_CASE("cyclic composition through the dual description") {
  auto xs = smallCyclicPaths(3, 1);
  int n = 0;
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (int i = 1; i <= x.colours(); ++i) {
        if (x.base().arityIn(i) != y.arityOut()) continue;
        CHECK(composeCyclic(x, i, y) == composeCyclicDS(x, i, y));
        ++n;
      }
  CHECK(n > 500);
}

TEST_CASE("output rotation") {
  for (const auto& x : smallCyclicPaths(4, 2)) {
    const int len = x.arityOut() + 1;
    CHECK(outputRotate(0, x) == x);
    CHECK(outputRotate(len, x) == x);
    CHECK(outputRotate(1, outputRotate(2, x)) == outputRotate(3, x));
    int orbit = 1;
    while (outputRotate(orbit, x) != x) ++orbit;
    CHECK(len % orbit == 0);
  }
}

TEST_CASE("cyclic complexity") {
  CHECK(cyclicComplexity(parseCyclicPath("1|1|^1")) == 0);
  for (const auto& x : smallCyclicPaths(2, 2))
    if (x.colours() == 2) CHECK(cyclicComplexity(x) == 2);
  for (const auto& x : smallCyclicPaths(4, 2)) {
    const int c = cyclicComplexity(x);
    CHECK(c % 2 == 0);
    CHECK(c >= complexity(x.base()));
    for (int g = 0; g <= x.arityOut(); ++g) CHECK(cyclicComplexity(outputRotate(g, x)) == c);
  }
}

TEST_CASE("cyclic operad axioms on the associative operad") {
  std::vector<int> elements{0, 1, 2, 3, 4};
  auto ok = cyclicOperadAxiomCheck(associativeOperad(), elements);
  CHECK(ok.ok);
  CHECK(ok.checked > 10);

  auto bad = associativeOperad();
  bad.tau = [](int m) { return m == 1 ? 2 : m == 2 ? 1 : m; };
  auto r = cyclicOperadAxiomCheck(bad, elements);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.empty());
}
