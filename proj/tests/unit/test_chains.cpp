#include <doctest.h>

#include <set>

#include "lpo/chains.hpp"
#include "lpo/linalg.hpp"
#include "lpo/paths.hpp"

using namespace lpo;

namespace {

// Overlapping cuts 1 <= p_1 <= ... <= p_n <= L of a word, by direct recursion.
std::set<std::string> cutsByHand(const std::string& u, int n) {
  std::set<std::string> out;
  const int L = static_cast<int>(u.size());
  std::vector<int> p;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(p.size()) == n) {
      std::string s;
      int start = 1;
      for (int c : p) {
        s += u.substr(start - 1, c - start + 1) + "|";
        start = c;
      }
      s += u.substr(start - 1);
      out.insert(s);
      return;
    }
    for (int c = lo; c <= L; ++c) {
      p.push_back(c);
      rec(c);
      p.pop_back();
    }
  };
  rec(1);
  return out;
}

ChainElement outputCofaceChain(const ChainElement& e, int j) {
  ChainElement out(e.modulus());
  for (const auto& [x, c] : e.terms()) out.add(outputCoface(x, j), c);
  return out;
}

}  // namespace

TEST_CASE("boundary examples") {
  CHECK(boundary(parsePath("12")).isZero());
  CHECK(boundary(parsePath("121")) == parseChain("-12 + 21"));
  CHECK(formatChainPretty(boundary(parsePath("121"))) == "-12 + 21");
  CHECK(boundary(parsePath("121")) * 1 == boundary(ChainElement::generator(parsePath("121"))));
  CHECK(boundary(ChainElement::generator(parsePath("121"), 2)) == parseChain("12 + 21", 2));
}

TEST_CASE("boundary squares to zero") {
  for (const auto& x : subdividedGenerators(5, 2)) CHECK(boundary(boundary(x)).isZero());
  for (const auto& x : subdividedGenerators(5, 1))
    CHECK(boundary(boundary(ChainElement::generator(x, 3))).isZero());
}

TEST_CASE("nondegenerate generators") {
  CHECK(isNondegenerate(parsePath("121")));
  CHECK_FALSE(isNondegenerate(parsePath("112")));
  CHECK(isNondegenerate(parsePath("1|12")));
  CHECK(chainDegree(parsePath("1212")) == 2);
  for (int k = 1; k <= 3; ++k)
    for (const auto& w : surjectionGenerators(5, k)) {
      CHECK(isNondegenerate(LatticePath({w})));
      CHECK(LatticePath({w}).colours() == k);
    }
  for (const auto& x : subdividedGenerators(4, 2)) CHECK(isNondegenerate(x));
}

TEST_CASE("coface expansion") {
  ChainElement u = ChainElement::generator(parsePath("121"));
  CHECK(cofaceExpansion(u, 0) == u);
  CHECK(formatChainPretty(cofaceExpansion(u, 1)) == "-1|121 + 12|21 + 121|1");

  for (int k = 1; k <= 3; ++k)
    for (const auto& w : surjectionGenerators(4, k))
      for (int n = 0; n <= 3; ++n) {
        ChainElement e = cofaceExpansion(ChainElement::generator(LatticePath({w})), n);
        std::set<std::string> support;
        for (const auto& [x, c] : e.terms()) {
          CHECK((c == 1 || c == -1));
          CHECK(x.letterCount() == static_cast<int>(w.size()) + n);
          CHECK(x.arityOut() == n);
          support.insert(formatPath(x));
        }
        CHECK(support == cutsByHand(formatWord(w), n));
      }
}

TEST_CASE("coface expansion is a chain map up to the cosimplicial structure") {
  for (int k = 1; k <= 3; ++k)
    for (const auto& w : surjectionGenerators(4, k))
      for (int n = 1; n <= 3; ++n) {
        ChainElement u = ChainElement::generator(LatticePath({w}));
        ChainElement lhs = boundary(cofaceExpansion(u, n));
        ChainElement rhs = cofaceExpansion(boundary(u), n);
        ChainElement prev = cofaceExpansion(u, n - 1);
        for (int j = 0; j <= n; ++j) rhs -= outputCofaceChain(prev, j) * (j % 2 ? -1 : 1);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("surjection composition") {
  CHECK(surjCompose(Word{1, 2}, 1, Word{1, 2}) == parseChain("123"));
  CHECK(surjCompose(Word{1, 2}, 1, Word{1}) == parseChain("12"));
  CHECK(surjCompose(Word{1, 2, 1}, 1, Word{1, 2}) == parseChain("1232 + 1312"));
  for (int k = 1; k <= 3; ++k)
    for (const auto& w : surjectionGenerators(4, k)) {
      ChainElement u = ChainElement::generator(LatticePath({w}));
      CHECK(surjCompose(ChainElement::generator(parsePath("1")), 1, u) == u);
      for (int i = 1; i <= k; ++i) CHECK(surjCompose(u, i, ChainElement::generator(parsePath("1"))) == u);
    }
}

TEST_CASE("Leibniz rule") {
  int n = 0;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l)
      for (const auto& a : surjectionGenerators(4, k))
        for (const auto& b : surjectionGenerators(4, l))
          for (int i = 1; i <= k; ++i) {
            ChainElement u = ChainElement::generator(LatticePath({a}));
            ChainElement v = ChainElement::generator(LatticePath({b}));
            const int du = chainDegree(LatticePath({a}));
            ChainElement lhs = boundary(surjCompose(u, i, v));
            ChainElement rhs = surjCompose(boundary(u), i, v) + surjCompose(u, i, boundary(v)) * (du % 2 ? -1 : 1);
            CHECK(lhs == rhs);
            ++n;
          }
  CHECK(n > 50);
}

TEST_CASE("surjection filtration") {
  CHECK(complexityFiltration(parseChain("121")) == 2);
  CHECK(complexityFiltration(parseChain("1212")) == 3);
  CHECK(complexityFiltration(parseChain("12 + 1212")) == 3);
  for (const auto& a : surjectionGenerators(4, 2))
    for (const auto& b : surjectionGenerators(3, 2))
      for (int i = 1; i <= 2; ++i) {
        ChainElement u = ChainElement::generator(LatticePath({a}));
        ChainElement v = ChainElement::generator(LatticePath({b}));
        ChainElement c = surjCompose(u, i, v);
        if (c.isZero()) continue;
        CHECK(complexityFiltration(c) <= std::max(complexityFiltration(u), complexityFiltration(v)));
      }
}

TEST_CASE("symmetric action on chains") {
  ChainElement u = parseChain("121");
  CHECK(symActionChain({1, 2}, u) == u);
  for (const auto& w : surjectionGenerators(5, 2)) {
    ChainElement g = ChainElement::generator(LatticePath({w}));
    CHECK(symActionChain({2, 1}, symActionChain({2, 1}, g)) == g);
    // relabelling commutes with the boundary
    CHECK(boundary(symActionChain({2, 1}, g)) == symActionChain({2, 1}, boundary(g)));
  }
}

TEST_CASE("chain text forms") {
  ChainElement e = parseChain("2*121 - 12|21");
  CHECK(e.coefficient(parsePath("121")) == 2);
  CHECK(e.coefficient(parsePath("12|21")) == -1);
  CHECK(parseChain(formatChain(e)) == e);
  CHECK(parseChain(formatChainPretty(e)) == e);
  CHECK(parseChain("121 - 121").isZero());
  CHECK(parseChain("3*12", 3).isZero());
  CHECK_THROWS_AS(parseChain("12 +"), ParseError);
}

TEST_CASE("homology") {
  ChainComplex zero;
  zero.basis[2] = {"a", "b", "c"};
  auto h = homology(zero, 0, 3);
  CHECK(h[2].rank == 3);
  CHECK(h[0].rank == 0);

  // interval: two points and an edge
  ChainComplex interval;
  interval.basis[0] = {"v0", "v1"};
  interval.basis[1] = {"e"};
  QMatrix d(2, 1);
  d(0, 0) = -1;
  d(1, 0) = 1;
  interval.differential[1] = d;
  CHECK(interval.squaresToZero());
  CHECK(formatHomology(homology(interval, 0, 1)) == "degree 0: rank 1\ndegree 1: rank 0\n");

  // Z --2--> Z has torsion Z/2 in degree 0
  ChainComplex two;
  two.basis[0] = {"a"};
  two.basis[1] = {"b"};
  QMatrix m(1, 1);
  m(0, 0) = 2;
  two.differential[1] = m;
  auto t = homology(two, 0, 1);
  CHECK(t[0].rank == 0);
  REQUIRE(t[0].torsion.size() == 1);
  CHECK(t[0].torsion[0] == 2);
  two.ring = Ring::parse("f2");
  CHECK(homology(two, 0, 1)[0].rank == 1);
  CHECK(homology(two, 0, 1)[1].rank == 1);
  two.ring = Ring::parse("q");
  CHECK(homology(two, 0, 1)[0].rank == 0);
  CHECK_THROWS(Ring::parse("f4"));
}
