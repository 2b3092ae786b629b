#include <doctest.h>

#include "lpo/chains.hpp"
#include "lpo/cyclic.hpp"
#include "lpo/hochschild.hpp"
#include "lpo/trees.hpp"

using namespace lpo;

namespace {

std::vector<int> ranks(const std::vector<HomologyGroup>& hs) {
  std::vector<int> out;
  for (const auto& h : hs) out.push_back(h.rank);
  return out;
}

std::vector<int> fullRanks(const FinAlgebra& A, int maxDegree) {
  auto hs = homology(hochschildComplexFull(A, maxDegree + 1), 0, maxDegree);
  return ranks(hs);
}

// m(m(a,b),c) - m(a,m(b,c)) evaluated coordinate by coordinate.
Cochain associatorByHand(const Cochain& m) {
  const int r = m.rank;
  Cochain out(3, r);
  for (std::size_t t = 0; t < tupleCount(r, 3); ++t) {
    auto a = tupleDigits(t, r, 3);
    Vec ab = m.value({a[0], a[1]});
    Vec bc = m.value({a[1], a[2]});
    Vec v(r, Q(0));
    for (int s = 0; s < r; ++s) {
      Vec left = m.value({s, a[2]});
      Vec right = m.value({a[0], s});
      for (int c = 0; c < r; ++c) v[c] += ab[s] * left[c] - bc[s] * right[c];
    }
    for (int c = 0; c < r; ++c) out.data[t * r + c] = v[c];
  }
  return out;
}

}  // namespace

TEST_CASE("algebras validate") {
  CHECK(dualNumbers().isCommutative());
  CHECK_FALSE(matrixAlgebra2().isCommutative());
  CHECK(dualNumbers().unitIndex() == 0);
  CHECK(truncatedPolynomial(3).rank() == 3);
  CHECK_THROWS(FinAlgebra({"a", "b"}, std::vector<Q>(8, Q(1)), Vec{1, 0}));

  FinAlgebra j = algebraFromJson(
      R"({"rank":2,"basis":["1","x"],"unit":[1,0],"mul":[[[1,0],[0,1]],[[0,1],[0,0]]]})");
  CHECK(j.structureConstants() == dualNumbers().structureConstants());
  CHECK_THROWS_AS(algebraFromJson(R"({"rank":2})"), ParseError);
  CHECK_THROWS_AS(algebraFromJson("not json"), ParseError);
}

TEST_CASE("endomorphism operad") {
  for (const auto& A : {dualNumbers(), matrixAlgebra2()}) {
    Cochain m2 = multiplicationCochain(A, 2), m3 = multiplicationCochain(A, 3);
    CHECK(composeCochains(m2, 1, m2) == m3);
    CHECK(composeCochains(m2, 2, m2) == m3);
    CHECK(composeCochains(m2, 1, identityCochain(A)) == m2);
    CHECK(composeCochains(identityCochain(A), 1, m2) == m2);
  }
}

TEST_CASE("tree evaluation in the endomorphism operad") {
  std::mt19937_64 rng(7);
  FinAlgebra A = dualNumbers();
  auto P = endomorphismOperad(A);
  Cochain f = randomCochain(A, 1, rng, false), g = randomCochain(A, 1, rng, false);
  CHECK(treeEvaluate(parsePath("1|1"), {f}, P) == f);
  CHECK(treeEvaluate(parsePath("12|21"), {f, g}, P) == composeCochains(f, 1, g));
  Cochain a = randomCochain(A, 0, rng, false), b = randomCochain(A, 0, rng, false);
  CHECK(treeEvaluate(parsePath("12"), {a, b}, P) == constantCochain(A, A.product(a.data, b.data)));

  // evaluate(x o_i y) = evaluate(x) with slot i fed evaluate(y)
  for (const auto& x : smallPaths(4, 1))
    for (const auto& y : smallPaths(3, 1)) {
      if (complexity(x) > 2 || complexity(y) > 2) continue;
      for (int i = 1; i <= x.colours(); ++i) {
        if (x.arityIn(i) != y.arityOut()) continue;
        LatticePath z = compose(x, i, y);
        if (complexity(z) > 2) continue;
        std::vector<Cochain> ops;
        for (int c = 1; c <= z.colours(); ++c) ops.push_back(randomCochain(A, z.arityIn(c), rng, false));
        std::vector<Cochain> inner(ops.begin() + (i - 1), ops.begin() + (i - 1) + y.colours());
        std::vector<Cochain> outer(ops.begin(), ops.begin() + (i - 1));
        outer.push_back(treeEvaluate(y, inner, P));
        outer.insert(outer.end(), ops.begin() + (i - 1) + y.colours(), ops.end());
        CHECK(treeEvaluate(z, ops, P) == treeEvaluate(x, outer, P));
      }
    }
}

TEST_CASE("Hochschild differential") {
  for (const auto& A : {dualNumbers(), matrixAlgebra2(), upperTriangular2()}) {
    CHECK(hochschildDifferential(A, identityCochain(A)) == multiplicationCochain(A, 2));
    CHECK(hochschildDifferential(A, constantCochain(A, A.unit())).isZero());
  }
  std::mt19937_64 rng(11);
  for (int rank = 2; rank <= 3; ++rank)
    for (int trial = 0; trial < 3; ++trial) {
      FinAlgebra A = randomAlgebra(rng, rank);
      for (int n = 0; n <= 3; ++n) {
        Cochain f = randomCochain(A, n, rng, false);
        CHECK(hochschildDifferential(A, hochschildDifferential(A, f)).isZero());
      }
    }
}

TEST_CASE("surjection action") {
  FinAlgebra A = dualNumbers();
  Cochain f(1, 2);
  f.data = {0, 0, 1, 0};  // f(1) = 0, f(x) = 1
  CHECK(cup(A, f, f).value({1, 1}) == Vec{1, 0});
  CHECK(cup(A, f, f).value({0, 1}) == Vec{0, 0});

  std::mt19937_64 rng(3);
  Cochain g = randomCochain(A, 1, rng, false), h = randomCochain(A, 1, rng, false);
  CHECK(actSurjection(A, Word{1, 2, 1}, {g, h}) == composeCochains(g, 1, h));
  CHECK(actSurjection(A, Word{1}, {g}) == g);
  CHECK(cup(A, g, h) == actSurjection(A, Word{1, 2}, {g, h}));
  CHECK(brace(A, g, {h}) == actSurjection(A, braceWord(1), {g, h}));
  CHECK(formatWord(braceWord(2)) == "12131");
  CHECK_THROWS(actSurjection(A, Word{1, 2, 1, 2}, {g, h}));
}

TEST_CASE("surjection action respects composition") {
  std::mt19937_64 rng(5);
  FinAlgebra A = dualNumbers();
  int n = 0;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l)
      for (const auto& a : surjectionGenerators(3, k))
        for (const auto& b : surjectionGenerators(3, l))
          for (int i = 1; i <= k; ++i) {
            ChainElement u = ChainElement::generator(LatticePath({a}));
            ChainElement v = ChainElement::generator(LatticePath({b}));
            ChainElement uv = surjCompose(u, i, v);
            if (!uv.isZero() && complexityFiltration(uv) > 2) continue;
            std::vector<Cochain> fs;
            int before = 0;
            for (int c = 1; c <= k + l - 1; ++c) {
              fs.push_back(randomCochain(A, 1 + static_cast<int>(rng() % 2), rng, false));
              if (c < i) before += fs.back().arity;
            }
            std::vector<Cochain> inner(fs.begin() + (i - 1), fs.begin() + (i - 1) + l);
            std::vector<Cochain> outer(fs.begin(), fs.begin() + (i - 1));
            outer.push_back(actSurjection(A, v, inner));
            outer.insert(outer.end(), fs.begin() + (i - 1) + l, fs.end());
            const int dv = chainDegree(LatticePath({b}));
            Cochain rhs = actSurjection(A, u, outer) * Q((dv * before) % 2 ? -1 : 1);
            CHECK(actSurjection(A, uv, fs) == rhs);
            ++n;
          }
  CHECK(n > 20);
}

TEST_CASE("Gerstenhaber bracket detects associativity") {
  for (const auto& A : {dualNumbers(), matrixAlgebra2()}) {
    Cochain m = multiplicationCochain(A, 2);
    CHECK(gerstenhaberBracket(A, m, m).isZero());
  }
  std::mt19937_64 rng(13);
  FinAlgebra A = dualNumbers();
  for (int t = 0; t < 5; ++t) {
    Cochain m = multiplicationCochain(A, 2) + randomCochain(A, 2, rng, false);
    Cochain expected = associatorByHand(m) * Q(2);
    CHECK(gerstenhaberBracket(A, m, m) == expected);
    CHECK(circleProduct(A, m, m) == associatorByHand(m));
  }
}

TEST_CASE("Hochschild cohomology") {
  CHECK(ranks(hochschildCohomology(groundRing(), 3).groups) == std::vector<int>{1, 0, 0, 0});
  CHECK(ranks(hochschildCohomology(matrixAlgebra2(), 3).groups) == std::vector<int>{1, 0, 0, 0});
  // HH^0 is the centre, which is all of Q[x]/x^2
  CHECK(ranks(hochschildCohomology(dualNumbers(), 4).groups) == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(ranks(hochschildCohomology(groupAlgebraZ2(), 3).groups) == std::vector<int>{2, 0, 0, 0});
  CHECK(ranks(hochschildCohomology(upperTriangular2(), 3).groups) == std::vector<int>{1, 0, 0, 0});

  for (const auto& A : {dualNumbers(), groupAlgebraZ2(), upperTriangular2(), truncatedPolynomial(3)})
    CHECK(ranks(hochschildCohomology(A, 3).groups) == fullRanks(A, 3));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 2; ++t) {
    FinAlgebra A = randomAlgebra(rng, 2);
    CHECK(ranks(hochschildCohomology(A, 3).groups) == fullRanks(A, 3));
  }
}

TEST_CASE("normalized complex") {
  AdaptedAlgebra ad = unitAdapted(dualNumbers());
  NormalizedComplex N(ad.algebra, 4);
  CHECK(N.complex().squaresToZero());
  CHECK(N.dimension(0) == 2);
  CHECK(N.dimension(3) == 2);
  std::mt19937_64 rng(19);
  Cochain f = randomCochain(ad.algebra, 2, rng, true);
  CHECK(N.cochain(2, N.coordinates(f)) == f);
  CHECK(N.isCoboundary(hochschildDifferential(ad.algebra, f)));
}

TEST_CASE("cyclic action on cochains") {
  FinAlgebra A = dualNumbers();
  FrobeniusForm form = dualNumbersForm();
  CHECK(cyclicAction(A, form, identityCochain(A)) == identityCochain(A));
  for (int n = 1; n <= 4; ++n) CHECK(cyclicAction(A, form, multiplicationCochain(A, n)) == multiplicationCochain(A, n));
  std::mt19937_64 rng(23);
  for (int n = 0; n <= 4; ++n) {
    Cochain f = randomCochain(A, n, rng, false);
    Cochain g = f;
    for (int s = 0; s <= n; ++s) g = cyclicAction(A, form, g);
    CHECK(g == f);
  }
  CHECK_THROWS(FrobeniusForm(A, QMatrix(2, 2)));

  auto P = endomorphismOperad(A);
  CyclicOperad<Cochain> C;
  C.compose = P.compose;
  C.arity = P.arity;
  C.unit = P.unit;
  C.tau = [&](const Cochain& f) { return cyclicAction(A, form, f); };
  C.equal = [](const Cochain& a, const Cochain& b) { return a == b; };
  std::vector<Cochain> elements;
  for (int n = 0; n <= 2; ++n) elements.push_back(randomCochain(A, n, rng, false));
  CHECK(cyclicOperadAxiomCheck(C, elements).ok);
}

TEST_CASE("BV operator") {
  FinAlgebra A = dualNumbers();
  FrobeniusForm form = dualNumbersForm();
  std::mt19937_64 rng(29);
  CHECK(bvOperator(A, form, randomCochain(A, 0, rng, true)).isZero());
  for (int n = 1; n <= 4; ++n) {
    Cochain f = randomCochain(A, n, rng, true);
    Cochain df = bvOperator(A, form, f);
    CHECK(df.arity == n - 1);
    CHECK(bvOperator(A, form, df).isZero());
    Cochain anti = bvOperator(A, form, hochschildDifferential(A, f)) + hochschildDifferential(A, df);
    CHECK(anti.isZero());
  }
  CHECK_THROWS_AS(bvOperator(A, form, randomCochain(A, 2, rng, false)), DomainError);
}

TEST_CASE("higher Hochschild complexes") {
  FinAlgebra A = dualNumbers();
  ChainComplex one = higherHochschildComplex(A, 1, 4);
  ChainComplex full = hochschildComplexFull(A, 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(one.dimension(n) == full.dimension(n));
    CHECK(one.d(n) == full.d(n));
  }
  ChainComplex two = higherHochschildComplex(A, 2, 4);
  CHECK(two.squaresToZero());
  CHECK(two.dimension(0) == 2);
  CHECK(two.dimension(1) == 2);
  CHECK(two.dimension(2) == 4);
  CHECK(two.dimension(3) == 16);
  CHECK_THROWS(higherHochschildComplex(A, 0, 3));
}
