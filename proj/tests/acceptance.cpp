// One PASS/FAIL line per acceptance criterion.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "lpo/cgo.hpp"
#include "lpo/chains.hpp"
#include "lpo/cyclic.hpp"
#include "lpo/hochschild.hpp"
#include "lpo/paths.hpp"
#include "lpo/simplicial.hpp"
#include "support/checks.hpp"

using namespace lpo;
using lpo::checks::Tally;

namespace {

// Ranges and limits for the exhaustive criteria.
constexpr checks::PathRange kOperadRange{4, 2};
constexpr int kAssociativityTotalLetters = 7;
constexpr checks::PathRange kCyclicRange{4, 1};
constexpr int kCyclicAssociativityTotalLetters = 7;
constexpr int kTreeLetters = 5, kTreeBars = 3;
constexpr int kBoundaryLetters = 5, kBoundaryBars = 3;
constexpr int kLeibnizLetters = 4;
constexpr int kDeligneArity = 3;
constexpr int kDeligneTrials = 2;
constexpr std::uint64_t kSeed = 20240611;
constexpr int kCoalgebraLetters = 5, kCoalgebraBars = 3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string join(const std::vector<Tally>& ts) {
  std::string s;
  for (const auto& t : ts) s += (s.empty() ? "" : "; ") + t.summary();
  return s;
}

bool allOk(const std::vector<Tally>& ts) {
  for (const auto& t : ts)
    if (!t.ok()) return false;
  return true;
}

Outcome criterion1() {
  std::string got = formatPath(compose(parsePath("1||12|3|2"), 2, parsePath("3|12")));
  return {got == "1||14|5|23", "1||12|3|2 o_2 3|12 = " + got};
}

Outcome criterion2() {
  std::string got =
      formatCyclicPath(composeCyclic(parseCyclicPath("1|^2^1|^3|123"), 1, parseCyclicPath("2|^1|^212")));
  return {got == "^212|^32|^4|^134", "1|^2^1|^3|123 o_1 2|^1|^212 = " + got};
}

Outcome criterion3() {
  ChainElement e = cofaceExpansion(ChainElement::generator(parsePath("121")), 1);
  ChainElement target = parseChain("1|121 + 12|21 + 121|1");
  bool pass = e == target || e == target * -1;
  return {pass, "E_1(121) = " + formatChainPretty(e) + ", required +-(1|121 + 12|21 + 121|1)"};
}

Outcome criterion4() {
  std::vector<Tally> ts{
      checks::unitLaws(kOperadRange),
      checks::associativity(kOperadRange, kAssociativityTotalLetters),
      checks::equivariance(kOperadRange),
      checks::filtrationClosure(kOperadRange),
      checks::cyclicUnitLaws(kCyclicRange),
      checks::cyclicAssociativity(kCyclicRange, kCyclicAssociativityTotalLetters),
      checks::cyclicEquivariance(kCyclicRange),
      checks::cyclicFiltrationClosure(kCyclicRange),
  };
  return {allOk(ts), join(ts)};
}

Outcome criterion5() {
  Tally exact = checks::ctotMorphism(kOperadRange);
  Tally lax = checks::ctotLax(kOperadRange);
  return {exact.ok(), exact.summary() + "; " + lax.summary()};
}

Outcome criterion6() {
  Tally t = checks::treeRoundTrip(kTreeLetters, kTreeBars);
  return {t.ok(), t.summary()};
}

Outcome criterion7() {
  std::vector<Tally> ts{checks::boundarySquaresToZero(kBoundaryLetters, kBoundaryBars),
                        checks::leibniz(kLeibnizLetters), checks::chainFiltrationClosure(kLeibnizLetters)};
  return {allOk(ts), join(ts)};
}

Outcome criterion8() {
  std::mt19937_64 rng(kSeed);
  std::vector<std::pair<std::string, FinAlgebra>> algebras{{"Q[x]/x^2", dualNumbers()}};
  for (int i = 0; i < 2; ++i) algebras.emplace_back("random rank 2 #" + std::to_string(i), randomAlgebra(rng, 2));
  for (int i = 0; i < 2; ++i) algebras.emplace_back("random rank 3 #" + std::to_string(i), randomAlgebra(rng, 3));
  std::vector<Tally> all;
  for (const auto& [name, A] : algebras) {
    auto rep = checks::deligneIdentities(A, kDeligneArity, rng, kDeligneTrials);
    for (Tally t : {rep.cupAssociativity, rep.homotopyCommutativity, rep.bracketAntisymmetry, rep.jacobiator}) {
      t.name = name + " " + t.name;
      all.push_back(t);
    }
  }
  return {allOk(all), join(all)};
}

Outcome criterion9() {
  auto dual = hochschildCohomology(dualNumbers(), 4);
  auto m2 = hochschildCohomology(matrixAlgebra2(), 3);
  std::ostringstream os;
  bool pass = true;
  os << "HH(Q[x]/x^2):";
  for (const auto& g : dual.groups) {
    os << " " << g.rank;
    pass = pass && g.rank == 1;
  }
  os << " (required 1 1 1 1 1); HH(M_2(Q)):";
  for (const auto& g : m2.groups) {
    os << " " << g.rank;
    pass = pass && g.rank == (g.degree == 0 ? 1 : 0);
  }
  os << " (required 1 0 0 0)";
  return {pass, os.str()};
}

Outcome criterion10() {
  std::mt19937_64 rng(kSeed + 10);
  auto rep = checks::bvSuite(dualNumbers(), dualNumbersForm(), 4, 3, rng);
  std::vector<Tally> ts{rep.cyclicAxioms, rep.squareZero, rep.anticommutes, rep.bvIdentity};
  return {allOk(ts), join(ts)};
}

Outcome criterion11() {
  std::vector<Tally> ts;
  for (int m = 0; m <= 2; ++m) ts.push_back(checks::sphereCoalgebra(m, kCoalgebraLetters, kCoalgebraBars));
  // a path of complexity 2 whose components both hit the top cell of S^1
  LatticePath x = parsePath("12|21");
  auto y = sphereSimplices(1, 1).back();
  bool witness = complexity(x) > 1 && !coalgebraCheck(1, x, y);
  std::string detail = join(ts) + "; witness 12|21 (c = " + std::to_string(complexity(x)) + ") on S^1: " +
                       (witness ? "two components off the base point" : "no failure");
  return {allOk(ts) && witness, detail};
}

Outcome criterion12() {
  const Field F2 = Field::prime(2);
  SimplicialSet rp2 = realProjectivePlane();
  auto h1 = cohomologyBasis(rp2, 1, F2);
  bool pass = h1.size() == 1;
  std::ostringstream os;
  os << "H^1(RP^2;F2) rank " << h1.size();
  if (pass) {
    auto sq = steenrodSquare(rp2, 1, h1[0]);
    auto beta = bockstein(rp2, h1[0]);
    bool nonzero = !isCoboundary(rp2, sq, F2);
    bool agrees = isCoboundary(rp2, reduce(add(sq, beta, -1), F2), F2);
    os << ", Sq^1 " << (nonzero ? "nonzero" : "zero") << ", " << (agrees ? "equals" : "differs from")
       << " the Bockstein";
    pass = nonzero && agrees;
  }
  SimplicialSet s1 = sphere(1);
  auto c1 = cohomologyBasis(s1, 1, F2);
  bool s1zero = c1.size() == 1 && isCoboundary(s1, steenrodSquare(s1, 1, c1[0]), F2);
  os << "; Sq^1 on H^1(S^1;F2) " << (s1zero ? "zero" : "nonzero");
  return {pass && s1zero, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)");
  CLI11_PARSE(app, argc, argv);

  Outcome (*criteria[])() = {criterion1, criterion2, criterion3,  criterion4,  criterion5,  criterion6,
                             criterion7, criterion8, criterion9, criterion10, criterion11, criterion12};
  bool all = true;
  for (int n = 1; n <= 12; ++n) {
    if (only && n != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << std::fixed
              << std::setprecision(2) << secs << "s): " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
