#include <doctest.h>

#include <set>

#include "lpo/paths.hpp"
#include "lpo/trees.hpp"

using namespace lpo;

TEST_CASE("tree shapes") {
  CHECK(formatTree(pathToTree(parsePath("12|21"))) == "(v1 (v2 [slot]))");
  CHECK(formatTree(pathToTree(parsePath("12"))) == "(u (v1) (v2))");
  CHECK(formatTree(pathToTree(parsePath("1|1"))) == "(v1 [slot])");
  CHECK(formatPath(treeToPath(parseTree("(v1)"))) == "1");
  CHECK_THROWS(pathToTree(parsePath("1212")));
}

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(parseTree("(v2)"), ParseError);
  CHECK_THROWS_AS(parseTree("(v1 (v1))"), ParseError);
  CHECK_THROWS_AS(parseTree("(v1"), ParseError);
}

TEST_CASE("paths of complexity at most two round trip") {
  int n = 0;
  for (const auto& x : smallPaths(5, 3)) {
    if (complexity(x) > 2) continue;
    LabelledPlanarTree t = pathToTree(x);
    CHECK(treeToPath(t) == x);
    CHECK(parseTree(formatTree(t)) == t);
    ++n;
  }
  CHECK(n > 1000);
}

TEST_CASE("trees round trip") {
  auto trees = enumerateTrees(3, 2, 8);
  CHECK(trees.size() > 50);
  std::set<LatticePath> images;
  for (const auto& t : trees) {
    LatticePath x = treeToPath(t);
    CHECK(complexity(x) <= 2);
    CHECK(pathToTree(x) == t);
    images.insert(x);
  }
  CHECK(images.size() == trees.size());
}
