#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpo {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Word = std::vector<int>;
using Permutation = std::vector<int>;  // perm[i-1] = image of i, 1-based

// Subdivided integer-string: n+1 words over {1..k}; every colour occurs.
class LatticePath {
 public:
  LatticePath();  // the empty string: k = 0, n = 0
  explicit LatticePath(std::vector<Word> substrings);

  int colours() const { return k_; }
  int arityOut() const { return static_cast<int>(subs_.size()) - 1; }
  int multiplicity(int colour) const;
  int arityIn(int colour) const { return multiplicity(colour) - 1; }
  std::vector<int> arities() const;
  int letterCount() const;
  const std::vector<Word>& substrings() const { return subs_; }
  Word letters() const;

  auto operator<=>(const LatticePath&) const = default;

 private:
  int k_ = 0;
  std::vector<Word> subs_;
};

// Monotone map {0..source} -> {0..target}.
struct SimplicialOperator {
  int source = 0;
  int target = 0;
  std::vector<int> values;

  bool isMonotone() const;
  int operator()(int i) const { return values.at(i); }
  auto operator<=>(const SimplicialOperator&) const = default;

  static SimplicialOperator identity(int n);
  static SimplicialOperator coface(int n, int j);        // [n-1] -> [n], skips j
  static SimplicialOperator codegeneracy(int n, int j);  // [n+1] -> [n], hits j twice
};

// g after f
SimplicialOperator composeOps(const SimplicialOperator& g, const SimplicialOperator& f);

// Morphism of ΔΣ₊: set map {0..p-1} -> {0..q-1} with totally ordered fibers.
// p = 0 or q = 0 encode the empty ordinal [-1].
struct DeltaSigmaMap {
  int sourceSize = 0;
  std::vector<std::vector<int>> fibers;  // one per target element

  int targetSize() const { return static_cast<int>(fibers.size()); }
  std::vector<int> setMap() const;
  auto operator<=>(const DeltaSigmaMap&) const = default;

  static DeltaSigmaMap identity(int size);
};

DeltaSigmaMap composeDS(const DeltaSigmaMap& g, const DeltaSigmaMap& f);
DeltaSigmaMap joinDS(const std::vector<DeltaSigmaMap>& parts);

// Domain element of [n₁]*…*[n_k]: (colour, index within colour).
struct JoinElement {
  int colour = 0;
  int index = 0;
  auto operator<=>(const JoinElement&) const = default;
};

struct JoinMorphism {
  std::vector<int> sourceArities;                 // n_1..n_k
  std::vector<std::vector<JoinElement>> fibers;   // n+1 fibers, string order

  int targetArity() const { return static_cast<int>(fibers.size()) - 1; }
  auto operator<=>(const JoinMorphism&) const = default;
};

JoinMorphism toJoinMorphism(const LatticePath& x);
LatticePath fromJoinMorphism(const JoinMorphism& f);
DeltaSigmaMap toDeltaSigma(const JoinMorphism& f);
JoinMorphism fromDeltaSigma(const DeltaSigmaMap& f, const std::vector<int>& sourceArities);

LatticePath parsePath(std::string_view text);
std::string formatPath(const LatticePath& x);
std::string formatWord(const Word& w);
std::string formatColour(int c);

LatticePath compose(const LatticePath& x, int slot, const LatticePath& y);
LatticePath identityPath(int n);
std::vector<SimplicialOperator> components(const LatticePath& x);

// φ: [n+1] -> [m+1] bipointed, given by its values; returns ψ: [m] -> [n].
SimplicialOperator joyalDual(const std::vector<int>& phi);
std::vector<int> joyalDualInverse(const SimplicialOperator& psi);

Permutation identityPermutation(int k);
bool isPermutation(const Permutation& p);
Permutation composePermutations(const Permutation& a, const Permutation& b);  // a after b
Permutation composePermutationOperad(const Permutation& s, int slot, const Permutation& t);
LatticePath symAction(const Permutation& rho, const LatticePath& x);

LatticePath projection(const LatticePath& x, int i, int j);

struct ComplexityTable {
  int k = 0;
  std::vector<int> table;  // row-major k×k, only i<j meaningful
  int max = 0;
  int at(int i, int j) const;
};

int switches(const Word& w);
ComplexityTable complexityTable(const LatticePath& x);
int complexity(const LatticePath& x);

LatticePath inputFace(const LatticePath& x, int colour, int j);
LatticePath inputDegeneracy(const LatticePath& x, int colour, int j);
LatticePath outputCoface(const LatticePath& x, int j);
LatticePath outputCodegeneracy(const LatticePath& x, int j);

struct L1Decomposition {
  LatticePath monotone;  // colours in order of first appearance
  Permutation permutation;
};

L1Decomposition decomposeL1(const LatticePath& x);
LatticePath recomposeL1(const L1Decomposition& d);

void forEachPath(const std::vector<int>& arities, int n,
                 const std::function<void(const LatticePath&)>& visit);
std::vector<LatticePath> enumeratePaths(const std::vector<int>& arities, int n);
std::uint64_t pathCount(const std::vector<int>& arities, int n);

// Every path with at most maxLetters letters and at most maxBars bars,
// all colour counts, in deterministic order.
std::vector<LatticePath> smallPaths(int maxLetters, int maxBars);

// All words over {1..k} using every colour, of the given length.
std::vector<Word> surjectiveWords(int length, int k);

}  // namespace lpo
