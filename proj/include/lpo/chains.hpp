#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lpo/linalg.hpp"
#include "lpo/paths.hpp"

namespace lpo {

// Formal combination of nondegenerate subdivided strings. modulus 0 means
// integer coefficients, otherwise coefficients live in Z/modulus.
class ChainElement {
 public:
  ChainElement() = default;
  explicit ChainElement(long modulus) : modulus_(modulus) {}
  static ChainElement generator(const LatticePath& x, long modulus = 0);

  void add(const LatticePath& x, long long c);
  const std::map<LatticePath, long long>& terms() const { return terms_; }
  long modulus() const { return modulus_; }
  bool isZero() const { return terms_.empty(); }
  long long coefficient(const LatticePath& x) const;

  ChainElement& operator+=(const ChainElement& o);
  ChainElement& operator-=(const ChainElement& o);
  ChainElement operator+(const ChainElement& o) const;
  ChainElement operator-(const ChainElement& o) const;
  ChainElement operator*(long long c) const;
  bool operator==(const ChainElement& o) const = default;

 private:
  long long normalize(long long c) const;
  std::map<LatticePath, long long> terms_;
  long modulus_ = 0;
};

// No two equal letters adjacent inside a substring.
bool isNondegenerate(const LatticePath& x);
int chainDegree(const LatticePath& x);  // letters - colours

ChainElement boundary(const ChainElement& e);
ChainElement boundary(const LatticePath& x);

struct ExpansionTerm {
  LatticePath term;
  int sign = 1;
  std::vector<int> cuts;  // t_0 = 0 <= t_1 <= … <= t_L = n
};

// The n-cut overlapping decompositions of a bar-free word, with signs.
std::vector<ExpansionTerm> expansionTerms(const Word& u, int n);
int shuffleSign(const Word& u, const std::vector<int>& cuts);
ChainElement cofaceExpansion(const ChainElement& u, int n);

ChainElement surjCompose(const ChainElement& u, int slot, const ChainElement& v);
ChainElement surjCompose(const Word& u, int slot, const Word& v);
// Relabel colours by rho with the Koszul sign of permuting the colour blocks.
ChainElement symActionChain(const Permutation& rho, const ChainElement& u);
int complexityFiltration(const ChainElement& e);

// Bar-free nondegenerate words over exactly k colours, length <= maxLetters.
std::vector<Word> surjectionGenerators(int maxLetters, int k);
// Nondegenerate subdivided strings with <= maxLetters letters and <= maxBars bars.
std::vector<LatticePath> subdividedGenerators(int maxLetters, int maxBars);

ChainElement parseChain(std::string_view text, long modulus = 0);
std::string formatChain(const ChainElement& e);        // "+2*121 -1*12|21"
std::string formatChainPretty(const ChainElement& e);  // "1|121 - 12|21"

enum class RingKind { Integers, Rationals, Prime };
struct Ring {
  RingKind kind = RingKind::Integers;
  long p = 0;
  Field field() const;
  std::string name() const;
  static Ring parse(std::string_view text);
};

// Finite graded complex. For a chain complex d maps degree n to n-1; for a
// cochain complex (cohomological = true) it maps n to n+1. differential[n]
// has rows indexed by the target basis and columns by the source basis.
struct ChainComplex {
  Ring ring;
  bool cohomological = false;
  std::map<int, std::vector<std::string>> basis;
  std::map<int, QMatrix> differential;

  int dimension(int degree) const;
  int targetDegree(int degree) const { return cohomological ? degree + 1 : degree - 1; }
  QMatrix d(int degree) const;  // zero matrix of the right shape if absent
  bool squaresToZero() const;
};

struct HomologyGroup {
  int degree = 0;
  int rank = 0;
  std::vector<Z> torsion;  // elementary divisors > 1 (integers only)
};

std::vector<HomologyGroup> homology(const ChainComplex& c, int lo, int hi);
std::string formatHomology(const std::vector<HomologyGroup>& h);

}  // namespace lpo
