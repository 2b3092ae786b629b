#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "lpo/chains.hpp"
#include "lpo/linalg.hpp"
#include "lpo/trees.hpp"

namespace lpo {

using Vec = std::vector<Q>;

// Finite-rank unital associative algebra over Q given by structure constants
// e_a e_b = Σ_c mul(a,b,c) e_c.
class FinAlgebra {
 public:
  FinAlgebra() = default;
  FinAlgebra(std::vector<std::string> basis, std::vector<Q> mul, Vec unit);

  int rank() const { return r_; }
  const std::vector<std::string>& basis() const { return names_; }
  const Q& mul(int a, int b, int c) const { return mul_[(a * r_ + b) * r_ + c]; }
  const std::vector<Q>& structureConstants() const { return mul_; }
  const Vec& unit() const { return unit_; }
  Vec basisVector(int a) const;

  Vec product(const Vec& x, const Vec& y) const;
  Vec productBasis(int a, int b) const;
  bool isCommutative() const;
  // index of the basis vector equal to the unit, or -1
  int unitIndex() const;

  // New basis e'_a = Σ_b S(b,a) e_b.
  FinAlgebra changeBasis(const QMatrix& S) const;

 private:
  int r_ = 0;
  std::vector<std::string> names_;
  std::vector<Q> mul_;
  Vec unit_;
};

// Unit-adapted copy (unit = e_0) and the matrix S with new e'_a = Σ S(b,a) e_b.
struct AdaptedAlgebra {
  FinAlgebra algebra;
  QMatrix change;
};
AdaptedAlgebra unitAdapted(const FinAlgebra& A);

class FrobeniusForm {
 public:
  FrobeniusForm() = default;
  FrobeniusForm(const FinAlgebra& A, QMatrix pairing);  // validates

  const QMatrix& pairing() const { return P_; }
  const QMatrix& inversePairing() const { return Pinv_; }
  Q pair(const Vec& x, const Vec& y) const;
  FrobeniusForm changeBasis(const FinAlgebra& transformed, const QMatrix& S) const;

 private:
  QMatrix P_, Pinv_;
};

FinAlgebra groundRing();
FinAlgebra dualNumbers();        // Q[x]/(x^2), basis 1, x
FinAlgebra matrixAlgebra2();     // M_2(Q), basis E11, E12, E21, E22
FinAlgebra groupAlgebraZ2();     // Q[Z/2], basis 1, g
FinAlgebra upperTriangular2();   // basis E11, E12, E22
FinAlgebra truncatedPolynomial(int n);  // Q[x]/(x^n)
FinAlgebra productAlgebra(int copies);  // Q × … × Q
FrobeniusForm groundRingForm();
FrobeniusForm dualNumbersForm();    // <1,x> = 1, <1,1> = <x,x> = 0
FrobeniusForm matrixTraceForm();
FrobeniusForm groupAlgebraZ2Form();

// Random invertible change of basis applied to a known algebra of rank 2 or 3.
FinAlgebra randomAlgebra(std::mt19937_64& rng, int rank);

FinAlgebra algebraFromJson(const std::string& text, QMatrix* pairing = nullptr);

// Multilinear map A^{⊗n} -> A as a coefficient tensor. The entry for basis
// arguments (a_1..a_n) and output coordinate c sits at
// ((a_1 r + a_2) r + … + a_n) r + c.
struct Cochain {
  int arity = 0;
  int rank = 0;
  std::vector<Q> data;

  Cochain() = default;
  Cochain(int n, int r);
  std::size_t tuples() const { return data.size() / (rank ? rank : 1); }
  Vec value(const std::vector<int>& args) const;
  Vec valueAt(std::size_t tupleIndex) const;
  bool isZero() const;
  bool operator==(const Cochain&) const = default;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator*(const Q& c) const;
};

std::size_t tupleCount(int r, int n);
std::vector<int> tupleDigits(std::size_t index, int r, int n);

Cochain zeroCochain(const FinAlgebra& A, int n);
Cochain identityCochain(const FinAlgebra& A);
Cochain multiplicationCochain(const FinAlgebra& A, int n);  // μ_n, μ_0 = unit
Cochain constantCochain(const FinAlgebra& A, const Vec& v);
Cochain randomCochain(const FinAlgebra& A, int n, std::mt19937_64& rng, bool normalized);
Vec evaluateVectors(const Cochain& f, const std::vector<Vec>& args);
bool isNormalized(const FinAlgebra& A, const Cochain& f);

Cochain composeCochains(const Cochain& f, int slot, const Cochain& g);
MultiplicativeOperad<Cochain> endomorphismOperad(const FinAlgebra& A);
Cochain hochschildDifferential(const FinAlgebra& A, const Cochain& f);

// Action of a combination of surjection generators of complexity <= 2.
Cochain actSurjection(const FinAlgebra& A, const ChainElement& u, const std::vector<Cochain>& fs);
Cochain actSurjection(const FinAlgebra& A, const Word& u, const std::vector<Cochain>& fs);
Cochain cup(const FinAlgebra& A, const Cochain& f, const Cochain& g);
Cochain cup1(const FinAlgebra& A, const Cochain& f, const Cochain& g);
Cochain brace(const FinAlgebra& A, const Cochain& f, const std::vector<Cochain>& gs);
// Σ_i (-1)^{(|g|-1)(i-1)} f ∘_i g, obtained from cup1 by a Koszul sign.
Cochain circleProduct(const FinAlgebra& A, const Cochain& f, const Cochain& g);
// f∘g - (-1)^{(|f|-1)(|g|-1)} g∘f
Cochain gerstenhaberBracket(const FinAlgebra& A, const Cochain& f, const Cochain& g);
Word braceWord(int m);  // 1 2 1 3 1 … 1 (m+1) 1

Cochain cyclicAction(const FinAlgebra& A, const FrobeniusForm& form, const Cochain& f);
Cochain bvOperator(const FinAlgebra& A, const FrobeniusForm& form, const Cochain& f);

// Normalized cochain complex in a unit-adapted basis (unit = e_0): degree n
// has coordinates indexed by tuples over {1..r-1} and an output in {0..r-1}.
class NormalizedComplex {
 public:
  NormalizedComplex(const FinAlgebra& adapted, int maxDegree);

  const FinAlgebra& algebra() const { return A_; }
  int maxDegree() const { return maxDegree_; }
  int dimension(int n) const;
  Vec coordinates(const Cochain& f) const;        // f must be normalized
  Cochain cochain(int n, const Vec& coords) const;
  const QMatrix& d(int n) const { return d_.at(n); }  // degree n -> n+1
  ChainComplex complex() const;
  bool isCoboundary(const Cochain& f) const;

 private:
  FinAlgebra A_;
  int maxDegree_;
  std::map<int, QMatrix> d_;
};

struct HHResult {
  FinAlgebra adapted;
  QMatrix change;
  std::vector<HomologyGroup> groups;
  std::map<int, std::vector<Cochain>> representatives;  // in the adapted basis
};

HHResult hochschildCohomology(const FinAlgebra& A, int maxDegree);

// Full Hochschild cochain complex Hom(A^{⊗n}, A) for degrees 0..maxDegree.
ChainComplex hochschildComplexFull(const FinAlgebra& A, int maxDegree);
// Cochains Hom(A^{⊗ C(n,m)}, A) of the pointed simplicial m-sphere.
ChainComplex higherHochschildComplex(const FinAlgebra& A, int m, int maxDegree);

}  // namespace lpo
