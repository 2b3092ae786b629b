#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpo/chains.hpp"
#include "lpo/linalg.hpp"
#include "lpo/paths.hpp"

namespace lpo {

// Simplex x·s of dimension s.source, with x nondegenerate and s a monotone
// surjection onto [dim x].
struct Simplex {
  int id = 0;
  SimplicialOperator degeneracy;

  int dimension() const { return degeneracy.source; }
  bool isNondegenerate() const { return degeneracy.source == degeneracy.target; }
  bool operator==(const Simplex&) const = default;
};

class SimplicialSet {
 public:
  struct Cell {
    std::string label;
    int dim = 0;
    std::vector<Simplex> faces;  // d_0 … d_dim
  };

  // Checks face data and the simplicial identities.
  explicit SimplicialSet(std::vector<Cell> cells);
  SimplicialSet() = default;

  const std::vector<Cell>& cells() const { return cells_; }
  int dimension() const;
  const std::vector<int>& ofDimension(int n) const;  // cell ids
  int positionInDimension(int id) const { return position_.at(id); }
  int find(const std::string& label) const;

  Simplex nondegenerate(int id) const;
  // x·α for a monotone α: [p] -> [dim x].
  Simplex apply(const Simplex& x, const SimplicialOperator& alpha) const;
  Simplex face(const Simplex& x, int j) const;

 private:
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> byDim_;
  std::vector<int> position_;
};

SimplicialSet simplicialSetFromJson(const std::string& text);
SimplicialSet standardSimplex(int n);
SimplicialSet sphere(int m);
SimplicialSet realProjectivePlane();  // 6 vertices, 10 triangles
SimplicialSet torus();                // 3×3 grid, 18 triangles
// Ordered simplicial complex generated by the given vertex lists.
SimplicialSet fromFacets(const std::vector<std::vector<int>>& facets);
SimplicialSet builtinSpace(const std::string& name);

// Normalized cochain: one coefficient per nondegenerate simplex of `degree`.
struct SimplicialCochain {
  int degree = 0;
  std::vector<Q> values;
  bool operator==(const SimplicialCochain&) const = default;
};

SimplicialCochain zeroCochain(const SimplicialSet& X, int degree);
Q evaluate(const SimplicialSet& X, const SimplicialCochain& f, const Simplex& y);
SimplicialCochain coboundary(const SimplicialSet& X, const SimplicialCochain& f,
                             const Field& F = Field::rationals());
SimplicialCochain reduce(const SimplicialCochain& f, const Field& F);
SimplicialCochain add(const SimplicialCochain& a, const SimplicialCochain& b, const Q& scale = 1);

// Chain complex N_*(X) with boundary Σ(-1)^j d_j.
ChainComplex normalizedChains(const SimplicialSet& X, Ring ring);
// Cochain complex N^*(X) with coboundary Σ(-1)^j d_j^*.
ChainComplex normalizedCochains(const SimplicialSet& X, Ring ring);
bool isCoboundary(const SimplicialSet& X, const SimplicialCochain& f, const Field& F);
// Cocycles representing a basis of H^n(X; F).
std::vector<SimplicialCochain> cohomologyBasis(const SimplicialSet& X, int n, const Field& F);

// Surjection-operad action on normalized cochains.
SimplicialCochain cochainAction(const SimplicialSet& X, const ChainElement& u,
                                const std::vector<SimplicialCochain>& fs);
SimplicialCochain cochainAction(const SimplicialSet& X, const Word& u,
                                const std::vector<SimplicialCochain>& fs);
Word cupIWord(int i);  // 1212… of length i+2

// Sq^i on a mod-2 cocycle of degree p: the class of f ∪_{p-i} f.
SimplicialCochain steenrodSquare(const SimplicialSet& X, int i, const SimplicialCochain& f);
// Mod-2 Bockstein of a mod-2 cocycle via an integral lift.
SimplicialCochain bockstein(const SimplicialSet& X, const SimplicialCochain& f);

// (S^m)_n: a surjection [n] -> [m] or, when empty, the base point.
using SphereSimplex = std::optional<SimplicialOperator>;
std::vector<SphereSimplex> sphereSimplices(int m, int n);
// x_i^*(y) for every colour; nullopt entries are the base point.
std::vector<SphereSimplex> coalgebraComponents(const LatticePath& x, const SphereSimplex& y);
// True iff at most one component is off the base point.
bool coalgebraCheck(int m, const LatticePath& x, const SphereSimplex& y);

// Pullback along a map given by the images of the nondegenerate simplices.
struct SimplicialMap {
  const SimplicialSet* source = nullptr;
  const SimplicialSet* target = nullptr;
  std::vector<Simplex> image;  // indexed by source cell id
};
SimplicialCochain pullback(const SimplicialMap& phi, const SimplicialCochain& f);
// Δ[n] -> S^n collapsing the boundary.
SimplicialMap collapseBoundary(const SimplicialSet& simplex, const SimplicialSet& sphere);

}  // namespace lpo
