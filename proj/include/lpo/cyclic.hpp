#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lpo/paths.hpp"

namespace lpo {

// Lattice path with one distinguished occurrence per colour. Stored as a join
// morphism whose components are monotone up to rotation: reading the indices
// of colour i in string order gives r, r+1, …, n_i, 0, …, r-1. The marked
// occurrence is the one carrying index 0.
class CyclicLatticePath {
 public:
  CyclicLatticePath() = default;
  explicit CyclicLatticePath(JoinMorphism form);
  // markers[i-1] = occurrence position (0-based, string order) of the mark
  CyclicLatticePath(const LatticePath& base, const std::vector<int>& markers);
  static CyclicLatticePath plain(const LatticePath& base);

  const JoinMorphism& form() const { return form_; }
  LatticePath base() const;
  std::vector<int> markers() const;
  int colours() const { return static_cast<int>(form_.sourceArities.size()); }
  int arityOut() const { return form_.targetArity(); }

  auto operator<=>(const CyclicLatticePath&) const = default;

 private:
  JoinMorphism form_;
};

CyclicLatticePath parseCyclicPath(std::string_view text);
std::string formatCyclicPath(const CyclicLatticePath& x);

CyclicLatticePath composeCyclic(const CyclicLatticePath& x, int slot, const CyclicLatticePath& y);
// The same composite computed as a composite of ΔΣ maps.
CyclicLatticePath composeCyclicDS(const CyclicLatticePath& x, int slot,
                                  const CyclicLatticePath& y);
CyclicLatticePath cyclicIdentity(int n);
CyclicLatticePath symActionCyclic(const Permutation& rho, const CyclicLatticePath& x);

// Rotation of {0..n} by `steps` generator applications; the generator sends
// the last substring to the front.
CyclicLatticePath outputRotate(int steps, const CyclicLatticePath& x);
int cyclicComplexity(const CyclicLatticePath& x);

// Every marking of every path in smallPaths(maxLetters, maxBars).
std::vector<CyclicLatticePath> smallCyclicPaths(int maxLetters, int maxBars);

// Planar cyclic operad presented by its operations on a finite test set.
template <class T>
struct CyclicOperad {
  std::function<T(const T&, int, const T&)> compose;  // 1-based slot
  std::function<int(const T&)> arity;
  std::function<T(const T&)> tau;
  std::function<T()> unit;
  std::function<bool(const T&, const T&)> equal;
  std::function<std::string(const T&)> describe;
};

struct AxiomReport {
  bool ok = true;
  long checked = 0;
  std::string witness;
};

template <class T>
AxiomReport cyclicOperadAxiomCheck(const CyclicOperad<T>& P, const std::vector<T>& elements) {
  AxiomReport r;
  auto fail = [&](const std::string& what) {
    r.ok = false;
    r.witness = what;
  };
  auto d = [&](const T& x) { return P.describe ? P.describe(x) : std::string("?"); };
  const T u = P.unit();
  ++r.checked;
  if (!P.equal(P.tau(u), u)) {
    fail("unit not fixed");
    return r;
  }
  for (const auto& x : elements) {
    T y = x;
    for (int s = 0; s <= P.arity(x); ++s) y = P.tau(y);
    ++r.checked;
    if (!P.equal(y, x)) {
      fail("tau^(n+1) != id on " + d(x));
      return r;
    }
  }
  for (const auto& x : elements)
    for (const auto& y : elements) {
      const int m = P.arity(x), n = P.arity(y);
      for (int i = 1; i <= m; ++i) {
        if (i == 1 && n == 0) continue;  // τ(y) has no slot to receive τ(x)
        T lhs = P.tau(P.compose(x, i, y));
        T rhs = i == 1 ? P.compose(P.tau(y), n, P.tau(x)) : P.compose(P.tau(x), i - 1, y);
        ++r.checked;
        if (!P.equal(lhs, rhs)) {
          std::ostringstream os;
          os << "relation fails for x=" << d(x) << " slot " << i << " y=" << d(y);
          fail(os.str());
          return r;
        }
      }
    }
  return r;
}

}  // namespace lpo
