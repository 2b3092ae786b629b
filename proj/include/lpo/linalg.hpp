#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpo {

using Q = mpq_class;
using Z = mpz_class;

template <class T>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, T(0)) {}

  T& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const Matrix&) const = default;
};

using QMatrix = Matrix<Q>;

QMatrix multiply(const QMatrix& a, const QMatrix& b);
bool isZero(const QMatrix& a);
QMatrix transpose(const QMatrix& a);

// Coefficient field for elimination: the rationals or F_p.
struct Field {
  long p = 0;  // 0 = rationals
  static Field rationals() { return {0}; }
  static Field prime(long p);
  Q reduce(const Q& x) const;  // canonical representative in the field
  std::string name() const;
};

struct RowEchelon {
  QMatrix m;                // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
};

RowEchelon rowReduce(QMatrix a, const Field& f);
int rank(const QMatrix& a, const Field& f = Field::rationals());
// Basis of {x : a x = 0}.
std::vector<std::vector<Q>> nullspace(const QMatrix& a, const Field& f = Field::rationals());
// Some x with a x = b, if one exists.
std::optional<std::vector<Q>> solve(const QMatrix& a, const std::vector<Q>& b,
                                    const Field& f = Field::rationals());
std::vector<Q> apply(const QMatrix& a, const std::vector<Q>& x);
std::optional<QMatrix> inverse(const QMatrix& a, const Field& f = Field::rationals());

// Nonzero diagonal entries of the Smith normal form of an integral matrix.
std::vector<Z> smithDiagonal(const QMatrix& a);

}  // namespace lpo
