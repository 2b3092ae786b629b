#include "lpo/linalg.hpp"

#include <algorithm>
#include <utility>

namespace lpo {

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
  QMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Q& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

bool isZero(const QMatrix& a) {
  return std::all_of(a.data.begin(), a.data.end(), [](const Q& x) { return x == 0; });
}

QMatrix transpose(const QMatrix& a) {
  QMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Field Field::prime(long p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
  return {p};
}

Q Field::reduce(const Q& x) const {
  if (p == 0) return x;
  Z P(p);
  Z num = x.get_num() % P;
  Z den = x.get_den() % P;
  if (den == 0) throw std::domain_error("denominator vanishes in F_" + std::to_string(p));
  Z inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  Z r = (num * inv) % P;
  if (r < 0) r += P;
  return Q(r);
}

std::string Field::name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

RowEchelon rowReduce(QMatrix a, const Field& f) {
  for (auto& x : a.data) x = f.reduce(x);
  RowEchelon e;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int piv = -1;
    for (int r = row; r < a.rows; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < a.cols; ++c) std::swap(a(row, c), a(piv, c));
    Q inv = f.reduce(Q(1) / a(row, col));
    for (int c = col; c < a.cols; ++c) a(row, c) = f.reduce(a(row, c) * inv);
    for (int r = 0; r < a.rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      Q factor = a(r, col);
      for (int c = col; c < a.cols; ++c)
        if (a(row, c) != 0) a(r, c) = f.reduce(a(r, c) - factor * a(row, c));
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.m = std::move(a);
  return e;
}

int rank(const QMatrix& a, const Field& f) {
  return static_cast<int>(rowReduce(a, f).pivots.size());
}

std::vector<std::vector<Q>> nullspace(const QMatrix& a, const Field& f) {
  RowEchelon e = rowReduce(a, f);
  std::vector<bool> isPivot(a.cols, false);
  for (int c : e.pivots) isPivot[c] = true;
  std::vector<std::vector<Q>> basis;
  for (int free = 0; free < a.cols; ++free) {
    if (isPivot[free]) continue;
    std::vector<Q> v(a.cols, Q(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.reduce(-e.m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Q>> solve(const QMatrix& a, const std::vector<Q>& b, const Field& f) {
  if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  RowEchelon e = rowReduce(aug, f);
  if (!e.pivots.empty() && e.pivots.back() == a.cols) return std::nullopt;
  std::vector<Q> x(a.cols, Q(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.m(r, a.cols);
  return x;
}

std::vector<Q> apply(const QMatrix& a, const std::vector<Q>& x) {
  if (static_cast<int>(x.size()) != a.cols) throw std::invalid_argument("apply: shape mismatch");
  std::vector<Q> y(a.rows, Q(0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

std::optional<QMatrix> inverse(const QMatrix& a, const Field& f) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse: not square");
  const int n = a.rows;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rowReduce(aug, f);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

std::vector<Z> smithDiagonal(const QMatrix& q) {
  Matrix<Z> a(q.rows, q.cols);
  for (std::size_t i = 0; i < q.data.size(); ++i) {
    if (q.data[i].get_den() != 1) throw std::invalid_argument("smithDiagonal: non-integral entry");
    a.data[i] = q.data[i].get_num();
  }
  std::vector<Z> diag;
  int t = 0;
  while (t < a.rows && t < a.cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j)
        if (a(i, j) != 0 && (pr < 0 || abs(a(i, j)) < abs(a(pr, pc)))) pr = i, pc = j;
    if (pr < 0) break;
    for (int j = 0; j < a.cols; ++j) std::swap(a(t, j), a(pr, j));
    for (int i = 0; i < a.rows; ++i) std::swap(a(i, t), a(i, pc));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < a.rows; ++i) {
        if (a(i, t) == 0) continue;
        Z qt = a(i, t) / a(t, t);
        for (int j = t; j < a.cols; ++j) a(i, j) -= qt * a(t, j);
        if (a(i, t) != 0) {
          for (int j = 0; j < a.cols; ++j) std::swap(a(t, j), a(i, j));
          clean = false;
        }
      }
      for (int j = t + 1; j < a.cols; ++j) {
        if (a(t, j) == 0) continue;
        Z qt = a(t, j) / a(t, t);
        for (int i = t; i < a.rows; ++i) a(i, j) -= qt * a(i, t);
        if (a(t, j) != 0) {
          for (int i = 0; i < a.rows; ++i) std::swap(a(i, t), a(i, j));
          clean = false;
        }
      }
      if (clean) {
        // divisibility: the pivot must divide the rest of the block
        for (int i = t + 1; i < a.rows && clean; ++i)
          for (int j = t + 1; j < a.cols; ++j)
            if (a(i, j) % a(t, t) != 0) {
              for (int c = t; c < a.cols; ++c) a(t, c) += a(i, c);
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  return diag;
}

}  // namespace lpo
