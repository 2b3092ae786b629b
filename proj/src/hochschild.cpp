#include "lpo/hochschild.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace lpo {

namespace {

constexpr std::size_t kMaxTensorEntries = std::size_t(1) << 24;

Q fromJsonNumber(const nlohmann::json& v) {
  if (v.is_number_integer()) return Q(v.get<long>());
  if (v.is_string()) {
    Q q(v.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw ParseError("algebra: coefficients must be integers or \"p/q\" strings");
}

}  // namespace

std::size_t tupleCount(int r, int n) {
  std::size_t c = 1;
  for (int i = 0; i < n; ++i) {
    c *= static_cast<std::size_t>(r);
    if (c > kMaxTensorEntries) throw DomainError("cochain tensor exceeds the memory budget");
  }
  return c;
}

std::vector<int> tupleDigits(std::size_t index, int r, int n) {
  std::vector<int> d(n);
  for (int i = n - 1; i >= 0; --i) {
    d[i] = static_cast<int>(index % r);
    index /= r;
  }
  return d;
}

static std::size_t tupleIndex(const std::vector<int>& args, int r) {
  std::size_t idx = 0;
  for (int a : args) idx = idx * r + a;
  return idx;
}

FinAlgebra::FinAlgebra(std::vector<std::string> basis, std::vector<Q> mul, Vec unit)
    : r_(static_cast<int>(basis.size())), names_(std::move(basis)), mul_(std::move(mul)),
      unit_(std::move(unit)) {
  if (r_ < 1) throw DomainError("algebra: rank must be positive");
  if (mul_.size() != static_cast<std::size_t>(r_) * r_ * r_)
    throw DomainError("algebra: structure constants must have rank^3 entries");
  if (static_cast<int>(unit_.size()) != r_) throw DomainError("algebra: unit has wrong length");
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c)
        for (int e = 0; e < r_; ++e) {
          Q lhs = 0, rhs = 0;
          for (int x = 0; x < r_; ++x) {
            lhs += this->mul(a, b, x) * this->mul(x, c, e);
            rhs += this->mul(b, c, x) * this->mul(a, x, e);
          }
          if (lhs != rhs)
            throw DomainError("algebra: not associative at (" + names_[a] + "," + names_[b] + "," +
                              names_[c] + ")");
        }
  for (int a = 0; a < r_; ++a) {
    Vec ea = basisVector(a);
    if (product(unit_, ea) != ea || product(ea, unit_) != ea)
      throw DomainError("algebra: unit law fails on " + names_[a]);
  }
}

Vec FinAlgebra::basisVector(int a) const {
  Vec v(r_, Q(0));
  v.at(a) = 1;
  return v;
}

Vec FinAlgebra::productBasis(int a, int b) const {
  Vec v(r_);
  for (int c = 0; c < r_; ++c) v[c] = mul(a, b, c);
  return v;
}

Vec FinAlgebra::product(const Vec& x, const Vec& y) const {
  Vec z(r_, Q(0));
  for (int a = 0; a < r_; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < r_; ++b) {
      if (y[b] == 0) continue;
      Q xy = x[a] * y[b];
      for (int c = 0; c < r_; ++c)
        if (mul(a, b, c) != 0) z[c] += xy * mul(a, b, c);
    }
  }
  return z;
}

bool FinAlgebra::isCommutative() const {
  for (int a = 0; a < r_; ++a)
    for (int b = a + 1; b < r_; ++b)
      if (productBasis(a, b) != productBasis(b, a)) return false;
  return true;
}

int FinAlgebra::unitIndex() const {
  for (int a = 0; a < r_; ++a)
    if (unit_ == basisVector(a)) return a;
  return -1;
}

FinAlgebra FinAlgebra::changeBasis(const QMatrix& S) const {
  auto Sinv = inverse(S);
  if (!Sinv) throw DomainError("changeBasis: matrix not invertible");
  std::vector<Vec> cols(r_);
  for (int a = 0; a < r_; ++a) {
    cols[a].resize(r_);
    for (int b = 0; b < r_; ++b) cols[a][b] = S(b, a);
  }
  std::vector<Q> mul(static_cast<std::size_t>(r_) * r_ * r_);
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b) {
      Vec p = lpo::apply(*Sinv, product(cols[a], cols[b]));
      for (int c = 0; c < r_; ++c) mul[(a * r_ + b) * r_ + c] = p[c];
    }
  std::vector<std::string> names;
  for (int a = 0; a < r_; ++a) names.push_back("f" + std::to_string(a));
  return FinAlgebra(std::move(names), std::move(mul), lpo::apply(*Sinv, unit_));
}

AdaptedAlgebra unitAdapted(const FinAlgebra& A) {
  const int r = A.rank();
  QMatrix S(r, r);
  if (A.unitIndex() == 0) {
    for (int a = 0; a < r; ++a) S(a, a) = 1;
    return {A, S};
  }
  std::vector<Vec> chosen{A.unit()};
  std::vector<std::string> names{"1"};
  for (int a = 0; a < r && static_cast<int>(chosen.size()) < r; ++a) {
    chosen.push_back(A.basisVector(a));
    QMatrix M(r, static_cast<int>(chosen.size()));
    for (std::size_t c = 0; c < chosen.size(); ++c)
      for (int b = 0; b < r; ++b) M(b, static_cast<int>(c)) = chosen[c][b];
    if (rank(M) < static_cast<int>(chosen.size()))
      chosen.pop_back();
    else
      names.push_back(A.basis()[a]);
  }
  for (int c = 0; c < r; ++c)
    for (int b = 0; b < r; ++b) S(b, c) = chosen[c][b];
  FinAlgebra B = A.changeBasis(S);
  return {FinAlgebra(names, B.structureConstants(), B.unit()), S};
}

FrobeniusForm::FrobeniusForm(const FinAlgebra& A, QMatrix pairing) : P_(std::move(pairing)) {
  const int r = A.rank();
  if (P_.rows != r || P_.cols != r) throw DomainError("pairing: wrong shape");
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (P_(a, b) != P_(b, a)) throw DomainError("pairing: not symmetric");
  auto inv = inverse(P_);
  if (!inv) throw DomainError("pairing: not invertible");
  Pinv_ = *inv;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (pair(A.productBasis(a, b), A.basisVector(c)) !=
            pair(A.basisVector(a), A.productBasis(b, c)))
          throw DomainError("pairing: not invariant");
}

Q FrobeniusForm::pair(const Vec& x, const Vec& y) const {
  Q s = 0;
  for (int a = 0; a < P_.rows; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < P_.cols; ++b)
      if (y[b] != 0 && P_(a, b) != 0) s += x[a] * P_(a, b) * y[b];
  }
  return s;
}

FrobeniusForm FrobeniusForm::changeBasis(const FinAlgebra& transformed, const QMatrix& S) const {
  return FrobeniusForm(transformed, multiply(multiply(transpose(S), P_), S));
}

namespace {

FinAlgebra fromTable(std::vector<std::string> names, const std::vector<std::vector<Vec>>& table,
                     Vec unit) {
  const int r = static_cast<int>(names.size());
  std::vector<Q> mul;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) mul.push_back(table[a][b][c]);
  return FinAlgebra(std::move(names), std::move(mul), std::move(unit));
}

QMatrix fromRows(const std::vector<std::vector<int>>& rows) {
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

FinAlgebra groundRing() { return FinAlgebra({"1"}, {Q(1)}, {Q(1)}); }

FinAlgebra dualNumbers() { return truncatedPolynomial(2); }

FinAlgebra truncatedPolynomial(int n) {
  if (n < 1) throw DomainError("truncatedPolynomial: n >= 1");
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(a == 0 ? "1" : a == 1 ? "x" : "x^" + std::to_string(a));
  std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n, Vec(n, Q(0))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; a + b < n; ++b) t[a][b][a + b] = 1;
  Vec unit(n, Q(0));
  unit[0] = 1;
  return fromTable(std::move(names), t, std::move(unit));
}

FinAlgebra productAlgebra(int copies) {
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> t(copies, std::vector<Vec>(copies, Vec(copies, Q(0))));
  for (int a = 0; a < copies; ++a) {
    names.push_back("p" + std::to_string(a + 1));
    t[a][a][a] = 1;
  }
  return fromTable(std::move(names), t, Vec(copies, Q(1)));
}

FinAlgebra matrixAlgebra2() {
  // E_ij E_kl = δ_jk E_il, basis order E11, E12, E21, E22
  std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, Vec(4, Q(0))));
  auto idx = [](int i, int j) { return 2 * i + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) t[idx(i, j)][idx(j, l)][idx(i, l)] = 1;
  return fromTable({"E11", "E12", "E21", "E22"}, t, {Q(1), Q(0), Q(0), Q(1)});
}

FinAlgebra groupAlgebraZ2() {
  std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2, Vec(2, Q(0))));
  t[0][0][0] = 1;
  t[0][1][1] = 1;
  t[1][0][1] = 1;
  t[1][1][0] = 1;
  return fromTable({"1", "g"}, t, {Q(1), Q(0)});
}

FinAlgebra upperTriangular2() {
  // basis E11, E12, E22
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, Vec(3, Q(0))));
  t[0][0][0] = 1;
  t[0][1][1] = 1;
  t[1][2][1] = 1;
  t[2][2][2] = 1;
  return fromTable({"E11", "E12", "E22"}, t, {Q(1), Q(0), Q(1)});
}

FrobeniusForm groundRingForm() { return FrobeniusForm(groundRing(), fromRows({{1}})); }

FrobeniusForm dualNumbersForm() { return FrobeniusForm(dualNumbers(), fromRows({{0, 1}, {1, 0}})); }

FrobeniusForm matrixTraceForm() {
  // tr(E_ij E_kl) = δ_jk δ_il
  return FrobeniusForm(matrixAlgebra2(),
                       fromRows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
}

FrobeniusForm groupAlgebraZ2Form() {
  return FrobeniusForm(groupAlgebraZ2(), fromRows({{1, 0}, {0, 1}}));
}

FinAlgebra randomAlgebra(std::mt19937_64& rng, int rank) {
  std::vector<FinAlgebra> seeds;
  if (rank == 2) {
    seeds = {dualNumbers(), productAlgebra(2), groupAlgebraZ2()};
  } else if (rank == 3) {
    seeds = {upperTriangular2(), truncatedPolynomial(3), productAlgebra(3)};
  } else {
    throw DomainError("randomAlgebra: rank must be 2 or 3");
  }
  const FinAlgebra& base = seeds[rng() % seeds.size()];
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    QMatrix S(rank, rank);
    for (auto& x : S.data) x = entry(rng);
    if (inverse(S)) return base.changeBasis(S);
  }
}

FinAlgebra algebraFromJson(const std::string& text, QMatrix* pairing) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("algebra json: ") + e.what());
  }
  try {
    const int r = j.at("rank").get<int>();
    std::vector<std::string> names;
    if (j.contains("basis"))
      names = j["basis"].get<std::vector<std::string>>();
    else
      for (int a = 0; a < r; ++a) names.push_back("e" + std::to_string(a));
    if (static_cast<int>(names.size()) != r) throw ParseError("algebra json: basis length != rank");
    Vec unit;
    for (const auto& v : j.at("unit")) unit.push_back(fromJsonNumber(v));
    const auto& m = j.at("mul");
    std::vector<Q> mul;
    if (static_cast<int>(m.size()) != r) throw ParseError("algebra json: mul has wrong shape");
    for (int a = 0; a < r; ++a) {
      if (static_cast<int>(m[a].size()) != r) throw ParseError("algebra json: mul has wrong shape");
      for (int b = 0; b < r; ++b) {
        if (static_cast<int>(m[a][b].size()) != r)
          throw ParseError("algebra json: mul has wrong shape");
        for (int c = 0; c < r; ++c) mul.push_back(fromJsonNumber(m[a][b][c]));
      }
    }
    if (pairing && j.contains("pairing")) {
      const auto& p = j["pairing"];
      *pairing = QMatrix(r, r);
      if (static_cast<int>(p.size()) != r) throw ParseError("algebra json: pairing has wrong shape");
      for (int a = 0; a < r; ++a) {
        if (static_cast<int>(p[a].size()) != r)
          throw ParseError("algebra json: pairing has wrong shape");
        for (int b = 0; b < r; ++b) (*pairing)(a, b) = fromJsonNumber(p[a][b]);
      }
    } else if (pairing) {
      *pairing = QMatrix();
    }
    return FinAlgebra(std::move(names), std::move(mul), std::move(unit));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra json: ") + e.what());
  }
}

Cochain::Cochain(int n, int r) : arity(n), rank(r), data(tupleCount(r, n) * r, Q(0)) {}

Vec Cochain::value(const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != arity) throw DomainError("cochain: wrong argument count");
  return valueAt(tupleIndex(args, rank));
}

Vec Cochain::valueAt(std::size_t t) const {
  return Vec(data.begin() + t * rank, data.begin() + (t + 1) * rank);
}

bool Cochain::isZero() const {
  return std::all_of(data.begin(), data.end(), [](const Q& x) { return x == 0; });
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (o.arity != arity || o.rank != rank) throw DomainError("cochain sum: shape mismatch");
  for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (o.arity != arity || o.rank != rank) throw DomainError("cochain difference: shape mismatch");
  for (std::size_t i = 0; i < data.size(); ++i) data[i] -= o.data[i];
  return *this;
}

Cochain Cochain::operator+(const Cochain& o) const {
  Cochain c = *this;
  return c += o;
}

Cochain Cochain::operator-(const Cochain& o) const {
  Cochain c = *this;
  return c -= o;
}

Cochain Cochain::operator*(const Q& c) const {
  Cochain out = *this;
  for (auto& x : out.data) x *= c;
  return out;
}

Cochain zeroCochain(const FinAlgebra& A, int n) { return Cochain(n, A.rank()); }

Cochain identityCochain(const FinAlgebra& A) {
  Cochain f(1, A.rank());
  for (int a = 0; a < A.rank(); ++a) f.data[a * A.rank() + a] = 1;
  return f;
}

Cochain constantCochain(const FinAlgebra& A, const Vec& v) {
  Cochain f(0, A.rank());
  f.data = v;
  return f;
}

Cochain multiplicationCochain(const FinAlgebra& A, int n) {
  const int r = A.rank();
  Cochain f(n, r);
  for (std::size_t t = 0; t < f.tuples(); ++t) {
    Vec v = A.unit();
    for (int a : tupleDigits(t, r, n)) v = A.product(v, A.basisVector(a));
    std::copy(v.begin(), v.end(), f.data.begin() + t * r);
  }
  return f;
}

Cochain randomCochain(const FinAlgebra& A, int n, std::mt19937_64& rng, bool normalized) {
  const int r = A.rank();
  const int u = A.unitIndex();
  if (normalized && u < 0 && n > 0)
    throw DomainError("randomCochain: normalized cochains need the unit as a basis vector");
  std::uniform_int_distribution<int> entry(-3, 3);
  Cochain f(n, r);
  for (std::size_t t = 0; t < f.tuples(); ++t) {
    auto digits = tupleDigits(t, r, n);
    bool hitsUnit = normalized && std::find(digits.begin(), digits.end(), u) != digits.end();
    for (int c = 0; c < r; ++c) f.data[t * r + c] = hitsUnit ? 0 : entry(rng);
  }
  return f;
}

Vec evaluateVectors(const Cochain& f, const std::vector<Vec>& args) {
  const int r = f.rank;
  if (static_cast<int>(args.size()) != f.arity) throw DomainError("cochain: wrong argument count");
  Vec out(r, Q(0));
  std::vector<int> digits(f.arity);
  std::function<void(int, Q)> rec = [&](int slot, Q coef) {
    if (slot == f.arity) {
      const std::size_t base = tupleIndex(digits, r) * r;
      for (int c = 0; c < r; ++c)
        if (f.data[base + c] != 0) out[c] += coef * f.data[base + c];
      return;
    }
    for (int a = 0; a < r; ++a) {
      if (args[slot][a] == 0) continue;
      digits[slot] = a;
      rec(slot + 1, coef * args[slot][a]);
    }
  };
  rec(0, Q(1));
  return out;
}

bool isNormalized(const FinAlgebra& A, const Cochain& f) {
  const int r = A.rank();
  for (int slot = 0; slot < f.arity; ++slot) {
    // evaluate with the unit in this slot and basis vectors elsewhere
    for (std::size_t t = 0; t < tupleCount(r, f.arity - 1); ++t) {
      auto rest = tupleDigits(t, r, f.arity - 1);
      std::vector<Vec> args;
      for (int s = 0, q = 0; s < f.arity; ++s)
        args.push_back(s == slot ? A.unit() : A.basisVector(rest[q++]));
      Vec v = evaluateVectors(f, args);
      for (const Q& x : v)
        if (x != 0) return false;
    }
  }
  return true;
}

Cochain composeCochains(const Cochain& f, int slot, const Cochain& g) {
  if (slot < 1 || slot > f.arity) throw DomainError("cochain composition: slot out of range");
  if (f.rank != g.rank) throw DomainError("cochain composition: rank mismatch");
  const int r = f.rank, m = f.arity, n = g.arity;
  const int arity = m + n - 1;
  Cochain h(arity, r);
  for (std::size_t t = 0; t < h.tuples(); ++t) {
    auto d = tupleDigits(t, r, arity);
    std::vector<int> inner(d.begin() + (slot - 1), d.begin() + (slot - 1 + n));
    Vec gv = g.valueAt(tupleIndex(inner, r));
    std::vector<int> outer;
    outer.insert(outer.end(), d.begin(), d.begin() + (slot - 1));
    outer.push_back(0);
    outer.insert(outer.end(), d.begin() + (slot - 1 + n), d.end());
    for (int c = 0; c < r; ++c) {
      if (gv[c] == 0) continue;
      outer[slot - 1] = c;
      const std::size_t base = tupleIndex(outer, r) * r;
      for (int e = 0; e < r; ++e)
        if (f.data[base + e] != 0) h.data[t * r + e] += gv[c] * f.data[base + e];
    }
  }
  return h;
}

MultiplicativeOperad<Cochain> endomorphismOperad(const FinAlgebra& A) {
  MultiplicativeOperad<Cochain> P;
  P.unit = [A] { return identityCochain(A); };
  P.multiplication = [A](int n) { return multiplicationCochain(A, n); };
  P.compose = [](const Cochain& a, int i, const Cochain& b) { return composeCochains(a, i, b); };
  P.arity = [](const Cochain& a) { return a.arity; };
  return P;
}

namespace {

// (df)(args) for a cochain f of arity args.size() - 1.
Vec differentialAt(const FinAlgebra& A, const Cochain& f, const std::vector<int>& args) {
  const int r = A.rank();
  const int n = f.arity;
  Vec out(r, Q(0));
  std::vector<int> tail(args.begin() + 1, args.end());
  Vec first = A.product(A.basisVector(args[0]), f.value(tail));
  for (int c = 0; c < r; ++c) out[c] += first[c];
  std::vector<int> merged(n);
  for (int j = 0; j < n; ++j) {
    // merge args[j], args[j+1]
    for (int p = 0, q = 0; p <= n; ++p) {
      if (p == j + 1) continue;
      merged[q++] = args[p];
    }
    const Q sign = (j % 2 == 0) ? Q(-1) : Q(1);
    for (int c = 0; c < r; ++c) {
      const Q& coef = A.mul(args[j], args[j + 1], c);
      if (coef == 0) continue;
      merged[j] = c;
      Vec v = f.value(merged);
      for (int e = 0; e < r; ++e) out[e] += sign * coef * v[e];
    }
  }
  std::vector<int> head(args.begin(), args.end() - 1);
  Vec last = A.product(f.value(head), A.basisVector(args[n]));
  const Q sign = (n % 2 == 0) ? Q(-1) : Q(1);
  for (int c = 0; c < r; ++c) out[c] += sign * last[c];
  return out;
}

}  // namespace

Cochain hochschildDifferential(const FinAlgebra& A, const Cochain& f) {
  const int r = A.rank();
  Cochain g(f.arity + 1, r);
  for (std::size_t t = 0; t < g.tuples(); ++t) {
    Vec v = differentialAt(A, f, tupleDigits(t, r, f.arity + 1));
    std::copy(v.begin(), v.end(), g.data.begin() + t * r);
  }
  return g;
}

Cochain actSurjection(const FinAlgebra& A, const Word& u, const std::vector<Cochain>& fs) {
  LatticePath pu(std::vector<Word>{u});
  const int k = pu.colours();
  if (static_cast<int>(fs.size()) != k) throw DomainError("actSurjection: need one cochain per colour");
  if (complexity(pu) > 2) throw DomainError("actSurjection: generator has complexity > 2");
  int total = 0;
  for (const auto& f : fs) total += f.arity;
  const int n = total - chainDegree(pu);
  if (n < 0) return zeroCochain(A, 0);
  auto P = endomorphismOperad(A);
  Cochain out(n, A.rank());
  for (const auto& e : expansionTerms(u, n)) {
    bool match = true;
    for (int c = 1; c <= k; ++c)
      if (e.term.arityIn(c) != fs[c - 1].arity) match = false;
    if (!match) continue;
    Cochain v = treeEvaluate(e.term, fs, P);
    out += e.sign > 0 ? v : v * Q(-1);
  }
  return out;
}

Cochain actSurjection(const FinAlgebra& A, const ChainElement& u, const std::vector<Cochain>& fs) {
  std::optional<Cochain> out;
  for (const auto& [x, c] : u.terms()) {
    if (x.arityOut() != 0) throw DomainError("actSurjection: generators must be bar-free");
    Cochain v = actSurjection(A, x.letters(), fs) * Q(static_cast<long>(c));
    if (!out)
      out = v;
    else if (out->arity == v.arity)
      *out += v;
    else if (!v.isZero())
      throw DomainError("actSurjection: inhomogeneous combination");
  }
  return out ? *out : zeroCochain(A, 0);
}

Cochain cup(const FinAlgebra& A, const Cochain& f, const Cochain& g) {
  return actSurjection(A, Word{1, 2}, {f, g});
}

Cochain cup1(const FinAlgebra& A, const Cochain& f, const Cochain& g) {
  return actSurjection(A, Word{1, 2, 1}, {f, g});
}

Word braceWord(int m) {
  Word w{1};
  for (int j = 2; j <= m + 1; ++j) {
    w.push_back(j);
    w.push_back(1);
  }
  return w;
}

Cochain brace(const FinAlgebra& A, const Cochain& f, const std::vector<Cochain>& gs) {
  std::vector<Cochain> all{f};
  all.insert(all.end(), gs.begin(), gs.end());
  return actSurjection(A, braceWord(static_cast<int>(gs.size())), all);
}

Cochain circleProduct(const FinAlgebra& A, const Cochain& f, const Cochain& g) {
  // θ_121(f,g) = (-1)^{(|f|-1)|g|} Σ_i (-1)^{(|g|-1)(i-1)} f ∘_i g
  const int s = ((f.arity - 1) * g.arity) % 2 ? -1 : 1;
  return cup1(A, f, g) * Q(s);
}

Cochain gerstenhaberBracket(const FinAlgebra& A, const Cochain& f, const Cochain& g) {
  const int s = ((f.arity - 1) * (g.arity - 1)) % 2 ? -1 : 1;
  return circleProduct(A, f, g) - circleProduct(A, g, f) * Q(s);
}

namespace {

// Cochain whose value v at each tuple solves P v = w(tuple).
Cochain solveAgainstPairing(const FinAlgebra& A, const FrobeniusForm& form, int n,
                            const std::function<Vec(const std::vector<int>&)>& w) {
  const int r = A.rank();
  Cochain out(n, r);
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    Vec v = lpo::apply(form.inversePairing(), w(tupleDigits(t, r, n)));
    std::copy(v.begin(), v.end(), out.data.begin() + t * r);
  }
  return out;
}

}  // namespace

Cochain cyclicAction(const FinAlgebra& A, const FrobeniusForm& form, const Cochain& f) {
  const int r = A.rank(), n = f.arity;
  if (n == 0) return f;
  // <a_0, τf(a_1..a_n)> = <a_n, f(a_0..a_{n-1})>
  return solveAgainstPairing(A, form, n, [&](const std::vector<int>& args) {
    Vec w(r, Q(0));
    std::vector<int> shifted(n);
    for (int a0 = 0; a0 < r; ++a0) {
      shifted[0] = a0;
      for (int q = 1; q < n; ++q) shifted[q] = args[q - 1];
      w[a0] = form.pair(A.basisVector(args[n - 1]), f.value(shifted));
    }
    return w;
  });
}

Cochain bvOperator(const FinAlgebra& A, const FrobeniusForm& form, const Cochain& f) {
  if (!isNormalized(A, f)) throw DomainError("bvOperator: cochain is not normalized");
  const int r = A.rank();
  if (f.arity == 0) return zeroCochain(A, 0);
  const int n = f.arity - 1;
  // <a_0, Δf(a_1..a_n)> = Σ_i (-1)^{ni} <1, f(a_i..a_n, a_0..a_{i-1})>
  return solveAgainstPairing(A, form, n, [&](const std::vector<int>& args) {
    Vec w(r, Q(0));
    std::vector<int> all(n + 1), rotated(n + 1);
    for (int a0 = 0; a0 < r; ++a0) {
      all[0] = a0;
      for (int q = 0; q < n; ++q) all[q + 1] = args[q];
      Q s = 0;
      for (int i = 0; i <= n; ++i) {
        for (int q = 0; q <= n; ++q) rotated[q] = all[(i + q) % (n + 1)];
        Q term = form.pair(A.unit(), f.value(rotated));
        s += (n * i) % 2 ? -term : term;
      }
      w[a0] = s;
    }
    return w;
  });
}

NormalizedComplex::NormalizedComplex(const FinAlgebra& adapted, int maxDegree)
    : A_(adapted), maxDegree_(maxDegree) {
  if (A_.unitIndex() != 0) throw DomainError("normalized complex needs the unit as e_0");
  if (maxDegree < 0) throw DomainError("normalized complex: negative degree");
  const int r = A_.rank();
  for (int n = 0; n <= maxDegree; ++n) {
    QMatrix m(dimension(n + 1), dimension(n));
    const std::size_t srcTuples = tupleCount(r - 1, n);
    const std::size_t dstTuples = tupleCount(r - 1, n + 1);
    for (std::size_t st = 0; st < srcTuples; ++st)
      for (int c = 0; c < r; ++c) {
        const int col = static_cast<int>(st * r + c);
        Vec coords(dimension(n), Q(0));
        coords[col] = 1;
        Cochain f = cochain(n, coords);
        for (std::size_t dt = 0; dt < dstTuples; ++dt) {
          auto digits = tupleDigits(dt, r - 1, n + 1);
          for (int& x : digits) ++x;
          Vec v = differentialAt(A_, f, digits);
          for (int e = 0; e < r; ++e)
            if (v[e] != 0) m(static_cast<int>(dt * r + e), col) = v[e];
        }
      }
    d_[n] = std::move(m);
  }
}

int NormalizedComplex::dimension(int n) const {
  return static_cast<int>(tupleCount(A_.rank() - 1, n) * A_.rank());
}

Vec NormalizedComplex::coordinates(const Cochain& f) const {
  const int r = A_.rank();
  Vec out(dimension(f.arity), Q(0));
  for (std::size_t t = 0; t < tupleCount(r - 1, f.arity); ++t) {
    auto digits = tupleDigits(t, r - 1, f.arity);
    for (int& x : digits) ++x;
    Vec v = f.value(digits);
    for (int c = 0; c < r; ++c) out[t * r + c] = v[c];
  }
  return out;
}

Cochain NormalizedComplex::cochain(int n, const Vec& coords) const {
  const int r = A_.rank();
  Cochain f(n, r);
  for (std::size_t t = 0; t < tupleCount(r - 1, n); ++t) {
    auto digits = tupleDigits(t, r - 1, n);
    for (int& x : digits) ++x;
    const std::size_t base = tupleIndex(digits, r) * r;
    for (int c = 0; c < r; ++c) f.data[base + c] = coords[t * r + c];
  }
  return f;
}

ChainComplex NormalizedComplex::complex() const {
  ChainComplex c;
  c.ring = {RingKind::Rationals, 0};
  c.cohomological = true;
  for (int n = 0; n <= maxDegree_ + 1; ++n)
    c.basis[n] = std::vector<std::string>(dimension(n), "");
  for (const auto& [n, m] : d_) c.differential[n] = m;
  return c;
}

bool NormalizedComplex::isCoboundary(const Cochain& f) const {
  if (f.arity == 0) return f.isZero();
  if (f.arity - 1 > maxDegree_) throw DomainError("isCoboundary: degree beyond the complex");
  return solve(d_.at(f.arity - 1), coordinates(f)).has_value();
}

HHResult hochschildCohomology(const FinAlgebra& A, int maxDegree) {
  auto [B, S] = unitAdapted(A);
  NormalizedComplex N(B, maxDegree);
  HHResult res{B, S, homology(N.complex(), 0, maxDegree), {}};
  for (int n = 0; n <= maxDegree; ++n) {
    std::vector<Vec> image;
    if (n > 0) {
      const QMatrix& din = N.d(n - 1);
      for (int c = 0; c < din.cols; ++c) {
        Vec col(din.rows);
        for (int r = 0; r < din.rows; ++r) col[r] = din(r, c);
        image.push_back(std::move(col));
      }
    }
    auto spanRank = [&](const std::vector<Vec>& vs) {
      if (vs.empty()) return 0;
      QMatrix M(static_cast<int>(vs.front().size()), static_cast<int>(vs.size()));
      for (std::size_t c = 0; c < vs.size(); ++c)
        for (std::size_t r = 0; r < vs[c].size(); ++r) M(static_cast<int>(r), static_cast<int>(c)) = vs[c][r];
      return rank(M);
    };
    int current = spanRank(image);
    for (auto& z : nullspace(N.d(n))) {
      image.push_back(z);
      int next = spanRank(image);
      if (next > current) {
        res.representatives[n].push_back(N.cochain(n, z));
        current = next;
      } else {
        image.pop_back();
      }
    }
  }
  return res;
}

ChainComplex hochschildComplexFull(const FinAlgebra& A, int maxDegree) {
  const int r = A.rank();
  ChainComplex c;
  c.ring = {RingKind::Rationals, 0};
  c.cohomological = true;
  for (int n = 0; n <= maxDegree + 1; ++n)
    c.basis[n] = std::vector<std::string>(tupleCount(r, n) * r, "");
  for (int n = 0; n <= maxDegree; ++n) {
    QMatrix m(static_cast<int>(tupleCount(r, n + 1) * r), static_cast<int>(tupleCount(r, n) * r));
    for (int col = 0; col < m.cols; ++col) {
      Cochain f(n, r);
      f.data[col] = 1;
      Cochain g = hochschildDifferential(A, f);
      for (int row = 0; row < m.rows; ++row)
        if (g.data[row] != 0) m(row, col) = g.data[row];
    }
    c.differential[n] = std::move(m);
  }
  return c;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int p = from; p <= n; ++p) {
      cur.push_back(p);
      rec(p + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Face j of the sphere simplex with jump set J in dimension n: jump set in
// dimension n-1, or empty optional for the base point.
std::optional<std::vector<int>> sphereFace(const std::vector<int>& J, int n, int m, int j) {
  std::vector<int> s(n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int p : J)
      if (p <= i) ++s[i];
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = s[i < j ? i : i + 1];
  if (v.front() != 0 || v.back() != m) return std::nullopt;
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (v[i] != v[i - 1]) out.push_back(i);
  if (static_cast<int>(out.size()) != m) return std::nullopt;
  return out;
}

}  // namespace

ChainComplex higherHochschildComplex(const FinAlgebra& A, int m, int maxDegree) {
  if (!A.isCommutative()) throw DomainError("higher Hochschild complex needs a commutative algebra");
  if (m < 1) throw DomainError("higher Hochschild complex: m >= 1");
  const int r = A.rank();
  ChainComplex c;
  c.ring = {RingKind::Rationals, 0};
  c.cohomological = true;
  std::vector<std::vector<std::vector<int>>> cells(maxDegree + 2);
  for (int n = 0; n <= maxDegree + 1; ++n) {
    cells[n] = subsets(n, m);
    c.basis[n] = std::vector<std::string>(tupleCount(r, static_cast<int>(cells[n].size())) * r, "");
  }
  for (int n = 1; n <= maxDegree + 1; ++n) {
    // d: degree n-1 -> n
    const auto& src = cells[n - 1];
    const auto& dst = cells[n];
    std::map<std::vector<int>, int> srcIndex;
    for (std::size_t i = 0; i < src.size(); ++i) srcIndex[src[i]] = static_cast<int>(i);
    const int ns = static_cast<int>(src.size()), nd = static_cast<int>(dst.size());
    QMatrix mat(static_cast<int>(tupleCount(r, nd) * r), static_cast<int>(tupleCount(r, ns) * r));
    std::vector<std::vector<int>> faceOf(n + 1, std::vector<int>(nd));
    for (int j = 0; j <= n; ++j)
      for (int y = 0; y < nd; ++y) {
        auto f = sphereFace(dst[y], n, m, j);
        faceOf[j][y] = f ? srcIndex.at(*f) : -1;
      }
    for (std::size_t bt = 0; bt < tupleCount(r, nd); ++bt) {
      auto beta = tupleDigits(bt, r, nd);
      for (int j = 0; j <= n; ++j) {
        const Q sign = j % 2 ? Q(-1) : Q(1);
        Vec outFactor = A.unit();
        std::vector<Vec> b(ns, A.unit());
        for (int y = 0; y < nd; ++y) {
          const int z = faceOf[j][y];
          if (z < 0)
            outFactor = A.product(outFactor, A.basisVector(beta[y]));
          else
            b[z] = A.product(b[z], A.basisVector(beta[y]));
        }
        // expand ⊗ b_z into basis tuples α
        std::vector<int> alpha(ns);
        std::function<void(int, Q)> rec = [&](int z, Q coef) {
          if (z == ns) {
            const std::size_t at = tupleIndex(alpha, r);
            for (int o = 0; o < r; ++o) {
              Vec image = A.product(outFactor, A.basisVector(o));
              for (int o2 = 0; o2 < r; ++o2)
                if (image[o2] != 0)
                  mat(static_cast<int>(bt * r + o2), static_cast<int>(at * r + o)) +=
                      sign * coef * image[o2];
            }
            return;
          }
          for (int a = 0; a < r; ++a) {
            if (b[z][a] == 0) continue;
            alpha[z] = a;
            rec(z + 1, coef * b[z][a]);
          }
        };
        rec(0, Q(1));
      }
    }
    c.differential[n - 1] = std::move(mat);
  }
  return c;
}

}  // namespace lpo
