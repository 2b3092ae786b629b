#include "lpo/paths.hpp"

#include <algorithm>
#include <numeric>

namespace lpo {

LatticePath::LatticePath() : subs_(1) {}

LatticePath::LatticePath(std::vector<Word> substrings) : subs_(std::move(substrings)) {
  if (subs_.empty()) throw DomainError("lattice path needs at least one substring");
  int k = 0;
  for (const auto& w : subs_)
    for (int c : w) {
      if (c < 1) throw DomainError("colour must be positive");
      k = std::max(k, c);
    }
  std::vector<bool> seen(k + 1, false);
  for (const auto& w : subs_)
    for (int c : w) seen[c] = true;
  for (int c = 1; c <= k; ++c)
    if (!seen[c]) throw DomainError("colour " + std::to_string(c) + " does not occur");
  k_ = k;
}

int LatticePath::multiplicity(int colour) const {
  if (colour < 1 || colour > k_) throw DomainError("colour out of range");
  int m = 0;
  for (const auto& w : subs_) m += static_cast<int>(std::count(w.begin(), w.end(), colour));
  return m;
}

std::vector<int> LatticePath::arities() const {
  std::vector<int> a(k_, -1);
  for (const auto& w : subs_)
    for (int c : w) ++a[c - 1];
  return a;
}

int LatticePath::letterCount() const {
  int L = 0;
  for (const auto& w : subs_) L += static_cast<int>(w.size());
  return L;
}

Word LatticePath::letters() const {
  Word out;
  for (const auto& w : subs_) out.insert(out.end(), w.begin(), w.end());
  return out;
}

bool SimplicialOperator::isMonotone() const {
  if (static_cast<int>(values.size()) != source + 1) return false;
  for (int i = 0; i <= source; ++i) {
    if (values[i] < 0 || values[i] > target) return false;
    if (i > 0 && values[i] < values[i - 1]) return false;
  }
  return true;
}

SimplicialOperator SimplicialOperator::identity(int n) {
  SimplicialOperator s{n, n, std::vector<int>(n + 1)};
  std::iota(s.values.begin(), s.values.end(), 0);
  return s;
}

SimplicialOperator SimplicialOperator::coface(int n, int j) {
  if (j < 0 || j > n) throw DomainError("coface index out of range");
  SimplicialOperator s{n - 1, n, {}};
  for (int i = 0; i < n; ++i) s.values.push_back(i < j ? i : i + 1);
  return s;
}

SimplicialOperator SimplicialOperator::codegeneracy(int n, int j) {
  if (j < 0 || j > n) throw DomainError("codegeneracy index out of range");
  SimplicialOperator s{n + 1, n, {}};
  for (int i = 0; i <= n + 1; ++i) s.values.push_back(i <= j ? i : i - 1);
  return s;
}

SimplicialOperator composeOps(const SimplicialOperator& g, const SimplicialOperator& f) {
  if (f.target != g.source) throw DomainError("operator composition: arity mismatch");
  SimplicialOperator h{f.source, g.target, {}};
  for (int v : f.values) h.values.push_back(g.values.at(v));
  return h;
}

std::vector<int> DeltaSigmaMap::setMap() const {
  std::vector<int> m(sourceSize, -1);
  for (int q = 0; q < targetSize(); ++q)
    for (int p : fibers[q]) m.at(p) = q;
  return m;
}

DeltaSigmaMap DeltaSigmaMap::identity(int size) {
  DeltaSigmaMap d{size, {}};
  for (int i = 0; i < size; ++i) d.fibers.push_back({i});
  return d;
}

DeltaSigmaMap composeDS(const DeltaSigmaMap& g, const DeltaSigmaMap& f) {
  if (f.targetSize() != g.sourceSize) throw DomainError("ΔΣ composition: size mismatch");
  DeltaSigmaMap h{f.sourceSize, {}};
  for (const auto& gf : g.fibers) {
    std::vector<int> fiber;
    for (int q : gf) fiber.insert(fiber.end(), f.fibers[q].begin(), f.fibers[q].end());
    h.fibers.push_back(std::move(fiber));
  }
  return h;
}

DeltaSigmaMap joinDS(const std::vector<DeltaSigmaMap>& parts) {
  DeltaSigmaMap j;
  for (const auto& p : parts) {
    for (const auto& fiber : p.fibers) {
      std::vector<int> shifted;
      for (int v : fiber) shifted.push_back(v + j.sourceSize);
      j.fibers.push_back(std::move(shifted));
    }
    j.sourceSize += p.sourceSize;
  }
  return j;
}

JoinMorphism toJoinMorphism(const LatticePath& x) {
  JoinMorphism f;
  f.sourceArities = x.arities();
  std::vector<int> seen(x.colours() + 1, 0);
  for (const auto& w : x.substrings()) {
    std::vector<JoinElement> fiber;
    for (int c : w) fiber.push_back({c, seen[c]++});
    f.fibers.push_back(std::move(fiber));
  }
  return f;
}

LatticePath fromJoinMorphism(const JoinMorphism& f) {
  std::vector<int> next(f.sourceArities.size() + 1, 0);
  std::vector<Word> subs;
  for (const auto& fiber : f.fibers) {
    Word w;
    for (const auto& e : fiber) {
      if (e.colour < 1 || e.colour > static_cast<int>(f.sourceArities.size()))
        throw DomainError("join element colour out of range");
      if (e.index != next[e.colour]++)
        throw DomainError("component is not monotone; no lattice path");
      w.push_back(e.colour);
    }
    subs.push_back(std::move(w));
  }
  for (std::size_t c = 1; c < next.size(); ++c)
    if (next[c] != f.sourceArities[c - 1] + 1) throw DomainError("join morphism not total");
  return LatticePath(std::move(subs));
}

DeltaSigmaMap toDeltaSigma(const JoinMorphism& f) {
  std::vector<int> offset(f.sourceArities.size() + 1, 0);
  for (std::size_t c = 0; c < f.sourceArities.size(); ++c)
    offset[c + 1] = offset[c] + f.sourceArities[c] + 1;
  DeltaSigmaMap d{offset.back(), {}};
  for (const auto& fiber : f.fibers) {
    std::vector<int> out;
    for (const auto& e : fiber) out.push_back(offset[e.colour - 1] + e.index);
    d.fibers.push_back(std::move(out));
  }
  return d;
}

JoinMorphism fromDeltaSigma(const DeltaSigmaMap& d, const std::vector<int>& sourceArities) {
  std::vector<JoinElement> elems;
  for (std::size_t c = 0; c < sourceArities.size(); ++c)
    for (int i = 0; i <= sourceArities[c]; ++i) elems.push_back({static_cast<int>(c) + 1, i});
  if (static_cast<int>(elems.size()) != d.sourceSize)
    throw DomainError("ΔΣ map source does not match arities");
  JoinMorphism f{sourceArities, {}};
  for (const auto& fiber : d.fibers) {
    std::vector<JoinElement> out;
    for (int p : fiber) out.push_back(elems.at(p));
    f.fibers.push_back(std::move(out));
  }
  return f;
}

LatticePath parsePath(std::string_view text) {
  std::vector<Word> subs(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '|') {
      subs.emplace_back();
    } else if (ch >= '1' && ch <= '9') {
      subs.back().push_back(ch - '0');
    } else if (ch == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos || close == i + 1)
        throw ParseError("unterminated colour at position " + std::to_string(i));
      int c = 0;
      for (std::size_t p = i + 1; p < close; ++p) {
        if (text[p] < '0' || text[p] > '9')
          throw ParseError("bad colour digit at position " + std::to_string(p));
        c = c * 10 + (text[p] - '0');
        if (c > 1000000) throw ParseError("colour too large");
      }
      if (c < 1) throw ParseError("colour must be positive");
      subs.back().push_back(c);
      i = close;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' at position " +
                       std::to_string(i));
    }
  }
  try {
    return LatticePath(std::move(subs));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string formatColour(int c) {
  if (c >= 1 && c <= 9) return std::string(1, static_cast<char>('0' + c));
  return "(" + std::to_string(c) + ")";
}

std::string formatWord(const Word& w) {
  std::string s;
  for (int c : w) s += formatColour(c);
  return s;
}

std::string formatPath(const LatticePath& x) {
  std::string s;
  for (std::size_t j = 0; j < x.substrings().size(); ++j) {
    if (j) s += '|';
    s += formatWord(x.substrings()[j]);
  }
  return s;
}

LatticePath compose(const LatticePath& x, int slot, const LatticePath& y) {
  if (slot < 1 || slot > x.colours()) throw DomainError("compose: slot out of range");
  const int need = x.multiplicity(slot);
  if (need != y.arityOut() + 1)
    throw DomainError("compose: colour " + std::to_string(slot) + " occurs " +
                      std::to_string(need) + " times but y has " +
                      std::to_string(y.arityOut() + 1) + " substrings");
  const int ky = y.colours();
  std::vector<Word> subs;
  int occ = 0;
  for (const auto& w : x.substrings()) {
    Word out;
    for (int c : w) {
      if (c < slot) {
        out.push_back(c);
      } else if (c > slot) {
        out.push_back(c + ky - 1);
      } else {
        for (int d : y.substrings()[occ]) out.push_back(slot - 1 + d);
        ++occ;
      }
    }
    subs.push_back(std::move(out));
  }
  return LatticePath(std::move(subs));
}

LatticePath identityPath(int n) {
  if (n < 0) throw DomainError("identityPath: negative arity");
  return LatticePath(std::vector<Word>(n + 1, Word{1}));
}

std::vector<SimplicialOperator> components(const LatticePath& x) {
  std::vector<SimplicialOperator> out;
  for (int a : x.arities()) out.push_back({a, x.arityOut(), {}});
  for (int j = 0; j <= x.arityOut(); ++j)
    for (int c : x.substrings()[j]) out[c - 1].values.push_back(j);
  return out;
}

SimplicialOperator joyalDual(const std::vector<int>& phi) {
  if (phi.size() < 2) throw DomainError("joyalDual: need at least [1]");
  const int n = static_cast<int>(phi.size()) - 2;
  const int m = phi.back() - 1;
  if (phi.front() != 0 || m < -1) throw DomainError("joyalDual: endpoints not preserved");
  for (std::size_t j = 1; j < phi.size(); ++j)
    if (phi[j] < phi[j - 1]) throw DomainError("joyalDual: not monotone");
  if (m < 0) throw DomainError("joyalDual: target must be at least [1]");
  SimplicialOperator psi{m, n, {}};
  for (int i = 0; i <= m; ++i) {
    int j = 1;
    while (phi[j] <= i) ++j;
    psi.values.push_back(j - 1);
  }
  return psi;
}

std::vector<int> joyalDualInverse(const SimplicialOperator& psi) {
  if (!psi.isMonotone()) throw DomainError("joyalDualInverse: not a monotone operator");
  std::vector<int> phi(psi.target + 2);
  phi[0] = 0;
  phi[psi.target + 1] = psi.source + 1;
  for (int j = 1; j <= psi.target; ++j) {
    int best = -1;
    for (int i = 0; i <= psi.source; ++i)
      if (psi.values[i] < j) best = i;
    phi[j] = best + 1;
  }
  return phi;
}

Permutation identityPermutation(int k) {
  Permutation p(k);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool isPermutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation composePermutations(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("permutation size mismatch");
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Permutation composePermutationOperad(const Permutation& s, int slot, const Permutation& t) {
  LatticePath ps(std::vector<Word>{Word(s.begin(), s.end())});
  LatticePath pt(std::vector<Word>{Word(t.begin(), t.end())});
  auto w = compose(ps, slot, pt).letters();
  return Permutation(w.begin(), w.end());
}

LatticePath symAction(const Permutation& rho, const LatticePath& x) {
  if (static_cast<int>(rho.size()) != x.colours()) throw DomainError("symAction: size mismatch");
  if (!isPermutation(rho)) throw DomainError("symAction: not a permutation");
  std::vector<Word> subs = x.substrings();
  for (auto& w : subs)
    for (int& c : w) c = rho[c - 1];
  return LatticePath(std::move(subs));
}

LatticePath projection(const LatticePath& x, int i, int j) {
  if (!(1 <= i && i < j && j <= x.colours())) throw DomainError("projection: need 1 <= i < j <= k");
  Word w;
  for (int c : x.letters()) {
    if (c == i) w.push_back(1);
    if (c == j) w.push_back(2);
  }
  return LatticePath(std::vector<Word>{w});
}

int ComplexityTable::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  return table.at((i - 1) * k + (j - 1));
}

int switches(const Word& w) {
  int s = 0;
  for (std::size_t p = 1; p < w.size(); ++p)
    if (w[p] != w[p - 1]) ++s;
  return s;
}

ComplexityTable complexityTable(const LatticePath& x) {
  ComplexityTable t;
  t.k = x.colours();
  t.table.assign(t.k * t.k, 0);
  const Word w = x.letters();
  for (int i = 1; i <= t.k; ++i)
    for (int j = i + 1; j <= t.k; ++j) {
      int last = 0, s = 0;
      for (int c : w) {
        if (c != i && c != j) continue;
        if (last && c != last) ++s;
        last = c;
      }
      t.table[(i - 1) * t.k + (j - 1)] = s;
      t.max = std::max(t.max, s);
    }
  return t;
}

int complexity(const LatticePath& x) { return complexityTable(x).max; }

namespace {

// Locate the j-th occurrence (0-based) of colour c: (substring, position).
std::pair<int, int> locate(const LatticePath& x, int c, int j) {
  int seen = 0;
  for (std::size_t s = 0; s < x.substrings().size(); ++s) {
    const auto& w = x.substrings()[s];
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p] == c && seen++ == j) return {static_cast<int>(s), static_cast<int>(p)};
  }
  throw DomainError("occurrence index out of range");
}

}  // namespace

LatticePath inputFace(const LatticePath& x, int colour, int j) {
  if (x.multiplicity(colour) < 2) throw DomainError("inputFace: colour has a single occurrence");
  auto [s, p] = locate(x, colour, j);
  auto subs = x.substrings();
  subs[s].erase(subs[s].begin() + p);
  return LatticePath(std::move(subs));
}

LatticePath inputDegeneracy(const LatticePath& x, int colour, int j) {
  auto [s, p] = locate(x, colour, j);
  auto subs = x.substrings();
  subs[s].insert(subs[s].begin() + p, colour);
  return LatticePath(std::move(subs));
}

LatticePath outputCoface(const LatticePath& x, int j) {
  if (j < 0 || j > x.arityOut() + 1) throw DomainError("outputCoface: index out of range");
  auto subs = x.substrings();
  subs.insert(subs.begin() + j, Word{});
  return LatticePath(std::move(subs));
}

LatticePath outputCodegeneracy(const LatticePath& x, int j) {
  if (j < 0 || j >= x.arityOut()) throw DomainError("outputCodegeneracy: index out of range");
  auto subs = x.substrings();
  subs[j].insert(subs[j].end(), subs[j + 1].begin(), subs[j + 1].end());
  subs.erase(subs.begin() + j + 1);
  return LatticePath(std::move(subs));
}

L1Decomposition decomposeL1(const LatticePath& x) {
  if (complexity(x) > 1) throw DomainError("decomposeL1: complexity exceeds 1");
  Permutation order;
  std::vector<bool> seen(x.colours() + 1, false);
  for (int c : x.letters())
    if (!seen[c]) {
      seen[c] = true;
      order.push_back(c);
    }
  Permutation rank(x.colours());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r] - 1] = static_cast<int>(r) + 1;
  return {symAction(rank, x), order};
}

LatticePath recomposeL1(const L1Decomposition& d) { return symAction(d.permutation, d.monotone); }

namespace {

void forEachCut(const Word& w, int n, const std::function<void(const LatticePath&)>& visit) {
  const int L = static_cast<int>(w.size());
  std::vector<int> cut(n, 0);
  while (true) {
    std::vector<Word> subs;
    int prev = 0;
    for (int c : cut) {
      subs.emplace_back(w.begin() + prev, w.begin() + c);
      prev = c;
    }
    subs.emplace_back(w.begin() + prev, w.end());
    visit(LatticePath(std::move(subs)));
    int p = n - 1;
    while (p >= 0 && cut[p] == L) --p;
    if (p < 0) break;
    ++cut[p];
    for (int q = p + 1; q < n; ++q) cut[q] = cut[p];
  }
}

}  // namespace

void forEachPath(const std::vector<int>& arities, int n,
                 const std::function<void(const LatticePath&)>& visit) {
  if (n < 0) throw DomainError("enumerate: negative output arity");
  Word w;
  for (std::size_t c = 0; c < arities.size(); ++c) {
    if (arities[c] < 0) throw DomainError("enumerate: negative arity");
    w.insert(w.end(), arities[c] + 1, static_cast<int>(c) + 1);
  }
  do {
    forEachCut(w, n, visit);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<LatticePath> enumeratePaths(const std::vector<int>& arities, int n) {
  std::vector<LatticePath> out;
  forEachPath(arities, n, [&](const LatticePath& x) { out.push_back(x); });
  return out;
}

std::uint64_t pathCount(const std::vector<int>& arities, int n) {
  // multinomial built up colour by colour, then C(L+n, n)
  std::uint64_t count = 1;
  std::uint64_t L = 0;
  for (int a : arities) {
    for (int t = 1; t <= a + 1; ++t) {
      ++L;
      count = count * L / t;
    }
  }
  for (int t = 1; t <= n; ++t) count = count * (L + t) / t;
  return count;
}

std::vector<Word> surjectiveWords(int length, int k) {
  std::vector<Word> out;
  if (k == 0) {
    if (length == 0) out.push_back({});
    return out;
  }
  Word w(length, 1);
  while (true) {
    std::vector<bool> seen(k + 1, false);
    int distinct = 0;
    for (int c : w)
      if (!seen[c]) seen[c] = true, ++distinct;
    if (distinct == k) out.push_back(w);
    int p = length - 1;
    while (p >= 0 && w[p] == k) w[p--] = 1;
    if (p < 0) break;
    ++w[p];
  }
  return out;
}

std::vector<LatticePath> smallPaths(int maxLetters, int maxBars) {
  std::vector<LatticePath> out;
  for (int L = 0; L <= maxLetters; ++L)
    for (int k = (L == 0 ? 0 : 1); k <= L; ++k)
      for (const auto& w : surjectiveWords(L, k))
        for (int n = 0; n <= maxBars; ++n)
          forEachCut(w, n, [&](const LatticePath& x) { out.push_back(x); });
  return out;
}

}  // namespace lpo
