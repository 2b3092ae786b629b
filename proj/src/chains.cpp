#include "lpo/chains.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lpo {

ChainElement ChainElement::generator(const LatticePath& x, long modulus) {
  if (!isNondegenerate(x)) throw DomainError("degenerate generator " + formatPath(x));
  ChainElement e(modulus);
  e.add(x, 1);
  return e;
}

long long ChainElement::normalize(long long c) const {
  if (modulus_ == 0) return c;
  c %= modulus_;
  return c < 0 ? c + modulus_ : c;
}

void ChainElement::add(const LatticePath& x, long long c) {
  c = normalize(c);
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(x, c);
  if (!fresh) {
    it->second = normalize(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

long long ChainElement::coefficient(const LatticePath& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? 0 : it->second;
}

ChainElement& ChainElement::operator+=(const ChainElement& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

ChainElement& ChainElement::operator-=(const ChainElement& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

ChainElement ChainElement::operator+(const ChainElement& o) const {
  ChainElement r = *this;
  return r += o;
}

ChainElement ChainElement::operator-(const ChainElement& o) const {
  ChainElement r = *this;
  return r -= o;
}

ChainElement ChainElement::operator*(long long c) const {
  ChainElement r(modulus_);
  for (const auto& [x, v] : terms_) r.add(x, v * c);
  return r;
}

bool isNondegenerate(const LatticePath& x) {
  for (const auto& w : x.substrings())
    for (std::size_t p = 1; p < w.size(); ++p)
      if (w[p] == w[p - 1]) return false;
  return true;
}

int chainDegree(const LatticePath& x) { return x.letterCount() - x.colours(); }

ChainElement boundary(const LatticePath& x) {
  ChainElement out;
  // The extra (-1)^{|x|-n+1} gives d(u o_i v) = du o_i v + (-1)^{|u|} u o_i dv
  // for the composition below.
  int before = chainDegree(x) - x.arityOut() + 1;
  const auto ar = x.arities();
  for (int c = 1; c <= x.colours(); ++c) {
    if (ar[c - 1] >= 1) {
      for (int j = 0; j <= ar[c - 1]; ++j) {
        LatticePath y = inputFace(x, c, j);
        if (isNondegenerate(y)) out.add(y, (before + j) % 2 ? -1 : 1);
      }
    }
    before += ar[c - 1];
  }
  return out;
}

ChainElement boundary(const ChainElement& e) {
  ChainElement out(e.modulus());
  for (const auto& [x, c] : e.terms()) out += boundary(x) * c;
  return out;
}

namespace {

int permutationParity(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv % 2;
}

LatticePath expansionPath(const Word& u, const std::vector<int>& t) {
  const int n = t.back();
  std::vector<Word> subs(n + 1);
  for (std::size_t l = 0; l < u.size(); ++l)
    for (int s = t[l]; s <= t[l + 1]; ++s) subs[s].push_back(u[l]);
  return LatticePath(std::move(subs));
}

}  // namespace

int shuffleSign(const Word& u, const std::vector<int>& t) {
  const int k = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
  const int L = static_cast<int>(u.size());
  const int n = t.back();
  // A dimension is either a gap (colour c, j-th gap) of u or a cut coordinate.
  // Encode gaps as (c, j) -> id, cut coordinates s -> id.
  std::vector<std::vector<int>> gapId(k + 1);
  int next = 0;
  std::vector<int> source;
  for (int c = 1; c <= k; ++c) {
    int cnt = static_cast<int>(std::count(u.begin(), u.end(), c));
    for (int j = 0; j + 1 < cnt; ++j) {
      gapId[c].push_back(next);
      source.push_back(next++);
    }
  }
  std::vector<int> cutId(n + 1);
  for (int s = 1; s <= n; ++s) {
    cutId[s] = next;
    source.push_back(next++);
  }
  std::vector<int> target;
  for (int c = 1; c <= k; ++c) {
    int idx = 0;
    std::vector<int> letters;
    for (int l = 0; l < L; ++l)
      if (u[l] == c) letters.push_back(l);
    for (std::size_t q = 0; q < letters.size(); ++q) {
      const int l = letters[q];
      for (int s = t[l] + 1; s <= t[l + 1]; ++s) target.push_back(cutId[s]);
      if (q + 1 < letters.size()) target.push_back(gapId[c][idx++]);
    }
  }
  std::vector<int> pos(next);
  for (std::size_t i = 0; i < target.size(); ++i) pos[target[i]] = static_cast<int>(i);
  std::vector<int> seq;
  for (int d : source) seq.push_back(pos[d]);
  return permutationParity(seq) ? -1 : 1;
}

std::vector<ExpansionTerm> expansionTerms(const Word& u, int n) {
  if (n < 0) throw DomainError("expansion: negative cut count");
  if (u.empty()) throw DomainError("expansion: empty word");
  const int L = static_cast<int>(u.size());
  std::vector<ExpansionTerm> out;
  std::vector<int> t(L + 1, 0);
  t[L] = n;
  // interior values t_1..t_{L-1} nondecreasing in [0, n]
  while (true) {
    out.push_back({expansionPath(u, t), shuffleSign(u, t), t});
    int p = L - 1;
    while (p >= 1 && t[p] == n) --p;
    if (p < 1) break;
    ++t[p];
    for (int q = p + 1; q < L; ++q) t[q] = t[p];
  }
  return out;
}

ChainElement cofaceExpansion(const ChainElement& u, int n) {
  ChainElement out(u.modulus());
  for (const auto& [x, c] : u.terms()) {
    if (x.arityOut() != 0) throw DomainError("expansion needs bar-free generators");
    for (const auto& e : expansionTerms(x.letters(), n)) out.add(e.term, c * e.sign);
  }
  return out;
}

ChainElement surjCompose(const Word& u, int slot, const Word& v) {
  LatticePath pu(std::vector<Word>{u}), pv(std::vector<Word>{v});
  const int k = pu.colours(), kv = pv.colours();
  if (slot < 1 || slot > k) throw DomainError("surjCompose: slot out of range");
  const auto ar = pu.arities();
  int before = 0;
  for (int c = 1; c < slot; ++c) before += ar[c - 1];
  const int dv = chainDegree(pv);
  const int outer = (dv * before) % 2 ? -1 : 1;
  ChainElement out;
  for (const auto& e : expansionTerms(v, ar[slot - 1])) {
    Word w;
    int occ = 0;
    for (int a : u) {
      if (a < slot) {
        w.push_back(a);
      } else if (a > slot) {
        w.push_back(a + kv - 1);
      } else {
        for (int b : e.term.substrings()[occ]) w.push_back(b + slot - 1);
        ++occ;
      }
    }
    LatticePath composite(std::vector<Word>{w});
    if (isNondegenerate(composite)) out.add(composite, outer * e.sign);
  }
  return out;
}

ChainElement surjCompose(const ChainElement& u, int slot, const ChainElement& v) {
  ChainElement out(u.modulus());
  for (const auto& [x, a] : u.terms())
    for (const auto& [y, b] : v.terms()) {
      if (x.arityOut() != 0 || y.arityOut() != 0)
        throw DomainError("surjCompose needs bar-free generators");
      out += surjCompose(x.letters(), slot, y.letters()) * (a * b);
    }
  return out;
}

ChainElement symActionChain(const Permutation& rho, const ChainElement& u) {
  ChainElement out(u.modulus());
  for (const auto& [x, c] : u.terms()) {
    const auto ar = x.arities();
    int sign = 1;
    for (int a = 1; a <= x.colours(); ++a)
      for (int b = a + 1; b <= x.colours(); ++b)
        if (rho[a - 1] > rho[b - 1] && (ar[a - 1] * ar[b - 1]) % 2) sign = -sign;
    out.add(symAction(rho, x), c * sign);
  }
  return out;
}

int complexityFiltration(const ChainElement& e) {
  int m = 0;
  for (const auto& [x, c] : e.terms()) m = std::max(m, complexity(x));
  return m;
}

std::vector<Word> surjectionGenerators(int maxLetters, int k) {
  std::vector<Word> out;
  for (int L = k; L <= maxLetters; ++L)
    for (auto& w : surjectiveWords(L, k)) {
      bool ok = true;
      for (std::size_t p = 1; p < w.size(); ++p)
        if (w[p] == w[p - 1]) ok = false;
      if (ok) out.push_back(std::move(w));
    }
  return out;
}

std::vector<LatticePath> subdividedGenerators(int maxLetters, int maxBars) {
  std::vector<LatticePath> out;
  for (auto& x : smallPaths(maxLetters, maxBars))
    if (x.colours() > 0 && isNondegenerate(x)) out.push_back(std::move(x));
  return out;
}

ChainElement parseChain(std::string_view text, long modulus) {
  ChainElement out(modulus);
  std::size_t p = 0;
  auto skip = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  skip();
  if (text.substr(p) == "0") return out;
  bool any = false;
  while (p < text.size()) {
    long long sign = 1;
    if (text[p] == '+' || text[p] == '-') {
      if (text[p] == '-') sign = -1;
      ++p;
      skip();
    } else if (any) {
      throw ParseError("chain: expected '+' or '-' at position " + std::to_string(p));
    }
    std::size_t start = p;
    while (p < text.size() && !std::isspace(static_cast<unsigned char>(text[p])) &&
           text[p] != '+' && text[p] != '-')
      ++p;
    std::string_view tok = text.substr(start, p - start);
    if (tok.empty()) throw ParseError("chain: empty term");
    long long coef = 1;
    auto star = tok.find('*');
    if (star != std::string_view::npos) {
      std::string num(tok.substr(0, star));
      if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
        throw ParseError("chain: bad coefficient '" + num + "'");
      coef = std::stoll(num);
      tok = tok.substr(star + 1);
    }
    LatticePath x = parsePath(tok);
    if (!isNondegenerate(x)) throw ParseError("chain: degenerate generator " + std::string(tok));
    out.add(x, sign * coef);
    any = true;
    skip();
  }
  if (!any) throw ParseError("chain: empty input");
  return out;
}

std::string formatChain(const ChainElement& e) {
  if (e.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : e.terms()) {
    if (!first) os << ' ';
    first = false;
    os << (c < 0 ? '-' : '+') << (c < 0 ? -c : c) << '*' << formatPath(x);
  }
  return os.str();
}

std::string formatChainPretty(const ChainElement& e) {
  if (e.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : e.terms()) {
    long long a = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1) os << a << '*';
    os << formatPath(x);
  }
  return os.str();
}

Field Ring::field() const {
  return kind == RingKind::Prime ? Field::prime(p) : Field::rationals();
}

std::string Ring::name() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::Prime: return "F" + std::to_string(p);
  }
  return "?";
}

Ring Ring::parse(std::string_view text) {
  if (text == "z" || text == "Z") return {RingKind::Integers, 0};
  if (text == "q" || text == "Q") return {RingKind::Rationals, 0};
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::string num(text.substr(1));
    if (!std::all_of(num.begin(), num.end(), ::isdigit)) throw ParseError("bad ring " + std::string(text));
    long p = std::stol(num);
    Field::prime(p);
    return {RingKind::Prime, p};
  }
  throw ParseError("unknown ring '" + std::string(text) + "' (use z, q or fP)");
}

int ChainComplex::dimension(int degree) const {
  auto it = basis.find(degree);
  return it == basis.end() ? 0 : static_cast<int>(it->second.size());
}

QMatrix ChainComplex::d(int degree) const {
  auto it = differential.find(degree);
  if (it != differential.end()) return it->second;
  return QMatrix(dimension(targetDegree(degree)), dimension(degree));
}

bool ChainComplex::squaresToZero() const {
  for (const auto& [deg, m] : differential) {
    QMatrix next = d(targetDegree(deg));
    if (next.cols != m.rows) return false;
    QMatrix prod = multiply(next, m);
    for (auto& x : prod.data) x = ring.field().reduce(x);
    if (!isZero(prod)) return false;
  }
  return true;
}

std::vector<HomologyGroup> homology(const ChainComplex& c, int lo, int hi) {
  if (!c.squaresToZero()) throw DomainError("homology: differential does not square to zero");
  const Field f = c.ring.field();
  std::vector<HomologyGroup> out;
  for (int n = lo; n <= hi; ++n) {
    const int incomingFrom = c.cohomological ? n - 1 : n + 1;
    QMatrix dout = c.d(n), din = c.d(incomingFrom);
    HomologyGroup h;
    h.degree = n;
    h.rank = c.dimension(n) - rank(dout, f) - rank(din, f);
    if (c.ring.kind == RingKind::Integers)
      for (const Z& z : smithDiagonal(din))
        if (z > 1) h.torsion.push_back(z);
    out.push_back(std::move(h));
  }
  return out;
}

std::string formatHomology(const std::vector<HomologyGroup>& hs) {
  std::ostringstream os;
  for (const auto& h : hs) {
    os << "degree " << h.degree << ": rank " << h.rank;
    if (!h.torsion.empty()) {
      os << ", torsion";
      for (const auto& z : h.torsion) os << " Z/" << z.get_str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace lpo
