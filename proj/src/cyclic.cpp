#include "lpo/cyclic.hpp"

#include <algorithm>

namespace lpo {

namespace {

void validateCyclic(const JoinMorphism& f) {
  const int k = static_cast<int>(f.sourceArities.size());
  std::vector<std::vector<int>> seq(k + 1);
  for (const auto& fiber : f.fibers)
    for (const auto& e : fiber) {
      if (e.colour < 1 || e.colour > k) throw DomainError("cyclic path: colour out of range");
      seq[e.colour].push_back(e.index);
    }
  for (int c = 1; c <= k; ++c) {
    const int len = f.sourceArities[c - 1] + 1;
    if (static_cast<int>(seq[c].size()) != len)
      throw DomainError("cyclic path: wrong multiplicity for colour " + std::to_string(c));
    for (int q = 0; q < len; ++q)
      if (seq[c][q] != (seq[c][0] + q) % len)
        throw DomainError("cyclic path: component is not a rotation of a monotone map");
  }
}

}  // namespace

CyclicLatticePath::CyclicLatticePath(JoinMorphism form) : form_(std::move(form)) {
  if (form_.fibers.empty()) throw DomainError("cyclic path needs at least one substring");
  validateCyclic(form_);
}

CyclicLatticePath::CyclicLatticePath(const LatticePath& base, const std::vector<int>& markers) {
  const auto ar = base.arities();
  if (markers.size() != ar.size()) throw DomainError("one marker per colour required");
  for (std::size_t c = 0; c < ar.size(); ++c)
    if (markers[c] < 0 || markers[c] > ar[c]) throw DomainError("marker out of range");
  form_.sourceArities = ar;
  std::vector<int> seen(ar.size() + 1, 0);
  for (const auto& w : base.substrings()) {
    std::vector<JoinElement> fiber;
    for (int c : w) {
      const int len = ar[c - 1] + 1;
      fiber.push_back({c, ((seen[c]++ - markers[c - 1]) % len + len) % len});
    }
    form_.fibers.push_back(std::move(fiber));
  }
}

CyclicLatticePath CyclicLatticePath::plain(const LatticePath& base) {
  return CyclicLatticePath(toJoinMorphism(base));
}

LatticePath CyclicLatticePath::base() const {
  std::vector<Word> subs;
  for (const auto& fiber : form_.fibers) {
    Word w;
    for (const auto& e : fiber) w.push_back(e.colour);
    subs.push_back(std::move(w));
  }
  return LatticePath(std::move(subs));
}

std::vector<int> CyclicLatticePath::markers() const {
  std::vector<int> mk(colours(), -1), seen(colours() + 1, 0);
  for (const auto& fiber : form_.fibers)
    for (const auto& e : fiber) {
      if (e.index == 0) mk[e.colour - 1] = seen[e.colour];
      ++seen[e.colour];
    }
  return mk;
}

CyclicLatticePath parseCyclicPath(std::string_view text) {
  std::string plainText;
  // mark positions in letter order
  std::vector<bool> marked;
  bool pending = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '^') {
      if (pending) throw ParseError("double marker at position " + std::to_string(i));
      pending = true;
      continue;
    }
    if (ch == '|' && pending) throw ParseError("marker before a bar at position " + std::to_string(i));
    plainText += ch;
    if (ch == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw ParseError("unterminated colour");
      plainText += std::string(text.substr(i + 1, close - i));
      i = close;
    }
    if (ch != '|') {
      marked.push_back(pending);
      pending = false;
    }
  }
  if (pending) throw ParseError("dangling marker");
  LatticePath base = parsePath(plainText);
  std::vector<int> markers(base.colours(), -1);
  std::vector<int> seen(base.colours() + 1, 0);
  const Word letters = base.letters();
  for (std::size_t p = 0; p < letters.size(); ++p) {
    int c = letters[p];
    if (marked[p]) {
      if (markers[c - 1] >= 0) throw ParseError("colour " + std::to_string(c) + " marked twice");
      markers[c - 1] = seen[c];
    }
    ++seen[c];
  }
  for (int& m : markers)
    if (m < 0) m = 0;  // unmarked colours default to their first occurrence
  return CyclicLatticePath(base, markers);
}

std::string formatCyclicPath(const CyclicLatticePath& x) {
  std::string s;
  for (std::size_t j = 0; j < x.form().fibers.size(); ++j) {
    if (j) s += '|';
    for (const auto& e : x.form().fibers[j]) {
      if (e.index == 0) s += '^';
      s += formatColour(e.colour);
    }
  }
  return s;
}

CyclicLatticePath composeCyclic(const CyclicLatticePath& x, int slot, const CyclicLatticePath& y) {
  const int kx = x.colours(), ky = y.colours();
  if (slot < 1 || slot > kx) throw DomainError("composeCyclic: slot out of range");
  const int len = x.form().sourceArities[slot - 1] + 1;
  if (len != y.arityOut() + 1)
    throw DomainError("composeCyclic: occurrence count does not match substring count of y");
  JoinMorphism out;
  for (int c = 1; c <= kx; ++c) {
    if (c == slot)
      out.sourceArities.insert(out.sourceArities.end(), y.form().sourceArities.begin(),
                               y.form().sourceArities.end());
    else
      out.sourceArities.push_back(x.form().sourceArities[c - 1]);
  }
  for (const auto& fiber : x.form().fibers) {
    std::vector<JoinElement> f;
    for (const auto& e : fiber) {
      if (e.colour < slot) {
        f.push_back(e);
      } else if (e.colour > slot) {
        f.push_back({e.colour + ky - 1, e.index});
      } else {
        // the occurrence with index a receives y's a-th substring
        for (const auto& g : y.form().fibers[e.index]) f.push_back({slot - 1 + g.colour, g.index});
      }
    }
    out.fibers.push_back(std::move(f));
  }
  return CyclicLatticePath(std::move(out));
}

CyclicLatticePath composeCyclicDS(const CyclicLatticePath& x, int slot,
                                  const CyclicLatticePath& y) {
  const auto& ax = x.form().sourceArities;
  const auto& ay = y.form().sourceArities;
  if (slot < 1 || slot > static_cast<int>(ax.size()))
    throw DomainError("composeCyclicDS: slot out of range");
  std::vector<DeltaSigmaMap> parts;
  std::vector<int> arities;
  for (std::size_t c = 0; c < ax.size(); ++c) {
    if (static_cast<int>(c) + 1 == slot) {
      DeltaSigmaMap dy = toDeltaSigma(y.form());
      if (dy.targetSize() != ax[c] + 1) throw DomainError("composeCyclicDS: size mismatch");
      parts.push_back(dy);
      arities.insert(arities.end(), ay.begin(), ay.end());
    } else {
      parts.push_back(DeltaSigmaMap::identity(ax[c] + 1));
      arities.push_back(ax[c]);
    }
  }
  DeltaSigmaMap composite = composeDS(toDeltaSigma(x.form()), joinDS(parts));
  return CyclicLatticePath(fromDeltaSigma(composite, arities));
}

CyclicLatticePath cyclicIdentity(int n) { return CyclicLatticePath::plain(identityPath(n)); }

CyclicLatticePath symActionCyclic(const Permutation& rho, const CyclicLatticePath& x) {
  const int k = x.colours();
  if (static_cast<int>(rho.size()) != k || !isPermutation(rho))
    throw DomainError("symActionCyclic: bad permutation");
  JoinMorphism f = x.form();
  for (int c = 1; c <= k; ++c) f.sourceArities[rho[c - 1] - 1] = x.form().sourceArities[c - 1];
  for (auto& fiber : f.fibers)
    for (auto& e : fiber) e.colour = rho[e.colour - 1];
  return CyclicLatticePath(std::move(f));
}

CyclicLatticePath outputRotate(int steps, const CyclicLatticePath& x) {
  const int len = x.arityOut() + 1;
  steps = ((steps % len) + len) % len;
  JoinMorphism f = x.form();
  for (int t = 0; t < len; ++t) f.fibers[(t + steps) % len] = x.form().fibers[t];
  return CyclicLatticePath(std::move(f));
}

int cyclicComplexity(const CyclicLatticePath& x) {
  int best = 0;
  for (int g = 0; g <= x.arityOut(); ++g)
    best = std::max(best, complexity(outputRotate(g, x).base()));
  return best + (best % 2);
}

std::vector<CyclicLatticePath> smallCyclicPaths(int maxLetters, int maxBars) {
  std::vector<CyclicLatticePath> out;
  for (const auto& p : smallPaths(maxLetters, maxBars)) {
    const auto ar = p.arities();
    std::vector<int> mk(ar.size(), 0);
    while (true) {
      out.emplace_back(p, mk);
      int c = static_cast<int>(ar.size()) - 1;
      while (c >= 0 && mk[c] == ar[c]) mk[c--] = 0;
      if (c < 0) break;
      ++mk[c];
    }
  }
  return out;
}

}  // namespace lpo
