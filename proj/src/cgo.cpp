#include "lpo/cgo.hpp"

#include <algorithm>
#include <functional>

namespace lpo {

int pairIndex(int k, int i, int j) {
  if (!(1 <= i && i < j && j <= k)) throw DomainError("pair index out of range");
  // pairs (1,2),(1,3),…,(1,k),(2,3),…
  return (i - 1) * k - (i - 1) * i / 2 + (j - i - 1);
}

CompleteGraphElement CompleteGraphElement::strict(std::vector<int> labels, Permutation order) {
  if (!isPermutation(order)) throw DomainError("strict element needs a permutation");
  const int k = static_cast<int>(order.size());
  if (static_cast<int>(labels.size()) != k * (k - 1) / 2)
    throw DomainError("label count must be k(k-1)/2");
  std::vector<int> pos(k + 1);
  for (int r = 0; r < k; ++r) pos[order[r]] = r;
  std::vector<bool> neutral;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) neutral.push_back(pos[i] < pos[j]);
  CompleteGraphElement e = extended(k, std::move(labels), std::move(neutral));
  e.order_ = std::move(order);
  return e;
}

CompleteGraphElement CompleteGraphElement::extended(int k, std::vector<int> labels,
                                                    std::vector<bool> neutral) {
  if (k < 0) throw DomainError("negative vertex count");
  const std::size_t pairs = static_cast<std::size_t>(k) * (k - 1) / 2;
  if (labels.size() != pairs || neutral.size() != pairs)
    throw DomainError("label/orientation count must be k(k-1)/2");
  for (int l : labels)
    if (l < 0) throw DomainError("labels must be non-negative");
  CompleteGraphElement e;
  e.k_ = k;
  e.labels_ = std::move(labels);
  e.neutral_ = std::move(neutral);
  return e;
}

int CompleteGraphElement::label(int i, int j) const {
  if (i > j) std::swap(i, j);
  return labels_.at(pairIndex(k_, i, j));
}

bool CompleteGraphElement::pointsFrom(int i, int j) const {
  if (i < j) return neutral_.at(pairIndex(k_, i, j));
  return !neutral_.at(pairIndex(k_, j, i));
}

int CompleteGraphElement::maxLabel() const {
  return labels_.empty() ? -1 : *std::max_element(labels_.begin(), labels_.end());
}

bool leq(const CompleteGraphElement& a, const CompleteGraphElement& b) {
  if (a.size() != b.size()) throw DomainError("leq: size mismatch");
  for (std::size_t p = 0; p < a.labels().size(); ++p) {
    if (a.labels()[p] < b.labels()[p]) continue;
    if (a.labels()[p] == b.labels()[p] && a.neutral()[p] == b.neutral()[p]) continue;
    return false;
  }
  return true;
}

CompleteGraphElement composeK(const CompleteGraphElement& a, int slot,
                              const CompleteGraphElement& b) {
  const int ka = a.size(), kb = b.size();
  if (slot < 1 || slot > ka) throw DomainError("composeK: slot out of range");
  const int k = ka - 1 + kb;
  // vertex v of the composite -> (vertex of a, vertex of b or 0)
  auto origin = [&](int v) -> std::pair<int, int> {
    if (v < slot) return {v, 0};
    if (v < slot + kb) return {slot, v - slot + 1};
    return {v - kb + 1, 0};
  };
  std::vector<int> labels;
  std::vector<bool> neutral;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto [ai, bi] = origin(i);
      auto [aj, bj] = origin(j);
      if (ai != aj) {
        labels.push_back(a.label(ai, aj));
        neutral.push_back(a.pointsFrom(ai, aj));
      } else {
        labels.push_back(b.label(bi, bj));
        neutral.push_back(b.pointsFrom(bi, bj));
      }
    }
  if (a.isStrict() && b.isStrict())
    return CompleteGraphElement::strict(std::move(labels),
                                        composePermutationOperad(*a.order(), slot, *b.order()));
  return CompleteGraphElement::extended(k, std::move(labels), std::move(neutral));
}

CompleteGraphElement symActionK(const Permutation& rho, const CompleteGraphElement& a) {
  const int k = a.size();
  if (static_cast<int>(rho.size()) != k || !isPermutation(rho))
    throw DomainError("symActionK: bad permutation");
  std::vector<int> inv(k + 1);
  for (int i = 1; i <= k; ++i) inv[rho[i - 1]] = i;
  std::vector<int> labels;
  std::vector<bool> neutral;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      labels.push_back(a.label(inv[i], inv[j]));
      neutral.push_back(a.pointsFrom(inv[i], inv[j]));
    }
  if (a.isStrict()) {
    Permutation order = *a.order();
    for (int& v : order) v = rho[v - 1];
    return CompleteGraphElement::strict(std::move(labels), std::move(order));
  }
  return CompleteGraphElement::extended(k, std::move(labels), std::move(neutral));
}

bool isExtendedValid(const CompleteGraphElement& e) {
  const int k = e.size();
  std::vector<int> values = e.labels();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int lab : values) {
    // DFS cycle detection in the subgraph of edges carrying this label
    std::vector<int> state(k + 1, 0);
    std::function<bool(int)> cyclic = [&](int v) {
      state[v] = 1;
      for (int w = 1; w <= k; ++w) {
        if (w == v || e.label(v, w) != lab || !e.pointsFrom(v, w)) continue;
        if (state[w] == 1) return true;
        if (state[w] == 0 && cyclic(w)) return true;
      }
      state[v] = 2;
      return false;
    };
    for (int v = 1; v <= k; ++v)
      if (state[v] == 0 && cyclic(v)) return false;
  }
  return true;
}

CompleteGraphElement ctot(const LatticePath& x) {
  const int k = x.colours();
  if (k == 0) return CompleteGraphElement::strict({}, {});
  auto t = complexityTable(x);
  std::vector<int> labels;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) labels.push_back(t.at(i, j) - 1);
  Permutation order;
  std::vector<bool> seen(k + 1, false);
  for (int c : x.letters())
    if (!seen[c]) {
      seen[c] = true;
      order.push_back(c);
    }
  return CompleteGraphElement::strict(std::move(labels), std::move(order));
}

Permutation firstPermutationSubsequence(const LatticePath& x) {
  const Word w = x.letters();
  const int L = static_cast<int>(w.size());
  const int k = x.colours();
  // position tuples p_1 < … < p_k in lexicographic order
  std::vector<int> pos(k);
  std::function<bool(int, int)> search = [&](int depth, int from) {
    if (depth == k) {
      std::vector<bool> seen(k + 1, false);
      for (int p : pos) {
        if (seen[w[p]]) return false;
        seen[w[p]] = true;
      }
      return true;
    }
    for (int p = from; p < L; ++p) {
      pos[depth] = p;
      if (search(depth + 1, p + 1)) return true;
    }
    return false;
  };
  if (!search(0, 0)) throw DomainError("no permutation subsequence");
  Permutation out;
  for (int p : pos) out.push_back(w[p]);
  return out;
}

std::string formatK(const CompleteGraphElement& e) {
  std::string s = "k=" + std::to_string(e.size()) + ";";
  bool first = true;
  for (int i = 1; i <= e.size(); ++i)
    for (int j = i + 1; j <= e.size(); ++j) {
      s += first ? " " : ",";
      first = false;
      s += formatColour(i) + formatColour(j) + ":" + std::to_string(e.label(i, j)) +
           (e.pointsFrom(i, j) ? "+" : "-");
    }
  return s;
}

CompleteGraphElement parseK(std::string_view text) {
  auto fail = [](const std::string& why) { throw ParseError("complete graph: " + why); };
  if (text.substr(0, 2) != "k=") fail("expected 'k='");
  std::size_t p = 2;
  int k = 0;
  while (p < text.size() && text[p] >= '0' && text[p] <= '9') k = k * 10 + (text[p++] - '0');
  if (p == 2) fail("missing vertex count");
  if (p >= text.size() || text[p] != ';') fail("expected ';'");
  ++p;
  const std::size_t pairs = static_cast<std::size_t>(k) * (k - 1) / 2;
  std::vector<int> labels(pairs, -1);
  std::vector<bool> neutral(pairs, true);
  auto readColour = [&]() {
    if (p >= text.size()) fail("truncated pair");
    if (text[p] == '(') {
      std::size_t close = text.find(')', p);
      if (close == std::string_view::npos) fail("unterminated colour");
      int c = std::stoi(std::string(text.substr(p + 1, close - p - 1)));
      p = close + 1;
      return c;
    }
    if (text[p] < '1' || text[p] > '9') fail("bad vertex");
    return text[p++] - '0';
  };
  while (p < text.size()) {
    while (p < text.size() && (text[p] == ' ' || text[p] == ',')) ++p;
    if (p >= text.size()) break;
    int i = readColour(), j = readColour();
    if (!(1 <= i && i < j && j <= k)) fail("pair out of range");
    if (p >= text.size() || text[p] != ':') fail("expected ':'");
    ++p;
    int lab = 0;
    std::size_t start = p;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') lab = lab * 10 + (text[p++] - '0');
    if (p == start || p >= text.size() || (text[p] != '+' && text[p] != '-')) fail("bad label");
    labels[pairIndex(k, i, j)] = lab;
    neutral[pairIndex(k, i, j)] = text[p++] == '+';
  }
  for (int l : labels)
    if (l < 0) fail("missing pair");
  return CompleteGraphElement::extended(k, std::move(labels), std::move(neutral));
}

std::vector<CompleteGraphElement> enumerateStrictK(int k, int maxLabel) {
  std::vector<CompleteGraphElement> out;
  const int pairs = k * (k - 1) / 2;
  Permutation order = identityPermutation(k);
  do {
    std::vector<int> labels(pairs, 0);
    while (true) {
      out.push_back(CompleteGraphElement::strict(labels, order));
      int p = pairs - 1;
      while (p >= 0 && labels[p] == maxLabel) labels[p--] = 0;
      if (p < 0) break;
      ++labels[p];
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<CompleteGraphElement> enumerateExtendedK(int k, int maxLabel) {
  std::vector<CompleteGraphElement> out;
  const int pairs = k * (k - 1) / 2;
  std::vector<int> labels(pairs, 0);
  while (true) {
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<bool> neutral(pairs);
      for (int p = 0; p < pairs; ++p) neutral[p] = (mask >> p) & 1u;
      auto e = CompleteGraphElement::extended(k, labels, neutral);
      if (isExtendedValid(e)) out.push_back(std::move(e));
    }
    int p = pairs - 1;
    while (p >= 0 && labels[p] == maxLabel) labels[p--] = 0;
    if (p < 0) break;
    ++labels[p];
  }
  return out;
}

}  // namespace lpo
