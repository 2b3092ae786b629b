#include "lpo/simplicial.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lpo {

namespace {

bool isSurjection(const SimplicialOperator& s) {
  if (!s.isMonotone()) return false;
  if (s.values.front() != 0 || s.values.back() != s.target) return false;
  for (std::size_t i = 1; i < s.values.size(); ++i)
    if (s.values[i] - s.values[i - 1] > 1) return false;
  return true;
}

SimplicialOperator constantMap(int n) { return {n, 0, std::vector<int>(n + 1, 0)}; }

}  // namespace

SimplicialSet::SimplicialSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
  position_.resize(cells_.size());
  for (std::size_t id = 0; id < cells_.size(); ++id) {
    const Cell& c = cells_[id];
    if (c.dim < 0) throw DomainError("simplicial set: negative dimension");
    if (static_cast<int>(byDim_.size()) <= c.dim) byDim_.resize(c.dim + 1);
    position_[id] = static_cast<int>(byDim_[c.dim].size());
    byDim_[c.dim].push_back(static_cast<int>(id));
    const std::size_t expected = c.dim == 0 ? 0 : static_cast<std::size_t>(c.dim) + 1;
    if (c.faces.size() != expected)
      throw DomainError("simplicial set: cell " + c.label + " needs " + std::to_string(expected) +
                        " faces");
    for (const auto& f : c.faces) {
      if (f.id < 0 || f.id >= static_cast<int>(cells_.size()))
        throw DomainError("simplicial set: face of " + c.label + " refers to an unknown cell");
      if (f.degeneracy.source != c.dim - 1 || f.degeneracy.target != cells_[f.id].dim ||
          !isSurjection(f.degeneracy))
        throw DomainError("simplicial set: bad face map on " + c.label);
    }
  }
  for (std::size_t id = 0; id < cells_.size(); ++id) {
    const Cell& c = cells_[id];
    if (c.dim < 2) continue;
    for (int i = 0; i < c.dim; ++i)
      for (int j = i + 1; j <= c.dim; ++j) {
        Simplex a = apply(c.faces[j], SimplicialOperator::coface(c.dim - 1, i));
        Simplex b = apply(c.faces[i], SimplicialOperator::coface(c.dim - 1, j - 1));
        if (!(a == b))
          throw DomainError("simplicial set: identity d_" + std::to_string(i) + " d_" +
                            std::to_string(j) + " fails on " + c.label);
      }
  }
}

int SimplicialSet::dimension() const { return static_cast<int>(byDim_.size()) - 1; }

const std::vector<int>& SimplicialSet::ofDimension(int n) const {
  static const std::vector<int> none;
  if (n < 0 || n >= static_cast<int>(byDim_.size())) return none;
  return byDim_[n];
}

int SimplicialSet::find(const std::string& label) const {
  for (std::size_t id = 0; id < cells_.size(); ++id)
    if (cells_[id].label == label) return static_cast<int>(id);
  return -1;
}

Simplex SimplicialSet::nondegenerate(int id) const {
  return {id, SimplicialOperator::identity(cells_.at(id).dim)};
}

Simplex SimplicialSet::apply(const Simplex& x, const SimplicialOperator& alpha) const {
  const SimplicialOperator beta = composeOps(x.degeneracy, alpha);
  // factor beta = ι ∘ ε with ε surjective and ι injective
  std::vector<int> image(beta.values);
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const int l = static_cast<int>(image.size()) - 1;
  SimplicialOperator eps{beta.source, l, {}};
  for (int v : beta.values)
    eps.values.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
  SimplicialOperator iota{l, beta.target, image};
  if (l == beta.target) return {x.id, eps};
  int j = 0;
  while (j < static_cast<int>(image.size()) && image[j] == j) ++j;
  // j is the smallest value missed by ι; ι = δ^j ∘ ι'
  SimplicialOperator rest{l, beta.target - 1, {}};
  for (int v : image) rest.values.push_back(v < j ? v : v - 1);
  Simplex faceX = cells_.at(x.id).faces.at(j);
  Simplex y = apply(faceX, rest);
  return {y.id, composeOps(y.degeneracy, eps)};
}

Simplex SimplicialSet::face(const Simplex& x, int j) const {
  return apply(x, SimplicialOperator::coface(x.dimension(), j));
}

SimplicialSet simplicialSetFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("simplicial set json: ") + e.what());
  }
  try {
    const auto& list = j.at("simplices");
    std::map<std::string, int> ids;
    std::vector<SimplicialSet::Cell> cells;
    for (const auto& s : list) {
      SimplicialSet::Cell c;
      c.label = s.at("id").get<std::string>();
      c.dim = s.at("dim").get<int>();
      if (!ids.emplace(c.label, static_cast<int>(cells.size())).second)
        throw ParseError("simplicial set json: duplicate id " + c.label);
      cells.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& s = list[i];
      if (!s.contains("faces")) continue;
      for (const auto& f : s["faces"]) {
        std::string target;
        std::vector<int> map;
        if (f.is_string()) {
          target = f.get<std::string>();
        } else {
          target = f.at("simplex").get<std::string>();
          map = f.at("map").get<std::vector<int>>();
        }
        auto it = ids.find(target);
        if (it == ids.end()) throw ParseError("simplicial set json: unknown face " + target);
        const int tdim = cells[it->second].dim;
        SimplicialOperator op;
        if (f.is_string()) {
          op = SimplicialOperator::identity(tdim);
        } else {
          op = {static_cast<int>(map.size()) - 1, tdim, map};
        }
        cells[i].faces.push_back({it->second, op});
      }
    }
    try {
      return SimplicialSet(std::move(cells));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("simplicial set json: ") + e.what());
  }
}

SimplicialSet fromFacets(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> all;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const int n = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int b = 0; b < n; ++b)
        if (mask & (1u << b)) s.push_back(f[b]);
      all.insert(s);
    }
  }
  std::vector<std::vector<int>> ordered(all.begin(), all.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::map<std::vector<int>, int> ids;
  std::vector<SimplicialSet::Cell> cells;
  for (const auto& s : ordered) {
    SimplicialSet::Cell c;
    c.dim = static_cast<int>(s.size()) - 1;
    for (std::size_t v = 0; v < s.size(); ++v) c.label += (v ? "," : "") + std::to_string(s[v]);
    if (c.dim > 0)
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<int> f = s;
        f.erase(f.begin() + j);
        c.faces.push_back({ids.at(f), SimplicialOperator::identity(c.dim - 1)});
      }
    ids[s] = static_cast<int>(cells.size());
    cells.push_back(std::move(c));
  }
  return SimplicialSet(std::move(cells));
}

SimplicialSet standardSimplex(int n) {
  if (n < 0) throw DomainError("standardSimplex: n >= 0");
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return fromFacets({v});
}

SimplicialSet sphere(int m) {
  if (m < 0) throw DomainError("sphere: m >= 0");
  std::vector<SimplicialSet::Cell> cells;
  cells.push_back({"*", 0, {}});
  SimplicialSet::Cell top{"s", m, {}};
  if (m > 0)
    for (int j = 0; j <= m; ++j) top.faces.push_back({0, constantMap(m - 1)});
  cells.push_back(std::move(top));
  return SimplicialSet(std::move(cells));
}

SimplicialSet realProjectivePlane() {
  return fromFacets({{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
                     {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}});
}

SimplicialSet torus() {
  std::vector<std::vector<int>> facets;
  auto v = [](int i, int j) { return 3 * ((i + 3) % 3) + ((j + 3) % 3); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      facets.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      facets.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return fromFacets(facets);
}

SimplicialSet builtinSpace(const std::string& name) {
  if (name == "rp2") return realProjectivePlane();
  if (name == "torus") return torus();
  if (name.rfind("sphere", 0) == 0 && name.size() > 6) return sphere(std::stoi(name.substr(6)));
  if (name.rfind("s", 0) == 0 && name.size() > 1 &&
      std::all_of(name.begin() + 1, name.end(), ::isdigit))
    return sphere(std::stoi(name.substr(1)));
  if (name.rfind("simplex", 0) == 0 && name.size() > 7) return standardSimplex(std::stoi(name.substr(7)));
  throw ParseError("unknown space '" + name + "' (rp2, torus, sN, simplexN or a JSON file)");
}

SimplicialCochain zeroCochain(const SimplicialSet& X, int degree) {
  return {degree, std::vector<Q>(X.ofDimension(degree).size(), Q(0))};
}

Q evaluate(const SimplicialSet& X, const SimplicialCochain& f, const Simplex& y) {
  if (y.dimension() != f.degree) throw DomainError("cochain evaluated on a simplex of the wrong dimension");
  if (!y.isNondegenerate()) return 0;
  return f.values.at(X.positionInDimension(y.id));
}

SimplicialCochain reduce(const SimplicialCochain& f, const Field& F) {
  SimplicialCochain g = f;
  for (auto& v : g.values) v = F.reduce(v);
  return g;
}

SimplicialCochain add(const SimplicialCochain& a, const SimplicialCochain& b, const Q& scale) {
  if (a.degree != b.degree || a.values.size() != b.values.size())
    throw DomainError("cochain sum: shape mismatch");
  SimplicialCochain c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += scale * b.values[i];
  return c;
}

SimplicialCochain coboundary(const SimplicialSet& X, const SimplicialCochain& f, const Field& F) {
  SimplicialCochain g = zeroCochain(X, f.degree + 1);
  const auto& ids = X.ofDimension(f.degree + 1);
  for (std::size_t p = 0; p < ids.size(); ++p) {
    Simplex y = X.nondegenerate(ids[p]);
    Q s = 0;
    for (int j = 0; j <= f.degree + 1; ++j) {
      Q v = evaluate(X, f, X.face(y, j));
      s += j % 2 ? -v : v;
    }
    g.values[p] = F.reduce(s);
  }
  return g;
}

ChainComplex normalizedCochains(const SimplicialSet& X, Ring ring) {
  ChainComplex c;
  c.ring = ring;
  c.cohomological = true;
  for (int n = 0; n <= X.dimension() + 1; ++n) {
    std::vector<std::string> names;
    for (int id : X.ofDimension(n)) names.push_back(X.cells()[id].label);
    c.basis[n] = std::move(names);
  }
  for (int n = 0; n <= X.dimension(); ++n) {
    const auto& src = X.ofDimension(n);
    const auto& dst = X.ofDimension(n + 1);
    QMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t p = 0; p < dst.size(); ++p) {
      Simplex y = X.nondegenerate(dst[p]);
      for (int j = 0; j <= n + 1; ++j) {
        Simplex f = X.face(y, j);
        if (!f.isNondegenerate()) continue;
        m(static_cast<int>(p), X.positionInDimension(f.id)) += j % 2 ? -1 : 1;
      }
    }
    c.differential[n] = std::move(m);
  }
  return c;
}

ChainComplex normalizedChains(const SimplicialSet& X, Ring ring) {
  ChainComplex co = normalizedCochains(X, ring);
  ChainComplex c;
  c.ring = ring;
  c.cohomological = false;
  c.basis = co.basis;
  for (const auto& [n, m] : co.differential) c.differential[n + 1] = transpose(m);
  return c;
}

bool isCoboundary(const SimplicialSet& X, const SimplicialCochain& f, const Field& F) {
  if (f.degree == 0) {
    for (const auto& v : f.values)
      if (F.reduce(v) != 0) return false;
    return true;
  }
  ChainComplex c = normalizedCochains(X, {F.p ? RingKind::Prime : RingKind::Rationals, F.p});
  return solve(c.d(f.degree - 1), f.values, F).has_value();
}

std::vector<SimplicialCochain> cohomologyBasis(const SimplicialSet& X, int n, const Field& F) {
  ChainComplex c = normalizedCochains(X, {F.p ? RingKind::Prime : RingKind::Rationals, F.p});
  std::vector<std::vector<Q>> span;
  auto spanRank = [&]() {
    if (span.empty()) return 0;
    QMatrix M(static_cast<int>(span.front().size()), static_cast<int>(span.size()));
    for (std::size_t col = 0; col < span.size(); ++col)
      for (std::size_t r = 0; r < span[col].size(); ++r)
        M(static_cast<int>(r), static_cast<int>(col)) = span[col][r];
    return rank(M, F);
  };
  if (n > 0) {
    QMatrix din = c.d(n - 1);
    for (int col = 0; col < din.cols; ++col) {
      std::vector<Q> v(din.rows);
      for (int r = 0; r < din.rows; ++r) v[r] = din(r, col);
      span.push_back(std::move(v));
    }
  }
  std::vector<SimplicialCochain> out;
  int current = spanRank();
  for (auto& z : nullspace(c.d(n), F)) {
    span.push_back(z);
    int next = spanRank();
    if (next > current) {
      out.push_back({n, z});
      current = next;
    } else {
      span.pop_back();
    }
  }
  return out;
}

SimplicialCochain cochainAction(const SimplicialSet& X, const Word& u,
                                const std::vector<SimplicialCochain>& fs) {
  LatticePath pu(std::vector<Word>{u});
  const int k = pu.colours();
  if (static_cast<int>(fs.size()) != k) throw DomainError("cochainAction: need one cochain per colour");
  int total = 0;
  for (const auto& f : fs) total += f.degree;
  const int n = total - chainDegree(pu);
  if (n < 0) throw DomainError("cochainAction: degrees too small for this generator");
  SimplicialCochain out = zeroCochain(X, n);
  const auto& ids = X.ofDimension(n);
  std::vector<std::pair<int, std::vector<SimplicialOperator>>> terms;
  for (const auto& e : expansionTerms(u, n)) {
    bool match = true;
    for (int c = 1; c <= k; ++c)
      if (e.term.arityIn(c) != fs[c - 1].degree) match = false;
    if (match) terms.emplace_back(e.sign, components(e.term));
  }
  for (std::size_t p = 0; p < ids.size(); ++p) {
    Simplex y = X.nondegenerate(ids[p]);
    Q s = 0;
    for (const auto& [sign, comps] : terms) {
      Q prod = sign;
      for (int c = 0; c < k && prod != 0; ++c) prod *= evaluate(X, fs[c], X.apply(y, comps[c]));
      s += prod;
    }
    out.values[p] = s;
  }
  return out;
}

SimplicialCochain cochainAction(const SimplicialSet& X, const ChainElement& u,
                                const std::vector<SimplicialCochain>& fs) {
  std::optional<SimplicialCochain> out;
  for (const auto& [x, c] : u.terms()) {
    if (x.arityOut() != 0) throw DomainError("cochainAction: generators must be bar-free");
    SimplicialCochain v = cochainAction(X, x.letters(), fs);
    for (auto& q : v.values) q *= static_cast<long>(c);
    if (!out)
      out = v;
    else
      *out = add(*out, v);
  }
  if (!out) throw DomainError("cochainAction: empty chain");
  if (u.modulus()) *out = reduce(*out, Field::prime(u.modulus()));
  return *out;
}

Word cupIWord(int i) {
  if (i < 0) throw DomainError("cup-i needs i >= 0");
  Word w;
  for (int p = 0; p < i + 2; ++p) w.push_back(p % 2 ? 2 : 1);
  return w;
}

SimplicialCochain steenrodSquare(const SimplicialSet& X, int i, const SimplicialCochain& f) {
  const Field F2 = Field::prime(2);
  SimplicialCochain g = reduce(f, F2);
  for (const auto& v : coboundary(X, g, F2).values)
    if (v != 0) throw DomainError("steenrodSquare: input is not a mod-2 cocycle");
  const int p = g.degree;
  if (i < 0) throw DomainError("steenrodSquare: negative index");
  if (i > p) return zeroCochain(X, p + i);
  return reduce(cochainAction(X, cupIWord(p - i), {g, g}), F2);
}

SimplicialCochain bockstein(const SimplicialSet& X, const SimplicialCochain& f) {
  const Field F2 = Field::prime(2);
  SimplicialCochain lift = reduce(f, F2);
  SimplicialCochain d = coboundary(X, lift, Field::rationals());
  for (auto& v : d.values) {
    if (v.get_den() != 1 || v.get_num() % 2 != 0)
      throw DomainError("bockstein: input is not a mod-2 cocycle");
    v /= 2;
  }
  return reduce(d, F2);
}

std::vector<SphereSimplex> sphereSimplices(int m, int n) {
  std::vector<SphereSimplex> out{std::nullopt};
  if (m == 0) {
    out.push_back(SimplicialOperator{n, 0, std::vector<int>(n + 1, 0)});
    return out;
  }
  // jump positions 1 <= p_1 < … < p_m <= n
  std::vector<int> jumps(m);
  std::function<void(int, int)> rec = [&](int depth, int from) {
    if (depth == m) {
      SimplicialOperator s{n, m, {}};
      for (int i = 0; i <= n; ++i)
        s.values.push_back(static_cast<int>(std::count_if(jumps.begin(), jumps.end(),
                                                          [&](int p) { return p <= i; })));
      out.push_back(s);
      return;
    }
    for (int p = from; p <= n; ++p) {
      jumps[depth] = p;
      rec(depth + 1, p + 1);
    }
  };
  rec(0, 1);
  return out;
}

std::vector<SphereSimplex> coalgebraComponents(const LatticePath& x, const SphereSimplex& y) {
  std::vector<SphereSimplex> out;
  for (const auto& xi : components(x)) {
    if (!y) {
      out.push_back(std::nullopt);
      continue;
    }
    if (y->source != x.arityOut()) throw DomainError("coalgebraCheck: arity mismatch");
    SimplicialOperator z = composeOps(*y, xi);
    if (isSurjection(z))
      out.push_back(z);
    else
      out.push_back(std::nullopt);
  }
  return out;
}

bool coalgebraCheck(int m, const LatticePath& x, const SphereSimplex& y) {
  if (y && y->target != m) throw DomainError("coalgebraCheck: simplex is not in the m-sphere");
  int live = 0;
  for (const auto& c : coalgebraComponents(x, y))
    if (c) ++live;
  return live <= 1;
}

SimplicialCochain pullback(const SimplicialMap& phi, const SimplicialCochain& f) {
  SimplicialCochain g = zeroCochain(*phi.source, f.degree);
  const auto& ids = phi.source->ofDimension(f.degree);
  for (std::size_t p = 0; p < ids.size(); ++p)
    g.values[p] = evaluate(*phi.target, f, phi.image.at(ids[p]));
  return g;
}

SimplicialMap collapseBoundary(const SimplicialSet& simplex, const SimplicialSet& sph) {
  SimplicialMap phi{&simplex, &sph, {}};
  const int n = simplex.dimension();
  const int top = sph.find("s");
  const int base = sph.find("*");
  for (const auto& c : simplex.cells()) {
    if (c.dim == n)
      phi.image.push_back(sph.nondegenerate(top));
    else
      phi.image.push_back({base, constantMap(c.dim)});
  }
  return phi;
}

}  // namespace lpo
