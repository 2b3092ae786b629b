#include "lpo/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "lpo/cgo.hpp"
#include "lpo/chains.hpp"
#include "lpo/cyclic.hpp"
#include "lpo/hochschild.hpp"
#include "lpo/paths.hpp"
#include "lpo/simplicial.hpp"
#include "lpo/trees.hpp"

namespace lpo {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looksLikeFile(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".json");
}

std::string qstr(const Q& q) { return q.get_str(); }

std::vector<int> parseIntList(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("bad integer list '" + s + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer list '" + s + "'");
    }
  }
  return out;
}

long ringModulus(const Ring& r) { return r.kind == RingKind::Prime ? r.p : 0; }

struct Report {
  std::string text;
  json data;
  int code = 0;
};

SimplicialSet loadSpace(const std::string& name) {
  if (looksLikeFile(name)) return simplicialSetFromJson(readFile(name));
  return builtinSpace(name);
}

struct AlgebraWithForm {
  FinAlgebra algebra;
  std::optional<FrobeniusForm> form;
};

AlgebraWithForm loadAlgebra(const std::string& name) {
  if (looksLikeFile(name)) {
    QMatrix P;
    FinAlgebra A = algebraFromJson(readFile(name), &P);
    AlgebraWithForm out{A, std::nullopt};
    if (P.rows) out.form = FrobeniusForm(A, P);
    return out;
  }
  if (name == "ground") return {groundRing(), groundRingForm()};
  if (name == "dual") return {dualNumbers(), dualNumbersForm()};
  if (name == "m2") return {matrixAlgebra2(), matrixTraceForm()};
  if (name == "z2") return {groupAlgebraZ2(), groupAlgebraZ2Form()};
  if (name == "upper") return {upperTriangular2(), std::nullopt};
  if (name.rfind("trunc", 0) == 0 && name.size() > 5) return {truncatedPolynomial(std::stoi(name.substr(5))), std::nullopt};
  throw ParseError("unknown algebra '" + name + "' (ground, dual, m2, z2, upper, truncN or a JSON file)");
}

std::string cochainTable(const SimplicialSet& X, const SimplicialCochain& f) {
  std::ostringstream os;
  const auto& ids = X.ofDimension(f.degree);
  for (std::size_t p = 0; p < ids.size(); ++p)
    os << "  " << X.cells()[ids[p]].label << " : " << qstr(f.values[p]) << "\n";
  return os.str();
}

json cochainJson(const SimplicialSet& X, const SimplicialCochain& f) {
  json j = json::object();
  const auto& ids = X.ofDimension(f.degree);
  for (std::size_t p = 0; p < ids.size(); ++p) j[X.cells()[ids[p]].label] = qstr(f.values[p]);
  return j;
}

Report hhReport(const std::string& algebraName, int maxDegree, bool bv) {
  AlgebraWithForm in = loadAlgebra(algebraName);
  HHResult hh = hochschildCohomology(in.algebra, maxDegree);
  Report r;
  std::ostringstream os;
  r.data["algebra"] = algebraName;
  for (const auto& g : hh.groups) {
    os << "HH^" << g.degree << " rank " << g.rank << "\n";
    r.data["ranks"][std::to_string(g.degree)] = g.rank;
  }
  if (bv) {
    if (!in.form) throw DomainError("hh --bv needs a Frobenius form");
    FrobeniusForm form = in.form->changeBasis(hh.adapted, hh.change);
    NormalizedComplex nc(hh.adapted, maxDegree + 1);
    bool ok = true;
    for (const auto& [n, reps] : hh.representatives) {
      for (std::size_t i = 0; i < reps.size(); ++i) {
        Cochain D = bvOperator(hh.adapted, form, reps[i]);
        bool exact = D.arity == 0 ? D.isZero() : nc.isCoboundary(D);
        Cochain DD = bvOperator(hh.adapted, form, D);
        bool square = DD.isZero();
        Cochain dD = hochschildDifferential(hh.adapted, D);
        bool cocycle = dD.isZero();
        ok = ok && square && cocycle;
        os << "Delta(h" << n << "." << i << "): " << (exact ? "exact" : "nonzero class")
           << (cocycle ? "" : " [not a cocycle]") << (square ? "" : " [Delta^2 != 0]") << "\n";
        r.data["bv"].push_back({{"degree", n}, {"index", i}, {"exact", exact}, {"cocycle", cocycle},
                                {"squareZero", square}});
      }
    }
    if (!ok) r.code = 1;
  }
  r.text = os.str();
  return r;
}

Report sqReport(const std::string& space, int i, int p) {
  SimplicialSet X = loadSpace(space);
  const Field F2 = Field::prime(2);
  Report r;
  std::ostringstream os;
  auto basis = cohomologyBasis(X, p, F2);
  os << "H^" << p << "(" << space << "; F2) has rank " << basis.size() << "\n";
  r.data["space"] = space;
  r.data["rank"] = basis.size();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    SimplicialCochain s = steenrodSquare(X, i, basis[b]);
    bool zero = isCoboundary(X, s, F2);
    os << "Sq^" << i << "(a" << b << ") is " << (zero ? "zero" : "nonzero") << " in H^" << p + i
       << "\n";
    os << "a" << b << ":\n" << cochainTable(X, basis[b]);
    os << "Sq^" << i << "(a" << b << "):\n" << cochainTable(X, s);
    r.data["classes"].push_back(
        {{"cocycle", cochainJson(X, basis[b])}, {"square", cochainJson(X, s)}, {"zero", zero}});
  }
  r.text = os.str();
  return r;
}

Report cupReport(const std::string& space, int p, int q, const std::string& word, const Ring& ring) {
  SimplicialSet X = loadSpace(space);
  const Field F = ring.field();
  Word u = parsePath(word).letters();
  Report r;
  std::ostringstream os;
  auto bp = cohomologyBasis(X, p, F);
  auto bq = cohomologyBasis(X, q, F);
  r.data["space"] = space;
  for (std::size_t a = 0; a < bp.size(); ++a)
    for (std::size_t b = 0; b < bq.size(); ++b) {
      SimplicialCochain c = reduce(cochainAction(X, u, {bp[a], bq[b]}), F);
      bool zero = isCoboundary(X, c, F);
      os << word << "(a" << a << ", b" << b << ") in degree " << c.degree << " is "
         << (zero ? "exact" : "a nonzero class") << "\n"
         << cochainTable(X, c);
      r.data["products"].push_back({{"left", a}, {"right", b}, {"values", cochainJson(X, c)}, {"exact", zero}});
    }
  r.text = os.str();
  return r;
}

Report goldenReport() {
  Report r;
  std::ostringstream os;
  for (const auto& g : paperGolden()) {
    os << (g.ok ? "PASS " : "FAIL ") << g.name << ": expected " << g.expected << ", got " << g.actual
       << "\n";
    r.data["items"].push_back({{"name", g.name}, {"expected", g.expected}, {"actual", g.actual}, {"ok", g.ok}});
    if (!g.ok) r.code = 1;
  }
  r.text = os.str();
  return r;
}

}  // namespace

std::vector<GoldenItem> paperGolden() {
  std::vector<GoldenItem> items;
  auto add = [&](std::string name, std::string expected, const std::function<std::string()>& f) {
    GoldenItem g{std::move(name), std::move(expected), "", false};
    try {
      g.actual = f();
      g.ok = g.actual == g.expected;
    } catch (const std::exception& e) {
      g.actual = std::string("error: ") + e.what();
    }
    items.push_back(std::move(g));
  };
  auto shape = [](const LatticePath& x) {
    std::string s = "L(";
    for (int c = 1; c <= x.colours(); ++c) s += (c > 1 ? "," : "") + std::to_string(x.arityIn(c));
    return s + ";" + std::to_string(x.arityOut()) + ")";
  };
  add("parse 1|12|21", "L(2,1;2)", [&] { return shape(parsePath("1|12|21")); });
  add("parse 1||12|3|2", "L(1,1,0;4)", [&] { return shape(parsePath("1||12|3|2")); });
  add("compose 1||12|3|2 o_2 3|12", "1||14|5|23",
      [] { return formatPath(compose(parsePath("1||12|3|2"), 2, parsePath("3|12"))); });
  add("enumerate L(0,0;0)", "12 21", [] {
    std::string s;
    for (const auto& x : enumeratePaths({0, 0}, 0)) s += (s.empty() ? "" : " ") + formatPath(x);
    return s;
  });
  add("cyclic compose 1|^2^1|^3|123 o_1 2|^1|^212", "^212|^32|^4|^134", [] {
    return formatCyclicPath(
        composeCyclic(parseCyclicPath("1|^2^1|^3|123"), 1, parseCyclicPath("2|^1|^212")));
  });
  add("expand 121 at n=1 (up to one global sign)", "1|121 + 12|21 + 121|1", [] {
    ChainElement e = cofaceExpansion(ChainElement::generator(parsePath("121")), 1);
    ChainElement target = parseChain("1|121 + 12|21 + 121|1");
    if (e == target || e == target * -1) return std::string("1|121 + 12|21 + 121|1");
    return formatChainPretty(e);
  });
  add("homology of N_*(S^1)", "0:1 1:1", [] {
    auto h = homology(normalizedChains(sphere(1), Ring{}), 0, 1);
    return "0:" + std::to_string(h[0].rank) + " 1:" + std::to_string(h[1].rank);
  });
  add("m=1 higher Hochschild complex equals Hochschild complex (Q[x]/x^2, degree <= 4)", "equal", [] {
    ChainComplex a = higherHochschildComplex(dualNumbers(), 1, 4);
    ChainComplex b = hochschildComplexFull(dualNumbers(), 4);
    for (int n = 0; n <= 4; ++n)
      if (!(a.d(n) == b.d(n))) return "differs in degree " + std::to_string(n);
    return std::string("equal");
  });
  return items;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice path operads: composition, complexity, surjection chains, Hochschild and Steenrod operations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string ringText = "z";
  bool asJson = false;
  app.add_option("--ring", ringText, "coefficients: z, q, f2, f3, ...");
  app.add_flag("--json", asJson, "machine-readable output");

  std::string a, b, c;
  int slot = 1, n = 0, maxDegree = 3, sqI = 1, sqP = 1, cupQ = 1;
  bool bv = false;
  std::string algebra = "dual", space = "rp2", suite = "paper-golden", word = "12";

  auto* compose_ = app.add_subcommand("compose", "operadic composition x o_i y");
  compose_->add_option("x", a)->required();
  compose_->add_option("i", slot)->required();
  compose_->add_option("y", b)->required();
  auto* ccompose = app.add_subcommand("ccompose", "cyclic composition; ^ marks the distinguished occurrence");
  ccompose->add_option("x", a)->required();
  ccompose->add_option("i", slot)->required();
  ccompose->add_option("y", b)->required();
  auto* complexity_ = app.add_subcommand("complexity", "complexity indices c_ij and their maximum");
  complexity_->add_option("x", a)->required();
  auto* ccomplexity = app.add_subcommand("ccomplexity", "cyclic complexity");
  ccomplexity->add_option("x", a)->required();
  auto* ctot_ = app.add_subcommand("ctot", "complete graph element of a path");
  ctot_->add_option("x", a)->required();
  auto* tree = app.add_subcommand("tree", "planar tree of a path with at most two switches");
  tree->add_option("x", a)->required();
  auto* untree = app.add_subcommand("untree", "path of a planar tree");
  untree->add_option("tree", a)->required();
  auto* expand = app.add_subcommand("expand", "overlapping-cut expansion of a surjection generator");
  expand->add_option("u", a)->required();
  expand->add_option("n", n)->required();
  auto* scompose = app.add_subcommand("scompose", "composition of surjection chains");
  scompose->add_option("u", a)->required();
  scompose->add_option("i", slot)->required();
  scompose->add_option("v", b)->required();
  auto* dchain = app.add_subcommand("dchain", "boundary of a chain");
  dchain->add_option("chain", a)->required();
  auto* hh = app.add_subcommand("hh", "Hochschild cohomology ranks");
  hh->add_option("--algebra", algebra, "ground, dual, m2, z2, upper, truncN or a JSON file");
  hh->add_option("--max-degree", maxDegree);
  hh->add_flag("--bv", bv, "apply the BV operator to class representatives");
  auto* sq = app.add_subcommand("sq", "Steenrod squares on a basis of H^p(X; F2)");
  sq->add_option("--space", space, "rp2, torus, sN, simplexN or a JSON file");
  sq->add_option("--i", sqI);
  sq->add_option("--p", sqP);
  auto* cupCmd = app.add_subcommand("cup", "surjection products of cohomology basis classes");
  cupCmd->add_option("--space", space);
  cupCmd->add_option("--p", sqP);
  cupCmd->add_option("--q", cupQ);
  cupCmd->add_option("--word", word, "two-colour surjection generator, default 12");
  auto* check = app.add_subcommand("check", "run a check suite");
  check->add_option("--suite", suite);
  auto* enumerate = app.add_subcommand("enumerate", "list L(n_1..n_k; n)");
  enumerate->add_option("arities", a, "comma separated input arities")->required();
  enumerate->add_option("n", n)->required();
  auto* crotate = app.add_subcommand("crotate", "apply the output rotation `steps` times");
  crotate->add_option("steps", n)->required();
  crotate->add_option("x", a)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    const Ring ring = Ring::parse(ringText);
    const long modulus = ringModulus(ring);
    Report r;
    auto single = [&](const std::string& s) {
      r.text = s + "\n";
      r.data["result"] = s;
    };
    if (*compose_) {
      single(formatPath(compose(parsePath(a), slot, parsePath(b))));
    } else if (*ccompose) {
      single(formatCyclicPath(composeCyclic(parseCyclicPath(a), slot, parseCyclicPath(b))));
    } else if (*complexity_) {
      LatticePath x = parsePath(a);
      ComplexityTable t = complexityTable(x);
      std::ostringstream os;
      os << t.max << "\n";
      r.data["result"] = t.max;
      for (int i = 1; i <= t.k; ++i)
        for (int j = i + 1; j <= t.k; ++j) {
          os << "c" << formatColour(i) << formatColour(j) << " = " << t.at(i, j) << "\n";
          r.data["pairs"][formatColour(i) + formatColour(j)] = t.at(i, j);
        }
      r.text = os.str();
    } else if (*ccomplexity) {
      int v = cyclicComplexity(parseCyclicPath(a));
      r.text = std::to_string(v) + "\n";
      r.data["result"] = v;
    } else if (*ctot_) {
      single(formatK(ctot(parsePath(a))));
    } else if (*tree) {
      single(formatTree(pathToTree(parsePath(a))));
    } else if (*untree) {
      single(formatPath(treeToPath(parseTree(a))));
    } else if (*expand) {
      single(formatChainPretty(cofaceExpansion(ChainElement::generator(parsePath(a), modulus), n)));
    } else if (*scompose) {
      single(formatChainPretty(surjCompose(parseChain(a, modulus), slot, parseChain(b, modulus))));
    } else if (*dchain) {
      single(formatChainPretty(boundary(parseChain(a, modulus))));
    } else if (*hh) {
      r = hhReport(algebra, maxDegree, bv);
    } else if (*sq) {
      r = sqReport(space, sqI, sqP);
    } else if (*cupCmd) {
      r = cupReport(space, sqP, cupQ, word, ring);
    } else if (*check) {
      if (suite != "paper-golden") throw ParseError("unknown suite '" + suite + "'");
      r = goldenReport();
    } else if (*enumerate) {
      std::ostringstream os;
      for (const auto& x : enumeratePaths(parseIntList(a), n)) {
        os << formatPath(x) << "\n";
        r.data["result"].push_back(formatPath(x));
      }
      r.text = os.str();
    } else if (*crotate) {
      single(formatCyclicPath(outputRotate(n, parseCyclicPath(a))));
    }
    if (asJson) {
      r.data["ok"] = r.code == 0;
      out << r.data.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lpo
