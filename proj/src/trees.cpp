#include "lpo/trees.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lpo {

namespace {

void countNodes(const TreeNode& n, int& labelled, int& slots) {
  if (n.kind == TreeNode::Kind::Labelled) ++labelled;
  if (n.kind == TreeNode::Kind::Slot) ++slots;
  for (const auto& c : n.children) countNodes(c, labelled, slots);
}

void validateNode(const TreeNode& n, bool isRoot, bool parentUnlabelled, std::set<int>& labels) {
  switch (n.kind) {
    case TreeNode::Kind::Slot:
      if (!n.children.empty()) throw DomainError("tree: slot with children");
      return;
    case TreeNode::Kind::Labelled:
      if (!labels.insert(n.label).second) throw DomainError("tree: repeated label");
      break;
    case TreeNode::Kind::Unlabelled:
      if (n.children.size() == 1) throw DomainError("tree: unlabelled vertex of valence 2");
      if (!isRoot && parentUnlabelled)
        throw DomainError("tree: inner edge between unlabelled vertices");
      break;
  }
  for (const auto& c : n.children)
    validateNode(c, false, n.kind == TreeNode::Kind::Unlabelled, labels);
}

struct Tokens {
  std::vector<int> tok;  // 0 = bar
  std::vector<std::vector<int>> where;  // positions per colour
};

TreeNode parseRange(const Tokens& t, int lo, int hi);

TreeNode parseSpan(const Tokens& t, int colour) {
  const auto& pos = t.where[colour];
  std::vector<TreeNode> children;
  for (std::size_t s = 0; s + 1 < pos.size(); ++s) children.push_back(parseRange(t, pos[s] + 1, pos[s + 1]));
  return TreeNode::labelled(colour, std::move(children));
}

// Items of a token range [lo, hi): maximal spans and bars.
std::vector<TreeNode> parseItems(const Tokens& t, int lo, int hi) {
  std::vector<TreeNode> items;
  int p = lo;
  while (p < hi) {
    int c = t.tok[p];
    if (c == 0) {
      items.push_back(TreeNode::slot());
      ++p;
      continue;
    }
    const auto& pos = t.where[c];
    if (pos.front() != p || pos.back() >= hi)
      throw DomainError("pathToTree: spans neither nested nor disjoint (complexity > 2)");
    items.push_back(parseSpan(t, c));
    p = pos.back() + 1;
  }
  return items;
}

TreeNode parseRange(const Tokens& t, int lo, int hi) {
  auto items = parseItems(t, lo, hi);
  if (items.size() == 1) return std::move(items.front());
  return TreeNode::unlabelled(std::move(items));
}

void walk(const TreeNode& n, std::vector<int>& out) {
  switch (n.kind) {
    case TreeNode::Kind::Slot:
      out.push_back(0);
      return;
    case TreeNode::Kind::Unlabelled:
      for (const auto& c : n.children) walk(c, out);
      return;
    case TreeNode::Kind::Labelled:
      out.push_back(n.label);
      for (const auto& c : n.children) {
        walk(c, out);
        out.push_back(n.label);
      }
      return;
  }
}

void formatNode(const TreeNode& n, std::string& s) {
  switch (n.kind) {
    case TreeNode::Kind::Slot:
      s += "[slot]";
      return;
    case TreeNode::Kind::Unlabelled:
      s += "(u";
      break;
    case TreeNode::Kind::Labelled:
      s += "(v" + std::to_string(n.label);
      break;
  }
  for (const auto& c : n.children) {
    s += ' ';
    formatNode(c, s);
  }
  s += ')';
}

struct TreeParser {
  std::string_view text;
  std::size_t p = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("tree: " + why + " at position " + std::to_string(p));
  }
  void skip() {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  }
  TreeNode node() {
    skip();
    if (p >= text.size()) fail("unexpected end");
    if (text.substr(p, 6) == "[slot]") {
      p += 6;
      return TreeNode::slot();
    }
    if (text[p] != '(') fail("expected '(' or '[slot]'");
    ++p;
    TreeNode n;
    if (p < text.size() && text[p] == 'u') {
      n.kind = TreeNode::Kind::Unlabelled;
      ++p;
    } else if (p < text.size() && text[p] == 'v') {
      n.kind = TreeNode::Kind::Labelled;
      ++p;
      std::size_t start = p;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
        n.label = n.label * 10 + (text[p++] - '0');
      if (p == start || n.label < 1) fail("bad vertex label");
    } else {
      fail("expected 'u' or 'v'");
    }
    while (true) {
      skip();
      if (p < text.size() && text[p] == ')') {
        ++p;
        return n;
      }
      n.children.push_back(node());
    }
  }
};

struct Gen {
  TreeNode node;
  int labelled, slots, letters;
};

std::vector<Gen> generate(int maxL, int maxS, int maxE, bool parentUnlabelled);

// Ordered child lists; each child generated with parent kind given.
void childLists(int maxL, int maxS, int maxE, bool parentUnlabelled, std::vector<TreeNode>& cur,
                int l, int s, int e, std::vector<Gen>& out, int minChildren,
                const std::function<Gen(std::vector<TreeNode>, int, int, int)>& make) {
  if (static_cast<int>(cur.size()) >= minChildren) out.push_back(make(cur, l, s, e));
  for (auto& g : generate(maxL - l, maxS - s, maxE - e, parentUnlabelled)) {
    // a labelled parent pays one letter per extra child
    int extra = parentUnlabelled ? 0 : 1;
    if (e + g.letters + extra > maxE) continue;
    cur.push_back(g.node);
    childLists(maxL, maxS, maxE, parentUnlabelled, cur, l + g.labelled, s + g.slots,
               e + g.letters + extra, out, minChildren, make);
    cur.pop_back();
  }
}

std::vector<Gen> generate(int maxL, int maxS, int maxE, bool parentUnlabelled) {
  std::vector<Gen> out;
  if (maxS >= 1) out.push_back({TreeNode::slot(), 0, 1, 0});
  if (!parentUnlabelled) {
    out.push_back({TreeNode::unlabelled(), 0, 0, 0});
    std::vector<TreeNode> cur;
    std::vector<Gen> lists;
    childLists(maxL, maxS, maxE, true, cur, 0, 0, 0, lists, 2,
               [](std::vector<TreeNode> ch, int l, int s, int e) {
                 return Gen{TreeNode::unlabelled(std::move(ch)), l, s, e};
               });
    // the zero-child case is the stump added above; lists only holds >= 2
    for (auto& g : lists)
      if (g.node.children.size() >= 2) out.push_back(std::move(g));
  }
  if (maxL >= 1 && maxE >= 1) {
    std::vector<TreeNode> cur;
    std::vector<Gen> lists;
    childLists(maxL - 1, maxS, maxE - 1, false, cur, 0, 0, 0, lists, 0,
               [](std::vector<TreeNode> ch, int l, int s, int e) {
                 return Gen{TreeNode::labelled(0, std::move(ch)), l + 1, s, e + 1};
               });
    for (auto& g : lists) out.push_back(std::move(g));
  }
  return out;
}

void assignLabels(TreeNode& n, const std::vector<int>& labels, int& next) {
  if (n.kind == TreeNode::Kind::Labelled) n.label = labels[next++];
  for (auto& c : n.children) assignLabels(c, labels, next);
}

}  // namespace

int LabelledPlanarTree::labelCount() const {
  int l = 0, s = 0;
  countNodes(root, l, s);
  return l;
}

int LabelledPlanarTree::slotCount() const {
  int l = 0, s = 0;
  countNodes(root, l, s);
  return s;
}

void validateTree(const LabelledPlanarTree& t) {
  std::set<int> labels;
  validateNode(t.root, true, false, labels);
  int expect = 1;
  for (int l : labels)
    if (l != expect++) throw DomainError("tree: labels must be exactly 1..k");
}

LabelledPlanarTree pathToTree(const LatticePath& x) {
  if (complexity(x) > 2) throw DomainError("pathToTree: complexity exceeds 2");
  Tokens t;
  t.where.resize(x.colours() + 1);
  for (std::size_t j = 0; j < x.substrings().size(); ++j) {
    if (j) t.tok.push_back(0);
    for (int c : x.substrings()[j]) {
      t.where[c].push_back(static_cast<int>(t.tok.size()));
      t.tok.push_back(c);
    }
  }
  return {parseRange(t, 0, static_cast<int>(t.tok.size()))};
}

LatticePath treeToPath(const LabelledPlanarTree& t) {
  validateTree(t);
  std::vector<int> tok;
  walk(t.root, tok);
  std::vector<Word> subs(1);
  for (int c : tok) {
    if (c == 0)
      subs.emplace_back();
    else
      subs.back().push_back(c);
  }
  return LatticePath(std::move(subs));
}

std::string formatTree(const LabelledPlanarTree& t) {
  std::string s;
  formatNode(t.root, s);
  return s;
}

LabelledPlanarTree parseTree(std::string_view text) {
  TreeParser ps{text};
  LabelledPlanarTree t{ps.node()};
  ps.skip();
  if (ps.p != text.size()) ps.fail("trailing characters");
  try {
    validateTree(t);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return t;
}

std::vector<LabelledPlanarTree> enumerateTrees(int maxLabelled, int maxSlots, int maxLetters) {
  std::vector<LabelledPlanarTree> out;
  for (auto& g : generate(maxLabelled, maxSlots, maxLetters, false)) {
    std::vector<int> labels(g.labelled);
    for (int i = 0; i < g.labelled; ++i) labels[i] = i + 1;
    do {
      TreeNode n = g.node;
      int next = 0;
      assignLabels(n, labels, next);
      out.push_back({std::move(n)});
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  return out;
}

}  // namespace lpo
