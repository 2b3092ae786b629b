#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lpo/paths.hpp"

namespace lpo {

// Planar rooted tree. Labelled vertices carry a colour; unlabelled ones stand
// for the multiplication of the corresponding arity; slots are free inputs.
struct TreeNode {
  enum class Kind { Labelled, Unlabelled, Slot };
  Kind kind = Kind::Slot;
  int label = 0;
  std::vector<TreeNode> children;

  static TreeNode slot() { return {Kind::Slot, 0, {}}; }
  static TreeNode labelled(int c, std::vector<TreeNode> ch = {}) {
    return {Kind::Labelled, c, std::move(ch)};
  }
  static TreeNode unlabelled(std::vector<TreeNode> ch = {}) {
    return {Kind::Unlabelled, 0, std::move(ch)};
  }

  bool operator==(const TreeNode&) const = default;
};

struct LabelledPlanarTree {
  TreeNode root;
  int labelCount() const;
  int slotCount() const;
  bool operator==(const LabelledPlanarTree&) const = default;
};

// Throws DomainError if labels are not exactly 1..k or the shape rules fail.
void validateTree(const LabelledPlanarTree& t);

LabelledPlanarTree pathToTree(const LatticePath& x);
LatticePath treeToPath(const LabelledPlanarTree& t);

std::string formatTree(const LabelledPlanarTree& t);
LabelledPlanarTree parseTree(std::string_view text);

// Every valid tree with at most the given numbers of labelled vertices,
// slots and boundary-walk letters.
std::vector<LabelledPlanarTree> enumerateTrees(int maxLabelled, int maxSlots, int maxLetters);

// A non-symmetric operad together with its multiplications μ_r (μ_1 = unit).
template <class T>
struct MultiplicativeOperad {
  std::function<T()> unit;
  std::function<T(int)> multiplication;
  std::function<T(const T&, int, const T&)> compose;  // a ∘_i b, i is 1-based
  std::function<int(const T&)> arity;
};

template <class T>
T evaluateNode(const TreeNode& node, const std::vector<T>& ops, const MultiplicativeOperad<T>& P) {
  if (node.kind == TreeNode::Kind::Slot) return P.unit();
  T head = node.kind == TreeNode::Kind::Labelled
               ? ops.at(node.label - 1)
               : P.multiplication(static_cast<int>(node.children.size()));
  if (P.arity(head) != static_cast<int>(node.children.size()))
    throw DomainError("treeEvaluate: arity mismatch at a vertex");
  // right to left so slot indices stay valid
  for (int c = static_cast<int>(node.children.size()); c >= 1; --c)
    head = P.compose(head, c, evaluateNode(node.children[c - 1], ops, P));
  return head;
}

template <class T>
T treeEvaluate(const LatticePath& x, const std::vector<T>& ops, const MultiplicativeOperad<T>& P) {
  if (static_cast<int>(ops.size()) != x.colours())
    throw DomainError("treeEvaluate: need one operation per colour");
  for (int c = 1; c <= x.colours(); ++c)
    if (P.arity(ops[c - 1]) != x.arityIn(c)) throw DomainError("treeEvaluate: arity mismatch");
  return evaluateNode(pathToTree(x).root, ops, P);
}

}  // namespace lpo
