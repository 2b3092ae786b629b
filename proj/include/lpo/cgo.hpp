#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpo/paths.hpp"

namespace lpo {

// Edge-labelled complete graph on k vertices with one orientation per edge.
// For a strict element the orientations come from a global order: edge
// {i,j} is neutral (points i -> j for i < j) iff i precedes j in that order.
class CompleteGraphElement {
 public:
  CompleteGraphElement() = default;
  static CompleteGraphElement strict(std::vector<int> labels, Permutation order);
  static CompleteGraphElement extended(int k, std::vector<int> labels, std::vector<bool> neutral);

  int size() const { return k_; }
  int label(int i, int j) const;
  // true iff the edge between i and j points from i to j
  bool pointsFrom(int i, int j) const;
  bool isStrict() const { return order_.has_value(); }
  const std::optional<Permutation>& order() const { return order_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<bool>& neutral() const { return neutral_; }
  int maxLabel() const;

  bool operator==(const CompleteGraphElement& o) const {
    return k_ == o.k_ && labels_ == o.labels_ && neutral_ == o.neutral_;
  }

 private:
  int k_ = 0;
  std::vector<int> labels_;    // pairs i<j in lexicographic order
  std::vector<bool> neutral_;  // same indexing
  std::optional<Permutation> order_;
};

int pairIndex(int k, int i, int j);  // 1 <= i < j <= k

bool leq(const CompleteGraphElement& a, const CompleteGraphElement& b);
CompleteGraphElement composeK(const CompleteGraphElement& a, int slot,
                              const CompleteGraphElement& b);
CompleteGraphElement symActionK(const Permutation& rho, const CompleteGraphElement& a);
bool isExtendedValid(const CompleteGraphElement& e);

CompleteGraphElement ctot(const LatticePath& x);
// Order of colours as given by the lexicographically first subsequence of
// the letter string that is a permutation (brute force; for cross-checks).
Permutation firstPermutationSubsequence(const LatticePath& x);

std::string formatK(const CompleteGraphElement& e);
CompleteGraphElement parseK(std::string_view text);

// All strict elements of K(k) with labels in 0..maxLabel.
std::vector<CompleteGraphElement> enumerateStrictK(int k, int maxLabel);
// All elements of K^ex(k) (valid ones only) with labels in 0..maxLabel.
std::vector<CompleteGraphElement> enumerateExtendedK(int k, int maxLabel);

}  // namespace lpo
