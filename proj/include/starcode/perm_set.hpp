#pragma once

#include <vector>

#include "starcode/perm.hpp"

namespace starcode {

// A duplicate-free set of permutations of one degree, stored as a sorted
// list of ranks.
class PermutationSet {
 public:
  PermutationSet(int degree, std::vector<Rank> ranks);

  static PermutationSet from_permutations(int degree,
                                          const std::vector<Permutation>& perms);
  static PermutationSet empty(int degree);

  int degree() const { return _degree; }
  std::size_t size() const { return _ranks.size(); }
  bool is_empty() const { return _ranks.empty(); }
  const std::vector<Rank>& ranks() const { return _ranks; }

  bool contains(Rank r) const;
  bool contains(const Permutation& p) const;

  Permutation member(std::size_t i) const;
  std::vector<Permutation> permutations() const;

  PermutationSet set_union(const PermutationSet& other) const;
  PermutationSet set_difference(const PermutationSet& other) const;
  PermutationSet set_intersection(const PermutationSet& other) const;

  friend bool operator==(const PermutationSet&, const PermutationSet&) = default;

 private:
  int _degree;
  std::vector<Rank> _ranks;
};

}  // namespace starcode
