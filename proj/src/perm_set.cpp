#include "starcode/perm_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace starcode {

PermutationSet::PermutationSet(int degree, std::vector<Rank> ranks)
    : _degree(degree), _ranks(std::move(ranks)) {
  if (degree < 1 || degree > kMaxRankDegree)
    throw std::invalid_argument("permutation set: degree out of range");
  std::sort(_ranks.begin(), _ranks.end());
  _ranks.erase(std::unique(_ranks.begin(), _ranks.end()), _ranks.end());
  const Rank bound = factorial(degree);
  if (!_ranks.empty() && _ranks.back() >= bound)
    throw std::invalid_argument("permutation set: rank out of range for degree");
}

PermutationSet PermutationSet::from_permutations(
    int degree, const std::vector<Permutation>& perms) {
  std::vector<Rank> ranks;
  ranks.reserve(perms.size());
  for (const Permutation& p : perms) {
    if (p.degree() != degree)
      throw std::invalid_argument("permutation set: mixed degrees");
    ranks.push_back(p.rank());
  }
  return PermutationSet(degree, std::move(ranks));
}

PermutationSet PermutationSet::empty(int degree) {
  return PermutationSet(degree, {});
}

bool PermutationSet::contains(Rank r) const {
  return std::binary_search(_ranks.begin(), _ranks.end(), r);
}

bool PermutationSet::contains(const Permutation& p) const {
  return p.degree() == _degree && contains(p.rank());
}

Permutation PermutationSet::member(std::size_t i) const {
  return Permutation::unrank(_degree, _ranks.at(i));
}

std::vector<Permutation> PermutationSet::permutations() const {
  std::vector<Permutation> out;
  out.reserve(_ranks.size());
  for (Rank r : _ranks) out.push_back(Permutation::unrank(_degree, r));
  return out;
}

PermutationSet PermutationSet::set_union(const PermutationSet& other) const {
  if (other._degree != _degree)
    throw std::invalid_argument("set_union: degree mismatch");
  std::vector<Rank> out;
  out.reserve(_ranks.size() + other._ranks.size());
  std::set_union(_ranks.begin(), _ranks.end(), other._ranks.begin(),
                 other._ranks.end(), std::back_inserter(out));
  return PermutationSet(_degree, std::move(out));
}

PermutationSet PermutationSet::set_difference(const PermutationSet& other) const {
  if (other._degree != _degree)
    throw std::invalid_argument("set_difference: degree mismatch");
  std::vector<Rank> out;
  std::set_difference(_ranks.begin(), _ranks.end(), other._ranks.begin(),
                      other._ranks.end(), std::back_inserter(out));
  return PermutationSet(_degree, std::move(out));
}

PermutationSet PermutationSet::set_intersection(const PermutationSet& other) const {
  if (other._degree != _degree)
    throw std::invalid_argument("set_intersection: degree mismatch");
  std::vector<Rank> out;
  std::set_intersection(_ranks.begin(), _ranks.end(), other._ranks.begin(),
                        other._ranks.end(), std::back_inserter(out));
  return PermutationSet(_degree, std::move(out));
}

}  // namespace starcode
