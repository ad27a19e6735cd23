#include "starcode/group.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

namespace starcode {

PermutationSet closure(const PermutationSet& generators, std::size_t cap) {
  const int n = generators.degree();
  const std::vector<Permutation> gens = generators.permutations();
  std::set<Rank> known;
  std::vector<Permutation> frontier;

  const Permutation id = Permutation::identity(n);
  known.insert(id.rank());
  frontier.push_back(id);
  for (const Permutation& g : gens)
    if (known.insert(g.rank()).second) frontier.push_back(g);

  // Orbit of the identity under right multiplication by the generators.
  while (!frontier.empty()) {
    const Permutation current = frontier.back();
    frontier.pop_back();
    for (const Permutation& g : gens) {
      Permutation next = current.compose(g);
      if (known.insert(next.rank()).second) {
        if (known.size() > cap)
          throw std::runtime_error("closure: cap exceeded");
        frontier.push_back(std::move(next));
      }
    }
  }
  return PermutationSet(n, std::vector<Rank>(known.begin(), known.end()));
}

PermutationSet coset(const PermutationSet& h, const Permutation& g, Side side) {
  if (h.degree() != g.degree())
    throw std::invalid_argument("coset: degree mismatch");
  std::vector<Rank> ranks;
  ranks.reserve(h.size());
  for (Rank r : h.ranks()) {
    const Permutation x = Permutation::unrank(h.degree(), r);
    ranks.push_back((side == Side::left ? g.compose(x) : x.compose(g)).rank());
  }
  return PermutationSet(h.degree(), std::move(ranks));
}

PermutationSet conjugate_subgroup(const PermutationSet& h, const Permutation& by) {
  if (h.degree() != by.degree())
    throw std::invalid_argument("conjugate_subgroup: degree mismatch");
  const Permutation by_inv = by.inverse();
  std::vector<Rank> ranks;
  ranks.reserve(h.size());
  for (Rank r : h.ranks()) {
    const Permutation x = Permutation::unrank(h.degree(), r);
    ranks.push_back(by.compose(x).compose(by_inv).rank());
  }
  return PermutationSet(h.degree(), std::move(ranks));
}

PermutationSet stab1(int n) {
  if (n < 2) throw std::invalid_argument("stab1: degree must be >= 2");
  std::vector<Rank> ranks;
  ranks.reserve(factorial(n - 1));
  // Words starting with 1 occupy the first (n-1)! ranks in lex order.
  for (Rank r = 0; r < factorial(n - 1); ++r) ranks.push_back(r);
  return PermutationSet(n, std::move(ranks));
}

bool is_sharply_3_transitive(const PermutationSet& g) {
  const int n = g.degree();
  if (n < 3) return false;

  // Index ordered triples of distinct points.
  const int t = n * (n - 1) * (n - 2);
  std::vector<int> triple_index(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), -1);
  auto key = [n](int a, int b, int c) {
    return (static_cast<std::size_t>(a) * (n + 1) + b) * (n + 1) + c;
  };
  int next = 0;
  std::vector<std::array<int, 3>> triples;
  triples.reserve(static_cast<std::size_t>(t));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        if (a == b || a == c || b == c) continue;
        triple_index[key(a, b, c)] = next++;
        triples.push_back({a, b, c});
      }

  if (g.size() != static_cast<std::size_t>(t)) return false;

  std::vector<std::uint32_t> hits(static_cast<std::size_t>(t) * t, 0);
  for (Rank r : g.ranks()) {
    const Permutation p = Permutation::unrank(n, r);
    for (int i = 0; i < t; ++i) {
      const auto& [a, b, c] = triples[static_cast<std::size_t>(i)];
      const int j = triple_index[key(p(a), p(b), p(c))];
      ++hits[static_cast<std::size_t>(i) * t + j];
    }
  }
  for (std::uint32_t h : hits)
    if (h != 1) return false;
  return true;
}

}  // namespace starcode
