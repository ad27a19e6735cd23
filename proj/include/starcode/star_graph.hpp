#pragma once

#include <vector>

#include "starcode/perm.hpp"
#include "starcode/perm_set.hpp"

namespace starcode {

constexpr int kMaxBfsDegree = 9;  // distance() allocates n!-sized scratch

// The Cayley graph of Sym_n with the star transpositions (1 i) as
// connection set. Vertices are never materialized; adjacency is computed
// on demand.
class StarGraph {
 public:
  explicit StarGraph(int degree);

  int degree() const { return _n; }
  std::uint64_t vertex_count() const { return factorial(_n); }

  // The n-1 vertices (1 i)*g, in increasing order of i.
  std::vector<Permutation> neighbors(const Permutation& g) const;

  // g plus its neighbors; size n.
  PermutationSet closed_ball(const Permutation& g) const;

  // All vertices at distance exactly 2; size (n-1)(n-2).
  PermutationSet sphere2(const Permutation& g) const;

  // Graph distance via bidirectional breadth-first search.
  int distance(const Permutation& g, const Permutation& h) const;

  // Which block Gamma_i holds g, i.e. g(n). Blocks partition Sym_n into n
  // parts of size (n-1)!.
  int block_of(const Permutation& g) const;

  // Neighbor ranks of the vertex with the given rank, increasing i.
  void neighbor_ranks(Rank g, std::vector<Rank>& out) const;

  // Full adjacency table, row g holds the n-1 neighbor ranks. Only for
  // degrees whose n! table fits comfortably.
  std::vector<Rank> adjacency_table() const;

 private:
  int _n;
};

// The automorphism lambda_{l,r}: g -> l*g*r, with l fixing 1.
Permutation feng_map(const Permutation& l, const Permutation& r,
                     const Permutation& g);

}  // namespace starcode
