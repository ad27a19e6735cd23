#include "starcode/star_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace starcode {

namespace {

// Word of (1 i)*g: swap the entries of g holding values 1 and i.
std::vector<std::uint8_t> left_star_mult(const std::vector<std::uint8_t>& w,
                                         int i) {
  std::vector<std::uint8_t> out = w;
  std::size_t p1 = 0, pi = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 1) p1 = k;
    if (w[k] == i) pi = k;
  }
  std::swap(out[p1], out[pi]);
  return out;
}

}  // namespace

StarGraph::StarGraph(int degree) : _n(degree) {
  if (degree < 2) throw std::invalid_argument("star graph: degree must be >= 2");
  if (degree > kMaxRankDegree)
    throw std::invalid_argument("star graph: degree too large");
}

std::vector<Permutation> StarGraph::neighbors(const Permutation& g) const {
  if (g.degree() != _n) throw std::invalid_argument("neighbors: degree mismatch");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(_n) - 1);
  for (int i = 2; i <= _n; ++i)
    out.push_back(Permutation(left_star_mult(g.word(), i)));
  return out;
}

PermutationSet StarGraph::closed_ball(const Permutation& g) const {
  if (g.degree() != _n) throw std::invalid_argument("closed_ball: degree mismatch");
  std::vector<Rank> ranks;
  ranks.reserve(static_cast<std::size_t>(_n));
  ranks.push_back(g.rank());
  for (int i = 2; i <= _n; ++i)
    ranks.push_back(Permutation(left_star_mult(g.word(), i)).rank());
  return PermutationSet(_n, std::move(ranks));
}

PermutationSet StarGraph::sphere2(const Permutation& g) const {
  if (g.degree() != _n) throw std::invalid_argument("sphere2: degree mismatch");
  if (_n < 3) throw std::invalid_argument("sphere2: degree must be >= 3");
  std::vector<Rank> ranks;
  ranks.reserve(static_cast<std::size_t>(_n - 1) * (_n - 2));
  for (int y = 2; y <= _n; ++y) {
    const std::vector<std::uint8_t> mid = left_star_mult(g.word(), y);
    for (int x = 2; x <= _n; ++x) {
      if (x == y) continue;
      ranks.push_back(Permutation(left_star_mult(mid, x)).rank());
    }
  }
  return PermutationSet(_n, std::move(ranks));
}

void StarGraph::neighbor_ranks(Rank g, std::vector<Rank>& out) const {
  out.clear();
  const std::vector<std::uint8_t> w = Permutation::unrank(_n, g).word();
  for (int i = 2; i <= _n; ++i)
    out.push_back(Permutation(left_star_mult(w, i)).rank());
}

std::vector<Rank> StarGraph::adjacency_table() const {
  if (_n > kMaxBfsDegree)
    throw std::invalid_argument("adjacency_table: degree too large");
  const std::size_t nv = factorial(_n);
  const std::size_t deg = static_cast<std::size_t>(_n) - 1;
  std::vector<Rank> table(nv * deg);
  std::vector<std::uint8_t> w(static_cast<std::size_t>(_n));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<std::uint8_t>(i + 1);
  Rank g = 0;
  do {
    for (int i = 2; i <= _n; ++i)
      table[g * deg + (i - 2)] = Permutation(left_star_mult(w, i)).rank();
    ++g;
  } while (std::next_permutation(w.begin(), w.end()));
  return table;
}

int StarGraph::distance(const Permutation& g, const Permutation& h) const {
  if (g.degree() != _n || h.degree() != _n)
    throw std::invalid_argument("distance: degree mismatch");
  if (_n > kMaxBfsDegree)
    throw std::invalid_argument("distance: degree exceeds BFS cap");
  if (g == h) return 0;

  const std::size_t nv = factorial(_n);
  constexpr std::uint8_t kUnseen = 0xff;
  // dist[side][v]: BFS level from each endpoint.
  std::vector<std::uint8_t> dist[2] = {
      std::vector<std::uint8_t>(nv, kUnseen), std::vector<std::uint8_t>(nv, kUnseen)};
  std::vector<Rank> frontier[2] = {{g.rank()}, {h.rank()}};
  dist[0][g.rank()] = 0;
  dist[1][h.rank()] = 0;

  std::vector<Rank> nbr;
  int depth[2] = {0, 0};
  int best = -1;
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<Rank> next;
    for (Rank v : frontier[side]) {
      neighbor_ranks(v, nbr);
      for (Rank u : nbr) {
        if (dist[1 - side][u] != kUnseen) {
          const int candidate = depth[side] + 1 + dist[1 - side][u];
          if (best < 0 || candidate < best) best = candidate;
        }
        if (dist[side][u] == kUnseen) {
          dist[side][u] = static_cast<std::uint8_t>(depth[side] + 1);
          next.push_back(u);
        }
      }
    }
    frontier[side] = std::move(next);
    ++depth[side];
    // Candidates never undershoot the true distance, and once the two
    // completed depths add up to it a candidate of that value has been
    // recorded, so this stop is exact.
    if (best >= 0 && best <= depth[0] + depth[1] + 1) return best;
  }
  if (best >= 0) return best;
  throw std::runtime_error("distance: graph is connected, this is unreachable");
}

int StarGraph::block_of(const Permutation& g) const {
  if (g.degree() != _n) throw std::invalid_argument("block_of: degree mismatch");
  if (_n < 3) throw std::invalid_argument("block_of: degree must be >= 3");
  return g(_n);
}

Permutation feng_map(const Permutation& l, const Permutation& r,
                     const Permutation& g) {
  if (l.degree() != g.degree() || r.degree() != g.degree())
    throw std::invalid_argument("feng_map: degree mismatch");
  if (l(1) != 1) throw std::invalid_argument("feng_map: l must fix 1");
  return l.compose(g).compose(r);
}

}  // namespace starcode
