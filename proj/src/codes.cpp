#include "starcode/codes.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "starcode/detail/parallel.hpp"
#include "starcode/star_graph.hpp"

namespace starcode {

namespace {

constexpr std::uint64_t kBitmapLimit = 1ull << 26;

// Rank membership backed by a bitmap when n! is small enough to afford
// one, by binary search otherwise.
class MembershipIndex {
 public:
  explicit MembershipIndex(const Code& c)
      : _ranks(&c.ranks()), _space(factorial(c.degree())) {
    if (_space <= kBitmapLimit) {
      _bits.assign(static_cast<std::size_t>((_space + 63) / 64), 0);
      for (Rank r : *_ranks) _bits[r >> 6] |= 1ull << (r & 63);
    }
  }

  bool contains(Rank r) const {
    if (!_bits.empty()) return (_bits[r >> 6] >> (r & 63)) & 1;
    return std::binary_search(_ranks->begin(), _ranks->end(), r);
  }

 private:
  const std::vector<Rank>* _ranks;
  std::uint64_t _space;
  std::vector<std::uint64_t> _bits;
};

Rank rank_of_word(const std::uint8_t* w, int n) {
  Rank r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (w[j] < w[i]) ++smaller_after;
    r += static_cast<Rank>(smaller_after) * factorial(n - 1 - i);
  }
  return r;
}

// Visits the ranks of the closed ball of w, the vertex itself first.
template <typename Visitor>
void visit_ball(std::vector<std::uint8_t>& w, const std::vector<int>& pos,
                Visitor&& visit) {
  const int n = static_cast<int>(w.size());
  visit(rank_of_word(w.data(), n));
  for (int i = 2; i <= n; ++i) {
    std::swap(w[pos[1]], w[pos[i]]);
    visit(rank_of_word(w.data(), n));
    std::swap(w[pos[1]], w[pos[i]]);
  }
}

// Visits the ranks of the distance-2 sphere of w: the value 3-cycles
// 1 -> y -> x -> 1 over distinct x, y >= 2.
template <typename Visitor>
void visit_sphere2(std::vector<std::uint8_t>& w, const std::vector<int>& pos,
                   Visitor&& visit) {
  const int n = static_cast<int>(w.size());
  for (int y = 2; y <= n; ++y)
    for (int x = 2; x <= n; ++x) {
      if (x == y) continue;
      const std::uint8_t old1 = w[pos[1]], oldy = w[pos[y]], oldx = w[pos[x]];
      w[pos[1]] = static_cast<std::uint8_t>(y);
      w[pos[y]] = static_cast<std::uint8_t>(x);
      w[pos[x]] = 1;
      visit(rank_of_word(w.data(), n));
      w[pos[1]] = old1;
      w[pos[y]] = oldy;
      w[pos[x]] = oldx;
    }
}

std::vector<int> positions_of_values(const std::vector<std::uint8_t>& w) {
  std::vector<int> pos(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) pos[w[i]] = static_cast<int>(i);
  return pos;
}

// Adds 1 to cover[] over the closed ball of every codeword.
void accumulate_ball_coverage(const Code& c, std::vector<std::uint8_t>& cover) {
  const int n = c.degree();
  for (Rank r : c.ranks()) {
    std::vector<std::uint8_t> w = Permutation::unrank(n, r).word();
    const std::vector<int> pos = positions_of_values(w);
    visit_ball(w, pos, [&cover](Rank v) {
      if (cover[v] != 0xff) ++cover[v];
    });
  }
}

}  // namespace

Bitrade::Bitrade(Code t0_, Code t1_, bool require_disjoint)
    : t0(std::move(t0_)), t1(std::move(t1_)) {
  if (t0.degree() != t1.degree())
    throw std::invalid_argument("bitrade: degree mismatch");
  if (t0 == t1) throw std::invalid_argument("bitrade: halves must differ");
  if (require_disjoint && !t0.set_intersection(t1).is_empty())
    throw std::invalid_argument("bitrade: halves must be disjoint");
}

MinDistanceResult min_distance_at_least_3(const Code& c, int threads) {
  if (c.size() < 2) return {true, true};
  const int n = c.degree();
  if (n < 3)
    // S_2 has diameter 1; two distinct codewords are adjacent.
    return {false, false};

  const MembershipIndex index(c);
  std::atomic<bool> violated{false};
  detail::parallel_chunks(
      c.size(), threads, [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t i = begin; i < end && !violated.load(std::memory_order_relaxed);
             ++i) {
          const Rank self = c.ranks()[i];
          std::vector<std::uint8_t> w = Permutation::unrank(n, self).word();
          const std::vector<int> pos = positions_of_values(w);
          bool bad = false;
          visit_ball(w, pos, [&](Rank v) {
            if (v != self && index.contains(v)) bad = true;
          });
          if (!bad)
            visit_sphere2(w, pos, [&](Rank v) {
              if (index.contains(v)) bad = true;
            });
          if (bad) violated.store(true, std::memory_order_relaxed);
        }
      });
  return {!violated.load(), false};
}

bool is_perfect(const Code& c, int threads) {
  const int n = c.degree();
  if (c.size() != factorial(n - 1)) return false;
  return min_distance_at_least_3(c, threads).at_least_3;
}

bool closed_balls_tile(const Code& c) {
  const int n = c.degree();
  if (n > kMaxBfsDegree)
    throw std::invalid_argument("closed_balls_tile: degree exceeds coverage cap");
  std::vector<std::uint8_t> cover(factorial(n), 0);
  accumulate_ball_coverage(c, cover);
  return std::all_of(cover.begin(), cover.end(),
                     [](std::uint8_t k) { return k == 1; });
}

Code coset_code(const Code& c, const Permutation& g, Side side) {
  return coset(c, g, side);
}

Code embed_code(const Code& c, int degree) {
  if (degree < c.degree())
    throw std::invalid_argument("embed_code: target degree smaller than current");
  std::vector<Rank> ranks;
  ranks.reserve(c.size());
  for (Rank r : c.ranks())
    ranks.push_back(Permutation::unrank(c.degree(), r).extended(degree).rank());
  return Code(degree, std::move(ranks));
}

Code lift(const Code& c) {
  const int n = c.degree();
  if (n < 3) throw std::invalid_argument("lift: degree must be >= 3");
  for (Rank r : c.ranks())
    if (!Permutation::unrank(n, r).fixes(n))
      throw std::invalid_argument("lift: codewords must fix point " +
                                  std::to_string(n));
  if (!min_distance_at_least_3(c).at_least_3)
    throw std::invalid_argument("lift: input minimum distance below 3");

  std::vector<Rank> ranks(c.ranks());
  ranks.reserve(c.size() * static_cast<std::size_t>(n - 1));
  for (Rank r : c.ranks()) {
    std::vector<std::uint8_t> w = Permutation::unrank(n, r).word();
    const std::vector<int> pos = positions_of_values(w);
    for (int i = 2; i <= n - 1; ++i) {
      // Left multiplication by (i n): swap the values i and n in the word.
      std::swap(w[pos[i]], w[pos[n]]);
      ranks.push_back(rank_of_word(w.data(), n));
      std::swap(w[pos[i]], w[pos[n]]);
    }
  }
  Code lifted(n, std::move(ranks));
  if (lifted.size() != c.size() * static_cast<std::size_t>(n - 1))
    throw std::logic_error("lift: translates collided");
  return lifted;
}

Bitrade bitrade_from_codes(const Code& c, const Code& c2) {
  if (c == c2) throw std::invalid_argument("bitrade_from_codes: equal codes");
  if (!is_perfect(c) || !is_perfect(c2))
    throw std::invalid_argument("bitrade_from_codes: inputs must be perfect");
  return Bitrade(c.set_difference(c2), c2.set_difference(c));
}

bool verify_bitrade(const Bitrade& t, int threads) {
  const int n = t.degree();
  if (n > kMaxBfsDegree)
    throw std::invalid_argument("verify_bitrade: degree exceeds coverage cap");
  const std::size_t nv = factorial(n);
  std::vector<std::uint8_t> cover0(nv, 0), cover1(nv, 0);
  accumulate_ball_coverage(t.t0, cover0);
  accumulate_ball_coverage(t.t1, cover1);

  std::atomic<bool> ok{true};
  detail::parallel_chunks(nv, threads,
                          [&](std::size_t begin, std::size_t end, int) {
                            for (std::size_t x = begin; x < end; ++x)
                              if (cover0[x] != cover1[x] || cover0[x] > 1) {
                                ok.store(false, std::memory_order_relaxed);
                                return;
                              }
                          });
  return ok.load();
}

std::size_t volume(const Bitrade& t) {
  if (t.t0.size() != t.t1.size())
    throw std::invalid_argument("volume: halves differ in size, not a bitrade");
  return t.t0.size();
}

Stab1Certificate stab1_class_certificate(const Code& c) {
  Stab1Certificate cert;
  if (c.is_empty()) {
    cert.in_class = true;
    return cert;
  }
  const Permutation first = c.member(0);
  cert.point = first.preimage(1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    const Permutation other = c.member(i);
    if (other.preimage(1) != cert.point) {
      cert.in_class = false;
      cert.point = 0;
      cert.witness = {first, other};
      return cert;
    }
  }
  cert.in_class = true;
  return cert;
}

std::vector<Rank> canonical_form(const Code& c, int threads) {
  const int n = c.degree();
  if (n > 6)
    throw std::invalid_argument(
        "canonical_form: degree capped at 6; use certificate ops instead");
  const std::size_t nv = factorial(n);

  // mul[a*nv + b] = rank of (a composed after b).
  std::vector<std::uint32_t> mul(nv * nv);
  {
    std::vector<std::vector<std::uint8_t>> words;
    words.reserve(nv);
    for (Rank r = 0; r < nv; ++r) words.push_back(Permutation::unrank(n, r).word());
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = 0; b < nv; ++b) {
        for (int i = 0; i < n; ++i) w[i] = words[a][words[b][i] - 1];
        mul[a * nv + b] = static_cast<std::uint32_t>(rank_of_word(w.data(), n));
      }
  }

  const std::size_t stab_size = factorial(n - 1);  // stab1 ranks are 0..(n-1)!-1
  const std::size_t m = c.size();
  std::vector<std::uint32_t> codeword(m);
  for (std::size_t i = 0; i < m; ++i)
    codeword[i] = static_cast<std::uint32_t>(c.ranks()[i]);

  const int workers = detail::resolve_threads(threads);
  std::vector<std::vector<std::uint32_t>> best_per_worker(
      static_cast<std::size_t>(workers));

  detail::parallel_chunks(nv, workers, [&](std::size_t begin, std::size_t end,
                                          int worker) {
    std::vector<std::uint32_t> gr(m), img(m);
    std::vector<std::uint32_t>& best = best_per_worker[worker];
    for (std::size_t r = begin; r < end; ++r) {
      for (std::size_t i = 0; i < m; ++i) gr[i] = mul[codeword[i] * nv + r];
      for (std::size_t l = 0; l < stab_size; ++l) {
        for (std::size_t i = 0; i < m; ++i) img[i] = mul[l * nv + gr[i]];
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = img;
      }
    }
  });

  std::vector<std::uint32_t> best;
  for (const auto& candidate : best_per_worker)
    if (!candidate.empty() && (best.empty() || candidate < best)) best = candidate;

  return std::vector<Rank>(best.begin(), best.end());
}

IntersectionStats intersection_stats(const Code& a, const Code& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("intersection_stats: degree mismatch");
  return {a.set_intersection(b).size(), a.size(), b.size()};
}

}  // namespace starcode
