#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "starcode/group.hpp"
#include "starcode/perm.hpp"
#include "starcode/perm_set.hpp"

namespace starcode {

using Code = PermutationSet;

// An ordered pair of vertex sets such that every closed ball meets both in
// the same count, zero or one. The constructor checks the cheap structural
// invariants; verify_bitrade checks the ball condition.
struct Bitrade {
  Code t0;
  Code t1;

  Bitrade(Code t0_, Code t1_, bool require_disjoint = true);

  int degree() const { return t0.degree(); }
};

struct MinDistanceResult {
  bool at_least_3 = false;
  bool vacuous = false;  // fewer than two codewords, nothing to separate

  explicit operator bool() const { return at_least_3; }
};

// True iff no codeword lies in another codeword's closed ball or distance-2
// sphere.
MinDistanceResult min_distance_at_least_3(const Code& c, int threads = 1);

// Size (n-1)! and minimum distance >= 3; equivalently the closed balls of
// the codewords partition Sym_n.
bool is_perfect(const Code& c, int threads = 1);

// Direct tiling check: the closed balls of c cover every vertex exactly
// once. Used as the independent route to is_perfect.
bool closed_balls_tile(const Code& c);

Code coset_code(const Code& c, const Permutation& g, Side side);

// Degree extension: every codeword gains fixed points up to the target
// degree.
Code embed_code(const Code& c, int degree);

// The recursive construction: c union (i n)c for 2 <= i <= n-1, where every
// codeword of c fixes n. Multiplies the size by n-1 and preserves minimum
// distance >= 3.
Code lift(const Code& c);

// (c \ c2, c2 \ c) for two distinct perfect codes.
Bitrade bitrade_from_codes(const Code& c, const Code& c2);

// Checks the defining ball condition at every vertex of Sym_n.
bool verify_bitrade(const Bitrade& t, int threads = 1);

std::size_t volume(const Bitrade& t);

// Either the common preimage of 1 shared by all codewords (the right-coset
// signature of Stab_1), or a pair of codewords proving there is none.
struct Stab1Certificate {
  bool in_class = false;
  int point = 0;
  std::optional<std::pair<Permutation, Permutation>> witness;
};

Stab1Certificate stab1_class_certificate(const Code& c);

// Lexicographically minimal sorted rank list over all images l*c*r with l
// fixing 1. Equal canonical forms characterize isomorphic codes. Degree
// capped at 6.
std::vector<Rank> canonical_form(const Code& c, int threads = 1);

struct IntersectionStats {
  std::size_t common = 0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

IntersectionStats intersection_stats(const Code& a, const Code& b);

}  // namespace starcode
