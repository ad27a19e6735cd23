#pragma once

#include "starcode/perm.hpp"
#include "starcode/perm_set.hpp"

namespace starcode {

enum class Side { left, right };

// Smallest composition-closed set containing the generators and the
// identity. Throws once the closure grows past cap.
PermutationSet closure(const PermutationSet& generators,
                       std::size_t cap = 1'000'000);

// left: {g*h : h in H}; right: {h*g : h in H}.
PermutationSet coset(const PermutationSet& h, const Permutation& g, Side side);

// {by * x * by^-1 : x in H}.
PermutationSet conjugate_subgroup(const PermutationSet& h, const Permutation& by);

// All permutations fixing point 1; size (n-1)!.
PermutationSet stab1(int n);

// True iff every ordered triple of distinct points maps to every other by
// exactly one element of g.
bool is_sharply_3_transitive(const PermutationSet& g);

}  // namespace starcode
