#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace starcode {

// Index of a permutation in the lexicographic order of one-line words,
// 0 <= rank < degree!. 64 bits bound the usable degree at 20.
using Rank = std::uint64_t;

constexpr int kMaxRankDegree = 20;
constexpr int kDefaultStreamDegreeCap = 9;

std::uint64_t factorial(int n);

// A permutation of {1..n} in one-line notation: word[i-1] = image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint8_t> word);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);
  static Permutation unrank(int degree, Rank k);

  int degree() const { return static_cast<int>(_word.size()); }
  const std::vector<std::uint8_t>& word() const { return _word; }

  // Image of a point, 1-based.
  int operator()(int x) const { return _word[x - 1]; }
  // Preimage of a point, 1-based.
  int preimage(int x) const;

  bool fixes(int x) const { return (*this)(x) == x; }

  // (*this) applied after rhs: result(x) = (*this)(rhs(x)).
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  // by * (*this) * by^-1, a relabeling of moved points.
  Permutation conjugated_by(const Permutation& by) const;

  // Lehmer rank in lexicographic word order; identity ranks 0.
  Rank rank() const;

  // Extends to a larger degree by appending fixed points.
  Permutation extended(int degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a._word <=> b._word;
  }

 private:
  struct unchecked_t {};
  Permutation(std::vector<std::uint8_t> word, unchecked_t) noexcept
      : _word(std::move(word)) {}

  std::vector<std::uint8_t> _word;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation conjugate(const Permutation& p, const Permutation& by);

// Cycle structure with fixed points counted separately.
struct CycleType {
  std::vector<int> lengths;  // sorted ascending, every entry >= 2
  int fixed_points = 0;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

// True iff p is a single m-cycle and fixes everything else.
bool is_pure_cycle_of_length(const Permutation& p, int m);

// Lexicographic stream over all degree! permutations.
class PermutationRange {
 public:
  explicit PermutationRange(int degree,
                            int degree_cap = kDefaultStreamDegreeCap);

  class iterator {
   public:
    const Permutation& operator*() const { return _current; }
    iterator& operator++();
    bool operator!=(const iterator& rhs) const { return _done != rhs._done; }

   private:
    friend class PermutationRange;
    iterator(int degree, bool done);

    Permutation _current;
    bool _done;
  };

  iterator begin() const { return iterator(_degree, false); }
  iterator end() const { return iterator(_degree, true); }
  std::uint64_t size() const { return factorial(_degree); }

 private:
  int _degree;
};

PermutationRange all_permutations(int degree,
                                  int degree_cap = kDefaultStreamDegreeCap);

}  // namespace starcode
