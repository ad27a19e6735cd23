#include "starcode/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace starcode {

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankDegree)
    throw std::invalid_argument("factorial: degree out of range: " +
                                std::to_string(n));
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation::Permutation(std::vector<std::uint8_t> word) : _word(std::move(word)) {
  if (_word.empty()) throw std::invalid_argument("permutation: empty word");
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::uint8_t v : _word) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("permutation: word is not a bijection on {1.." +
                                  std::to_string(n) + "}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("identity: degree must be >= 1");
  std::vector<std::uint8_t> w(static_cast<std::size_t>(degree));
  std::iota(w.begin(), w.end(), std::uint8_t{1});
  return Permutation(std::move(w), unchecked_t{});
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 1 || a > degree || b < 1 || b > degree)
    throw std::invalid_argument("transposition: point out of range");
  if (a == b) throw std::invalid_argument("transposition: equal points");
  Permutation p = identity(degree);
  std::swap(p._word[a - 1], p._word[b - 1]);
  return p;
}

Permutation Permutation::unrank(int degree, Rank k) {
  if (degree < 1 || degree > kMaxRankDegree)
    throw std::invalid_argument("unrank: degree out of range");
  if (k >= factorial(degree)) throw std::invalid_argument("unrank: rank out of range");
  // Decode the Lehmer digits, most significant first.
  std::vector<std::uint8_t> pool(static_cast<std::size_t>(degree));
  std::iota(pool.begin(), pool.end(), std::uint8_t{1});
  std::vector<std::uint8_t> w;
  w.reserve(pool.size());
  for (int i = degree - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto digit = static_cast<std::size_t>(k / f);
    k %= f;
    w.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(w), unchecked_t{});
}

int Permutation::preimage(int x) const {
  for (int i = 1; i <= degree(); ++i)
    if (_word[i - 1] == x) return i;
  throw std::invalid_argument("preimage: point out of range");
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint8_t> w(_word.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = _word[rhs._word[i] - 1];
  return Permutation(std::move(w), unchecked_t{});
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> w(_word.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[_word[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return Permutation(std::move(w), unchecked_t{});
}

Permutation Permutation::conjugated_by(const Permutation& by) const {
  return by.compose(*this).compose(by.inverse());
}

Rank Permutation::rank() const {
  const int n = degree();
  if (n > kMaxRankDegree) throw std::invalid_argument("rank: degree too large");
  Rank r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (_word[j] < _word[i]) ++smaller_after;
    r += static_cast<Rank>(smaller_after) * factorial(n - 1 - i);
  }
  return r;
}

Permutation Permutation::extended(int degree) const {
  if (degree < this->degree())
    throw std::invalid_argument("extended: target degree smaller than current");
  std::vector<std::uint8_t> w = _word;
  for (int v = this->degree() + 1; v <= degree; ++v)
    w.push_back(static_cast<std::uint8_t>(v));
  return Permutation(std::move(w), unchecked_t{});
}

Permutation compose(const Permutation& p, const Permutation& q) { return p.compose(q); }
Permutation inverse(const Permutation& p) { return p.inverse(); }
Permutation conjugate(const Permutation& p, const Permutation& by) {
  return p.conjugated_by(by);
}

CycleType cycle_type(const Permutation& p) {
  const int n = p.degree();
  CycleType ct;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    int x = start;
    do {
      seen[x] = true;
      x = p(x);
      ++len;
    } while (x != start);
    if (len == 1)
      ++ct.fixed_points;
    else
      ct.lengths.push_back(len);
  }
  std::sort(ct.lengths.begin(), ct.lengths.end());
  return ct;
}

bool is_pure_cycle_of_length(const Permutation& p, int m) {
  if (m < 2) throw std::invalid_argument("is_pure_cycle_of_length: m must be >= 2");
  const CycleType ct = cycle_type(p);
  return ct.lengths.size() == 1 && ct.lengths[0] == m;
}

PermutationRange::PermutationRange(int degree, int degree_cap) : _degree(degree) {
  if (degree < 1) throw std::invalid_argument("all_permutations: degree must be >= 1");
  if (degree > degree_cap)
    throw std::invalid_argument("all_permutations: degree exceeds cap of " +
                                std::to_string(degree_cap));
}

PermutationRange::iterator::iterator(int degree, bool done)
    : _current(Permutation::identity(degree)), _done(done) {}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  std::vector<std::uint8_t> w = _current.word();
  if (std::next_permutation(w.begin(), w.end()))
    _current = Permutation(std::move(w));
  else
    _done = true;
  return *this;
}

PermutationRange all_permutations(int degree, int degree_cap) {
  return PermutationRange(degree, degree_cap);
}

}  // namespace starcode
