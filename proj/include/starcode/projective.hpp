#pragma once

#include <utility>
#include <vector>

#include "starcode/perm.hpp"
#include "starcode/perm_set.hpp"

namespace starcode {

constexpr int kMaxPglPrime = 19;  // degree q+1 <= 20 keeps ranks in 64 bits

bool is_prime(int n);

// Arithmetic in GF(p), p prime. Values are kept reduced to {0..p-1}.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int modulus() const { return _p; }
  int add(int a, int b) const { return (a + b) % _p; }
  int sub(int a, int b) const { return (a - b + _p) % _p; }
  int mul(int a, int b) const { return (a * b) % _p; }
  int neg(int a) const { return (_p - a) % _p; }
  int inv(int a) const;

 private:
  int _p;
};

// A point of the projective line over GF(p): either finite or infinity.
class ProjectivePoint {
 public:
  static ProjectivePoint finite(int a) { return ProjectivePoint(a); }
  static ProjectivePoint infinity() { return ProjectivePoint(-1); }

  bool is_infinity() const { return _value < 0; }
  int value() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  explicit ProjectivePoint(int value) : _value(value) {}
  int _value;
};

// x -> (ax+b)/(cx+d) with ad-bc != 0, stored with the first nonzero
// coefficient scaled to 1 so equal maps compare equal.
class MoebiusMap {
 public:
  MoebiusMap(const PrimeField& field, int a, int b, int c, int d);

  int a() const { return _a; }
  int b() const { return _b; }
  int c() const { return _c; }
  int d() const { return _d; }

  ProjectivePoint apply(const ProjectivePoint& x) const;

  // The induced permutation of the q+1 labeled points.
  Permutation as_permutation() const;

  friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

 private:
  PrimeField _field;
  int _a, _b, _c, _d;
};

inline bool operator==(const PrimeField& x, const PrimeField& y) {
  return x.modulus() == y.modulus();
}

// Labels the projective points by {1..q+1}: finite a gets a+1, infinity
// gets q+1.
std::vector<std::pair<ProjectivePoint, int>> point_labeling(int q);

// All of PGL(2,q) as permutations of degree q+1; size (q+1)q(q-1).
PermutationSet pgl2(int q);

}  // namespace starcode
