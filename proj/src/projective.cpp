#include "starcode/projective.hpp"

#include <stdexcept>
#include <string>

namespace starcode {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : _p(p) {
  if (!is_prime(p))
    throw std::invalid_argument("prime field: modulus " + std::to_string(p) +
                                " is not prime");
}

int PrimeField::inv(int a) const {
  if (a % _p == 0) throw std::invalid_argument("prime field: inverse of zero");
  // Fermat: a^(p-2) mod p.
  int result = 1;
  int base = a % _p;
  int e = _p - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int ProjectivePoint::value() const {
  if (is_infinity())
    throw std::invalid_argument("projective point: infinity has no value");
  return _value;
}

MoebiusMap::MoebiusMap(const PrimeField& field, int a, int b, int c, int d)
    : _field(field),
      _a(a % field.modulus()),
      _b(b % field.modulus()),
      _c(c % field.modulus()),
      _d(d % field.modulus()) {
  const int det = _field.sub(_field.mul(_a, _d), _field.mul(_b, _c));
  if (det == 0) throw std::invalid_argument("moebius map: determinant is zero");
  // Scale so the first nonzero of (a,b,c,d) becomes 1.
  int lead = _a != 0 ? _a : _b != 0 ? _b : _c != 0 ? _c : _d;
  const int s = _field.inv(lead);
  _a = _field.mul(_a, s);
  _b = _field.mul(_b, s);
  _c = _field.mul(_c, s);
  _d = _field.mul(_d, s);
}

ProjectivePoint MoebiusMap::apply(const ProjectivePoint& x) const {
  if (x.is_infinity()) {
    if (_c == 0) return ProjectivePoint::infinity();
    return ProjectivePoint::finite(_field.mul(_a, _field.inv(_c)));
  }
  const int num = _field.add(_field.mul(_a, x.value()), _b);
  const int den = _field.add(_field.mul(_c, x.value()), _d);
  if (den == 0) return ProjectivePoint::infinity();
  return ProjectivePoint::finite(_field.mul(num, _field.inv(den)));
}

Permutation MoebiusMap::as_permutation() const {
  const int q = _field.modulus();
  std::vector<std::uint8_t> w(static_cast<std::size_t>(q) + 1);
  for (int a = 0; a < q; ++a) {
    const ProjectivePoint img = apply(ProjectivePoint::finite(a));
    w[a] = static_cast<std::uint8_t>(img.is_infinity() ? q + 1 : img.value() + 1);
  }
  const ProjectivePoint img = apply(ProjectivePoint::infinity());
  w[q] = static_cast<std::uint8_t>(img.is_infinity() ? q + 1 : img.value() + 1);
  return Permutation(std::move(w));
}

std::vector<std::pair<ProjectivePoint, int>> point_labeling(int q) {
  if (!is_prime(q) || q > kMaxPglPrime)
    throw std::invalid_argument("point_labeling: q must be a prime <= " +
                                std::to_string(kMaxPglPrime));
  std::vector<std::pair<ProjectivePoint, int>> labels;
  labels.reserve(static_cast<std::size_t>(q) + 1);
  for (int a = 0; a < q; ++a) labels.emplace_back(ProjectivePoint::finite(a), a + 1);
  labels.emplace_back(ProjectivePoint::infinity(), q + 1);
  return labels;
}

PermutationSet pgl2(int q) {
  if (!is_prime(q) || q > kMaxPglPrime)
    throw std::invalid_argument("pgl2: q must be a prime <= " +
                                std::to_string(kMaxPglPrime));
  const PrimeField field(q);
  std::vector<Rank> ranks;
  ranks.reserve(static_cast<std::size_t>(q + 1) * q * (q - 1));
  // Normalized representatives directly: a = 1, or a = 0 and b = 1.
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c)
      for (int d = 0; d < q; ++d) {
        if (field.sub(d, field.mul(b, c)) == 0) continue;
        ranks.push_back(MoebiusMap(field, 1, b, c, d).as_permutation().rank());
      }
  for (int c = 1; c < q; ++c)
    for (int d = 0; d < q; ++d)
      ranks.push_back(MoebiusMap(field, 0, 1, c, d).as_permutation().rank());
  return PermutationSet(q + 1, std::move(ranks));
}

}  // namespace starcode
