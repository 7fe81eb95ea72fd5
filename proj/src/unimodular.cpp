#include "zerosquare/unimodular.hpp"

namespace zsq {

Vec3::Vec3(Ring ring, RingElem x0, RingElem x1, RingElem x2)
    : ring_(std::move(ring)), c_{std::move(x0), std::move(x1), std::move(x2)} {
  for (const RingElem& e : c_)
    if (!ring_.contains(e))
      fail(Errc::ContractViolation, "vector component outside the ring");
}

Vec3 Vec3::from_ints(const Ring& ring, long long x0, long long x1,
                     long long x2) {
  return Vec3(ring, ring.from_int(x0), ring.from_int(x1), ring.from_int(x2));
}

namespace {

const Ring& common_ring(const Vec3& a, const Vec3& b) {
  if (!(a.ring() == b.ring()))
    fail(Errc::ContractViolation, "mixed-ring vector operands");
  return a.ring();
}

}  // namespace

RingElem dot(const Vec3& a, const Vec3& b) {
  const Ring& r = common_ring(a, b);
  RingElem acc = r.zero();
  for (int i = 0; i < 3; ++i) acc = r.add(acc, r.mul(a[i], b[i]));
  return acc;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  const Ring& r = common_ring(a, b);
  return Vec3(r,
              r.sub(r.mul(a[1], b[2]), r.mul(a[2], b[1])),
              r.sub(r.mul(a[2], b[0]), r.mul(a[0], b[2])),
              r.sub(r.mul(a[0], b[1]), r.mul(a[1], b[0])));
}

RingElem triple(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

Vec3 vec_add(const Vec3& a, const Vec3& b) {
  const Ring& r = common_ring(a, b);
  return Vec3(r, r.add(a[0], b[0]), r.add(a[1], b[1]), r.add(a[2], b[2]));
}

Vec3 vec_sub(const Vec3& a, const Vec3& b) {
  const Ring& r = common_ring(a, b);
  return Vec3(r, r.sub(a[0], b[0]), r.sub(a[1], b[1]), r.sub(a[2], b[2]));
}

Vec3 vec_scale(const RingElem& s, const Vec3& a) {
  const Ring& r = a.ring();
  return Vec3(r, r.mul(s, a[0]), r.mul(s, a[1]), r.mul(s, a[2]));
}

std::optional<Vec3> unimodular_witness(const Vec3& a) {
  const Ring& r = a.ring();
  const RingElem comps[3] = {a[0], a[1], a[2]};
  GcdList g = r.gcd_list(comps);
  if (!r.is_unit(g.g)) return std::nullopt;
  // scale the gcd coefficients so the dot product is exactly 1
  RingElem fix = r.inv_unit(g.g);
  return Vec3(r, r.mul(fix, g.coeffs[0]), r.mul(fix, g.coeffs[1]),
              r.mul(fix, g.coeffs[2]));
}

bool is_unimodular(const Vec3& a) { return unimodular_witness(a).has_value(); }

OrthogonalCompletion complete_orthogonal(const Vec3& a, const Vec3& b,
                                         const Vec3& c) {
  const Ring& r = common_ring(a, b);
  common_ring(b, c);
  if (!r.is_one(dot(a, b)))
    fail(Errc::ContractViolation, "complete_orthogonal: dot(a,b) != 1");
  if (!r.is_zero(dot(a, c)))
    fail(Errc::ContractViolation, "complete_orthogonal: dot(a,c) != 0");
  if (!is_unimodular(a))
    fail(Errc::ContractViolation, "complete_orthogonal: a is not unimodular");
  if (!is_unimodular(b))
    fail(Errc::ContractViolation, "complete_orthogonal: b is not unimodular");
  if (!is_unimodular(c))
    fail(Errc::ContractViolation, "complete_orthogonal: c is not unimodular");

  Vec3 w = cross(b, c);
  std::optional<Vec3> x0 = unimodular_witness(w);
  if (!x0)
    fail(Errc::InternalInvariantBroken,
         "cross(b,c) not unimodular despite valid inputs");

  // dot(w, x0) = 1, i.e. triple(b, c, x0) = 1; shifting by multiples of b
  // keeps the triple product and fixes orthogonality to a.
  RingElem s = dot(a, *x0);
  Vec3 x = vec_sub(*x0, vec_scale(s, b));

  RingElem unit = triple(b, c, x);
  if (!r.is_zero(dot(a, x)) || !r.is_unit(unit))
    fail(Errc::InternalInvariantBroken,
         "orthogonal completion failed its own contract");
  return {std::move(x), std::move(unit)};
}

}  // namespace zsq
