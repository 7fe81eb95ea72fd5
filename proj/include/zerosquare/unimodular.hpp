#pragma once

#include <array>
#include <optional>

#include "zerosquare/matrix.hpp"

namespace zsq {

/// 3-vector over a Ring.
class Vec3 {
 public:
  Vec3(Ring ring, RingElem x0, RingElem x1, RingElem x2);
  static Vec3 from_ints(const Ring& ring, long long x0, long long x1,
                        long long x2);

  const Ring& ring() const { return ring_; }
  const RingElem& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool operator==(const Vec3&) const = default;

 private:
  Ring ring_;
  std::array<RingElem, 3> c_;
};

RingElem dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
/// Scalar triple product: dot(a, cross(b, c)) = det of the rows [a; b; c].
RingElem triple(const Vec3& a, const Vec3& b, const Vec3& c);

Vec3 vec_add(const Vec3& a, const Vec3& b);
Vec3 vec_sub(const Vec3& a, const Vec3& b);
Vec3 vec_scale(const RingElem& s, const Vec3& a);

/// Bezout witness b with dot(a, b) = 1, or nullopt when the components do
/// not generate the whole ring. Requires a Bezout ring.
std::optional<Vec3> unimodular_witness(const Vec3& a);
bool is_unimodular(const Vec3& a);

struct OrthogonalCompletion {
  Vec3 x;
  RingElem unit;  // triple(b, c, x); always a unit
};

/// Given unimodular a, b, c with dot(a,b) = 1 and dot(a,c) = 0, produce a
/// unimodular x with dot(a,x) = 0 and triple(b,c,x) a unit. Solves
/// (b x c).x = 1 through gcd coefficients, then shifts x by -dot(a,x)*b.
/// Preconditions are always checked.
OrthogonalCompletion complete_orthogonal(const Vec3& a, const Vec3& b,
                                         const Vec3& c);

}  // namespace zsq
