#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zerosquare/errors.hpp"

namespace zsq {

using BigInt = boost::multiprecision::cpp_int;

/// Residue in the prime field F_p, always fully reduced to [0, p).
struct FpVal {
  std::uint32_t p = 0;
  std::uint32_t v = 0;
  bool operator==(const FpVal&) const = default;
};

/// Element of Z_2[X,Y]/(X^2,Y^2) as coefficient bits over the basis
/// {1, X, Y, XY}: bit 0 = 1, bit 1 = X, bit 2 = Y, bit 3 = XY.
struct Nil16Val {
  std::uint8_t bits = 0;
  bool operator==(const Nil16Val&) const = default;
};

/// A ring element. The stored representation is canonical per ring, so
/// structural equality is ring equality.
class RingElem {
 public:
  explicit RingElem(BigInt n) : v_(std::move(n)) {}
  explicit RingElem(FpVal f) : v_(f) {}
  explicit RingElem(Nil16Val n) : v_(n) {}

  bool operator==(const RingElem&) const = default;

  const std::variant<BigInt, FpVal, Nil16Val>& storage() const { return v_; }

 private:
  std::variant<BigInt, FpVal, Nil16Val> v_;
};

enum class RingKind { Int, Fp, Nil16 };

/// xgcd(a, b) = (g, s, t) with g = s*a + t*b and g canonical.
struct Xgcd {
  RingElem g, s, t;
};

/// gcd of a list with Bezout coefficients: coeffs . v = g.
struct GcdList {
  RingElem g;
  std::vector<RingElem> coeffs;
};

/// a = unit * canonical, with is_unit(unit).
struct CanonAssoc {
  RingElem unit;
  RingElem canonical;
};

/// Operational context for a commutative unital ring. Three instances:
/// arbitrary-precision integers, prime fields F_p (p < 2^16), and the
/// 16-element ring Z_2[X,Y]/(X^2,Y^2). Immutable after construction;
/// all operations are pure.
class Ring {
 public:
  static Ring integers();
  static Ring prime_field(std::uint32_t p);  // p prime, p < 2^16
  static Ring nil16();

  /// Ring selector strings: "int", "fp:<p>", "nil16".
  static Ring parse_selector(std::string_view s);
  std::string selector() const;

  RingKind kind() const { return kind_; }
  std::uint32_t modulus() const;  // Fp only

  bool is_domain() const;
  bool has_bezout() const;
  bool two_is_zero_divisor() const;

  bool operator==(const Ring&) const = default;

  /// Membership: does this element carry this ring's representation?
  bool contains(const RingElem& a) const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(long long v) const;
  RingElem from_bigint(const BigInt& v) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;

  bool is_zero(const RingElem& a) const;
  bool is_one(const RingElem& a) const;
  bool is_unit(const RingElem& a) const;
  RingElem inv_unit(const RingElem& a) const;

  /// Extended gcd. Integers: classical extended Euclidean recursion on
  /// |a|, |b| with signs restored, so results are deterministic and
  /// g >= 0; xgcd(0,0) = (0,0,0). Fields: g in {0,1}.
  Xgcd xgcd(const RingElem& a, const RingElem& b) const;

  /// Left fold of xgcd over a nonempty list, coefficients back-substituted.
  GcdList gcd_list(std::span<const RingElem> v) const;

  bool divides(const RingElem& b, const RingElem& a) const;  // b | a
  RingElem exact_div(const RingElem& a, const RingElem& b) const;

  /// Fixed section of the unit action: Int -> nonnegative, Fp -> {0,1}.
  CanonAssoc canon_assoc(const RingElem& a) const;

  /// Element text: Int/Fp as (signed) decimal, Nil16 as a "+"-joined
  /// subset of {1, X, Y, XY} with "0" for the empty sum.
  std::string to_string(const RingElem& a) const;
  RingElem parse_elem(std::string_view text) const;

 private:
  Ring(RingKind k, std::uint32_t p) : kind_(k), p_(p) {}
  const RingElem& check(const RingElem& a) const;

  RingKind kind_;
  std::uint32_t p_ = 0;
};

}  // namespace zsq
