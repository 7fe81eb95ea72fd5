#include "zerosquare/ring.hpp"

#include <charconv>
#include <utility>

namespace zsq {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t fp_add(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  std::uint64_t s = std::uint64_t(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t fp_neg(std::uint32_t p, std::uint32_t a) {
  return a == 0 ? 0 : p - a;
}

std::uint32_t fp_mul(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
}

std::uint32_t fp_inv(std::uint32_t p, std::uint32_t a) {
  // extended Euclid on (a, p); a != 0 mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Nil16 multiplication over the basis {1, X, Y, XY} with X^2 = Y^2 = 0
// and characteristic 2.
std::uint8_t nil_mul(std::uint8_t a, std::uint8_t b) {
  auto bit = [](std::uint8_t w, int i) -> std::uint8_t { return (w >> i) & 1u; };
  std::uint8_t c0 = bit(a, 0) & bit(b, 0);
  std::uint8_t c1 = (bit(a, 0) & bit(b, 1)) ^ (bit(a, 1) & bit(b, 0));
  std::uint8_t c2 = (bit(a, 0) & bit(b, 2)) ^ (bit(a, 2) & bit(b, 0));
  std::uint8_t c3 = static_cast<std::uint8_t>((bit(a, 0) & bit(b, 3)) ^
                                              (bit(a, 3) & bit(b, 0)) ^
                                              (bit(a, 1) & bit(b, 2)) ^
                                              (bit(a, 2) & bit(b, 1)));
  return static_cast<std::uint8_t>(c0 | (c1 << 1) | (c2 << 2) | (c3 << 3));
}

// Classical extended Euclidean recursion on nonnegative inputs.
void xgcd_nonneg(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s,
                 BigInt& t) {
  if (b == 0) {
    g = a;
    s = 1;
    t = 0;
    return;
  }
  BigInt g1, s1, t1;
  xgcd_nonneg(b, a % b, g1, s1, t1);
  g = std::move(g1);
  s = t1;
  t = s1 - (a / b) * t1;
}

}  // namespace

Ring Ring::integers() { return Ring(RingKind::Int, 0); }

Ring Ring::prime_field(std::uint32_t p) {
  if (p >= (1u << 16))
    fail(Errc::ContractViolation, "prime field modulus must be < 2^16");
  if (!is_prime_u32(p))
    fail(Errc::ContractViolation,
         "prime field modulus " + std::to_string(p) + " is not prime");
  return Ring(RingKind::Fp, p);
}

Ring Ring::nil16() { return Ring(RingKind::Nil16, 0); }

Ring Ring::parse_selector(std::string_view s) {
  if (s == "int") return integers();
  if (s == "nil16") return nil16();
  if (s.size() > 3 && s.substr(0, 3) == "fp:") {
    std::string_view digits = s.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      fail(Errc::ParseError, "bad prime in ring selector '" + std::string(s) + "'");
    try {
      return prime_field(p);
    } catch (const Error& e) {
      fail(Errc::ParseError, e.what());
    }
  }
  fail(Errc::ParseError, "unknown ring selector '" + std::string(s) +
                             "' (expected int, fp:<p>, nil16)");
}

std::string Ring::selector() const {
  switch (kind_) {
    case RingKind::Int: return "int";
    case RingKind::Fp: return "fp:" + std::to_string(p_);
    case RingKind::Nil16: return "nil16";
  }
  return "?";
}

std::uint32_t Ring::modulus() const {
  if (kind_ != RingKind::Fp)
    fail(Errc::ContractViolation, "modulus() is defined for prime fields only");
  return p_;
}

bool Ring::is_domain() const { return kind_ != RingKind::Nil16; }

bool Ring::has_bezout() const { return kind_ != RingKind::Nil16; }

bool Ring::two_is_zero_divisor() const {
  switch (kind_) {
    case RingKind::Int: return false;
    case RingKind::Fp: return p_ == 2;
    case RingKind::Nil16: return true;
  }
  return false;
}

bool Ring::contains(const RingElem& a) const {
  switch (kind_) {
    case RingKind::Int:
      return std::holds_alternative<BigInt>(a.storage());
    case RingKind::Fp: {
      const auto* f = std::get_if<FpVal>(&a.storage());
      return f != nullptr && f->p == p_;
    }
    case RingKind::Nil16:
      return std::holds_alternative<Nil16Val>(a.storage());
  }
  return false;
}

const RingElem& Ring::check(const RingElem& a) const {
  if (!contains(a))
    fail(Errc::ContractViolation,
         "operand does not belong to ring " + selector());
  return a;
}

RingElem Ring::zero() const { return from_int(0); }

RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(long long v) const {
  return from_bigint(BigInt(v));
}

RingElem Ring::from_bigint(const BigInt& v) const {
  switch (kind_) {
    case RingKind::Int:
      return RingElem(v);
    case RingKind::Fp: {
      BigInt m = v % p_;
      if (m < 0) m += p_;
      return RingElem(FpVal{p_, m.convert_to<std::uint32_t>()});
    }
    case RingKind::Nil16: {
      BigInt m = v % 2;
      return RingElem(Nil16Val{static_cast<std::uint8_t>(m != 0 ? 1 : 0)});
    }
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case RingKind::Int:
      return RingElem(std::get<BigInt>(a.storage()) + std::get<BigInt>(b.storage()));
    case RingKind::Fp:
      return RingElem(FpVal{
          p_, fp_add(p_, std::get<FpVal>(a.storage()).v, std::get<FpVal>(b.storage()).v)});
    case RingKind::Nil16:
      return RingElem(Nil16Val{static_cast<std::uint8_t>(
          std::get<Nil16Val>(a.storage()).bits ^ std::get<Nil16Val>(b.storage()).bits)});
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const {
  return add(a, neg(b));
}

RingElem Ring::neg(const RingElem& a) const {
  check(a);
  switch (kind_) {
    case RingKind::Int:
      return RingElem(-std::get<BigInt>(a.storage()));
    case RingKind::Fp:
      return RingElem(FpVal{p_, fp_neg(p_, std::get<FpVal>(a.storage()).v)});
    case RingKind::Nil16:
      return a;  // characteristic 2
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case RingKind::Int:
      return RingElem(std::get<BigInt>(a.storage()) * std::get<BigInt>(b.storage()));
    case RingKind::Fp:
      return RingElem(FpVal{
          p_, fp_mul(p_, std::get<FpVal>(a.storage()).v, std::get<FpVal>(b.storage()).v)});
    case RingKind::Nil16:
      return RingElem(Nil16Val{nil_mul(std::get<Nil16Val>(a.storage()).bits,
                                       std::get<Nil16Val>(b.storage()).bits)});
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

bool Ring::is_zero(const RingElem& a) const { return check(a) == zero(); }

bool Ring::is_one(const RingElem& a) const { return check(a) == one(); }

bool Ring::is_unit(const RingElem& a) const {
  check(a);
  switch (kind_) {
    case RingKind::Int: {
      const BigInt& n = std::get<BigInt>(a.storage());
      return n == 1 || n == -1;
    }
    case RingKind::Fp:
      return std::get<FpVal>(a.storage()).v != 0;
    case RingKind::Nil16:
      // X, Y, XY are nilpotent, so a is a unit iff its constant term is 1.
      return (std::get<Nil16Val>(a.storage()).bits & 1u) != 0;
  }
  return false;
}

RingElem Ring::inv_unit(const RingElem& a) const {
  if (!is_unit(a))
    fail(Errc::NonUnit, "inv_unit of non-unit " + to_string(a) + " in " + selector());
  switch (kind_) {
    case RingKind::Int:
      return a;  // 1 and -1 are self-inverse
    case RingKind::Fp:
      return RingElem(FpVal{p_, fp_inv(p_, std::get<FpVal>(a.storage()).v)});
    case RingKind::Nil16:
      // (1+n)^2 = 1 + n^2 = 1 in characteristic 2 with n^2 = 0.
      return a;
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

Xgcd Ring::xgcd(const RingElem& a, const RingElem& b) const {
  check(a);
  check(b);
  if (!has_bezout())
    fail(Errc::CapabilityMissing, "xgcd requires a Bezout ring; " + selector() +
                                      " provides none");
  if (kind_ == RingKind::Int) {
    const BigInt& av = std::get<BigInt>(a.storage());
    const BigInt& bv = std::get<BigInt>(b.storage());
    if (av == 0 && bv == 0) return {zero(), zero(), zero()};
    BigInt g, s, t;
    xgcd_nonneg(abs(av), abs(bv), g, s, t);
    if (av < 0) s = -s;
    if (bv < 0) t = -t;
    return {RingElem(std::move(g)), RingElem(std::move(s)), RingElem(std::move(t))};
  }
  // field: gcd is 1 unless both are zero
  std::uint32_t av = std::get<FpVal>(a.storage()).v;
  std::uint32_t bv = std::get<FpVal>(b.storage()).v;
  if (av == 0 && bv == 0) return {zero(), zero(), zero()};
  if (av != 0) return {one(), RingElem(FpVal{p_, fp_inv(p_, av)}), zero()};
  return {one(), zero(), RingElem(FpVal{p_, fp_inv(p_, bv)})};
}

GcdList Ring::gcd_list(std::span<const RingElem> v) const {
  if (!has_bezout())
    fail(Errc::CapabilityMissing, "gcd_list requires a Bezout ring; " +
                                      selector() + " provides none");
  if (v.empty())
    fail(Errc::ContractViolation, "gcd_list of an empty sequence");
  CanonAssoc first = canon_assoc(v[0]);
  GcdList acc{first.canonical, {inv_unit(first.unit)}};
  for (std::size_t i = 1; i < v.size(); ++i) {
    Xgcd step = xgcd(acc.g, v[i]);
    for (RingElem& c : acc.coeffs) c = mul(c, step.s);
    acc.coeffs.push_back(step.t);
    acc.g = std::move(step.g);
  }
#ifndef NDEBUG
  RingElem recombined = zero();
  for (std::size_t i = 0; i < v.size(); ++i)
    recombined = add(recombined, mul(acc.coeffs[i], v[i]));
  if (!(recombined == acc.g))
    fail(Errc::InternalInvariantBroken, "gcd_list coefficients do not reproduce g");
#endif
  return acc;
}

bool Ring::divides(const RingElem& b, const RingElem& a) const {
  check(a);
  check(b);
  switch (kind_) {
    case RingKind::Int: {
      const BigInt& bv = std::get<BigInt>(b.storage());
      const BigInt& av = std::get<BigInt>(a.storage());
      if (bv == 0) return av == 0;
      return av % bv == 0;
    }
    case RingKind::Fp: {
      if (std::get<FpVal>(b.storage()).v == 0)
        return std::get<FpVal>(a.storage()).v == 0;
      return true;
    }
    case RingKind::Nil16: {
      for (int q = 0; q < 16; ++q) {
        if (mul(RingElem(Nil16Val{static_cast<std::uint8_t>(q)}), b) == a)
          return true;
      }
      return false;
    }
  }
  return false;
}

RingElem Ring::exact_div(const RingElem& a, const RingElem& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case RingKind::Int: {
      const BigInt& av = std::get<BigInt>(a.storage());
      const BigInt& bv = std::get<BigInt>(b.storage());
      if (bv == 0 || av % bv != 0)
        fail(Errc::NotDivisible,
             to_string(b) + " does not divide " + to_string(a) + " exactly");
      return RingElem(av / bv);
    }
    case RingKind::Fp: {
      std::uint32_t bv = std::get<FpVal>(b.storage()).v;
      if (bv == 0)
        fail(Errc::NotDivisible, "division by zero in " + selector());
      return mul(a, RingElem(FpVal{p_, fp_inv(p_, bv)}));
    }
    case RingKind::Nil16: {
      // search the 16 candidates; deterministic (lowest bit pattern wins)
      for (int q = 0; q < 16; ++q) {
        RingElem cand = RingElem(Nil16Val{static_cast<std::uint8_t>(q)});
        if (mul(cand, b) == a) return cand;
      }
      fail(Errc::NotDivisible,
           to_string(b) + " does not divide " + to_string(a) + " in nil16");
    }
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

CanonAssoc Ring::canon_assoc(const RingElem& a) const {
  check(a);
  switch (kind_) {
    case RingKind::Int: {
      const BigInt& n = std::get<BigInt>(a.storage());
      if (n < 0) return {from_int(-1), RingElem(-n)};
      return {one(), a};
    }
    case RingKind::Fp: {
      if (std::get<FpVal>(a.storage()).v == 0) return {one(), zero()};
      return {a, one()};
    }
    case RingKind::Nil16: {
      if (is_unit(a)) return {a, one()};
      return {one(), a};
    }
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

std::string Ring::to_string(const RingElem& a) const {
  check(a);
  switch (kind_) {
    case RingKind::Int:
      return std::get<BigInt>(a.storage()).str();
    case RingKind::Fp:
      return std::to_string(std::get<FpVal>(a.storage()).v);
    case RingKind::Nil16: {
      std::uint8_t bits = std::get<Nil16Val>(a.storage()).bits;
      if (bits == 0) return "0";
      static const char* names[4] = {"1", "X", "Y", "XY"};
      std::string out;
      for (int i = 0; i < 4; ++i) {
        if ((bits >> i) & 1u) {
          if (!out.empty()) out += "+";
          out += names[i];
        }
      }
      return out;
    }
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

RingElem Ring::parse_elem(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  if (t.empty()) fail(Errc::ParseError, "empty element text");
  switch (kind_) {
    case RingKind::Int:
    case RingKind::Fp: {
      std::string_view digits = t;
      bool negative = false;
      if (digits.front() == '+' || digits.front() == '-') {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
      }
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        fail(Errc::ParseError,
             "invalid " + selector() + " element text '" + std::string(text) + "'");
      // strip leading zeros: cpp_int would read them as an octal prefix
      while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
      BigInt v{std::string(digits)};
      if (negative) v = -v;
      return from_bigint(v);
    }
    case RingKind::Nil16: {
      if (t == "0") return zero();
      std::uint8_t bits = 0;
      std::size_t pos = 0;
      while (pos <= t.size()) {
        std::size_t plus = t.find('+', pos);
        std::string_view tok =
            trim(t.substr(pos, plus == std::string_view::npos ? plus : plus - pos));
        int bit = -1;
        if (tok == "1") bit = 0;
        else if (tok == "X") bit = 1;
        else if (tok == "Y") bit = 2;
        else if (tok == "XY") bit = 3;
        if (bit < 0 || (bits >> bit) & 1u)
          fail(Errc::ParseError,
               "invalid nil16 element text '" + std::string(text) +
                   "' (terms are a subset of {1, X, Y, XY} joined by '+')");
        bits = static_cast<std::uint8_t>(bits | (1u << bit));
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
      }
      return RingElem(Nil16Val{bits});
    }
  }
  fail(Errc::InternalInvariantBroken, "bad ring kind");
}

}  // namespace zsq
