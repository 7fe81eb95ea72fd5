#include "zerosquare/normalform.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zsq {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::ContractViolation, msg);
}

void require_bezout_domain(const Ring& r, const char* what) {
  if (!r.has_bezout() || !r.is_domain())
    fail(Errc::CapabilityMissing,
         std::string(what) + " requires a Bezout domain; ring " +
             r.selector() + " does not qualify");
}

std::string minor_str(const MinorIndex& m) {
  return "rows (" + std::to_string(m.row_a) + "," + std::to_string(m.row_b) +
         ") cols (" + std::to_string(m.col_c) + "," + std::to_string(m.col_d) +
         ")";
}

// Primitive canonical form of a nonzero row: divide by the canonical gcd,
// then scale by a unit so the first nonzero component is its own canonical
// associate (positive over Int, 1 over F_p).
std::vector<RingElem> primitive_canonical_row(const Ring& r,
                                              std::span<const RingElem> row) {
  GcdList g = r.gcd_list(row);
  std::vector<RingElem> prim;
  prim.reserve(row.size());
  for (const RingElem& e : row) prim.push_back(r.exact_div(e, g.g));
  for (const RingElem& e : prim) {
    if (r.is_zero(e)) continue;
    RingElem fix = r.inv_unit(r.canon_assoc(e).unit);
    for (RingElem& x : prim) x = r.mul(fix, x);
    break;
  }
  return prim;
}

// Multipliers m with row_i(T) = m[i] * a, for primitive unimodular a.
// m[i] = row_i . w with a . w = 1 lands in the ring; proportionality is
// then verified entry by entry.
std::vector<RingElem> row_multipliers(const Matrix& t,
                                      std::span<const RingElem> a,
                                      const Vec3& witness) {
  const Ring& r = t.ring();
  std::vector<RingElem> m;
  for (int i = 0; i < t.rows(); ++i) {
    RingElem mi = r.zero();
    for (int j = 0; j < 3; ++j) mi = r.add(mi, r.mul(t.at(i, j), witness[j]));
    for (int j = 0; j < 3; ++j) {
      if (!(r.mul(mi, a[static_cast<std::size_t>(j)]) == t.at(i, j)))
        fail(Errc::InternalInvariantBroken,
             "row is not a ring multiple of the primitive row");
    }
    m.push_back(std::move(mi));
  }
  return m;
}

SimilarityCertificate certified_or_throw(const Matrix& t,
                                         SimilarityCertificate cert) {
  if (check_certificate(t, cert) != CertCheck::Ok)
    fail(Errc::InternalInvariantBroken,
         "constructed certificate failed verification");
  return cert;
}

}  // namespace

const char* cert_check_name(CertCheck c) {
  switch (c) {
    case CertCheck::Ok: return "ok";
    case CertCheck::ShapeMismatch: return "shape-mismatch";
    case CertCheck::DetNotUnit: return "det-not-unit";
    case CertCheck::ProductMismatch: return "product-mismatch";
    case CertCheck::RNotGcd: return "r-not-gcd";
  }
  return "unknown";
}

bool is_zero_square(const Matrix& t) {
  require(t.is_square(), "zero-square test needs a square matrix");
  return t.mul(t).is_zero();
}

NecessaryFlags necessary_flags(const Matrix& t) {
  require(t.is_square(), "necessary_flags needs a square matrix");
  if (!t.ring().is_domain())
    fail(Errc::CapabilityMissing,
         "necessary_flags is a domain statement; ring " + t.ring().selector() +
             " is not a domain");
  return {t.ring().is_zero(t.det()), t.ring().is_zero(t.trace())};
}

MinorEquivalence minor_equivalence_3x3(const Matrix& t) {
  require(t.rows() == 3 && t.cols() == 3, "minor equivalence is a 3x3 statement");
  require(t.ring().is_zero(t.trace()), "minor equivalence requires trace(T) = 0");
  return {is_zero_square(t), !t.first_nonzero_minor().has_value()};
}

RankOneFactorization factor_rank_one_3x3(const Matrix& t) {
  require(t.rows() == 3 && t.cols() == 3, "rank-one factorization is 3x3 only");
  const Ring& r = t.ring();
  require_bezout_domain(r, "rank-one factorization");
  if (t.is_zero()) fail(Errc::ZeroMatrix, "rank-one factorization of the zero matrix");
  if (auto witness = t.first_nonzero_minor())
    fail(Errc::NotRankOne, "nonzero 2x2 minor at " + minor_str(*witness));

  int first_row = 0;
  while (r.is_zero(t.at(first_row, 0)) && r.is_zero(t.at(first_row, 1)) &&
         r.is_zero(t.at(first_row, 2)))
    ++first_row;

  const RingElem row_elems[3] = {t.at(first_row, 0), t.at(first_row, 1),
                                 t.at(first_row, 2)};
  std::vector<RingElem> prim = primitive_canonical_row(r, row_elems);
  Vec3 a(r, prim[0], prim[1], prim[2]);

  std::optional<Vec3> witness = unimodular_witness(a);
  if (!witness)
    fail(Errc::InternalInvariantBroken, "primitive row is not unimodular");

  std::vector<RingElem> m = row_multipliers(t, prim, *witness);

  CanonAssoc row2 = r.canon_assoc(m[1]);
  CanonAssoc row3 = r.canon_assoc(m[2]);
  return RankOneFactorization{
      std::move(a),
      Vec3(r, m[0], m[1], m[2]),
      /*delta=*/m[0],
      /*lambda=*/row2.canonical,
      /*gamma=*/row3.canonical,
      /*u=*/row2.unit,
      /*v=*/row3.unit,
  };
}

SimilarityCertificate normalize_3x3(const Matrix& t) {
  require(t.rows() == 3 && t.cols() == 3, "normalize_3x3 needs a 3x3 matrix");
  const Ring& r = t.ring();
  require_bezout_domain(r, "normalization");
  if (!is_zero_square(t))
    fail(Errc::NotZeroSquare, "normalize_3x3 requires T^2 = 0");
  if (t.is_zero())
    return certified_or_throw(
        t, SimilarityCertificate{3, r.zero(), Matrix::identity(r, 3), r.one()});

  RankOneFactorization f = [&] {
    try {
      return factor_rank_one_3x3(t);
    } catch (const Error& e) {
      if (e.code() == Errc::NotRankOne)
        // impossible for zero-square T over a domain at n = 3
        fail(Errc::InternalInvariantBroken, e.what());
      throw;
    }
  }();

  const RingElem mult[3] = {f.multipliers[0], f.multipliers[1],
                            f.multipliers[2]};
  RingElem rr = r.gcd_list(mult).g;
  Vec3 col1(r, r.exact_div(mult[0], rr), r.exact_div(mult[1], rr),
            r.exact_div(mult[2], rr));
  Vec3 col3 = *unimodular_witness(f.row);  // exists: row is primitive

  // trace(T) = sum m_i a_i = 0, so col1 is orthogonal to the primitive row
  if (!r.is_zero(dot(f.row, col1)))
    fail(Errc::InternalInvariantBroken, "trace identity broke in normalize_3x3");

  Vec3 col2 = complete_orthogonal(f.row, col3, col1).x;

  Matrix u(r, 3, 3);
  for (int i = 0; i < 3; ++i) {
    u.set(i, 0, col1[i]);
    u.set(i, 1, col2[i]);
    u.set(i, 2, col3[i]);
  }
  RingElem det_unit = u.det();
  return certified_or_throw(
      t, SimilarityCertificate{3, std::move(rr), std::move(u), std::move(det_unit)});
}

SimilarityCertificate normalize_2x2(const Matrix& t) {
  require(t.rows() == 2 && t.cols() == 2, "normalize_2x2 needs a 2x2 matrix");
  const Ring& r = t.ring();
  require_bezout_domain(r, "normalization");
  if (!is_zero_square(t))
    fail(Errc::NotZeroSquare, "normalize_2x2 requires T^2 = 0");
  if (t.is_zero())
    return certified_or_throw(
        t, SimilarityCertificate{2, r.zero(), Matrix::identity(r, 2), r.one()});

  // T = m (x) a with a the primitive canonical form of the first nonzero
  // row. Trace zero plus coprimality makes [m/r | w] invertible for any
  // Bezout coefficients w of a (confirmed against the exhaustive search
  // oracle in the tests).
  int first_row = r.is_zero(t.at(0, 0)) && r.is_zero(t.at(0, 1)) ? 1 : 0;
  const RingElem row_elems[2] = {t.at(first_row, 0), t.at(first_row, 1)};
  std::vector<RingElem> prim = primitive_canonical_row(r, row_elems);

  GcdList bez = r.gcd_list(prim);
  if (!r.is_unit(bez.g))
    fail(Errc::InternalInvariantBroken, "primitive row is not unimodular");
  RingElem fix = r.inv_unit(bez.g);
  RingElem s = r.mul(fix, bez.coeffs[0]);
  RingElem w = r.mul(fix, bez.coeffs[1]);

  RingElem m0 = r.add(r.mul(t.at(0, 0), s), r.mul(t.at(0, 1), w));
  RingElem m1 = r.add(r.mul(t.at(1, 0), s), r.mul(t.at(1, 1), w));
  for (int i = 0; i < 2; ++i) {
    const RingElem& mi = i == 0 ? m0 : m1;
    for (int j = 0; j < 2; ++j)
      if (!(r.mul(mi, prim[static_cast<std::size_t>(j)]) == t.at(i, j)))
        fail(Errc::InternalInvariantBroken,
             "2x2 input is not an outer product despite T^2 = 0");
  }

  const RingElem mult[2] = {m0, m1};
  RingElem rr = r.gcd_list(mult).g;

  Matrix u(r, 2, 2);
  u.set(0, 0, r.exact_div(m0, rr));
  u.set(1, 0, r.exact_div(m1, rr));
  u.set(0, 1, s);
  u.set(1, 1, w);
  RingElem det_unit = u.det();
  return certified_or_throw(
      t, SimilarityCertificate{2, std::move(rr), std::move(u), std::move(det_unit)});
}

SimilarityCertificate normalize(const Matrix& t) {
  require(t.is_square(), "normalize needs a square matrix");
  if (t.rows() == 2) return normalize_2x2(t);
  if (t.rows() == 3) return normalize_3x3(t);
  fail(Errc::ContractViolation,
       "normalize supports n in {2, 3}; got n = " + std::to_string(t.rows()));
}

CertCheck check_certificate(const Matrix& t, const SimilarityCertificate& cert) {
  const Ring& r = t.ring();
  if (!t.is_square() || t.rows() != cert.n || cert.U.rows() != cert.n ||
      cert.U.cols() != cert.n || !(cert.U.ring() == r) ||
      !r.contains(cert.r) || !r.contains(cert.det_unit))
    return CertCheck::ShapeMismatch;

  RingElem det = cert.U.det();
  if (!r.is_unit(det) || !(det == cert.det_unit)) return CertCheck::DetNotUnit;

  Matrix lhs = t.mul(cert.U);
  Matrix rhs = cert.U.mul(Matrix::e_matrix(r, cert.n, 1, cert.n).scalar_mul(cert.r));
  if (!(lhs == rhs)) return CertCheck::ProductMismatch;

  if (!(r.canon_assoc(cert.r).canonical == t.gcd_of_entries()))
    return CertCheck::RNotGcd;

  return CertCheck::Ok;
}

bool verify_certificate(const Matrix& t, const SimilarityCertificate& cert) {
  return check_certificate(t, cert) == CertCheck::Ok;
}

Matrix counterexample(const Ring& ring, int n) {
  require(n >= 4, "counterexample exists for n >= 4 only");
  Matrix m(ring, n, n);
  const RingElem one = ring.one();
  const RingElem minus_one = ring.neg(ring.one());
  m.set(0, 2, one);
  m.set(0, 3, one);
  m.set(1, 2, one);
  m.set(1, 3, one);
  m.set(2, 0, minus_one);
  m.set(2, 1, one);
  m.set(3, 0, one);
  m.set(3, 1, minus_one);
  return m;
}

std::optional<ObstructionWitness> obstruction_witness(const Matrix& t) {
  if (!t.ring().is_domain())
    fail(Errc::CapabilityMissing,
         "the rank argument needs a domain; ring " + t.ring().selector() +
             " is not one");
  std::optional<MinorIndex> idx = t.first_nonzero_minor();
  if (!idx) return std::nullopt;
  return ObstructionWitness{*idx, t.minor2(*idx)};
}

}  // namespace zsq
