#pragma once

#include <optional>

#include "zerosquare/unimodular.hpp"

namespace zsq {

/// T written as an outer product: T[i][j] = multipliers[i] * row[j], with
/// `row` the canonical primitive row (component gcd a unit). The
/// multipliers decompose as (delta, lambda*u, gamma*v) where delta is the
/// signed gcd of row 1 and lambda, gamma are the canonical gcds of rows 2
/// and 3 with units u, v relating the primitive rows.
struct RankOneFactorization {
  Vec3 row;
  Vec3 multipliers;
  RingElem delta, lambda, gamma;
  RingElem u, v;
};

/// Machine-checkable witness that T is similar to r*E_1n: U invertible
/// (det a unit) with T*U = U*(r*E_1n) and r the canonical gcd of T.
struct SimilarityCertificate {
  int n;
  RingElem r;
  Matrix U;
  RingElem det_unit;
};

/// A nonzero 2x2 minor of T. Over a domain this proves rank >= 2, so T
/// cannot be similar to any multiple of E_1n.
struct ObstructionWitness {
  MinorIndex minor;
  RingElem value;
};

enum class CertCheck {
  Ok,
  ShapeMismatch,
  DetNotUnit,
  ProductMismatch,
  RNotGcd,
};
const char* cert_check_name(CertCheck c);

bool is_zero_square(const Matrix& t);

/// Necessary conditions over a domain: zero-square implies both flags.
struct NecessaryFlags {
  bool det_zero;
  bool trace_zero;
};
NecessaryFlags necessary_flags(const Matrix& t);

/// Both sides of the 3x3 equivalence for trace-zero T: T^2 = 0 versus
/// "every 2x2 minor vanishes". They agree whenever 2 is not a zero
/// divisor; nil16 separates them.
struct MinorEquivalence {
  bool square_is_zero;
  bool minors_all_zero;
};
MinorEquivalence minor_equivalence_3x3(const Matrix& t);

RankOneFactorization factor_rank_one_3x3(const Matrix& t);

SimilarityCertificate normalize_3x3(const Matrix& t);
SimilarityCertificate normalize_2x2(const Matrix& t);
/// Dispatches on size; n in {2, 3} only.
SimilarityCertificate normalize(const Matrix& t);

CertCheck check_certificate(const Matrix& t, const SimilarityCertificate& cert);
bool verify_certificate(const Matrix& t, const SimilarityCertificate& cert);

/// The 4x4 zero-square, trace-zero matrix of rank 2, padded with zero rows
/// and columns up to n >= 4. Valid over every commutative ring.
Matrix counterexample(const Ring& ring, int n);

std::optional<ObstructionWitness> obstruction_witness(const Matrix& t);

}  // namespace zsq
