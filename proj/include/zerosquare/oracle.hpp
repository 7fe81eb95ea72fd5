#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zerosquare/normalform.hpp"

namespace zsq {

/// splitmix64. Fixed constants 0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9,
/// 0x94D049BB133111EB; identical streams on every platform, so seeded
/// corpora are reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform-ish draw in [lo, hi] by modulo reduction. The slight bias is
  /// irrelevant here; determinism is the contract.
  long long next_in(long long lo, long long hi);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  int n = 3;                       // 2 or 3
  long long entry_bound = 10;      // >= 1
  std::uint64_t seed = 0;
  int conjugation_steps = 0;       // shear conjugations applied after the draw
};

/// Random integer zero-square instance: T = p * q^T with q.p = 0 by
/// construction (p drawn from an explicit basis of the complement of q),
/// then disguised by unimodular shear conjugations T <- S^-1 T S with
/// S = I + k*E_ij, which keep T integral and zero-square.
Matrix random_zero_square(const GenConfig& cfg);

/// All n x n matrices T over F_p with T^2 = 0, in lexicographic entry
/// order. Guard: p^(n^2) <= 2^25.
std::vector<Matrix> enumerate_zero_square_fp(int n, std::uint32_t p);

struct SimilarityWitness {
  RingElem r;
  Matrix U;
};

/// Ground-truth oracle for 3x3 over F_p, p in {2, 3}: scan every
/// invertible U (lexicographic) and every r for T*U = U*(r*E_13). Raw
/// mod-p arithmetic, independent of the constructive path.
std::optional<SimilarityWitness> brute_force_similarity_fp(const Matrix& t,
                                                           std::uint32_t p);

/// Enumerated |GL(3, p)|; checked against (p^3-1)(p^3-p)(p^3-p^2).
std::size_t gl3_size(std::uint32_t p);

/// Exhaustive 2x2 integer search: U entries in [-bound, bound] with
/// det(U) = +-1 and r = +-gcd(T). Test-only oracle; bound <= 12.
std::optional<SimilarityWitness> bounded_search_2x2_int(const Matrix& t,
                                                        int bound);

}  // namespace zsq
