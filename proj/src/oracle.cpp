#include "zerosquare/oracle.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

namespace zsq {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

long long SplitMix64::next_in(long long lo, long long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
  return lo + static_cast<long long>(next() % span);
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::ContractViolation, msg);
}

// 3x3 over F_p as a flat row-major array of residues.
using FpMat3 = std::array<std::uint8_t, 9>;

std::uint32_t det3_mod(const FpMat3& m, std::uint32_t p) {
  // Leibniz sum with the three negative terms folded in mod p
  std::uint64_t pos = std::uint64_t(m[0]) * m[4] * m[8] +
                      std::uint64_t(m[1]) * m[5] * m[6] +
                      std::uint64_t(m[2]) * m[3] * m[7];
  std::uint64_t neg = std::uint64_t(m[2]) * m[4] * m[6] +
                      std::uint64_t(m[0]) * m[5] * m[7] +
                      std::uint64_t(m[1]) * m[3] * m[8];
  return static_cast<std::uint32_t>((pos + 3ull * p * p * p - neg) % p);
}

FpMat3 mul3_mod(const FpMat3& a, const FpMat3& b, std::uint32_t p) {
  FpMat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint32_t acc = 0;
      for (int k = 0; k < 3; ++k)
        acc += std::uint32_t(a[static_cast<std::size_t>(3 * i + k)]) *
               b[static_cast<std::size_t>(3 * k + j)];
      c[static_cast<std::size_t>(3 * i + j)] = static_cast<std::uint8_t>(acc % p);
    }
  return c;
}

const std::vector<FpMat3>& gl3_cache(std::uint32_t p) {
  static std::map<std::uint32_t, std::vector<FpMat3>> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;

  std::vector<FpMat3> gl;
  FpMat3 m{};
  // odometer over all p^9 matrices, lexicographic with entry (0,0) slowest
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int k = 8; k >= 0; --k) {
      m[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(rest % p);
      rest /= p;
    }
    if (det3_mod(m, p) != 0) gl.push_back(m);
  }

  std::uint64_t p3 = std::uint64_t(p) * p * p;
  std::uint64_t expected = (p3 - 1) * (p3 - p) * (p3 - p * p);
  if (gl.size() != expected)
    fail(Errc::InternalInvariantBroken,
         "|GL(3," + std::to_string(p) + ")| enumeration disagrees with the formula");
  return cache.emplace(p, std::move(gl)).first->second;
}

Matrix fpmat_to_matrix(const FpMat3& m, const Ring& ring) {
  Matrix out(ring, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.set(i, j, ring.from_int(m[static_cast<std::size_t>(3 * i + j)]));
  return out;
}

}  // namespace

Matrix random_zero_square(const GenConfig& cfg) {
  require(cfg.n == 2 || cfg.n == 3, "random_zero_square supports n in {2, 3}");
  require(cfg.entry_bound >= 1, "entry_bound must be >= 1");
  require(cfg.conjugation_steps >= 0, "conjugation_steps must be >= 0");

  const Ring ring = Ring::integers();
  SplitMix64 rng(cfg.seed);
  const long long bound = cfg.entry_bound;
  const int n = cfg.n;

  std::vector<BigInt> p_vec, q_vec;
  bool ok = false;
  for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
    q_vec.clear();
    bool q_zero = true;
    for (int i = 0; i < n; ++i) {
      q_vec.emplace_back(rng.next_in(-bound, bound));
      if (q_vec.back() != 0) q_zero = false;
    }
    if (q_zero) continue;

    // p from an explicit basis of the complement of q, so q.p = 0 exactly
    p_vec.assign(static_cast<std::size_t>(n), BigInt(0));
    if (n == 2) {
      BigInt alpha(rng.next_in(-bound, bound));
      p_vec[0] = alpha * q_vec[1];
      p_vec[1] = -alpha * q_vec[0];
    } else {
      BigInt alpha(rng.next_in(-bound, bound));
      BigInt beta(rng.next_in(-bound, bound));
      BigInt gamma(rng.next_in(-bound, bound));
      p_vec[0] = alpha * q_vec[1] + gamma * q_vec[2];
      p_vec[1] = -alpha * q_vec[0] + beta * q_vec[2];
      p_vec[2] = -beta * q_vec[1] - gamma * q_vec[0];
    }
    for (const BigInt& x : p_vec)
      if (x != 0) ok = true;
  }
  if (!ok)
    fail(Errc::ContractViolation,
         "degenerate draws exhausted the retry budget (bound too small?)");

  Matrix t(ring, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.set(i, j, RingElem(p_vec[static_cast<std::size_t>(i)] *
                           q_vec[static_cast<std::size_t>(j)]));

  for (int step = 0; step < cfg.conjugation_steps; ++step) {
    long long pos = rng.next_in(0, static_cast<long long>(n) * (n - 1) - 1);
    int i = static_cast<int>(pos / (n - 1));
    int j = static_cast<int>(pos % (n - 1));
    if (j >= i) ++j;
    long long draw = rng.next_in(0, 5);
    long long k = draw < 3 ? draw - 3 : draw - 2;  // {-3,-2,-1,1,2,3}

    Matrix shear = Matrix::identity(ring, n);
    shear.set(i, j, ring.from_int(k));
    Matrix shear_inv = Matrix::identity(ring, n);
    shear_inv.set(i, j, ring.from_int(-k));
    t = shear_inv.mul(t).mul(shear);
  }
  return t;
}

std::vector<Matrix> enumerate_zero_square_fp(int n, std::uint32_t p) {
  require(n >= 1, "n must be >= 1");
  const Ring ring = Ring::prime_field(p);  // validates primality
  double cells = std::pow(double(p), double(n) * double(n));
  require(cells <= double(1u << 25), "p^(n^2) must be <= 2^25");

  const int nn = n * n;
  std::vector<std::uint8_t> m(static_cast<std::size_t>(nn), 0);
  std::uint64_t total = 1;
  for (int i = 0; i < nn; ++i) total *= p;

  std::vector<Matrix> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int k = nn - 1; k >= 0; --k) {
      m[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(rest % p);
      rest /= p;
    }
    bool square_zero = true;
    for (int i = 0; i < n && square_zero; ++i)
      for (int j = 0; j < n && square_zero; ++j) {
        std::uint32_t acc = 0;
        for (int k = 0; k < n; ++k)
          acc += std::uint32_t(m[static_cast<std::size_t>(n * i + k)]) *
                 m[static_cast<std::size_t>(n * k + j)];
        if (acc % p != 0) square_zero = false;
      }
    if (!square_zero) continue;

    Matrix t(ring, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t.set(i, j, ring.from_int(m[static_cast<std::size_t>(n * i + j)]));
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<SimilarityWitness> brute_force_similarity_fp(const Matrix& t,
                                                           std::uint32_t p) {
  require(p == 2 || p == 3, "brute force oracle supports p in {2, 3}");
  require(t.rows() == 3 && t.cols() == 3, "brute force oracle is 3x3 only");
  const Ring ring = Ring::prime_field(p);
  require(t.ring() == ring, "matrix ring must be fp:" + std::to_string(p));

  FpMat3 traw{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& f = std::get<FpVal>(t.at(i, j).storage());
      traw[static_cast<std::size_t>(3 * i + j)] = static_cast<std::uint8_t>(f.v);
    }

  for (const FpMat3& u : gl3_cache(p)) {
    FpMat3 tu = mul3_mod(traw, u, p);
    // U*(r*E_13) has zero first and second columns and r*col_1(U) third
    if (tu[0] != 0 || tu[1] != 0 || tu[3] != 0 || tu[4] != 0 || tu[6] != 0 ||
        tu[7] != 0)
      continue;
    for (std::uint32_t r = 0; r < p; ++r) {
      if (tu[2] == (r * u[0]) % p && tu[5] == (r * u[3]) % p &&
          tu[8] == (r * u[6]) % p)
        return SimilarityWitness{ring.from_int(r), fpmat_to_matrix(u, ring)};
    }
  }
  return std::nullopt;
}

std::size_t gl3_size(std::uint32_t p) { return gl3_cache(p).size(); }

std::optional<SimilarityWitness> bounded_search_2x2_int(const Matrix& t,
                                                        int bound) {
  const Ring ring = Ring::integers();
  require(t.ring() == ring, "bounded search runs over the integers");
  require(t.rows() == 2 && t.cols() == 2, "bounded search is 2x2 only");
  require(1 <= bound && bound <= 12, "bound must be in [1, 12]");

  if (t.is_zero())
    return SimilarityWitness{ring.zero(), Matrix::identity(ring, 2)};

  RingElem g = t.gcd_of_entries();
  const RingElem r_candidates[2] = {g, ring.neg(g)};

  for (long long u11 = -bound; u11 <= bound; ++u11)
    for (long long u12 = -bound; u12 <= bound; ++u12)
      for (long long u21 = -bound; u21 <= bound; ++u21)
        for (long long u22 = -bound; u22 <= bound; ++u22) {
          long long det = u11 * u22 - u12 * u21;
          if (det != 1 && det != -1) continue;
          Matrix u = Matrix::from_ints(ring, {{u11, u12}, {u21, u22}});
          Matrix tu = t.mul(u);
          for (const RingElem& r : r_candidates) {
            Matrix rhs = u.mul(Matrix::e_matrix(ring, 2, 1, 2).scalar_mul(r));
            if (tu == rhs) return SimilarityWitness{r, u};
          }
        }
  return std::nullopt;
}

}  // namespace zsq
