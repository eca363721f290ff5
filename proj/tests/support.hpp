#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "mtrace/oracle.hpp"
#include "mtrace/tracial.hpp"

namespace testing {

using namespace mtrace;

inline const FieldSpec Q = FieldSpec::rationals();
inline FieldSpec gf(std::uint64_t p) { return FieldSpec::prime(p); }

inline Scalar s(const FieldSpec& f, const std::string& text) { return Scalar::parse(f, text); }

inline Vec vec(const FieldSpec& f, std::initializer_list<const char*> entries) {
  std::vector<Scalar> out;
  for (const auto* e : entries) out.push_back(Scalar::parse(f, e));
  return Vec(f, std::move(out));
}

// Row-major entries; k is inferred from the entry count.
inline Mat mat(const FieldSpec& f, std::initializer_list<const char*> entries) {
  std::size_t k = 1;
  while (k * k < entries.size()) ++k;
  std::vector<Scalar> out;
  for (const auto* e : entries) out.push_back(Scalar::parse(f, e));
  return Mat(f, k, std::move(out));
}

inline Mat e(const FieldSpec& f, std::size_t i, std::size_t j, std::size_t k = 2) {
  return Mat::unit(f, k, i - 1, j - 1);
}

inline MatrixAlgebra gen(const FieldSpec& f, std::vector<Mat> gens, std::size_t k = 2) {
  return unital_closure(f, k, gens);
}

inline MatrixAlgebra scalars2(const FieldSpec& f) { return gen(f, {}); }
inline MatrixAlgebra d2(const FieldSpec& f) { return gen(f, {e(f, 1, 1)}); }
inline MatrixAlgebra t2(const FieldSpec& f) { return gen(f, {e(f, 1, 2)}); }
inline MatrixAlgebra u2(const FieldSpec& f) { return gen(f, {e(f, 1, 1), e(f, 1, 2)}); }
inline MatrixAlgebra l2(const FieldSpec& f) { return gen(f, {e(f, 1, 1), e(f, 2, 1)}); }
inline MatrixAlgebra m2(const FieldSpec& f) { return gen(f, {e(f, 1, 2), e(f, 2, 1)}); }

// Polynomials in the companion matrix of x^2 + b x + c.
inline MatrixAlgebra companion(const FieldSpec& f, const std::string& b, const std::string& c) {
  auto m = Mat::zero(f, 2);
  m(0, 1) = -s(f, c);
  m(1, 0) = Scalar::one(f);
  m(1, 1) = -s(f, b);
  return gen(f, {m});
}

inline Functional kf(const Mat& k) { return Functional::k_form(k); }

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  // Small rationals with frequent zeros keep the instances structured.
  Scalar scalar(const FieldSpec& f) {
    if (f.is_finite()) return Scalar::residue(f, below(f.p()));
    if (chance(0.35)) return Scalar::zero(f);
    const long num = static_cast<long>(below(7)) - 3;
    const long den = static_cast<long>(below(3)) + 1;
    return Scalar::rational(mpq_class(num, den));
  }

  Vec vector(const FieldSpec& f, std::size_t k) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(scalar(f));
    return Vec(f, std::move(out));
  }

  Mat matrix(const FieldSpec& f, std::size_t k) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < k * k; ++i) out.push_back(scalar(f));
    return Mat(f, k, std::move(out));
  }

  // Sparse matrices produce proper subalgebras more often than dense ones.
  Mat sparse_matrix(const FieldSpec& f, std::size_t k) {
    auto m = Mat::zero(f, k);
    const auto nonzeros = 1 + below(k + 1);
    for (std::size_t n = 0; n < nonzeros; ++n) m(below(k), below(k)) = scalar(f);
    return m;
  }

  MatrixAlgebra algebra(const FieldSpec& f, std::size_t k) {
    std::vector<Mat> gens;
    const auto count = below(3);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(sparse_matrix(f, k));
    return unital_closure(f, k, gens);
  }

  Functional unital_k(const FieldSpec& f, std::size_t k) {
    auto m = chance(0.5) ? sparse_matrix(f, k) : matrix(f, k);
    m(0, 0) += Scalar::one(f) - trace(m);
    return Functional::k_form(m);
  }

  // Some unital rank-one pair; retries until <x, alpha> is invertible.
  Functional unital_rank_one(const FieldSpec& f, std::size_t k) {
    while (true) {
      auto x = vector(f, k);
      auto alpha = vector(f, k);
      const auto p = pairing(x, alpha);
      if (p.is_zero()) continue;
      alpha *= p.inverse();
      return Functional::rank_one(std::move(x), std::move(alpha));
    }
  }

  Functional functional(const FieldSpec& f, std::size_t k) {
    return chance(0.5) ? unital_k(f, k) : unital_rank_one(f, k);
  }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

}  // namespace testing
