#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtrace/linalg.hpp"

namespace mtrace {

/// Unital subalgebra of M_k(F), held as a canonical subspace of F^{k^2}.
///
/// Instances only come out of closure/commutant/adjoint constructions, each of
/// which re-checks identity membership and product closure.
class MatrixAlgebra {
public:
  /// Wraps a subspace that is already known to be a unital subalgebra; verifies it.
  static MatrixAlgebra from_subspace(std::size_t k, Subspace basis);

  [[nodiscard]] const FieldSpec& field() const { return basis_.field(); }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] std::size_t dim() const { return basis_.dim(); }
  [[nodiscard]] const Subspace& subspace() const { return basis_; }
  /// Basis elements as matrices, in canonical order.
  [[nodiscard]] const std::vector<Mat>& elements() const { return elements_; }
  [[nodiscard]] bool contains(const Mat& m) const { return basis_.contains(vectorize(m)); }
  [[nodiscard]] bool contains(const MatrixAlgebra& other) const { return basis_.contains(other.basis_); }
  [[nodiscard]] bool is_abelian() const;
  [[nodiscard]] std::string to_string() const { return basis_.to_string(); }

  friend bool operator==(const MatrixAlgebra& a, const MatrixAlgebra& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const MatrixAlgebra& a, const MatrixAlgebra& b) { return a.basis_ < b.basis_; }

private:
  MatrixAlgebra(std::size_t k, Subspace basis);
  std::size_t k_;
  Subspace basis_;
  std::vector<Mat> elements_;
};

/// Span of all nonempty products of the generators (no identity adjoined).
Subspace multiplicative_closure(const FieldSpec& field, std::size_t k, std::span<const Mat> generators);
/// Smallest unital subalgebra containing the generators.
MatrixAlgebra unital_closure(const FieldSpec& field, std::size_t k, std::span<const Mat> generators);
/// Smallest unital subalgebra containing a and the extra generators.
MatrixAlgebra extend(const MatrixAlgebra& a, std::span<const Mat> extra);

/// {T : T b = b T for every b in the given matrices} as a subspace of F^{k^2}.
Subspace commuting_space(const FieldSpec& field, std::size_t k, std::span<const Mat> matrices);
MatrixAlgebra commutant(const MatrixAlgebra& a);
bool is_maximal_abelian(const MatrixAlgebra& a);
/// {T^T : T in A}; transpose realizes the # adjoint under the coordinate pairing.
MatrixAlgebra adjoint_algebra(const MatrixAlgebra& a);

/// span{b x : b in A}.
Subspace orbit_span(const MatrixAlgebra& a, const Vec& x);
bool is_cyclic(const MatrixAlgebra& a, const Vec& x);
bool is_invariant(const MatrixAlgebra& a, const Subspace& m);

enum class Truth { True, False, Unknown };
std::string to_string(Truth t);

/// Number of subspaces of GF(p)^k (sum of Gaussian binomials), saturating at UINT64_MAX.
std::uint64_t subspace_count(std::uint64_t p, std::size_t k);
/// Every subspace of GF(p)^k in canonical order (by dimension, then basis).
std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t k, std::uint64_t budget);
/// All A-invariant subspaces, including {0} and F^k. Finite fields only; throws BudgetExceeded.
std::vector<Subspace> invariant_subspaces(const MatrixAlgebra& a, std::uint64_t budget);

struct TransitivityResult {
  Truth value = Truth::Unknown;
  std::optional<Subspace> witness;  // proper nonzero invariant subspace when value == False
  std::string method;
};
/// Probe vectors for the rational cyclicity tests: standard basis plus the all-ones vector.
std::vector<Vec> default_probes(const FieldSpec& field, std::size_t k);
TransitivityResult is_transitive(const MatrixAlgebra& a, std::uint64_t budget);

/// Every element of the algebra (|F|^dim of them) in coefficient-lexicographic order.
std::vector<Mat> enumerate_elements(const MatrixAlgebra& a, std::uint64_t budget);
Truth has_complemented_lattice(const MatrixAlgebra& a, std::uint64_t budget);

/// Representative forms for a non-scalar 2x2 matrix up to similarity.
struct CanonicalForm2x2 {
  enum class Kind { DiagDistinct, JordanRepeated, CompanionIrreducible };
  Kind kind;
  std::vector<Scalar> params;  // (l1, l2) | (l) | (b, c) for x^2 + b x + c
  [[nodiscard]] Mat matrix(const FieldSpec& field) const;
  [[nodiscard]] std::string to_string() const;
};

struct Similarity2x2 {
  Mat s;  // S^{-1} T S == form.matrix()
  CanonicalForm2x2 form;
};
/// Throws ScalarInput when T is a multiple of I, WrongDimension when T is not 2x2.
Similarity2x2 similarity_to_canonical_2x2(const Mat& t);

/// S A S^{-1}.
MatrixAlgebra conjugate(const MatrixAlgebra& a, const Mat& s);

/// Coefficients of det(xI - M) for k <= 3, as {c_0, ..., c_{k-1}} of the monic polynomial.
std::vector<Scalar> characteristic_polynomial(const Mat& m);
/// Roots in the field of a monic polynomial of degree <= 3 given by low-order coefficients.
/// Over Q uses the rational root theorem; returns nullopt when the integers are too large to factor.
std::optional<std::vector<Scalar>> monic_roots(std::span<const Scalar> low_coefficients);

}  // namespace mtrace
