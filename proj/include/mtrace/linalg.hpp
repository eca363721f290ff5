#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mtrace/field.hpp"

namespace mtrace {

/// Dense vector over a field.
class Vec {
public:
  Vec(FieldSpec field, std::vector<Scalar> entries);
  static Vec zero(const FieldSpec& field, std::size_t d);
  static Vec unit(const FieldSpec& field, std::size_t d, std::size_t i);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  [[nodiscard]] std::span<const Scalar> entries() const { return entries_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

  Vec& operator+=(const Vec& rhs);
  Vec& operator-=(const Vec& rhs);
  Vec& operator*=(const Scalar& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }

  friend bool operator==(const Vec&, const Vec&) = default;
  /// Lexicographic order with field-element order per entry.
  friend int compare(const Vec& a, const Vec& b);

private:
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// Bilinear coordinate pairing sum_i x_i * y_i.
Scalar pairing(const Vec& x, const Vec& y);

/// Dense square k x k matrix, row-major.
class Mat {
public:
  Mat(FieldSpec field, std::size_t k, std::vector<Scalar> entries);
  static Mat zero(const FieldSpec& field, std::size_t k);
  static Mat identity(const FieldSpec& field, std::size_t k);
  /// Matrix unit e_ij (zero-based indices).
  static Mat unit(const FieldSpec& field, std::size_t k, std::size_t i, std::size_t j);
  /// Matrix whose j-th column is columns[j].
  static Mat from_columns(std::span<const Vec> columns);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * k_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * k_ + j]; }
  [[nodiscard]] std::span<const Scalar> entries() const { return entries_; }
  [[nodiscard]] Vec column(std::size_t j) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_scalar() const;
  [[nodiscard]] std::string to_string() const;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Scalar& s, Mat m) { return m *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& x);

  friend bool operator==(const Mat&, const Mat&) = default;

private:
  void check_compatible(const Mat& rhs) const;
  FieldSpec field_;
  std::size_t k_;
  std::vector<Scalar> entries_;
};

inline Vec mat_vec(const Mat& m, const Vec& x) { return m * x; }
inline Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }
Mat transpose(const Mat& m);
Scalar trace(const Mat& m);
Scalar determinant_2x2(const Mat& m);
/// Gauss-Jordan inverse; throws Singular.
Mat inverse(const Mat& m);
/// AB - BA.
Mat commutator(const Mat& a, const Mat& b);
/// Outer product x * y^T.
Mat outer(const Vec& x, const Vec& y);

/// Row-major flattening into F^{k^2}; the repo-wide matrix <-> vector convention.
Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, std::size_t k);

/// Linear subspace of F^d held as a reduced row echelon basis. Equal subspaces have equal bases.
class Subspace {
public:
  static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }
  [[nodiscard]] bool is_full() const { return basis_.size() == ambient_dim_; }

  /// v minus its projection along pivot columns: zero iff v lies in the subspace.
  [[nodiscard]] Vec reduce(const Vec& v) const;
  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Element sum_i coefficients[i] * basis[i].
  [[nodiscard]] Vec combine(std::span<const Scalar> coefficients) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend int compare(const Subspace& a, const Subspace& b);
  friend bool operator<(const Subspace& a, const Subspace& b) { return compare(a, b) < 0; }

private:
  friend Subspace rref(const FieldSpec& field, std::size_t d, std::span<const Vec> vectors);
  Subspace(FieldSpec field, std::size_t d) : field_(field), ambient_dim_(d) {}
  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical echelon basis of span(vectors). Field and d are explicit so the empty list is allowed.
Subspace rref(const FieldSpec& field, std::size_t d, std::span<const Vec> vectors);
bool member(const Subspace& s, const Vec& v);
/// {v : <v, c> = 0 for every constraint c}.
Subspace solve_homogeneous(const FieldSpec& field, std::size_t d, std::span<const Vec> constraints);
/// Annihilator under the coordinate pairing.
Subspace annihilator(const Subspace& s);
Subspace span_union(const Subspace& a, const Subspace& b);
/// Extends the basis of s by standard unit vectors to a basis of the whole space.
std::vector<Vec> complete_basis(const Subspace& s);

}  // namespace mtrace
