#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "mtrace/error.hpp"

namespace mtrace {

/// Ground field descriptor: the rationals or a prime field GF(p).
class FieldSpec {
public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidField unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime(std::uint64_t p);
  /// Parses "Q" or "GF(p)".
  static FieldSpec parse(std::string_view text);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_finite() const { return kind_ == Kind::PrimeField; }
  [[nodiscard]] std::uint32_t p() const { return p_; }
  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  /// Number of field elements; only meaningful for finite fields.
  [[nodiscard]] std::uint64_t order() const { return p_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are always stored in lowest terms; residues in [0, p).
class Scalar {
public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  /// Integer n mapped into the field (reduced mod p for prime fields).
  static Scalar from_int(const FieldSpec& field, long long n);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(const FieldSpec& field, std::uint64_t value);
  /// Text syntax: "n", "n/d", optional leading "-". Prime-field inputs are reduced mod p.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  [[nodiscard]] FieldSpec field() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] std::string to_string() const;

  /// Residue value; only valid for prime-field scalars.
  [[nodiscard]] std::uint32_t residue_value() const { return std::get<std::uint32_t>(value_); }
  /// Rational value; only valid for rational scalars.
  [[nodiscard]] const mpq_class& rational_value() const { return std::get<mpq_class>(value_); }

  [[nodiscard]] Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for canonical orderings: residues by value, rationals numerically.
  friend int compare(const Scalar& a, const Scalar& b);

private:
  Scalar(std::uint32_t p, std::variant<std::uint32_t, mpq_class> value)
      : p_(p), value_(std::move(value)) {}
  void check_same_field(const Scalar& rhs) const;

  std::uint32_t p_;  // 0 for the rationals
  std::variant<std::uint32_t, mpq_class> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Some r with r*r == s, if one exists in the field.
std::optional<Scalar> is_square(const Scalar& s);

/// Roots of x^2 + b x + c in the field of b and c.
struct QuadraticRoots {
  std::vector<Scalar> roots;  // ascending, each root listed once
  bool repeated = false;      // true when the single root has multiplicity two
  [[nodiscard]] bool splits() const { return !roots.empty(); }
};
QuadraticRoots quadratic_roots(const Scalar& b, const Scalar& c);

/// All elements of a finite field in residue order 0, 1, ..., p-1.
std::vector<Scalar> field_elements(const FieldSpec& field);

}  // namespace mtrace
