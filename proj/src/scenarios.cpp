#include "mtrace/scenarios.hpp"

namespace mtrace {

namespace {

MatrixAlgebra diagonal_algebra(const FieldSpec& field, std::size_t n) {
  std::vector<Mat> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(Mat::unit(field, n, i, i));
  return unital_closure(field, n, units);
}

bool all_nonzero(const Vec& v) {
  for (const auto& s : v.entries()) {
    if (s.is_zero()) return false;
  }
  return true;
}

}  // namespace

Scenario diagonal_scenario(const std::vector<Scalar>& weights, const Vec& f, const Vec& alpha) {
  const auto n = f.size();
  if (weights.size() != n || alpha.size() != n || n == 0) {
    throw Error(ErrorKind::DimensionMismatch, "weights, f and alpha need a common positive length");
  }
  const auto& field = f.field();
  auto total = Scalar::zero(field);
  for (const auto& w : weights) {
    if (w.is_zero() || (!field.is_finite() && sgn(w.rational_value()) <= 0)) {
      throw Error(ErrorKind::PreconditionFailed, "weights must be positive");
    }
    total += w;
  }
  if (!total.is_one()) throw Error(ErrorKind::PreconditionFailed, "weights must sum to 1");
  auto phi = Functional::rank_one(f, alpha);
  const bool maximal = all_nonzero(f) && all_nonzero(alpha);
  std::string weight_text;
  for (const auto& w : weights) weight_text += (weight_text.empty() ? "" : ",") + w.to_string();
  return Scenario{"diagonal",
                  diagonal_algebra(field, n),
                  std::move(phi),
                  maximal ? Outcome::Maximal : Outcome::NotMaximal,
                  "diagonal algebra on a finite probability space (weights " + weight_text +
                      "); unweighted pairing with alpha absorbing the weights; maximal iff f and alpha vanish nowhere",
                  std::nullopt};
}

Scenario field_extension_scenario(const Scalar& b, const Scalar& c, const Vec& x, const Vec& alpha) {
  if (quadratic_roots(b, c).splits()) {
    throw Error(ErrorKind::ReduciblePolynomial, "x^2 + (" + b.to_string() + ")x + (" + c.to_string() +
                                                    ") has a root in " + b.field().to_string());
  }
  const auto& field = b.field();
  auto companion = Mat::zero(field, 2);
  companion(0, 1) = -c;
  companion(1, 0) = Scalar::one(field);
  companion(1, 1) = -b;
  auto phi = Functional::rank_one(x, alpha);
  return Scenario{"field-extension",
                  unital_closure(field, 2, std::vector<Mat>{companion}),
                  std::move(phi),
                  Outcome::Maximal,
                  "quadratic field F[x]/(x^2 + bx + c) acting on F^2: transitive and maximal abelian",
                  std::nullopt};
}

MatrixAlgebra left_multiplications(std::size_t n, const FieldSpec& field) {
  // (L_A)_{(r,c),(r',c')} = A_{r r'} [c == c'] on row-major vec.
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto l = Mat::zero(field, n * n);
      for (std::size_t c = 0; c < n; ++c) l(i * n + c, j * n + c) = Scalar::one(field);
      gens.push_back(std::move(l));
    }
  }
  return unital_closure(field, n * n, gens);
}

MatrixAlgebra right_multiplications(std::size_t n, const FieldSpec& field) {
  // (R_B)_{(r,c),(r',c')} = [r == r'] B_{c' c}.
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto r = Mat::zero(field, n * n);
      for (std::size_t row = 0; row < n; ++row) r(row * n + j, row * n + i) = Scalar::one(field);
      gens.push_back(std::move(r));
    }
  }
  return unital_closure(field, n * n, gens);
}

Scenario left_regular_scenario(std::size_t n, const FieldSpec& field) {
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "n must be positive");
  const auto n_scalar = Scalar::from_int(field, static_cast<long long>(n));
  if (n_scalar.is_zero()) {
    throw Error(ErrorKind::CharacteristicDividesN, "characteristic of " + field.to_string() + " divides n = " +
                                                       std::to_string(n) + "; (1/n)Tr does not exist");
  }
  const auto e = vectorize(Mat::identity(field, n));
  const auto alpha = n_scalar.inverse() * e;
  return Scenario{"left-regular",
                  left_multiplications(n, field),
                  Functional::rank_one(e, alpha),
                  Outcome::Maximal,
                  "left regular representation of M_n with e = vec(I) and the normalized trace; commutant is the "
                  "right multiplications",
                  std::nullopt};
}

Scenario jordan_shift_scenario(std::size_t k, const FieldSpec& field, const Vec& h) {
  if (h.size() != k || k == 0) throw Error(ErrorKind::DimensionMismatch, "h must have length k");
  if (h[0].is_zero()) throw Error(ErrorKind::NotUnitalPairing, "h_1 = 0, so <e_1, h> cannot be normalized to 1");
  auto shift = Mat::zero(field, k);
  for (std::size_t i = 0; i + 1 < k; ++i) shift(i + 1, i) = Scalar::one(field);
  auto algebra = unital_closure(field, k, std::vector<Mat>{shift});
  const auto x = Vec::unit(field, k, 0);
  const auto alpha = h[0].inverse() * h;
  const auto result = thm10_check(algebra, x, alpha);
  return Scenario{"jordan-shift",
                  std::move(algebra),
                  Functional::rank_one(x, alpha),
                  result.verdict ? Outcome::Maximal : Outcome::NotMaximal,
                  "truncated weighted shift: polynomials in the nilpotent Jordan block, x = e_1",
                  result.checklist};
}

bool verify_scenario(const Scenario& s, const DecideOptions& options) {
  return decide_maximal(s.algebra, s.functional, options).outcome == s.expected;
}

}  // namespace mtrace
