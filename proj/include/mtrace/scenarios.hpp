#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtrace/tracial.hpp"

namespace mtrace {

/// A named (algebra, functional) instance with the outcome the theory predicts for it.
struct Scenario {
  std::string name;
  MatrixAlgebra algebra;
  Functional functional;
  Outcome expected;
  std::string provenance;
  std::optional<Theorem10Checklist> checklist;
};

/// Diagonal algebra on an n-point probability space with the functional f (x) alpha.
/// The unweighted pairing is used; alpha carries the weights (alpha_i = mu_i h_i).
Scenario diagonal_scenario(const std::vector<Scalar>& weights, const Vec& f, const Vec& alpha);

/// Polynomials in the companion matrix of x^2 + b x + c (irreducible), with x (x) alpha.
Scenario field_extension_scenario(const Scalar& b, const Scalar& c, const Vec& x, const Vec& alpha);

/// Left multiplications {L_A : A in M_n} on vectorized M_n, with e = vec(I) and
/// alpha = vec(I)/n so that <L_A e, alpha> = Tr(A)/n.
Scenario left_regular_scenario(std::size_t n, const FieldSpec& field);
/// Left and right multiplication algebras acting on vectorized M_n (row-major).
MatrixAlgebra left_multiplications(std::size_t n, const FieldSpec& field);
MatrixAlgebra right_multiplications(std::size_t n, const FieldSpec& field);

/// Polynomials in the k x k nilpotent shift N e_i = e_{i+1}, with e_1 (x) h/h_1.
Scenario jordan_shift_scenario(std::size_t k, const FieldSpec& field, const Vec& h);

/// Recomputes the verdict with the decision procedures; true iff it equals `expected`.
bool verify_scenario(const Scenario& s, const DecideOptions& options = {});

}  // namespace mtrace
