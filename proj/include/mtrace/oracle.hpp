#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mtrace/classify2x2.hpp"

namespace mtrace {

/// Every unital subalgebra of M_k(GF(p)) in canonical order. Reached by adjoining one element
/// at a time starting from the scalars, so every subalgebra is visited.
/// Throws BudgetExceeded for (k = 2, p > 5) or when the work estimate exceeds the budget.
std::vector<MatrixAlgebra> enumerate_unital_subalgebras(std::uint32_t p, std::size_t k = 2,
                                                        std::uint64_t budget = kDefaultBudget);
/// Abelian unital subalgebras only (adjoins elements of the current commutant).
std::vector<MatrixAlgebra> enumerate_abelian_subalgebras(std::uint32_t p, std::size_t k,
                                                         std::uint64_t budget = kDefaultBudget);

/// All K with Tr(K) = 1 over GF(p), p^{k^2 - 1} of them, in lexicographic order.
std::vector<Functional> enumerate_unital_functionals(std::uint32_t p, std::size_t k = 2);

/// Every element of M_k(GF(p)) in lexicographic order.
std::vector<Mat> all_matrices(const FieldSpec& field, std::size_t k, std::uint64_t budget = kDefaultBudget);

struct BruteResult {
  Outcome outcome = Outcome::Maximal;  // Maximal, NotMaximal or NotTracial
  std::optional<Mat> witness;
  std::uint64_t candidates = 0;
};

/// The definition checked literally: A tracial and no T outside A generates a tracial extension.
BruteResult brute_maximal(const MatrixAlgebra& a, const Functional& phi);

/// Distinct proper extensions closure(A + T), T ranging over M_k, each with its first generator.
struct Extension {
  Mat generator;
  MatrixAlgebra algebra;
};
std::vector<Extension> single_element_extensions(const MatrixAlgebra& a);
/// brute_maximal with the extension list precomputed (used by the sweeps).
BruteResult brute_maximal(const MatrixAlgebra& a, const Functional& phi, const std::vector<Extension>& extensions);

struct Mismatch {
  MatrixAlgebra algebra;
  Functional phi;
  Outcome classified;
  Outcome brute;
};

struct SweepReport {
  FieldSpec field;
  std::uint64_t algebra_count = 0;
  std::uint64_t functional_count = 0;
  std::uint64_t pair_count = 0;
  std::vector<Mismatch> mismatches;
};

/// Compares classify() with brute_maximal() on every (subalgebra, unital K) pair of M_2(GF(p)).
SweepReport verify_classification(std::uint32_t p);

/// Closure of the union of any two enumerated algebras is again enumerated.
bool enumeration_closed_under_joins(const std::vector<MatrixAlgebra>& algebras);

}  // namespace mtrace
