#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mtrace/algebra.hpp"

namespace mtrace {

/// Unital linear functional on M_k(F): either T -> Tr(T K) or the rank-one form T -> <T x, alpha>.
class Functional {
public:
  struct KForm {
    Mat k;
    friend bool operator==(const KForm&, const KForm&) = default;
  };
  struct RankOne {
    Vec x;
    Vec alpha;
    friend bool operator==(const RankOne&, const RankOne&) = default;
  };

  /// Throws NotUnital unless Tr(K) = 1.
  static Functional k_form(Mat k);
  /// Throws NotUnitalPairing unless <x, alpha> = 1.
  static Functional rank_one(Vec x, Vec alpha);

  [[nodiscard]] const FieldSpec& field() const;
  [[nodiscard]] std::size_t k() const;
  [[nodiscard]] bool is_rank_one() const { return std::holds_alternative<RankOne>(form_); }
  [[nodiscard]] const KForm* as_k_form() const { return std::get_if<KForm>(&form_); }
  [[nodiscard]] const RankOne* as_rank_one() const { return std::get_if<RankOne>(&form_); }
  /// The matrix K with phi(T) = Tr(T K); x alpha^T for rank-one forms.
  [[nodiscard]] Mat k_matrix() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Functional&, const Functional&) = default;

private:
  explicit Functional(std::variant<KForm, RankOne> form) : form_(std::move(form)) {}
  std::variant<KForm, RankOne> form_;
};

Scalar eval(const Functional& phi, const Mat& t);
Functional rankone_to_kform(const Vec& x, const Vec& alpha);
/// phi#(T^T) = phi(T): swaps x and alpha, or transposes K.
Functional adjoint_functional(const Functional& phi);
/// True iff phi is (1/k) Tr; never true when char(F) divides k.
bool is_normalized_trace(const Functional& phi);

struct TracialityViolation {
  Mat a;
  Mat b;  // phi(ab) != phi(ba)
};

struct TracialCheck {
  bool tracial = true;
  std::optional<TracialityViolation> violation;
};

/// Checks phi(xy) = phi(yx) on every pair of the given spanning matrices.
TracialCheck is_tracial(std::span<const Mat> spanning, const Functional& phi);
TracialCheck is_tracial(const MatrixAlgebra& a, const Functional& phi);

/// First-order extension space {T : phi(B(AT - TA)C) = 0 for all basis A, B, C}.
/// Contains A and every T whose adjunction to A keeps phi tracial. Throws NotTracial.
Subspace foes(const MatrixAlgebra& a, const Functional& phi);

enum class Outcome { Maximal, NotMaximal, Unknown, NotTracial };
std::string to_string(Outcome o);

struct Theorem10Checklist {
  bool maximal_abelian = false;
  bool x_cyclic = false;
  bool alpha_cyclic_for_adjoint = false;
  [[nodiscard]] bool all() const { return maximal_abelian && x_cyclic && alpha_cyclic_for_adjoint; }
  friend bool operator==(const Theorem10Checklist&, const Theorem10Checklist&) = default;
};

namespace cert {
struct FoesEqualsAlgebra {};
struct ExhaustiveSearch {
  std::uint64_t count = 0;
};
struct Theorem10 {
  Theorem10Checklist checklist;
};
struct WitnessExtension {
  Mat t;
};
struct Violation {
  Mat a;
  Mat b;
};
}  // namespace cert

using Certificate = std::variant<std::monostate, cert::FoesEqualsAlgebra, cert::ExhaustiveSearch, cert::Theorem10,
                                 cert::WitnessExtension, cert::Violation>;
std::string certificate_name(const Certificate& c);

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  Certificate certificate;
  std::string branch;                            // which decision step produced the outcome
  std::optional<std::uint64_t> seed;             // set when pseudo-random sampling ran
  std::optional<std::uint64_t> enumerated_count; // set when FOES was enumerated
  std::optional<Theorem10Checklist> checklist;   // set when the rank-one cyclicity criterion was evaluated
};

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

struct DecideOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::uint64_t samples = 64;  // random FOES elements tried in the fallback branch
};

/// Traciality of the algebra generated by A and T.
bool extension_is_tracial(const MatrixAlgebra& a, const Mat& t, const Functional& phi);

/// Literal search over every element of FOES (|F|^dim FOES of them, lexicographic order).
/// Returns the first T outside A whose adjunction stays tracial, with the number of elements visited.
struct FoesSearch {
  std::optional<Mat> witness;
  std::uint64_t enumerated = 0;
};
FoesSearch search_foes_exhaustively(const MatrixAlgebra& a, const Functional& phi, const Subspace& foes_space,
                                    std::uint64_t budget);

Verdict decide_maximal(const MatrixAlgebra& a, const Functional& phi, const DecideOptions& options = {});

struct Theorem10Result {
  bool verdict = false;
  Theorem10Checklist checklist;
};
/// Throws NotAbelian and NotUnitalPairing.
Theorem10Result thm10_check(const MatrixAlgebra& a, const Vec& x, const Vec& alpha);
/// A tracial proper extension generator for abelian A when some thm10 condition fails.
std::optional<Mat> theorem10_witness(const MatrixAlgebra& a, const Vec& x, const Vec& alpha);

struct Theorem15Report {
  bool maximal_abelian = false;
  TransitivityResult transitive;
  Truth left = Truth::Unknown;           // maximal abelian and transitive
  bool exhaustive = false;               // every unital pair was examined
  std::uint64_t pairs_checked = 0;
  std::uint64_t maximal_pairs = 0;
  std::uint64_t unknown_pairs = 0;
  std::optional<std::pair<Vec, Vec>> non_maximal_pair;
  Truth right = Truth::Unknown;          // maximal for every unital rank-one pair
  Truth consistent = Truth::Unknown;
};

struct Theorem15Options {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::uint64_t samples = 20;      // rank-one pairs sampled when exhaustion is impossible
  std::uint64_t pair_budget = 5000;  // maximum unital pairs for exhaustive mode
};
Theorem15Report thm15_check(const MatrixAlgebra& a, const Theorem15Options& options = {});

/// All (x, alpha) with <x, alpha> = 1 over a finite field, in lexicographic order.
std::vector<std::pair<Vec, Vec>> unital_pairs(const FieldSpec& field, std::size_t k, std::uint64_t budget);

struct Theorem30Report {
  Outcome maximality = Outcome::Unknown;
  bool e_cyclic = false;
  bool f_cyclic_for_adjoint = false;
  bool vacuous = true;  // not maximal, so nothing to assert
  bool holds = true;
};
/// Finite fields only. Throws NotUnitalPairing, PreconditionFailed (lattice not complemented), BudgetExceeded.
Theorem30Report thm30_necessary_check(const MatrixAlgebra& a, const Vec& e, const Vec& f, std::uint64_t budget);

}  // namespace mtrace
