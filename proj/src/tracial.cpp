#include "mtrace/tracial.hpp"

#include <random>
#include <set>

namespace mtrace {

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return compare(a, b) < 0; }
};

void check_shape(const MatrixAlgebra& a, const Functional& phi) {
  if (a.field() != phi.field()) {
    throw Error(ErrorKind::FieldMismatch, "algebra over " + a.field().to_string() + ", functional over " +
                                              phi.field().to_string());
  }
  if (a.k() != phi.k()) {
    throw Error(ErrorKind::DimensionMismatch, "algebra in M_" + std::to_string(a.k()) + ", functional on M_" +
                                                  std::to_string(phi.k()));
  }
}

// Random field element: residues uniformly, rationals as small integers in [-3, 3].
Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng) {
  if (field.is_finite()) return Scalar::residue(field, rng() % field.p());
  return Scalar::from_int(field, static_cast<long long>(rng() % 7) - 3);
}

Vec random_vec(const FieldSpec& field, std::size_t d, std::mt19937_64& rng) {
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < d; ++i) entries.push_back(random_scalar(field, rng));
  return Vec(field, std::move(entries));
}

// Complement of A inside the space, taken greedily from the canonical basis, plus random elements.
std::vector<Mat> fallback_candidates(const MatrixAlgebra& a, const Subspace& space, const DecideOptions& options) {
  std::vector<Mat> out;
  auto current = a.subspace();
  for (const auto& v : space.basis()) {
    if (current.contains(v)) continue;
    out.push_back(unvectorize(v, a.k()));
    current = span_union(current, rref(a.field(), v.size(), std::vector<Vec>{v}));
  }
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples && space.dim() > a.dim(); ++s) {
    auto coeffs = random_vec(a.field(), space.dim(), rng);
    auto v = space.combine(coeffs.entries());
    if (!a.subspace().contains(v)) out.push_back(unvectorize(v, a.k()));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Functional

Functional Functional::k_form(Mat k) {
  if (!trace(k).is_one()) {
    throw Error(ErrorKind::NotUnital, "Tr(K) = " + trace(k).to_string() + " for K = " + k.to_string());
  }
  return Functional(KForm{std::move(k)});
}

Functional Functional::rank_one(Vec x, Vec alpha) {
  if (x.size() != alpha.size()) throw Error(ErrorKind::DimensionMismatch, "x and alpha have different lengths");
  const auto p = pairing(x, alpha);
  if (!p.is_one()) {
    throw Error(ErrorKind::NotUnitalPairing, "<x, alpha> = " + p.to_string() + " for x = " + x.to_string() +
                                                 ", alpha = " + alpha.to_string());
  }
  return Functional(RankOne{std::move(x), std::move(alpha)});
}

const FieldSpec& Functional::field() const {
  return std::visit(
      [](const auto& f) -> const FieldSpec& {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, KForm>) {
          return f.k.field();
        } else {
          return f.x.field();
        }
      },
      form_);
}

std::size_t Functional::k() const {
  if (const auto* kf = as_k_form()) return kf->k.k();
  return as_rank_one()->x.size();
}

Mat Functional::k_matrix() const {
  if (const auto* kf = as_k_form()) return kf->k;
  const auto* r = as_rank_one();
  return outer(r->x, r->alpha);
}

std::string Functional::to_string() const {
  if (const auto* kf = as_k_form()) return "phi_K with K = " + kf->k.to_string();
  const auto* r = as_rank_one();
  return "x (x) alpha with x = " + r->x.to_string() + ", alpha = " + r->alpha.to_string();
}

Scalar eval(const Functional& phi, const Mat& t) {
  if (t.field() != phi.field()) throw Error(ErrorKind::FieldMismatch, "functional and matrix fields differ");
  if (t.k() != phi.k()) throw Error(ErrorKind::DimensionMismatch, "functional and matrix sizes differ");
  if (const auto* r = phi.as_rank_one()) return pairing(t * r->x, r->alpha);
  const auto& k = phi.as_k_form()->k;
  auto acc = Scalar::zero(t.field());
  for (std::size_t i = 0; i < t.k(); ++i) {
    for (std::size_t j = 0; j < t.k(); ++j) acc += t(i, j) * k(j, i);
  }
  return acc;
}

Functional rankone_to_kform(const Vec& x, const Vec& alpha) {
  if (!pairing(x, alpha).is_one()) {
    throw Error(ErrorKind::NotUnital, "<x, alpha> = " + pairing(x, alpha).to_string());
  }
  return Functional::k_form(outer(x, alpha));
}

Functional adjoint_functional(const Functional& phi) {
  if (const auto* r = phi.as_rank_one()) return Functional::rank_one(r->alpha, r->x);
  return Functional::k_form(transpose(phi.as_k_form()->k));
}

bool is_normalized_trace(const Functional& phi) {
  const auto& field = phi.field();
  const auto k = Scalar::from_int(field, static_cast<long long>(phi.k()));
  if (k.is_zero()) return false;
  return phi.k_matrix() == k.inverse() * Mat::identity(field, phi.k());
}

// ---------------------------------------------------------------- traciality

TracialCheck is_tracial(std::span<const Mat> spanning, const Functional& phi) {
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    for (std::size_t j = i + 1; j < spanning.size(); ++j) {
      const auto& a = spanning[i];
      const auto& b = spanning[j];
      if (!eval(phi, commutator(a, b)).is_zero()) return {false, TracialityViolation{a, b}};
    }
  }
  return {true, std::nullopt};
}

TracialCheck is_tracial(const MatrixAlgebra& a, const Functional& phi) {
  check_shape(a, phi);
  return is_tracial(a.elements(), phi);
}

Subspace foes(const MatrixAlgebra& a, const Functional& phi) {
  check_shape(a, phi);
  if (!is_tracial(a, phi).tracial) {
    throw Error(ErrorKind::NotTracial, "FOES requires a tracial algebra; " + phi.to_string());
  }
  const auto k = a.k();
  const auto& field = a.field();
  const auto kmat = phi.k_matrix();
  const auto& els = a.elements();
  // phi(XTY) = phi(TYX) for X, Y in A, i.e. Tr(T Y(KX - XK)) = 0. On abelian A this is the same
  // space as phi(B(AT - TA)C) = 0; unlike that form it contains A and every tracial extension
  // for noncommutative A too. Tr(T M) = sum_ij T_ij M_ji.
  std::vector<Vec> constraints;
  for (const auto& x : els) {
    const auto kx = kmat * x - x * kmat;
    if (kx.is_zero()) continue;
    for (const auto& y : els) {
      const auto m = y * kx;
      auto row = Vec::zero(field, k * k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) row[i * k + j] = m(j, i);
      }
      if (!row.is_zero()) constraints.push_back(std::move(row));
    }
  }
  return solve_homogeneous(field, k * k, constraints);
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Maximal: return "Maximal";
    case Outcome::NotMaximal: return "NotMaximal";
    case Outcome::Unknown: return "Unknown";
    case Outcome::NotTracial: return "NotTracial";
  }
  return "Unknown";
}

std::string certificate_name(const Certificate& c) {
  struct Namer {
    std::string operator()(std::monostate) const { return "none"; }
    std::string operator()(const cert::FoesEqualsAlgebra&) const { return "FoesEqualsAlgebra"; }
    std::string operator()(const cert::ExhaustiveSearch&) const { return "ExhaustiveSearch"; }
    std::string operator()(const cert::Theorem10&) const { return "Theorem10"; }
    std::string operator()(const cert::WitnessExtension&) const { return "WitnessExtension"; }
    std::string operator()(const cert::Violation&) const { return "TracialityViolation"; }
  };
  return std::visit(Namer{}, c);
}

bool extension_is_tracial(const MatrixAlgebra& a, const Mat& t, const Functional& phi) {
  return is_tracial(extend(a, std::vector<Mat>{t}), phi).tracial;
}

FoesSearch search_foes_exhaustively(const MatrixAlgebra& a, const Functional& phi, const Subspace& foes_space,
                                    std::uint64_t budget) {
  const auto& field = a.field();
  if (!field.is_finite()) throw Error(ErrorKind::InvalidField, "exhaustive FOES search needs a finite field");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < foes_space.dim(); ++i) {
    if (total > budget / field.p()) {
      throw Error(ErrorKind::BudgetExceeded, "FOES of dimension " + std::to_string(foes_space.dim()) + " over " +
                                                 field.to_string() + " exceeds budget " + std::to_string(budget));
    }
    total *= field.p();
  }
  const auto elems = field_elements(field);
  FoesSearch out;
  // Elements congruent modulo A generate the same extension, so each coset is tested once.
  std::set<Vec, VecLess> seen_cosets;
  std::vector<std::size_t> digits(foes_space.dim(), 0);
  std::vector<Scalar> coeffs(foes_space.dim(), Scalar::zero(field));
  while (true) {
    ++out.enumerated;
    for (std::size_t i = 0; i < digits.size(); ++i) coeffs[i] = elems[digits[i]];
    const auto v = foes_space.combine(coeffs);
    auto coset = a.subspace().reduce(v);
    if (!coset.is_zero() && seen_cosets.insert(coset).second) {
      auto t = unvectorize(v, a.k());
      if (extension_is_tracial(a, t, phi)) {
        out.witness = std::move(t);
        return out;
      }
    }
    std::size_t pos = digits.size();
    while (pos > 0 && ++digits[pos - 1] == elems.size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

Verdict decide_maximal(const MatrixAlgebra& a, const Functional& phi, const DecideOptions& options) {
  check_shape(a, phi);
  Verdict v;
  if (auto check = is_tracial(a, phi); !check.tracial) {
    v.outcome = Outcome::NotTracial;
    v.certificate = cert::Violation{check.violation->a, check.violation->b};
    v.branch = "traciality";
    return v;
  }
  const auto space = foes(a, phi);
  if (space == a.subspace()) {
    v.outcome = Outcome::Maximal;
    v.certificate = cert::FoesEqualsAlgebra{};
    v.branch = "foes";
    return v;
  }
  const auto& field = a.field();
  if (field.is_finite()) {
    bool within_budget = true;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < space.dim() && within_budget; ++i) {
      within_budget = total <= options.budget / field.p();
      total *= field.p();
    }
    if (within_budget) {
      auto search = search_foes_exhaustively(a, phi, space, options.budget);
      v.branch = "exhaustive";
      v.enumerated_count = search.enumerated;
      if (search.witness) {
        v.outcome = Outcome::NotMaximal;
        v.certificate = cert::WitnessExtension{*search.witness};
      } else {
        v.outcome = Outcome::Maximal;
        v.certificate = cert::ExhaustiveSearch{search.enumerated};
      }
      return v;
    }
  }
  if (!field.is_finite() && phi.is_rank_one() && a.is_abelian()) {
    const auto* r = phi.as_rank_one();
    const auto result = thm10_check(a, r->x, r->alpha);
    v.branch = "theorem10";
    v.checklist = result.checklist;
    if (result.verdict) {
      v.outcome = Outcome::Maximal;
      v.certificate = cert::Theorem10{result.checklist};
    } else {
      v.outcome = Outcome::NotMaximal;
      v.certificate = cert::WitnessExtension{*theorem10_witness(a, r->x, r->alpha)};
    }
    return v;
  }
  // Candidates from both the problem and its adjoint keep the outcome invariant under #.
  v.branch = "sampling";
  v.seed = options.seed;
  auto candidates = fallback_candidates(a, space, options);
  const auto adj = adjoint_algebra(a);
  const auto adj_phi = adjoint_functional(phi);
  for (const auto& t : fallback_candidates(adj, foes(adj, adj_phi), options)) candidates.push_back(transpose(t));
  for (const auto& t : candidates) {
    if (!a.contains(t) && extension_is_tracial(a, t, phi)) {
      v.outcome = Outcome::NotMaximal;
      v.certificate = cert::WitnessExtension{t};
      return v;
    }
  }
  v.outcome = Outcome::Unknown;
  return v;
}

// ---------------------------------------------------------------- rank-one criterion, transitivity, cyclicity

Theorem10Result thm10_check(const MatrixAlgebra& a, const Vec& x, const Vec& alpha) {
  if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "algebra " + a.to_string() + " is not abelian");
  if (x.size() != a.k() || alpha.size() != a.k()) throw Error(ErrorKind::DimensionMismatch, "vector length != k");
  if (!pairing(x, alpha).is_one()) {
    throw Error(ErrorKind::NotUnitalPairing, "<x, alpha> = " + pairing(x, alpha).to_string());
  }
  Theorem10Result r;
  r.checklist.maximal_abelian = is_maximal_abelian(a);
  r.checklist.x_cyclic = is_cyclic(a, x);
  r.checklist.alpha_cyclic_for_adjoint = is_cyclic(adjoint_algebra(a), alpha);
  r.verdict = r.checklist.all();
  return r;
}

std::optional<Mat> theorem10_witness(const MatrixAlgebra& a, const Vec& x, const Vec& alpha) {
  const auto& field = a.field();
  const auto k = a.k();
  if (!is_maximal_abelian(a)) {
    // Anything in the commutant generates an abelian, hence tracial, extension.
    const auto centralizer = commuting_space(field, k, a.elements());
    for (const auto& v : centralizer.basis()) {
      if (!a.subspace().contains(v)) return unvectorize(v, k);
    }
  }
  const auto orbit = orbit_span(a, x);
  if (!orbit.is_full()) {
    // Every T with T(M) in M and T|M in A|M keeps x (x) alpha tracial (M = span A x). Two such maps
    // fail to commute, so one of them lies outside the abelian algebra A.
    std::vector<Mat> candidates;
    const auto orthogonal = annihilator(orbit);
    for (const auto& beta : orthogonal.basis()) candidates.push_back(outer(x, beta));
    const auto basis = complete_basis(orbit);
    auto diag = Mat::zero(field, k);
    for (std::size_t i = 0; i < orbit.dim(); ++i) diag(i, i) = Scalar::one(field);
    const auto change = Mat::from_columns(basis);
    candidates.push_back(change * diag * inverse(change));
    for (auto& t : candidates) {
      if (!a.contains(t)) return t;
    }
    return std::nullopt;
  }
  if (!is_cyclic(adjoint_algebra(a), alpha)) {
    if (auto t = theorem10_witness(adjoint_algebra(a), alpha, x)) return transpose(*t);
  }
  return std::nullopt;
}

std::vector<std::pair<Vec, Vec>> unital_pairs(const FieldSpec& field, std::size_t k, std::uint64_t budget) {
  if (!field.is_finite()) throw Error(ErrorKind::InvalidField, "cannot enumerate pairs over Q");
  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (vectors > budget / field.p()) throw Error(ErrorKind::BudgetExceeded, "too many vectors to enumerate");
    vectors *= field.p();
  }
  if (vectors > budget / vectors) throw Error(ErrorKind::BudgetExceeded, "too many unital pairs to enumerate");
  const auto elems = field_elements(field);
  std::vector<Vec> all;
  std::vector<std::size_t> digits(k, 0);
  while (true) {
    std::vector<Scalar> entries;
    for (auto d : digits) entries.push_back(elems[d]);
    all.emplace_back(field, std::move(entries));
    std::size_t pos = k;
    while (pos > 0 && ++digits[pos - 1] == elems.size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  std::vector<std::pair<Vec, Vec>> out;
  for (const auto& x : all) {
    if (x.is_zero()) continue;
    for (const auto& alpha : all) {
      if (pairing(x, alpha).is_one()) out.emplace_back(x, alpha);
    }
  }
  return out;
}

Theorem15Report thm15_check(const MatrixAlgebra& a, const Theorem15Options& options) {
  Theorem15Report r;
  r.maximal_abelian = is_maximal_abelian(a);
  r.transitive = is_transitive(a, options.budget);
  r.left = !r.maximal_abelian ? Truth::False : r.transitive.value;

  const auto& field = a.field();
  std::vector<std::pair<Vec, Vec>> pairs;
  if (field.is_finite()) {
    try {
      pairs = unital_pairs(field, a.k(), options.pair_budget);
      r.exhaustive = pairs.size() <= options.pair_budget;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
    }
    if (!r.exhaustive) pairs.clear();
  }
  if (!r.exhaustive) {
    std::mt19937_64 rng(options.seed);
    std::uint64_t attempts = 0;
    while (pairs.size() < options.samples && attempts++ < 100 * (options.samples + 1)) {
      auto x = random_vec(field, a.k(), rng);
      auto alpha = random_vec(field, a.k(), rng);
      auto p = pairing(x, alpha);
      if (p.is_zero()) continue;
      alpha *= p.inverse();
      pairs.emplace_back(std::move(x), std::move(alpha));
    }
  }
  DecideOptions decide{options.budget, options.seed};
  for (const auto& [x, alpha] : pairs) {
    ++r.pairs_checked;
    auto v = decide_maximal(a, Functional::rank_one(x, alpha), decide);
    if (v.outcome == Outcome::Maximal) {
      ++r.maximal_pairs;
    } else if (v.outcome == Outcome::Unknown) {
      ++r.unknown_pairs;
    } else if (!r.non_maximal_pair) {
      r.non_maximal_pair = std::make_pair(x, alpha);
    }
  }
  if (r.non_maximal_pair) {
    r.right = Truth::False;
  } else if (r.unknown_pairs == 0 && r.pairs_checked > 0) {
    r.right = Truth::True;  // a proof only when exhaustive
  }

  if (r.left == Truth::True) {
    r.consistent = r.right == Truth::False ? Truth::False : (r.right == Truth::True ? Truth::True : Truth::Unknown);
  } else if (r.left == Truth::False) {
    if (r.right == Truth::False) {
      r.consistent = Truth::True;
    } else if (r.right == Truth::True && r.exhaustive) {
      r.consistent = Truth::False;
    }
  }
  return r;
}

Theorem30Report thm30_necessary_check(const MatrixAlgebra& a, const Vec& e, const Vec& f, std::uint64_t budget) {
  if (!a.field().is_finite()) throw Error(ErrorKind::InvalidField, "thm30 check runs over finite fields");
  auto phi = Functional::rank_one(e, f);
  switch (has_complemented_lattice(a, budget)) {
    case Truth::True: break;
    case Truth::False:
      throw Error(ErrorKind::PreconditionFailed, "invariant subspace lattice of " + a.to_string() +
                                                     " is not complemented");
    case Truth::Unknown:
      throw Error(ErrorKind::BudgetExceeded, "complemented-lattice check exceeds budget " + std::to_string(budget));
  }
  Theorem30Report r;
  r.maximality = decide_maximal(a, phi, DecideOptions{budget, 0}).outcome;
  r.e_cyclic = is_cyclic(a, e);
  r.f_cyclic_for_adjoint = is_cyclic(adjoint_algebra(a), f);
  r.vacuous = r.maximality != Outcome::Maximal;
  r.holds = r.vacuous || (r.e_cyclic && r.f_cyclic_for_adjoint);
  return r;
}

}  // namespace mtrace
