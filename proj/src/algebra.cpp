#include "mtrace/algebra.hpp"

#include <algorithm>
#include <set>

namespace mtrace {

namespace {

std::vector<Vec> vectorize_all(std::span<const Mat> ms) {
  std::vector<Vec> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(vectorize(m));
  return out;
}

void check_generators(const FieldSpec& field, std::size_t k, std::span<const Mat> generators) {
  for (const auto& g : generators) {
    if (g.field() != field) {
      throw Error(ErrorKind::FieldMismatch, "generator over " + g.field().to_string() + " in an algebra over " +
                                                field.to_string());
    }
    if (g.k() != k) {
      throw Error(ErrorKind::DimensionMismatch, "generator of size " + std::to_string(g.k()) + " in M_" +
                                                    std::to_string(k));
    }
  }
}

// Span of `seed` closed under left multiplication by every generator.
Subspace left_closure(const FieldSpec& field, std::size_t k, std::vector<Mat> seed, std::span<const Mat> generators) {
  const auto d = k * k;
  std::vector<Vec> spanning;
  auto current = Subspace::zero(field, d);
  std::vector<Mat> queue;
  for (auto& m : seed) {
    auto v = vectorize(m);
    if (current.contains(v)) continue;
    spanning.push_back(std::move(v));
    current = rref(field, d, spanning);
    queue.push_back(std::move(m));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      auto product = g * queue[head];
      auto v = vectorize(product);
      if (current.contains(v)) continue;
      spanning.push_back(std::move(v));
      current = rref(field, d, spanning);
      queue.push_back(std::move(product));
    }
  }
  return current;
}

Subspace column_space(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.k(); ++j) cols.push_back(m.column(j));
  return rref(m.field(), m.k(), cols);
}

Subspace kernel(const Mat& m) {
  std::vector<Vec> rows;
  auto mt = transpose(m);
  for (std::size_t i = 0; i < m.k(); ++i) rows.push_back(mt.column(i));
  return solve_homogeneous(m.field(), m.k(), rows);
}

// Radical of a 3-dimensional subalgebra of M_2 (conjugate of the upper triangulars):
// the null space of the trace form restricted to the algebra.
Mat radical_generator_2x2(const MatrixAlgebra& a) {
  const auto& field = a.field();
  const auto& els = a.elements();
  std::vector<Vec> constraints;
  for (const auto& y : els) {
    std::vector<Scalar> row;
    for (const auto& x : els) row.push_back(trace(x * y));
    constraints.emplace_back(field, std::move(row));
  }
  auto null = solve_homogeneous(field, els.size(), constraints);
  if (null.dim() != 1) throw Error(ErrorKind::PreconditionFailed, "expected a one-dimensional radical");
  auto n = Mat::zero(field, 2);
  for (std::size_t i = 0; i < els.size(); ++i) n += null.basis()[0][i] * els[i];
  return n;
}

std::optional<mpz_class> bounded_abs(const mpz_class& z) {
  static const mpz_class limit("1000000000000");
  mpz_class a = abs(z);
  if (a > limit) return std::nullopt;
  return a;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar evaluate_monic(std::span<const Scalar> low, const Scalar& x) {
  auto acc = Scalar::one(x.field());
  for (auto it = low.rbegin(); it != low.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- MatrixAlgebra

MatrixAlgebra::MatrixAlgebra(std::size_t k, Subspace basis) : k_(k), basis_(std::move(basis)) {
  elements_.reserve(basis_.dim());
  for (const auto& v : basis_.basis()) elements_.push_back(unvectorize(v, k_));
}

MatrixAlgebra MatrixAlgebra::from_subspace(std::size_t k, Subspace basis) {
  if (basis.ambient_dim() != k * k) throw Error(ErrorKind::DimensionMismatch, "algebra subspace not in F^{k^2}");
  MatrixAlgebra a(k, std::move(basis));
  if (!a.contains(Mat::identity(a.field(), k))) {
    throw Error(ErrorKind::PreconditionFailed, "subspace " + a.to_string() + " does not contain the identity");
  }
  for (const auto& x : a.elements_) {
    for (const auto& y : a.elements_) {
      if (!a.contains(x * y)) {
        throw Error(ErrorKind::PreconditionFailed, "subspace " + a.to_string() + " is not closed under products");
      }
    }
  }
  return a;
}

bool MatrixAlgebra::is_abelian() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (!commutator(elements_[i], elements_[j]).is_zero()) return false;
    }
  }
  return true;
}

Subspace multiplicative_closure(const FieldSpec& field, std::size_t k, std::span<const Mat> generators) {
  check_generators(field, k, generators);
  return left_closure(field, k, std::vector<Mat>(generators.begin(), generators.end()), generators);
}

MatrixAlgebra unital_closure(const FieldSpec& field, std::size_t k, std::span<const Mat> generators) {
  if (k == 0) throw Error(ErrorKind::DimensionMismatch, "k must be positive");
  check_generators(field, k, generators);
  std::vector<Mat> seed{Mat::identity(field, k)};
  seed.insert(seed.end(), generators.begin(), generators.end());
  return MatrixAlgebra::from_subspace(k, left_closure(field, k, std::move(seed), generators));
}

MatrixAlgebra extend(const MatrixAlgebra& a, std::span<const Mat> extra) {
  std::vector<Mat> generators = a.elements();
  generators.insert(generators.end(), extra.begin(), extra.end());
  return unital_closure(a.field(), a.k(), generators);
}

Subspace commuting_space(const FieldSpec& field, std::size_t k, std::span<const Mat> matrices) {
  check_generators(field, k, matrices);
  std::vector<Vec> constraints;
  // (T b - b T)_{ij} = sum_l T_il b_lj - b_il T_lj, linear in the entries of T.
  for (const auto& b : matrices) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto row = Vec::zero(field, k * k);
        for (std::size_t l = 0; l < k; ++l) {
          row[i * k + l] += b(l, j);
          row[l * k + j] -= b(i, l);
        }
        if (!row.is_zero()) constraints.push_back(std::move(row));
      }
    }
  }
  return solve_homogeneous(field, k * k, constraints);
}

MatrixAlgebra commutant(const MatrixAlgebra& a) {
  return MatrixAlgebra::from_subspace(a.k(), commuting_space(a.field(), a.k(), a.elements()));
}

bool is_maximal_abelian(const MatrixAlgebra& a) {
  return a.is_abelian() && commuting_space(a.field(), a.k(), a.elements()) == a.subspace();
}

MatrixAlgebra adjoint_algebra(const MatrixAlgebra& a) {
  std::vector<Vec> vs;
  for (const auto& m : a.elements()) vs.push_back(vectorize(transpose(m)));
  return MatrixAlgebra::from_subspace(a.k(), rref(a.field(), a.k() * a.k(), vs));
}

MatrixAlgebra conjugate(const MatrixAlgebra& a, const Mat& s) {
  const auto s_inv = inverse(s);
  std::vector<Vec> vs;
  for (const auto& m : a.elements()) vs.push_back(vectorize(s * m * s_inv));
  return MatrixAlgebra::from_subspace(a.k(), rref(a.field(), a.k() * a.k(), vs));
}

Subspace orbit_span(const MatrixAlgebra& a, const Vec& x) {
  if (x.size() != a.k()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from k");
  std::vector<Vec> images;
  for (const auto& b : a.elements()) images.push_back(b * x);
  return rref(a.field(), a.k(), images);
}

bool is_cyclic(const MatrixAlgebra& a, const Vec& x) { return orbit_span(a, x).is_full(); }

bool is_invariant(const MatrixAlgebra& a, const Subspace& m) {
  for (const auto& b : a.elements()) {
    for (const auto& v : m.basis()) {
      if (!m.contains(b * v)) return false;
    }
  }
  return true;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True: return "True";
    case Truth::False: return "False";
    case Truth::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::uint64_t subspace_count(std::uint64_t p, std::size_t k) {
  mpz_class total = 0;
  mpz_class pz(static_cast<unsigned long>(p));
  for (std::size_t r = 0; r <= k; ++r) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class a;
      mpz_class b;
      mpz_pow_ui(a.get_mpz_t(), pz.get_mpz_t(), k - i);
      mpz_pow_ui(b.get_mpz_t(), pz.get_mpz_t(), i + 1);
      num *= a - 1;
      den *= b - 1;
    }
    total += num / den;
  }
  if (!total.fits_ulong_p()) return UINT64_MAX;
  return total.get_ui();
}

std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t k, std::uint64_t budget) {
  if (!field.is_finite()) throw Error(ErrorKind::InvalidField, "subspace enumeration needs a finite field");
  const auto count = subspace_count(field.p(), k);
  if (count > budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(count) + " subspaces of " + field.to_string() + "^" +
                                               std::to_string(k) + " exceed budget " + std::to_string(budget));
  }
  const auto elems = field_elements(field);
  std::vector<Subspace> out;
  out.reserve(count);
  for (std::size_t r = 0; r <= k; ++r) {
    // choose pivot columns as a bitmask of popcount r
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < k; ++c) {
        if (mask & (1U << c)) pivots.push_back(c);
      }
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = pivots[i] + 1; c < k; ++c) {
          if (!(mask & (1U << c))) free_slots.emplace_back(i, c);
        }
      }
      std::vector<std::size_t> digits(free_slots.size(), 0);
      while (true) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < r; ++i) rows.push_back(Vec::unit(field, k, pivots[i]));
        for (std::size_t s = 0; s < free_slots.size(); ++s) {
          rows[free_slots[s].first][free_slots[s].second] = elems[digits[s]];
        }
        out.push_back(rref(field, k, rows));
        std::size_t pos = free_slots.size();
        while (pos > 0 && ++digits[pos - 1] == elems.size()) digits[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> invariant_subspaces(const MatrixAlgebra& a, std::uint64_t budget) {
  std::vector<Subspace> out;
  for (auto& m : all_subspaces(a.field(), a.k(), budget)) {
    if (is_invariant(a, m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Vec> default_probes(const FieldSpec& field, std::size_t k) {
  std::vector<Vec> probes;
  for (std::size_t i = 0; i < k; ++i) probes.push_back(Vec::unit(field, k, i));
  probes.emplace_back(field, std::vector<Scalar>(k, Scalar::one(field)));
  return probes;
}

TransitivityResult is_transitive(const MatrixAlgebra& a, std::uint64_t budget) {
  const auto& field = a.field();
  const auto k = a.k();
  if (field.is_finite() && subspace_count(field.p(), k) <= budget) {
    for (auto& m : invariant_subspaces(a, budget)) {
      if (!m.is_zero() && !m.is_full()) return {Truth::False, std::move(m), "exhaustive"};
    }
    return {Truth::True, std::nullopt, "exhaustive"};
  }
  if (k == 1 || a.dim() == k * k) return {Truth::True, std::nullopt, "full matrix algebra"};
  for (const auto& x : default_probes(field, k)) {
    auto w = orbit_span(a, x);
    if (!w.is_zero() && !w.is_full()) return {Truth::False, std::move(w), "probe orbit"};
  }
  const auto adj = adjoint_algebra(a);
  for (const auto& x : default_probes(field, k)) {
    auto w = orbit_span(adj, x);
    if (!w.is_zero() && !w.is_full()) return {Truth::False, annihilator(w), "annihilator of adjoint probe orbit"};
  }
  if (k == 2) {
    if (a.dim() == 1) return {Truth::False, rref(field, 2, std::vector<Vec>{Vec::unit(field, 2, 0)}), "scalars"};
    if (a.dim() == 3) return {Truth::False, column_space(radical_generator_2x2(a)), "radical image"};
    const auto& els = a.elements();
    const auto t = *std::find_if(els.begin(), els.end(), [](const Mat& m) { return !m.is_scalar(); });
    auto roots = quadratic_roots(-trace(t), determinant_2x2(t));
    if (!roots.splits()) return {Truth::True, std::nullopt, "irreducible characteristic polynomial"};
    return {Truth::False, kernel(t - roots.roots[0] * Mat::identity(field, 2)), "eigenline"};
  }
  if (k <= 3) {
    for (const auto& m : a.elements()) {
      auto poly = characteristic_polynomial(m);
      auto roots = monic_roots(poly);
      if (roots && roots->empty()) return {Truth::True, std::nullopt, "irreducible characteristic polynomial"};
    }
  }
  return {Truth::Unknown, std::nullopt, "inconclusive probes"};
}

std::vector<Mat> enumerate_elements(const MatrixAlgebra& a, std::uint64_t budget) {
  const auto& field = a.field();
  if (!field.is_finite()) throw Error(ErrorKind::InvalidField, "cannot enumerate an algebra over Q");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (count > budget / field.p()) {
      throw Error(ErrorKind::BudgetExceeded, "algebra of dimension " + std::to_string(a.dim()) + " over " +
                                                 field.to_string() + " exceeds budget " + std::to_string(budget));
    }
    count *= field.p();
  }
  const auto elems = field_elements(field);
  std::vector<Mat> out;
  out.reserve(count);
  std::vector<std::size_t> digits(a.dim(), 0);
  std::vector<Scalar> coeffs(a.dim(), Scalar::zero(field));
  while (true) {
    for (std::size_t i = 0; i < digits.size(); ++i) coeffs[i] = elems[digits[i]];
    out.push_back(unvectorize(a.subspace().combine(coeffs), a.k()));
    std::size_t pos = digits.size();
    while (pos > 0 && ++digits[pos - 1] == elems.size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

Truth has_complemented_lattice(const MatrixAlgebra& a, std::uint64_t budget) {
  if (!a.field().is_finite()) return Truth::Unknown;
  try {
    const auto invariant = invariant_subspaces(a, budget);
    const auto comm = commutant(a);
    std::set<Subspace> idempotent_ranges;
    for (const auto& p : enumerate_elements(comm, budget)) {
      if (p * p == p) idempotent_ranges.insert(column_space(p));
    }
    for (const auto& m : invariant) {
      if (!idempotent_ranges.contains(m)) return Truth::False;
    }
    return Truth::True;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) return Truth::Unknown;
    throw;
  }
}

// ---------------------------------------------------------------- 2x2 canonical forms

Mat CanonicalForm2x2::matrix(const FieldSpec& field) const {
  auto m = Mat::zero(field, 2);
  switch (kind) {
    case Kind::DiagDistinct:
      m(0, 0) = params[0];
      m(1, 1) = params[1];
      break;
    case Kind::JordanRepeated:
      m(0, 0) = params[0];
      m(0, 1) = Scalar::one(field);
      m(1, 1) = params[0];
      break;
    case Kind::CompanionIrreducible:
      m(0, 1) = -params[1];
      m(1, 0) = Scalar::one(field);
      m(1, 1) = -params[0];
      break;
  }
  return m;
}

std::string CanonicalForm2x2::to_string() const {
  switch (kind) {
    case Kind::DiagDistinct: return "DiagDistinct(" + params[0].to_string() + ", " + params[1].to_string() + ")";
    case Kind::JordanRepeated: return "JordanRepeated(" + params[0].to_string() + ")";
    case Kind::CompanionIrreducible:
      return "CompanionIrreducible(" + params[0].to_string() + ", " + params[1].to_string() + ")";
  }
  return "";
}

Similarity2x2 similarity_to_canonical_2x2(const Mat& t) {
  if (t.k() != 2) throw Error(ErrorKind::WrongDimension, "canonical forms are only defined for 2x2 matrices");
  if (t.is_scalar()) throw Error(ErrorKind::ScalarInput, t.to_string() + " is a multiple of the identity");
  const auto& field = t.field();
  const auto id = Mat::identity(field, 2);
  const auto b = -trace(t);
  const auto c = determinant_2x2(t);
  const auto roots = quadratic_roots(b, c);

  auto nonzero_column = [](const Mat& m) {
    for (std::size_t j = 0; j < m.k(); ++j) {
      auto col = m.column(j);
      if (!col.is_zero()) return col;
    }
    throw Error(ErrorKind::PreconditionFailed, "zero matrix has no nonzero column");
  };

  CanonicalForm2x2 form{};
  std::vector<Vec> columns;
  if (roots.roots.size() == 2) {
    const auto& l1 = roots.roots[0];
    const auto& l2 = roots.roots[1];
    // (T - l1)(T - l2) = 0, so columns of T - l2 are l1-eigenvectors and vice versa.
    columns = {nonzero_column(t - l2 * id), nonzero_column(t - l1 * id)};
    form = {CanonicalForm2x2::Kind::DiagDistinct, {l1, l2}};
  } else if (roots.roots.size() == 1) {
    const auto& l = roots.roots[0];
    const auto n = t - l * id;
    auto v = Vec::unit(field, 2, 0);
    if ((n * v).is_zero()) v = Vec::unit(field, 2, 1);
    columns = {n * v, v};
    form = {CanonicalForm2x2::Kind::JordanRepeated, {l}};
  } else {
    const auto v = Vec::unit(field, 2, 0);
    columns = {v, t * v};
    form = {CanonicalForm2x2::Kind::CompanionIrreducible, {b, c}};
  }
  auto s = Mat::from_columns(columns);
  if (inverse(s) * t * s != form.matrix(field)) {
    throw Error(ErrorKind::PreconditionFailed, "similarity construction failed for " + t.to_string());
  }
  return {std::move(s), std::move(form)};
}

// ---------------------------------------------------------------- polynomials

std::vector<Scalar> characteristic_polynomial(const Mat& m) {
  const auto k = m.k();
  const auto& f = m.field();
  if (k == 1) return {-m(0, 0)};
  if (k == 2) return {determinant_2x2(m), -trace(m)};
  if (k == 3) {
    auto minor = [&](std::size_t i, std::size_t j) { return m(i, i) * m(j, j) - m(i, j) * m(j, i); };
    auto det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return {-det, minor(0, 1) + minor(0, 2) + minor(1, 2), -trace(m)};
  }
  (void)f;
  throw Error(ErrorKind::WrongDimension, "characteristic polynomial implemented for k <= 3");
}

std::optional<std::vector<Scalar>> monic_roots(std::span<const Scalar> low) {
  if (low.empty() || low.size() > 3) throw Error(ErrorKind::WrongDimension, "monic_roots supports degree 1..3");
  const auto field = low[0].field();
  std::vector<Scalar> roots;
  if (field.is_finite()) {
    if (field.p() > 10000) {
      if (low.size() == 2) return quadratic_roots(low[1], low[0]).roots;
      if (low.size() == 1) return std::vector<Scalar>{-low[0]};
      return std::nullopt;
    }
    for (const auto& x : field_elements(field)) {
      if (evaluate_monic(low, x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  // Clear denominators: a_n x^n + ... + a_0 with integer a_i.
  mpz_class lcm = 1;
  for (const auto& c : low) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational_value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : low) {
    mpq_class scaled = c.rational_value() * lcm;
    ints.push_back(scaled.get_num());
  }
  ints.push_back(lcm);
  std::size_t shift = 0;
  while (shift < low.size() && ints[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Scalar::zero(field));
  if (shift < low.size()) {
    auto a0 = bounded_abs(ints[shift]);
    auto an = bounded_abs(ints.back());
    if (!a0 || !an) return std::nullopt;
    for (const auto& num : positive_divisors(*a0)) {
      for (const auto& den : positive_divisors(*an)) {
        for (int sign : {-1, 1}) {
          auto x = Scalar::rational(mpq_class(num * sign, den));
          if (evaluate_monic(low, x).is_zero() &&
              std::find(roots.begin(), roots.end(), x) == roots.end()) {
            roots.push_back(x);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Scalar& x, const Scalar& y) { return compare(x, y) < 0; });
  return roots;
}

}  // namespace mtrace
