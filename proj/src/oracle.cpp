#include "mtrace/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mtrace {

namespace {

template <typename Admissible>
std::vector<MatrixAlgebra> breadth_first_subalgebras(std::uint32_t p, std::size_t k, std::uint64_t budget,
                                                     Admissible admissible_extensions) {
  const auto field = FieldSpec::prime(p);
  std::set<MatrixAlgebra> found;
  std::deque<MatrixAlgebra> queue;
  auto root = unital_closure(field, k, std::vector<Mat>{});
  found.insert(root);
  queue.push_back(root);
  std::uint64_t work = 0;
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    for (const auto& t : admissible_extensions(a)) {
      if (++work > budget) throw Error(ErrorKind::BudgetExceeded, "subalgebra enumeration exceeds budget");
      if (a.contains(t)) continue;
      auto b = extend(a, std::vector<Mat>{t});
      if (found.insert(b).second) queue.push_back(std::move(b));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<Mat> all_matrices(const FieldSpec& field, std::size_t k, std::uint64_t budget) {
  const auto full = MatrixAlgebra::from_subspace(k, Subspace::full(field, k * k));
  return enumerate_elements(full, budget);
}

std::vector<MatrixAlgebra> enumerate_unital_subalgebras(std::uint32_t p, std::size_t k, std::uint64_t budget) {
  if (k == 2 && p > 5) throw Error(ErrorKind::BudgetExceeded, "M_2(GF(p)) sweeps are limited to p <= 5");
  const auto field = FieldSpec::prime(p);
  const auto everything = all_matrices(field, k, budget);
  return breadth_first_subalgebras(p, k, budget, [&](const MatrixAlgebra&) { return everything; });
}

std::vector<MatrixAlgebra> enumerate_abelian_subalgebras(std::uint32_t p, std::size_t k, std::uint64_t budget) {
  return breadth_first_subalgebras(p, k, budget,
                                   [&](const MatrixAlgebra& a) { return enumerate_elements(commutant(a), budget); });
}

std::vector<Functional> enumerate_unital_functionals(std::uint32_t p, std::size_t k) {
  const auto field = FieldSpec::prime(p);
  std::vector<Functional> out;
  for (const auto& m : all_matrices(field, k)) {
    if (trace(m).is_one()) out.push_back(Functional::k_form(m));
  }
  return out;
}

BruteResult brute_maximal(const MatrixAlgebra& a, const Functional& phi) {
  BruteResult r;
  if (!is_tracial(a, phi).tracial) {
    r.outcome = Outcome::NotTracial;
    return r;
  }
  for (const auto& t : all_matrices(a.field(), a.k())) {
    ++r.candidates;
    if (a.contains(t)) continue;
    if (is_tracial(extend(a, std::vector<Mat>{t}), phi).tracial) {
      r.outcome = Outcome::NotMaximal;
      r.witness = t;
      return r;
    }
  }
  return r;
}

std::vector<Extension> single_element_extensions(const MatrixAlgebra& a) {
  std::vector<Extension> out;
  std::set<MatrixAlgebra> seen;
  for (const auto& t : all_matrices(a.field(), a.k())) {
    if (a.contains(t)) continue;
    auto b = extend(a, std::vector<Mat>{t});
    if (seen.insert(b).second) out.push_back({t, std::move(b)});
  }
  return out;
}

BruteResult brute_maximal(const MatrixAlgebra& a, const Functional& phi, const std::vector<Extension>& extensions) {
  BruteResult r;
  if (!is_tracial(a, phi).tracial) {
    r.outcome = Outcome::NotTracial;
    return r;
  }
  for (const auto& ext : extensions) {
    ++r.candidates;
    if (is_tracial(ext.algebra, phi).tracial) {
      r.outcome = Outcome::NotMaximal;
      r.witness = ext.generator;
      return r;
    }
  }
  return r;
}

SweepReport verify_classification(std::uint32_t p) {
  SweepReport report{FieldSpec::prime(p)};
  const auto algebras = enumerate_unital_subalgebras(p, 2);
  const auto functionals = enumerate_unital_functionals(p, 2);
  report.algebra_count = algebras.size();
  report.functional_count = functionals.size();
  for (const auto& a : algebras) {
    const auto extensions = single_element_extensions(a);
    for (const auto& phi : functionals) {
      ++report.pair_count;
      const auto classified = classify(a, phi).verdict.outcome;
      const auto brute = brute_maximal(a, phi, extensions).outcome;
      if (classified != brute) report.mismatches.push_back({a, phi, classified, brute});
    }
  }
  return report;
}

bool enumeration_closed_under_joins(const std::vector<MatrixAlgebra>& algebras) {
  const std::set<MatrixAlgebra> known(algebras.begin(), algebras.end());
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    for (std::size_t j = i + 1; j < algebras.size(); ++j) {
      if (!known.contains(extend(algebras[i], algebras[j].elements()))) return false;
    }
  }
  return true;
}

}  // namespace mtrace
