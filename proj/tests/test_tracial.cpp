#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// The literal sandwich constraint phi(B(AT - TA)C) = 0 over basis triples.
Subspace sandwich_space(const MatrixAlgebra& a, const Functional& phi) {
  const auto k = a.k();
  const auto& f = a.field();
  std::vector<Vec> rows;
  for (const auto& x : a.elements()) {
    for (const auto& b : a.elements()) {
      for (const auto& c : a.elements()) {
        std::vector<Scalar> row;
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            const auto t = Mat::unit(f, k, i, j);
            row.push_back(eval(phi, b * (x * t - t * x) * c));
          }
        }
        rows.emplace_back(f, std::move(row));
      }
    }
  }
  return solve_homogeneous(f, k * k, rows);
}

bool tracial_by_definition(const MatrixAlgebra& a, const Functional& phi) {
  for (const auto& x : a.elements()) {
    for (const auto& y : a.elements()) {
      if (eval(phi, x * y) != eval(phi, y * x)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("functional evaluation") {
  const auto k = kf(mat(Q, {"1/2", "1", "1", "1/2"}));
  CHECK(eval(k, Mat::identity(Q, 2)).is_one());
  CHECK(eval(k, e(Q, 1, 2)) == s(Q, "1"));
  const auto r = Functional::rank_one(vec(Q, {"1", "0"}), vec(Q, {"1", "0"}));
  CHECK(eval(r, e(Q, 2, 2)).is_zero());
  CHECK(eval(r, Mat::identity(Q, 2)).is_one());
}

TEST_CASE("unitality is enforced") {
  CHECK_THROWS_AS(kf(mat(Q, {"1", "1", "1", "1/2"})), Error);
  try {
    (void)kf(mat(Q, {"1", "0", "0", "1"}));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotUnital);
    CHECK(std::string(err.what()).find("NotUnitalFunctional") == 0);
  }
  CHECK_THROWS_AS(Functional::rank_one(vec(Q, {"1", "0"}), vec(Q, {"0", "1"})), Error);
}

TEST_CASE("rank-one conversion and adjoints") {
  CHECK(rankone_to_kform(vec(Q, {"1", "0"}), vec(Q, {"1", "0"})).k_matrix() == e(Q, 1, 1));
  CHECK(rankone_to_kform(vec(Q, {"1", "1"}), vec(Q, {"1", "0"})).k_matrix() == mat(Q, {"1", "0", "1", "0"}));
  const auto r = Functional::rank_one(vec(Q, {"1", "0"}), vec(Q, {"1", "0"}));
  CHECK(adjoint_functional(r) == r);
  CHECK(adjoint_functional(kf(mat(Q, {"1", "1", "0", "0"}))) == kf(mat(Q, {"1", "0", "1", "0"})));
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto phi = rng.unital_rank_one(gf(5), 3);
    const auto t = rng.matrix(gf(5), 3);
    CHECK(eval(phi, t) == eval(rankone_to_kform(phi.as_rank_one()->x, phi.as_rank_one()->alpha), t));
    CHECK(eval(adjoint_functional(phi), transpose(t)) == eval(phi, t));
  }
  CHECK(is_normalized_trace(kf(mat(Q, {"1/2", "0", "0", "1/2"}))));
  CHECK_FALSE(is_normalized_trace(kf(mat(Q, {"1", "0", "0", "0"}))));
}

TEST_CASE("traciality") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = gen(Q, {rng.matrix(Q, 2)});
    CHECK(is_tracial(a, rng.unital_k(Q, 2)).tracial);
  }
  const auto bad = is_tracial(u2(Q), kf(mat(Q, {"1/2", "0", "1", "1/2"})));
  CHECK_FALSE(bad.tracial);
  REQUIRE(bad.violation);
  const auto phi = kf(mat(Q, {"1/2", "0", "1", "1/2"}));
  CHECK(eval(phi, bad.violation->a * bad.violation->b) != eval(phi, bad.violation->b * bad.violation->a));
  CHECK(is_tracial(m2(Q), kf(mat(Q, {"1/2", "0", "0", "1/2"}))).tracial);
  CHECK(is_tracial(u2(Q), kf(mat(Q, {"1/2", "5", "0", "1/2"}))).tracial);
}

TEST_CASE("traciality on a basis matches the definition on all products") {
  Rng rng(13);
  for (const auto& f : {Q, gf(2), gf(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto k = 2 + rng.below(2);
      const auto a = rng.algebra(f, k);
      const auto phi = rng.functional(f, k);
      CHECK(is_tracial(a, phi).tracial == tracial_by_definition(a, phi));
    }
  }
}

TEST_CASE("FOES examples") {
  CHECK(foes(m2(Q), kf(mat(Q, {"1/2", "0", "0", "1/2"}))).is_full());
  CHECK(foes(d2(Q), kf(mat(Q, {"1/2", "1", "1", "1/2"}))) == d2(Q).subspace());
  const auto bigger = foes(d2(Q), kf(mat(Q, {"1/2", "1", "0", "1/2"})));
  CHECK(bigger.contains(d2(Q).subspace()));
  CHECK(bigger.contains(vectorize(e(Q, 1, 2))));
  CHECK(bigger.dim() > 2);
  CHECK_THROWS_AS(foes(u2(Q), kf(mat(Q, {"1/2", "0", "1", "1/2"}))), Error);
}

TEST_CASE("FOES contains the algebra and every tracial single-element extension") {
  Rng rng(14);
  for (const auto& f : {Q, gf(2), gf(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto k = 2 + rng.below(2);
      const auto a = rng.algebra(f, k);
      const auto phi = rng.functional(f, k);
      if (!is_tracial(a, phi).tracial) continue;
      const auto space = foes(a, phi);
      CHECK(space.contains(a.subspace()));
      for (int probe = 0; probe < 10; ++probe) {
        const auto t = rng.sparse_matrix(f, k);
        if (extension_is_tracial(a, t, phi)) CHECK(space.contains(vectorize(t)));
      }
      if (a.is_abelian()) CHECK(space == sandwich_space(a, phi));
    }
  }
}

TEST_CASE("decision cascade examples") {
  const auto yes = decide_maximal(d2(Q), kf(mat(Q, {"1/2", "1", "1", "1/2"})));
  CHECK(yes.outcome == Outcome::Maximal);
  CHECK(std::holds_alternative<cert::FoesEqualsAlgebra>(yes.certificate));

  const auto no = decide_maximal(d2(Q), kf(mat(Q, {"1/2", "0", "1", "1/2"})));
  CHECK(no.outcome == Outcome::NotMaximal);
  const auto* w = std::get_if<cert::WitnessExtension>(&no.certificate);
  REQUIRE(w);
  CHECK(extend(d2(Q), std::vector<Mat>{w->t}) == l2(Q));

  for (const auto& phi : enumerate_unital_functionals(2)) {
    CHECK(decide_maximal(scalars2(gf(2)), phi).outcome == Outcome::NotMaximal);
  }

  const auto nt = decide_maximal(u2(Q), kf(mat(Q, {"1/2", "0", "1", "1/2"})));
  CHECK(nt.outcome == Outcome::NotTracial);
  CHECK(std::holds_alternative<cert::Violation>(nt.certificate));
}

TEST_CASE("rank-one abelian instances over Q use the cyclicity criterion") {
  const auto phi = Functional::rank_one(vec(Q, {"1", "0", "0"}), vec(Q, {"1", "0", "1"}));
  const auto a = unital_closure(Q, 3, std::vector<Mat>{Mat::unit(Q, 3, 0, 0)});
  const auto v = decide_maximal(a, phi);
  CHECK(v.outcome == Outcome::NotMaximal);
  REQUIRE(v.checklist);
  CHECK_FALSE(v.checklist->maximal_abelian);
  const auto* w = std::get_if<cert::WitnessExtension>(&v.certificate);
  REQUIRE(w);
  CHECK_FALSE(a.contains(w->t));
  CHECK(extension_is_tracial(a, w->t, phi));
}

TEST_CASE("rank-one criterion checklist") {
  const auto all = thm10_check(d2(Q), vec(Q, {"1", "1"}), vec(Q, {"1/2", "1/2"}));
  CHECK(all.verdict);
  CHECK(all.checklist == Theorem10Checklist{true, true, true});
  const auto coord = thm10_check(d2(Q), vec(Q, {"1", "0"}), vec(Q, {"1", "0"}));
  CHECK_FALSE(coord.verdict);
  CHECK(coord.checklist == Theorem10Checklist{true, false, false});
  const auto field_alg = thm10_check(companion(Q, "0", "1"), vec(Q, {"1", "0"}), vec(Q, {"1", "0"}));
  CHECK(field_alg.verdict);
  CHECK(field_alg.checklist.all());
  CHECK_THROWS_AS(thm10_check(u2(Q), vec(Q, {"1", "0"}), vec(Q, {"1", "0"})), Error);
  CHECK_THROWS_AS(thm10_check(d2(Q), vec(Q, {"1", "0"}), vec(Q, {"0", "1"})), Error);
}

TEST_CASE("rank-one criterion witnesses are genuine tracial extensions") {
  Rng rng(15);
  int witnessed = 0;
  for (const auto& f : {Q, gf(3)}) {
    for (int trial = 0; trial < 80; ++trial) {
      const auto k = 2 + rng.below(2);
      auto a = rng.algebra(f, k);
      if (!a.is_abelian()) a = gen(f, {rng.sparse_matrix(f, k)}, k);
      const auto phi = rng.unital_rank_one(f, k);
      const auto& r = *phi.as_rank_one();
      const auto t = thm10_check(a, r.x, r.alpha);
      const auto w = theorem10_witness(a, r.x, r.alpha);
      CHECK(w.has_value() == !t.verdict);
      if (w) {
        CHECK_FALSE(a.contains(*w));
        CHECK(extension_is_tracial(a, *w, phi));
        ++witnessed;
      }
    }
  }
  CHECK(witnessed > 20);
}

TEST_CASE("thm15 report") {
  const auto field_alg = thm15_check(companion(Q, "0", "1"));
  CHECK(field_alg.left == Truth::True);
  CHECK(field_alg.right == Truth::True);
  CHECK(field_alg.pairs_checked == 20);
  CHECK(field_alg.consistent == Truth::True);

  const auto diag = thm15_check(d2(gf(2)));
  CHECK(diag.left == Truth::False);
  CHECK(diag.exhaustive);
  CHECK(diag.right == Truth::False);
  CHECK(diag.non_maximal_pair.has_value());
  CHECK(diag.consistent == Truth::True);

  const auto full = thm15_check(m2(gf(3)));
  CHECK(full.left == Truth::False);
  CHECK(full.maximal_pairs == 0);
  CHECK(full.right == Truth::False);
  CHECK(full.consistent == Truth::True);
}

TEST_CASE("thm15 equivalence holds exhaustively on small fields") {
  for (std::uint32_t p : {2, 3}) {
    for (const auto& a : enumerate_unital_subalgebras(p)) {
      const auto r = thm15_check(a);
      CHECK(r.exhaustive);
      CHECK(r.consistent == Truth::True);
    }
  }
}

TEST_CASE("thm30 necessary condition") {
  const auto f = gf(3);
  const auto yes = thm30_necessary_check(d2(f), vec(f, {"1", "1"}), vec(f, {"2", "2"}), kDefaultBudget);
  CHECK(yes.maximality == Outcome::Maximal);
  CHECK(yes.e_cyclic);
  CHECK(yes.f_cyclic_for_adjoint);
  CHECK_FALSE(yes.vacuous);
  CHECK(yes.holds);
  const auto vac = thm30_necessary_check(d2(f), vec(f, {"1", "0"}), vec(f, {"1", "0"}), kDefaultBudget);
  CHECK(vac.maximality == Outcome::NotMaximal);
  CHECK(vac.vacuous);
  CHECK(vac.holds);
  CHECK_THROWS_AS(thm30_necessary_check(u2(f), vec(f, {"1", "0"}), vec(f, {"1", "0"}), kDefaultBudget), Error);
  CHECK_THROWS_AS(thm30_necessary_check(d2(Q), vec(Q, {"1", "0"}), vec(Q, {"1", "0"}), kDefaultBudget), Error);
}

TEST_CASE("thm30 implication over all complemented subalgebras of M_2(GF(3))") {
  const auto f = gf(3);
  for (const auto& a : enumerate_unital_subalgebras(3)) {
    if (has_complemented_lattice(a, kDefaultBudget) != Truth::True) continue;
    for (const auto& [x, alpha] : unital_pairs(f, 2, kDefaultBudget)) {
      CHECK(thm30_necessary_check(a, x, alpha, kDefaultBudget).holds);
    }
  }
}

TEST_CASE("adjoint duality of traciality and maximality") {
  Rng rng(16);
  for (const auto& f : {Q, gf(2), gf(3), gf(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto k = 2 + rng.below(2);
      const auto a = rng.algebra(f, k);
      const auto phi = rng.functional(f, k);
      const auto adj = adjoint_algebra(a);
      const auto adj_phi = adjoint_functional(phi);
      CHECK(is_tracial(a, phi).tracial == is_tracial(adj, adj_phi).tracial);
      const DecideOptions opts{20000, 7};
      CHECK(decide_maximal(a, phi, opts).outcome == decide_maximal(adj, adj_phi, opts).outcome);
    }
  }
}

TEST_CASE("exhaustive and sampled branches") {
  const auto f = gf(3);
  const auto phi = kf(mat(f, {"2", "0", "1", "2"}));
  const auto v = decide_maximal(d2(f), phi);
  CHECK(v.branch == "exhaustive");
  CHECK(v.outcome == Outcome::NotMaximal);
  REQUIRE(v.enumerated_count);

  // A tiny budget forces the seeded sampling branch, which still finds this witness.
  const auto sampled = decide_maximal(d2(f), phi, DecideOptions{2, 0});
  CHECK(sampled.branch == "sampling");
  CHECK(sampled.seed == std::optional<std::uint64_t>(0));
  CHECK(sampled.outcome == Outcome::NotMaximal);

  const auto exact = decide_maximal(d2(f), kf(mat(f, {"2", "1", "1", "2"})));
  CHECK(exact.outcome == Outcome::Maximal);
}

TEST_CASE("decide_maximal agrees with brute force on random small instances") {
  Rng rng(17);
  for (const auto& f : {gf(2), gf(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = rng.algebra(f, 2);
      const auto phi = rng.functional(f, 2);
      const auto v = decide_maximal(a, phi);
      const auto b = brute_maximal(a, phi);
      CHECK(v.outcome == b.outcome);
    }
  }
}

TEST_CASE("traciality survives adjoining scalars and chain unions") {
  Rng rng(18);
  for (const auto& f : {Q, gf(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto k = 2 + rng.below(2);
      const std::vector<Mat> gens = {rng.sparse_matrix(f, k)};
      const auto nonunital = multiplicative_closure(f, k, gens);
      std::vector<Mat> spanning;
      for (const auto& v : nonunital.basis()) spanning.push_back(unvectorize(v, k));
      const auto phi = rng.functional(f, k);
      if (!is_tracial(spanning, phi).tracial) continue;
      spanning.push_back(Mat::identity(f, k));
      CHECK(is_tracial(spanning, phi).tracial);
    }
  }
}
