#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("named subalgebras of M_2(GF(2)) are enumerated") {
  const auto f = gf(2);
  const auto list = enumerate_unital_subalgebras(2);
  const auto has = [&](const MatrixAlgebra& a) { return std::find(list.begin(), list.end(), a) != list.end(); };
  CHECK(has(scalars2(f)));
  CHECK(has(d2(f)));
  CHECK(has(t2(f)));
  CHECK(has(u2(f)));
  CHECK(has(l2(f)));
  CHECK(has(m2(f)));
  CHECK(has(gen(f, {mat(f, {"0", "1", "1", "1"})})));
  CHECK(list.size() == 12);
  CHECK(enumerate_unital_subalgebras(2) == list);
  CHECK(enumeration_closed_under_joins(list));
  for (const auto& a : list) CHECK(a.contains(Mat::identity(f, 2)));
  CHECK_THROWS_AS(enumerate_unital_subalgebras(7), Error);
}

TEST_CASE("unital functionals") {
  CHECK(enumerate_unital_functionals(2).size() == 8);
  CHECK(enumerate_unital_functionals(3).size() == 27);
  for (const auto& phi : enumerate_unital_functionals(3)) CHECK(trace(phi.k_matrix()).is_one());
}

TEST_CASE("abelian subalgebras") {
  const auto ab = enumerate_abelian_subalgebras(3, 2);
  for (const auto& a : ab) CHECK(a.is_abelian());
  std::size_t expected = 0;
  for (const auto& a : enumerate_unital_subalgebras(3)) expected += a.is_abelian() ? 1 : 0;
  CHECK(ab.size() == expected);
}

TEST_CASE("brute force examples") {
  const auto f = gf(3);
  const auto yes = brute_maximal(d2(f), kf(mat(f, {"2", "1", "1", "2"})));
  CHECK(yes.outcome == Outcome::Maximal);
  CHECK(yes.candidates == 81);
  const auto no = brute_maximal(d2(f), kf(mat(f, {"2", "0", "1", "2"})));
  CHECK(no.outcome == Outcome::NotMaximal);
  REQUIRE(no.witness);
  CHECK(extend(d2(f), std::vector<Mat>{*no.witness}) == l2(f));
  for (const auto& phi : enumerate_unital_functionals(2)) {
    CHECK(brute_maximal(scalars2(gf(2)), phi).outcome == Outcome::NotMaximal);
  }
}

TEST_CASE("cached and literal brute force agree") {
  for (const auto& a : enumerate_unital_subalgebras(3)) {
    const auto exts = single_element_extensions(a);
    for (const auto& phi : enumerate_unital_functionals(3)) {
      CHECK(brute_maximal(a, phi).outcome == brute_maximal(a, phi, exts).outcome);
    }
  }
}

TEST_CASE("classification sweeps") {
  for (std::uint32_t p : {2, 3, 5}) {
    const auto sweep = verify_classification(p);
    CHECK(sweep.mismatches.empty());
    CHECK(sweep.functional_count == std::uint64_t{p} * p * p);
    CHECK(sweep.pair_count == sweep.algebra_count * sweep.functional_count);
  }
}
