#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("row reduction") {
  const std::vector<Vec> dependent = {vec(Q, {"1", "1"}), vec(Q, {"2", "2"})};
  const auto s1 = rref(Q, 2, dependent);
  REQUIRE(s1.dim() == 1);
  CHECK(s1.basis()[0] == vec(Q, {"1", "1"}));

  const auto s0 = rref(Q, 2, {});
  CHECK(s0.is_zero());
  CHECK(s0.basis().empty());

  const std::vector<Vec> swapped = {vec(gf(2), {"0", "1"}), vec(gf(2), {"1", "0"})};
  const auto s2 = rref(gf(2), 2, swapped);
  REQUIRE(s2.dim() == 2);
  CHECK(s2.basis()[0] == vec(gf(2), {"1", "0"}));
  CHECK(s2.basis()[1] == vec(gf(2), {"0", "1"}));
}

TEST_CASE("membership") {
  const std::vector<Vec> gens = {vec(Q, {"1", "0"})};
  const auto line = rref(Q, 2, gens);
  CHECK(member(line, vec(Q, {"3", "0"})));
  CHECK_FALSE(member(line, vec(Q, {"0", "1"})));
  CHECK(member(Subspace::zero(Q, 2), Vec::zero(Q, 2)));
}

TEST_CASE("homogeneous systems") {
  CHECK(solve_homogeneous(Q, 2, {}).is_full());
  const std::vector<Vec> one = {vec(Q, {"1", "-1"})};
  const auto sol = solve_homogeneous(Q, 2, one);
  REQUIRE(sol.dim() == 1);
  CHECK(sol.contains(vec(Q, {"1", "1"})));
  const std::vector<Vec> both = {vec(Q, {"1", "0"}), vec(Q, {"0", "1"})};
  CHECK(solve_homogeneous(Q, 2, both).is_zero());
}

TEST_CASE("matrix primitives") {
  CHECK(trace(Mat::identity(Q, 2)) == s(Q, "2"));
  CHECK(inverse(mat(Q, {"1", "1", "0", "1"})) == mat(Q, {"1", "-1", "0", "1"}));
  CHECK(determinant_2x2(mat(gf(2), {"0", "1", "1", "0"})) == s(gf(2), "1"));
  CHECK_THROWS_AS(inverse(mat(Q, {"1", "2", "2", "4"})), Error);
  CHECK(transpose(mat(Q, {"1", "2", "3", "4"})) == mat(Q, {"1", "3", "2", "4"}));
  CHECK(mat(Q, {"1", "2", "3", "4"}) * vec(Q, {"1", "1"}) == vec(Q, {"3", "7"}));
  CHECK(outer(vec(Q, {"1", "1"}), vec(Q, {"1", "0"})) == mat(Q, {"1", "0", "1", "0"}));
  CHECK(commutator(e(Q, 1, 2), e(Q, 2, 1)) == mat(Q, {"1", "0", "0", "-1"}));
}

TEST_CASE("vectorization is row-major") {
  CHECK(vectorize(e(Q, 1, 2)) == vec(Q, {"0", "1", "0", "0"}));
  CHECK(unvectorize(vec(Q, {"1", "0", "0", "1"}), 2) == Mat::identity(Q, 2));
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto m = rng.matrix(Q, 1 + rng.below(4));
    CHECK(unvectorize(vectorize(m), m.k()) == m);
  }
}

TEST_CASE("mixing dimensions or fields is rejected") {
  CHECK_THROWS_AS(Mat::identity(Q, 2) * Mat::identity(Q, 3), Error);
  CHECK_THROWS_AS(Mat::identity(Q, 2) + Mat::identity(gf(3), 2), Error);
  CHECK_THROWS_AS(vec(Q, {"1"}) + vec(Q, {"1", "2"}), Error);
}

TEST_CASE("rank-nullity and canonical form on random systems") {
  Rng rng(5);
  for (const auto& f : {Q, gf(2), gf(3), gf(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto d = 1 + rng.below(6);
      std::vector<Vec> rows;
      const auto count = rng.below(7);
      for (std::size_t i = 0; i < count; ++i) rows.push_back(rng.vector(f, d));
      const auto row_space = rref(f, d, rows);
      const auto null_space = solve_homogeneous(f, d, rows);
      CHECK(row_space.dim() + null_space.dim() == d);
      for (const auto& n : null_space.basis()) {
        for (const auto& r : rows) CHECK(pairing(r, n).is_zero());
      }
      for (const auto& r : rows) CHECK(row_space.contains(r));
      // The annihilator of the row space is the null space.
      CHECK(annihilator(row_space) == null_space);
      CHECK(annihilator(annihilator(row_space)) == row_space);

      // The canonical basis does not depend on the generating set.
      auto shuffled = rows;
      std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
      if (!rows.empty()) shuffled.push_back(rows[0] + rows.back());
      CHECK(rref(f, d, shuffled) == row_space);

      const auto completed = complete_basis(row_space);
      REQUIRE(completed.size() == d);
      CHECK(rref(f, d, completed).is_full());
      for (std::size_t i = 0; i < row_space.dim(); ++i) CHECK(row_space.contains(completed[i]));

      const auto v = rng.vector(f, d);
      CHECK(row_space.contains(v - row_space.reduce(v)));
      CHECK(row_space.contains(v) == row_space.reduce(v).is_zero());
    }
  }
}

TEST_CASE("span union and containment") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<Vec> a_rows = {rng.vector(gf(3), 4), rng.vector(gf(3), 4)};
    const std::vector<Vec> b_rows = {rng.vector(gf(3), 4)};
    const auto a = rref(gf(3), 4, a_rows);
    const auto b = rref(gf(3), 4, b_rows);
    const auto u = span_union(a, b);
    CHECK(u.contains(a));
    CHECK(u.contains(b));
    CHECK(u.dim() <= a.dim() + b.dim());
  }
}

TEST_CASE("inverse of random invertible matrices") {
  Rng rng(9);
  for (const auto& f : {Q, gf(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = rng.matrix(f, 1 + rng.below(3));
      try {
        const auto inv = inverse(m);
        CHECK(m * inv == Mat::identity(f, m.k()));
        CHECK(inv * m == Mat::identity(f, m.k()));
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::Singular);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < m.k(); ++j) cols.push_back(m.column(j));
        CHECK(rref(f, m.k(), cols).dim() < m.k());
      }
    }
  }
}
