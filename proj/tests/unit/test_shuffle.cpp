#include <doctest.h>

#include "nichols/analyzer.hpp"
#include "nichols/pm.hpp"
#include "nichols/shuffle.hpp"
#include "oracles.hpp"

using namespace nichols;

TEST_SUITE_BEGIN("shuffle");

TEST_CASE("component basis is the sorted word list") {
  const HomogeneousComponent comp(DegreeVector{2, 2});
  CHECK(comp.dim() == 6);
  CHECK(comp.word(0) == Word{1, 1, 2, 2});
  CHECK(comp.word(5) == Word{2, 2, 1, 1});
  for (int i = 0; i < comp.dim(); ++i) CHECK(comp.index(comp.word(i)) == i);
  CHECK_THROWS_AS(comp.index(Word{1, 2}), std::invalid_argument);
}

TEST_CASE("sigma acts by braided transposition") {
  Rng rng;
  const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
  const HomogeneousComponent comp(DegreeVector{1, 1});
  const OperatorMatrix s = sigma_matrix(1, comp, q);
  // x1x2 -> q12 x2x1 and x2x1 -> q21 x1x2
  CHECK(s.at(comp.index(Word{2, 1}), comp.index(Word{1, 2})) == q.q(1, 2));
  CHECK(s.at(comp.index(Word{1, 2}), comp.index(Word{2, 1})) == q.q(2, 1));
  CHECK(s.at(comp.index(Word{1, 2}), comp.index(Word{1, 2})).is_zero());
  CHECK_THROWS_AS(sigma_matrix(2, comp, q), std::invalid_argument);
}

TEST_CASE("braid monoid relations hold under rho") {
  Rng rng;
  // far-apart generators commute at |m| = 4
  {
    const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
    for (const DegreeVector& m : degrees_with_total(2, 4)) {
      if (m.is_zero()) continue;
      const HomogeneousComponent comp(m);
      CHECK(braid_product_matrix({1, 3}, comp, q) == braid_product_matrix({3, 1}, comp, q));
    }
  }
  // the braid relation as 6x6 matrices on V_(1,1,1)
  {
    const BraidingMatrix q = BraidingMatrix::random_rational(3, rng);
    const HomogeneousComponent comp(DegreeVector{1, 1, 1});
    CHECK(braid_product_matrix({1, 2, 1}, comp, q) == braid_product_matrix({2, 1, 2}, comp, q));
  }
  // both relation families across the full desk range
  {
    const BraidingMatrix q2 = BraidingMatrix::random_rational(2, rng);
    const BraidingMatrix q3 = BraidingMatrix::random_rational(3, rng);
    for (int n : {2, 3}) {
      const BraidingMatrix& q = n == 2 ? q2 : q3;
      for (int s = 2; s <= (n == 2 ? 7 : 5); ++s)
        for (const DegreeVector& m : degrees_with_total(n, s)) {
          const HomogeneousComponent comp(m);
          for (int i = 1; i < s; ++i) {
            for (int j = i + 2; j < s; ++j)
              CHECK(braid_product_matrix({i, j}, comp, q) ==
                    braid_product_matrix({j, i}, comp, q));
            if (i + 1 < s)
              CHECK(braid_product_matrix({i, i + 1, i}, comp, q) ==
                    braid_product_matrix({i + 1, i, i + 1}, comp, q));
          }
        }
    }
  }
  // multiplicativity: rho(uv) = rho(u) rho(v) on random generator words
  {
    const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
    const HomogeneousComponent comp(DegreeVector{3, 2});
    for (int it = 0; it < 10; ++it) {
      std::vector<int> u, v;
      for (int t = static_cast<int>(rng.between(1, 3)); t > 0; --t)
        u.push_back(static_cast<int>(rng.between(1, 4)));
      for (int t = static_cast<int>(rng.between(1, 3)); t > 0; --t)
        v.push_back(static_cast<int>(rng.between(1, 4)));
      std::vector<int> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(braid_product_matrix(uv, comp, q) ==
            braid_product_matrix(u, comp, q) * braid_product_matrix(v, comp, q));
    }
  }
}

TEST_CASE("shuffle sum examples") {
  Rng rng;
  const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
  {
    const HomogeneousComponent comp(DegreeVector{1, 1});
    CHECK(s1_matrix(0, comp, q) == OperatorMatrix::identity(q.context(), 2));
    const OperatorMatrix s = s1_matrix(1, comp, q);
    CHECK(s.at(0, 0) == ExactScalar::one(q.context()));
    CHECK(s.at(0, 1) == q.q(2, 1));
    CHECK(s.at(1, 0) == q.q(1, 2));
    CHECK(s.at(1, 1) == ExactScalar::one(q.context()));
    CHECK(s.det() == ExactScalar::one(q.context()) - q.q(1, 2) * q.q(2, 1));
  }
  // on the one-dimensional component of k e_1 the shuffle sum is (k)_q id
  for (int k = 2; k <= 5; ++k) {
    const HomogeneousComponent comp(DegreeVector{k, 0});
    const OperatorMatrix s = s1_matrix(k - 1, comp, q);
    CHECK(comp.dim() == 1);
    CHECK(s.at(0, 0) == q_integer(static_cast<long>(k), q.q(1, 1)));
  }
  {
    const HomogeneousComponent comp(DegreeVector{2, 1});
    CHECK_THROWS_AS(s1_matrix(3, comp, q), std::invalid_argument);
  }
}

TEST_CASE("the shuffle identity of the braid monoid ring") {
  Rng rng;
  {
    const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
    CHECK(braid_identity_check(1, DegreeVector{1, 1}, q));
    CHECK(braid_identity_check(3, DegreeVector{2, 2}, q));
  }
  {
    const BraidingMatrix q = BraidingMatrix::random_rational(3, rng);
    CHECK(braid_identity_check(2, DegreeVector{1, 1, 1}, q));
  }
  CHECK_THROWS_AS(braid_identity_check(4, DegreeVector{2, 2}, BraidingMatrix::random_rational(2, rng)),
                  std::invalid_argument);
}

TEST_CASE("symmetrizer examples") {
  {
    // q11 = -1 kills x1^2
    const BraidingMatrix q = BraidingMatrix::from_exponents_cyclotomic(2, {{1, 0}, {0, 0}});
    const HomogeneousComponent comp(DegreeVector{2, 0});
    const OperatorMatrix s = symmetrizer_matrix(comp, q);
    CHECK(s.is_zero());
    CHECK(s.kernel_dim() == 1);
  }
  {
    Rng rng;
    const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
    const HomogeneousComponent comp(DegreeVector{1, 1});
    CHECK(symmetrizer_matrix(comp, q) == s1_matrix(1, comp, q));
    CHECK_THROWS_AS(symmetrizer_matrix(HomogeneousComponent(DegreeVector{1, 0}), q),
                    std::invalid_argument);
  }
}

TEST_CASE("cycle determinant closed forms against brute force") {
  Rng rng;
  for (int trial = 0; trial < 3; ++trial) {
    const BraidingMatrix q2 = BraidingMatrix::random_rational(2, rng);
    for (int s = 1; s <= 6; ++s)
      for (const DegreeVector& m : degrees_with_total(2, s)) {
        if (m.is_zero()) continue;
        const HomogeneousComponent comp(m);
        CHECK(cycle_det(m, q2) == cycle_matrix(comp, q2).det());
        if (s >= 2) CHECK(cycle2_det(m, q2) == cycle2_matrix(comp, q2).det());
      }
    const BraidingMatrix q3 = BraidingMatrix::random_rational(3, rng);
    for (int s = 1; s <= 4; ++s)
      for (const DegreeVector& m : degrees_with_total(3, s)) {
        if (m.is_zero()) continue;
        const HomogeneousComponent comp(m);
        CHECK(cycle_det(m, q3) == cycle_matrix(comp, q3).det());
        if (s >= 2) CHECK(cycle2_det(m, q3) == cycle2_matrix(comp, q3).det());
      }
  }
}

TEST_CASE("cycle determinant hand values") {
  Rng rng;
  const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
  const ExactScalar one = ExactScalar::one(q.context());
  CHECK(cycle_det(DegreeVector{1, 1}, q) == one - q.q(1, 2) * q.q(2, 1));
  // ell_{(3,0)} = 0 and ell_{(1,0)} = 1, so only k = 3 contributes 1 - q11^2
  CHECK(cycle_det(DegreeVector{3, 0}, q) == one - q.q(1, 1).pow(2));
  CHECK(cycle2_det(DegreeVector{1, 1}, q) == (one - q.q(1, 2) * q.q(2, 1)).pow(2));
  // single letters: the 1x1 cycle operator vanishes
  CHECK(cycle_det(DegreeVector{1, 0}, q).is_zero());
  CHECK(cycle_corank(DegreeVector{1, 0}, q) == 1);
}

TEST_CASE("coranks at root-of-unity braidings") {
  {
    // Q_{(2,2)}(q) = -1: order 2 divides N = 2, corank ell_{(2,2)} = 1
    const BraidingMatrix q = BraidingMatrix::from_exponents_cyclotomic(2, {{1, 0}, {0, 0}});
    CHECK(cycle_corank(DegreeVector{2, 2}, q) == 1);
    const HomogeneousComponent comp(DegreeVector{2, 2});
    CHECK(cycle_matrix(comp, q).kernel_dim() == 1);
  }
  {
    // q11 = -1: the (2,0) cycle2 operator vanishes
    const BraidingMatrix q = BraidingMatrix::from_exponents_cyclotomic(2, {{1, 0}, {0, 0}});
    CHECK(cycle2_det(DegreeVector{2, 0}, q).is_zero());
    CHECK(cycle2_corank(DegreeVector{2, 0}, q) == 1);
    const HomogeneousComponent comp(DegreeVector{2, 0});
    CHECK(cycle2_matrix(comp, q).kernel_dim() == 1);
  }
  {
    // at the worked example the coranks are exactly n2 = 5 and n1 = 7
    const BraidingMatrix q = BraidingMatrix::from_exponents_cyclotomic(5, {{1, 1}, {0, 1}});
    const DegreeVector m{3, 4};
    CHECK(cycle_corank(m, q) == 5);
    CHECK(cycle2_corank(m, q) == 7);
    const HomogeneousComponent comp(m);
    CHECK(cycle_matrix(comp, q).kernel_dim() == 5);
    CHECK(cycle2_matrix(comp, q).kernel_dim() == 7);
  }
  // random small-order cyclotomic braidings, both operators, oracle = rank
  Rng rng;
  for (long n : {3L, 4L, 5L, 6L}) {
    std::vector<std::vector<long>> a(2, std::vector<long>(2));
    for (auto& row : a)
      for (long& e : row) e = rng.between(0, n - 1);
    const BraidingMatrix q = BraidingMatrix::from_exponents_cyclotomic(n, a);
    for (int s = 2; s <= 5; ++s)
      for (const DegreeVector& m : degrees_with_total(2, s)) {
        if (m.is_zero()) continue;
        const HomogeneousComponent comp(m);
        CHECK(cycle_corank(m, q) == cycle_matrix(comp, q).kernel_dim());
        CHECK(cycle2_corank(m, q) == cycle2_matrix(comp, q).kernel_dim());
      }
  }
}

TEST_CASE("orbit decomposition") {
  {
    const auto orbits = orbit_decomposition(DegreeVector{1, 1}, CycleAction::Rotate);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].words == std::vector<Word>{{1, 2}, {2, 1}});
    CHECK(orbits[0].lyndon_root == Word{1, 2});
    CHECK(orbits[0].power == 1);
  }
  {
    const auto orbits = orbit_decomposition(DegreeVector{2, 2}, CycleAction::Rotate);
    REQUIRE(orbits.size() == 2);
    std::multiset<std::size_t> sizes;
    for (const Orbit& o : orbits) sizes.insert(o.words.size());
    CHECK(sizes == std::multiset<std::size_t>{2, 4});
  }
  {
    const auto orbits = orbit_decomposition(DegreeVector{1, 2}, CycleAction::FixFirstRotate);
    REQUIRE(orbits.size() == 2);
    // representatives 1*(2)^2 and 2*(12)^1
    CHECK(orbits[0].fixed_letter == 1);
    CHECK(orbits[0].lyndon_root == Word{2});
    CHECK(orbits[0].power == 2);
    CHECK(orbits[1].fixed_letter == 2);
    CHECK(orbits[1].lyndon_root == Word{1, 2});
    CHECK(orbits[1].power == 1);
  }
  // orbits partition the component and representatives are unique
  for (const DegreeVector& m : degrees_with_total(2, 6)) {
    if (m.is_zero()) continue;
    for (CycleAction action : {CycleAction::Rotate, CycleAction::FixFirstRotate}) {
      const auto orbits = orbit_decomposition(m, action);
      std::set<Word> all;
      std::size_t total = 0;
      for (const Orbit& o : orbits) {
        total += o.words.size();
        all.insert(o.words.begin(), o.words.end());
        Word rebuilt;
        if (action == CycleAction::FixFirstRotate) rebuilt.push_back(o.fixed_letter);
        for (int t = 0; t < o.power; ++t)
          rebuilt.insert(rebuilt.end(), o.lyndon_root.begin(), o.lyndon_root.end());
        CHECK(rebuilt == o.words.front());
        CHECK(is_lyndon(o.lyndon_root));
      }
      CHECK(total == all.size());
      CHECK(total == static_cast<std::size_t>(HomogeneousComponent(m).dim()));
    }
    // rotate orbits are counted by necklaces
    CHECK(orbit_decomposition(m, CycleAction::Rotate).size() ==
          static_cast<std::size_t>(necklace_count(m)));
  }
}

TEST_CASE("cyclic operators preserve the orbit submodules") {
  Rng rng;
  const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
  for (const DegreeVector& m : {DegreeVector{2, 2}, DegreeVector{1, 3}}) {
    const HomogeneousComponent comp(m);
    const OperatorMatrix c1 = cycle_matrix(comp, q);
    const OperatorMatrix c2 = cycle2_matrix(comp, q);
    for (CycleAction action : {CycleAction::Rotate, CycleAction::FixFirstRotate}) {
      const OperatorMatrix& op = action == CycleAction::Rotate ? c1 : c2;
      for (const Orbit& orbit : orbit_decomposition(m, action)) {
        std::set<int> members;
        for (const Word& w : orbit.words) members.insert(comp.index(w));
        for (int col : members)
          for (int row = 0; row < comp.dim(); ++row)
            if (!op.at(row, col).is_zero()) CHECK(members.count(row) == 1);
      }
    }
  }
}

TEST_CASE("shuffle determinant recursion") {
  Rng rng;
  for (int trial = 0; trial < 3; ++trial) {
    const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
    CHECK(detshuffle_recursion_check(DegreeVector{1, 1}, q));
    CHECK(detshuffle_recursion_check(DegreeVector{2, 1}, q));
    CHECK(detshuffle_recursion_check(DegreeVector{2, 2}, q));
  }
  Rng rng3;
  const BraidingMatrix q3 = BraidingMatrix::random_rational(3, rng3);
  CHECK(detshuffle_recursion_check(DegreeVector{1, 1, 1}, q3));
  CHECK_THROWS_AS(detshuffle_recursion_check(DegreeVector{2, 0}, q3), std::invalid_argument);
}

TEST_SUITE_END();
