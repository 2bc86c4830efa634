#include <doctest.h>

#include <array>
#include <set>
#include <thread>

#include "nichols/words.hpp"
#include "oracles.hpp"

using namespace nichols;

TEST_SUITE_BEGIN("words");

TEST_CASE("degree vector invariants") {
  DegreeVector m{3, 4};
  CHECK(m.total() == 7);
  CHECK(m.gcd() == 1);
  CHECK(m.big_n() == 6);  // gcd(6, 12, 12)
  CHECK(DegreeVector{1, 1}.big_n() == 1);
  CHECK(DegreeVector{2, 0}.big_n() == 2);
  CHECK(DegreeVector{2, 2}.big_n() == 2);
  CHECK(DegreeVector{3, 3}.big_n() == 3);
  CHECK(DegreeVector{4, 4}.big_n() == 4);
  CHECK(DegreeVector{3, 6}.big_n() == 6);
  CHECK(DegreeVector{0, 5}.big_n() == 20);
  CHECK_THROWS_AS((DegreeVector{0, 0}.gcd()), std::invalid_argument);
  CHECK_THROWS_AS((DegreeVector{1, 0}.big_n()), std::invalid_argument);
  CHECK(componentwise_less(DegreeVector{1, 2}, DegreeVector{3, 4}));
  CHECK(!componentwise_leq(DegreeVector{0, 5}, DegreeVector{3, 4}));
}

TEST_CASE("divisors of gcd(m) and gcd(m - e_i) divide N(m)") {
  for (int n = 1; n <= 3; ++n) {
    for (int s = 2; s <= 8; ++s) {
      for (const DegreeVector& m : degrees_with_total(n, s)) {
        const long N = m.big_n();
        for (long k = 1; k <= m.gcd(); ++k)
          if (m.gcd() % k == 0) CHECK(N % k == 0);
        for (int letter = 1; letter <= n; ++letter) {
          if (m.count(letter) == 0) continue;
          const DegreeVector mi = m.minus_letter(letter);
          if (mi.is_zero()) continue;
          for (long k = 1; k <= mi.gcd(); ++k)
            if (mi.gcd() % k == 0) CHECK(N % k == 0);
        }
      }
    }
  }
}

TEST_CASE("is_lyndon on the stated examples") {
  CHECK(is_lyndon(Word{1}));
  CHECK(is_lyndon(Word{1, 1, 2, 2}));
  CHECK(!is_lyndon(Word{1, 2, 1, 2}));
  CHECK(is_lyndon(Word{1, 2, 2}));
  CHECK(!is_lyndon(Word{1, 1}));
  CHECK_THROWS_AS(is_lyndon(Word{}), std::invalid_argument);
}

TEST_CASE("is_lyndon agrees with the rotation characterization") {
  for (int n = 2; n <= 3; ++n)
    for (int s = 1; s <= 6; ++s)
      for (const DegreeVector& m : degrees_with_total(n, s))
        if (!m.is_zero())
          for (const Word& w : oracles::words_of_degree(m))
            CHECK(is_lyndon(w) == oracles::is_lyndon_by_rotations(w));
}

TEST_CASE("lyndon_words examples") {
  CHECK(lyndon_words(DegreeVector{1, 1}) == std::vector<Word>{{1, 2}});
  CHECK(lyndon_words(DegreeVector{1, 0}) == std::vector<Word>{{1}});
  CHECK(lyndon_words(DegreeVector{2, 0}).empty());
  CHECK(lyndon_words(DegreeVector{5, 0}).empty());
  CHECK(lyndon_words(DegreeVector{3, 4}).size() == 5);
  CHECK_THROWS_AS(lyndon_words(DegreeVector{0, 0}), std::invalid_argument);
}

TEST_CASE("lyndon_count pins the known small counts") {
  for (int k = 0; k <= 6; ++k) CHECK(lyndon_count(DegreeVector{1, k}) == 1);
  CHECK(lyndon_count(DegreeVector{2, 4}) == 2);
  CHECK(lyndon_count(DegreeVector{3, 3}) == 3);
  CHECK(lyndon_count(DegreeVector{2, 2}) == 1);
  CHECK(lyndon_count(DegreeVector{3, 4}) == 5);
  CHECK(lyndon_count(DegreeVector{5, 0}) == 0);
  CHECK(lyndon_count(DegreeVector{0, 1}) == 1);
  CHECK_THROWS_AS(lyndon_count(DegreeVector{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("enumeration matches counts and every word is Lyndon of right degree") {
  auto check_degree = [](const DegreeVector& m) {
    const std::vector<Word> words = lyndon_words(m);
    CHECK(static_cast<long>(words.size()) == lyndon_count(m));
    for (const Word& w : words) {
      CHECK(is_lyndon(w));
      CHECK(word_degree(w, m.n()) == m);
    }
    CHECK(std::is_sorted(words.begin(), words.end()));
  };
  for (int s = 1; s <= 12; ++s)
    for (const DegreeVector& m : degrees_with_total(2, s))
      if (!m.is_zero()) check_degree(m);
  for (int s = 1; s <= 12; ++s)
    for (const DegreeVector& m : degrees_with_total(3, s))
      if (!m.is_zero()) check_degree(m);
}

TEST_CASE("necklace examples and the divisor-sum identity") {
  CHECK(necklace_count(DegreeVector{1, 1}) == 1);
  CHECK(necklace_count(DegreeVector{2, 2}) == 2);  // oracle: 2 of the 6 words
  CHECK(oracles::rotation_minimal_count(DegreeVector{2, 2}) == 2);
  CHECK(necklace_count(DegreeVector{3, 0}) == 1);
  CHECK(oracles::rotation_minimal_count(DegreeVector{3, 0}) == 1);
  for (int n = 2; n <= 3; ++n)
    for (int s = 1; s <= 7; ++s)
      for (const DegreeVector& m : degrees_with_total(n, s))
        if (!m.is_zero()) {
          CHECK(necklace_count(m) == oracles::rotation_minimal_count(m));
          CHECK(necklace_count(m) == static_cast<long>(necklaces(m).size()));
        }
}

TEST_CASE("necklaces factor uniquely as Lyndon powers") {
  for (int s = 1; s <= 7; ++s) {
    for (const DegreeVector& m : degrees_with_total(2, s)) {
      if (m.is_zero()) continue;
      for (const Word& w : necklaces(m)) {
        const auto [root, k] = lyndon_power_factor(w);
        CHECK(is_lyndon(root));
        Word rebuilt;
        for (int t = 0; t < k; ++t) rebuilt.insert(rebuilt.end(), root.begin(), root.end());
        CHECK(rebuilt == w);
        // uniqueness: no other Lyndon power reproduces w
        int representations = 0;
        for (std::size_t p = 1; p <= w.size(); ++p) {
          if (w.size() % p != 0) continue;
          Word candidate(w.begin(), w.begin() + p);
          Word power;
          for (std::size_t t = 0; t < w.size() / p; ++t)
            power.insert(power.end(), candidate.begin(), candidate.end());
          if (power == w && is_lyndon(candidate)) ++representations;
        }
        CHECK(representations == 1);
      }
    }
  }
}

TEST_CASE("lyndon inequality examples and classification of equality") {
  const LyndonInequality a = lyndon_inequality(DegreeVector{3, 4});
  CHECK(a.equality);
  CHECK(a.expected_equality);

  const LyndonInequality b = lyndon_inequality(DegreeVector{1, 1});
  CHECK(b.lhs == 1);
  CHECK(b.rhs == 2);
  CHECK(!b.equality);
  CHECK(!b.expected_equality);

  const LyndonInequality c = lyndon_inequality(DegreeVector{5, 5});
  CHECK(!c.equality);
  CHECK(!c.expected_equality);

  CHECK_THROWS_AS(lyndon_inequality(DegreeVector{3, 0}), std::invalid_argument);

  for (int n = 2; n <= 3; ++n)
    for (int s = 2; s <= 9; ++s)
      for (const DegreeVector& m : degrees_with_total(n, s)) {
        if (m.nonzero_letters() < 2) continue;
        const LyndonInequality r = lyndon_inequality(m);
        CHECK(r.lhs <= r.rhs);
        CHECK(r.equality == r.expected_equality);
      }
}

TEST_CASE("lyndon_count agrees with the Moebius-transform oracle up to |m| = 12") {
  // ell_m = (1/|m|) sum over d | gcd(m) of mu(d) * multinomial(|m|/d; m/d)
  auto moebius = [](long d) {
    long result = 1;
    for (long p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      d /= p;
      if (d % p == 0) return 0L;
      result = -result;
    }
    if (d > 1) result = -result;
    return result;
  };
  auto multinomial = [](const DegreeVector& m) {
    long long value = 1, upper = 0;
    for (int letter = 1; letter <= m.n(); ++letter)
      for (int t = 1; t <= m.count(letter); ++t) {
        ++upper;
        value = value * upper / t;  // binomial prefix products stay integral
      }
    return value;
  };
  for (int n = 2; n <= 3; ++n)
    for (int s = 1; s <= 12; ++s)
      for (const DegreeVector& m : degrees_with_total(n, s)) {
        if (m.is_zero()) continue;
        long long total = 0;
        for (long d : divisors(m.gcd())) total += moebius(d) * multinomial(m.divided_by(d));
        CHECK(lyndon_count(m) == total / m.total());
      }
}

TEST_CASE("lyndon_divisor_sum restricts to divisors of the limit") {
  // (2,4): gcd 2, ell_{(2,4)} = 2, ell_{(1,2)} = 1
  CHECK(lyndon_divisor_sum(DegreeVector{2, 4}, 6) == 3);
  CHECK(lyndon_divisor_sum(DegreeVector{2, 4}, 1) == 2);
  CHECK(lyndon_divisor_sum(DegreeVector{3, 4}, 6) == 5);
}

TEST_CASE("listings are sorted") {
  for (const DegreeVector& m : {DegreeVector{2, 3}, DegreeVector{3, 3}, DegreeVector{2, 2, 1}}) {
    const auto words = lyndon_words(m);
    CHECK(std::is_sorted(words.begin(), words.end()));
    const auto necks = necklaces(m);
    CHECK(std::is_sorted(necks.begin(), necks.end()));
  }
}

TEST_CASE("memoized counts are safe under concurrent queries") {
  std::vector<std::thread> workers;
  std::array<long, 4> sums{};
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&sums, t] {
      long sum = 0;
      for (int s = 1; s <= 10; ++s)
        for (const DegreeVector& m : degrees_with_total(2, s))
          if (!m.is_zero()) sum += lyndon_count(m) + necklace_count(m);
      sums[t] = sum;
    });
  for (auto& w : workers) w.join();
  CHECK(sums[0] > 0);
  for (int t = 1; t < 4; ++t) CHECK(sums[t] == sums[0]);
}

TEST_SUITE_END();
