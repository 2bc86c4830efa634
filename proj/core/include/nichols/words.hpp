#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

// Multidegree m = (m_1, ..., m_n) over an alphabet of n letters.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> entries);
  DegreeVector(std::initializer_list<int> entries);

  static DegreeVector unit(int n, int letter);  // e_letter

  int n() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int count(int letter) const { return entries_[letter - 1]; }

  int total() const;  // |m|
  bool is_zero() const;
  int nonzero_letters() const;

  // gcd of the entries; requires m != 0.
  long gcd() const;

  // N(m) = gcd{ m_i(m_i-1), m_j m_k : j < k }; requires |m| >= 2.
  long big_n() const;

  DegreeVector minus_letter(int letter) const;  // m - e_letter, requires m_letter > 0
  DegreeVector divided_by(long k) const;        // m/k, requires k | every entry

  std::string to_string() const;  // "(m1,m2,...)"

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  // container ordering (lexicographic); the componentwise partial order of
  // the theory is componentwise_leq below
  friend std::strong_ordering operator<=>(const DegreeVector& a, const DegreeVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

// The partial order m <= l iff m_i <= l_i for all i.
bool componentwise_leq(const DegreeVector& a, const DegreeVector& b);
bool componentwise_less(const DegreeVector& a, const DegreeVector& b);

// All degree vectors with n entries and total s, in lexicographic order.
std::vector<DegreeVector> degrees_with_total(int n, int s);

// A word is a sequence of letters from {1, ..., n}.
using Word = std::vector<int>;

DegreeVector word_degree(const Word& w, int n);
std::string word_to_string(const Word& w);

// True iff w is strictly smaller than each of its proper suffixes.
bool is_lyndon(const Word& w);

// All Lyndon words of degree exactly m, sorted; requires m != 0.
std::vector<Word> lyndon_words(const DegreeVector& m);

// ell_m; requires m != 0.  Backed by a memoized Duval sweep.
long lyndon_count(const DegreeVector& m);

// N_m; requires m != 0.
long necklace_count(const DegreeVector& m);

// All rotation-minimal words of degree m, sorted; requires m != 0.
std::vector<Word> necklaces(const DegreeVector& m);

// Factors a necklace as v^k with v Lyndon; the pair is unique.
std::pair<Word, int> lyndon_power_factor(const Word& necklace);

// sum over k | gcd(v) with k | limit of ell_{v/k}; requires v != 0.  These
// sums are the corank counts of the cyclic operators and the n1/n2 numbers.
long lyndon_divisor_sum(const DegreeVector& v, long limit);

// The two sides of the Lyndon-count inequality
//   sum_{k | gcd(m)} ell_{m/k}  <=  sum_{i : m_i > 0} ell_{m - e_i},
// together with the expected equality classification.  Requires m to have
// at least two nonzero entries.
struct LyndonInequality {
  long lhs = 0;
  long rhs = 0;
  bool equality = false;
  bool expected_equality = false;
};
LyndonInequality lyndon_inequality(const DegreeVector& m);

}  // namespace nichols
