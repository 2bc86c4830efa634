#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/shuffle.hpp"

namespace nichols {

// Raised when the kernel-dimension theorem is applied outside its hypotheses;
// names the offending lower degree when there is one.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(const std::string& what,
                               std::optional<DegreeVector> offending = std::nullopt)
      : std::runtime_error(what), offending_(std::move(offending)) {}
  const std::optional<DegreeVector>& offending_degree() const { return offending_; }

 private:
  std::optional<DegreeVector> offending_;
};

struct FreenessReport {
  int degree_bound = 0;
  bool free_up_to_bound = true;  // the claim is bounded by degree_bound
  std::vector<DegreeVector> witnesses;  // minimal m with P_m(q) = 0
  // P_m(q) for every 2 <= |m| <= degree_bound, graded then lexicographic
  std::vector<std::pair<DegreeVector, ExactScalar>> values;
};

// Evaluates P_m(q) for all degrees up to the bound and reports the minimal
// vanishing degrees; requires degree_bound >= 2.
FreenessReport freeness_check(const BraidingMatrix& q, int degree_bound);

// The minimal m with P_m(q) = 0 and P_l(q) != 0 for all l < m with |l| >= 2.
std::vector<DegreeVector> minimal_degenerate_degrees(const BraidingMatrix& q, int degree_bound);

struct KernelNumbers {
  long d = 0;        // ord(Q_m(q))
  long d_prime = 0;  // N(m)/d
  long n1 = 0;
  long n2 = 0;
};

// n1, n2 and the order data at a degenerate degree; requires |m| >= 2 and
// P_m(q) = 0 (throws HypothesisViolation otherwise).
KernelNumbers n1_n2(const BraidingMatrix& q, const DegreeVector& m);

struct KernelReport {
  DegreeVector m;
  KernelNumbers numbers;
  long kernel_dim_formula = 0;                  // n1 - n2
  std::optional<long> kernel_dim_bruteforce;    // dim ker rho(S_{1,|m|-1})|V_m
  std::optional<long> relation_dim;             // dim ker rho(S_m)|V_m
};

// Kernel dimension of the shuffle map at a minimal degenerate degree.
// Checks the theorem hypotheses (P_m(q) = 0, P_l(q) != 0 for all l < m with
// |l| >= 2) and throws HypothesisViolation naming the failure otherwise.
// With verify set, also computes both kernel dimensions by exact rank.
KernelReport kernel_dim(const BraidingMatrix& q, const DegreeVector& m, bool verify);

// dim ker rho(S_{|m|})|V_m for every 2 <= |m| <= degree_bound, brute force.
std::vector<std::pair<DegreeVector, long>> relation_dims(const BraidingMatrix& q,
                                                         int degree_bound);

// Braiding given by an integer exponent matrix: q_ij = zeta_N^{a_ij} or
// q_ij = t^{a_ij}.
struct ExponentBraiding {
  enum class Mode { RootOfUnity, Transcendental };
  Mode mode = Mode::Transcendental;
  long order_n = 0;  // N for RootOfUnity
  std::vector<std::vector<long>> a;

  int n() const { return static_cast<int>(a.size()); }
  BraidingMatrix braiding() const;
};

// K(m) = sum a_ij m_i m_j and lambda(m) = sum a_ii m_i.
std::pair<long, long> k_lambda(const ExponentBraiding& eb, const DegreeVector& m);

// The families where P_m(q) != 0 holds automatically for q not a root of
// unity: m = m e_i (m >= 2), m = 2 e_i + 2m e_j, m = 3 e_i + 3 e_j,
// m = 4 e_i + 4 e_j.  Requires |m| >= 2.
bool is_exceptional_degree(const DegreeVector& m);

// All non-exceptional m with |m| >= 2 in the box [0, box]^n solving
// K(m) = lambda(m).  Requires transcendental mode; an empty result certifies
// freeness within the box.
std::vector<DegreeVector> diophantine_search(const ExponentBraiding& eb, int box);

}  // namespace nichols
