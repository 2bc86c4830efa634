#pragma once

#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/matrix.hpp"
#include "nichols/words.hpp"

namespace nichols {

// The degree-m component of the tensor algebra, with the sorted word basis.
class HomogeneousComponent {
 public:
  explicit HomogeneousComponent(DegreeVector m);

  const DegreeVector& degree() const { return deg_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Word>& basis() const { return basis_; }
  const Word& word(int idx) const { return basis_[idx]; }
  int index(const Word& w) const;

 private:
  DegreeVector deg_;
  std::vector<Word> basis_;
};

// rho(sigma_i) on V_m: sends a basis word to the braiding coefficient times
// the word with positions i, i+1 swapped.  1 <= i <= |m|-1.
OperatorMatrix sigma_matrix(int i, const HomogeneousComponent& comp, const BraidingMatrix& q);

// rho(sigma_{g_1} sigma_{g_2} ... sigma_{g_k}) applied directly to the word
// basis (each factor is a monomial matrix, so columns are computed by
// rewriting words).  An empty product is the identity.
OperatorMatrix braid_product_matrix(const std::vector<int>& gens, const HomogeneousComponent& comp,
                                    const BraidingMatrix& q);

// rho(S_{1,k})|V_m with S_{1,k} = 1 + sigma_1 + sigma_2 sigma_1 + ...;
// 0 <= k <= |m|-1.
OperatorMatrix s1_matrix(int k, const HomogeneousComponent& comp, const BraidingMatrix& q);

// rho(tau^shift(S_{1,k}))|V_m, the index-shifted shuffle sum.
OperatorMatrix tau_s1_matrix(int shift, int k, const HomogeneousComponent& comp,
                             const BraidingMatrix& q);

// rho(S_m)|V_m with S_m = S_{1,m-1} tau(S_{1,m-2}) ... tau^{m-2}(S_{1,1}),
// multiplied right to left; requires |m| >= 2.
OperatorMatrix symmetrizer_matrix(const HomogeneousComponent& comp, const BraidingMatrix& q);

// Matrix identity (1 - sigma_k...sigma_2 sigma_1) S_{1,k}
//               = S_{1,k-1} (1 - sigma_k...sigma_2 sigma_1^2) under rho on V_m.
bool braid_identity_check(int k, const DegreeVector& m, const BraidingMatrix& q);

// The two cyclic operators behind the determinant formulas.
OperatorMatrix cycle_matrix(const HomogeneousComponent& comp, const BraidingMatrix& q);
OperatorMatrix cycle2_matrix(const HomogeneousComponent& comp, const BraidingMatrix& q);

// Closed-form determinant and corank of 1 - rho(sigma_{m-1}...sigma_1)|V_m;
// requires m != 0.
ExactScalar cycle_det(const DegreeVector& m, const BraidingMatrix& q);
long cycle_corank(const DegreeVector& m, const BraidingMatrix& q);

// Closed-form determinant and corank of 1 - rho(sigma_{m-1}...sigma_2
// sigma_1^2)|V_m; requires |m| >= 2.
ExactScalar cycle2_det(const DegreeVector& m, const BraidingMatrix& q);
long cycle2_corank(const DegreeVector& m, const BraidingMatrix& q);

enum class CycleAction {
  Rotate,         // i_1 i_2 ... i_m -> i_2 ... i_m i_1
  FixFirstRotate  // i_1 i_2 ... i_m -> i_1 i_3 ... i_m i_2
};

struct Orbit {
  std::vector<Word> words;  // in action order starting at the representative
  Word lyndon_root;         // v with representative v^k (or j v^k)
  int power = 0;            // k
  int fixed_letter = 0;     // j for FixFirstRotate, 0 otherwise
};

// Orbits of the cyclic action on the words of degree m, each with its unique
// canonical representative.
std::vector<Orbit> orbit_decomposition(const DegreeVector& m, CycleAction action);

// Brute-force check of the shuffle determinant recursion
//   det rho(S_{1,|m|-1})|V_m = A_m(q) * prod_i det rho(S_{1,|m|-2})|V_{m-e_i};
// requires m with at least two nonzero entries.
bool detshuffle_recursion_check(const DegreeVector& m, const BraidingMatrix& q);

}  // namespace nichols
